"""The invariant K(Gamma) for Gamma = U(L_n, O_K) and the freeness verdicts.

K is the weighted covolume of mirror stabilisers divided by the covolume of
Gamma.  Unimodular L_n only has roots of length 1 and 2, each forming a
single orbit, with stabilisers U(L_{n-1}) and U(M_{n-1}):

    K = (w * Vol(L_{n-1}) + 1/2 * Vol(M_{n-1})) / Vol(L_n)

where w = 1/2, except w = 5/6 for d = 3 (unit roots of square 1 give
reflections of order 6).  If A_n is free with generators of weights
k_1..k_{n+1}, then K = n + 1 + k_1 + ... + k_{n+1}, so K must be an integer
and at least 2n + 2 (7n + 7 for d = 3, where all weights are multiples of 6).
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .characters import SUPPORTED_D
from .covolumes import DiscCase, Lattice, covolume
from .exact import ExactValue, as_rational, exact_to_float, format_decimal
from .special_values import l_odd_exact, zeta_even_exact

__all__ = [
    "ConsistencyError",
    "KReport",
    "MirrorClass",
    "UnsupportedFieldError",
    "Verdict",
    "VerdictTable",
    "freeness_bound",
    "k_closed",
    "k_raw",
    "mirror_classes",
    "sweep",
    "verdict",
]


class UnsupportedFieldError(ValueError):
    def __init__(self, d):
        self.d = d
        supported = ", ".join(map(str, SUPPORTED_D))
        super().__init__(f"unsupported d = {d}; supported: {supported}")


class ConsistencyError(RuntimeError):
    """The two independent evaluations of K disagree."""


class Verdict(str, enum.Enum):
    NotFree = "NotFree"
    PossiblyFree = "PossiblyFree"


@dataclass(frozen=True)
class MirrorClass:
    root_length: int
    stabilizer: Lattice  # stabiliser is U(stabilizer_{n-1})
    order: int  # order of the reflection

    @property
    def weight(self) -> Fraction:
        return Fraction(self.order - 1, self.order)


def mirror_classes(d: int) -> tuple[MirrorClass, MirrorClass]:
    """One conjugacy class of mirrors per root length (James)."""
    _check(d, 2)
    return (
        MirrorClass(1, Lattice.L, 6 if d == 3 else 2),
        MirrorClass(2, Lattice.M, 2),
    )


def _check(d: int, n: int) -> None:
    if d not in SUPPORTED_D:
        raise UnsupportedFieldError(d)
    if n < 2:
        raise ValueError(f"n = {n}: James requires dimension >= 3 (n >= 2)")


def k_raw(d: int, n: int) -> Fraction:
    """K as the covolume ratio, with every covolume assembled from scratch."""
    _check(d, n)
    case = DiscCase.MinusD
    numerator = ExactValue(Fraction(0))
    for mc in mirror_classes(d):
        numerator += mc.weight * covolume(mc.stabilizer, n - 1, d, case).value
    return as_rational(numerator / covolume(Lattice.L, n, d, case).value)


def k_closed(d: int, n: int) -> Fraction:
    """K from the simplified per-row closed forms."""
    _check(d, n)
    two_pi = ExactValue(Fraction(2) ** (n + 1), n + 1)  # (2 pi)^(n+1)
    nfact = Fraction(math.factorial(n))
    if n % 2:
        # odd n: 2^n + 1 over 3 or 2^n, and d^((n+1)/2) +- 1
        sign = 1 if n % 4 == 1 else -1
        dpow = Fraction(d) ** ((n + 1) // 2) + sign
        zeta = zeta_even_exact(n + 1)
        if d == 3:
            value = two_pi * (6 + 2**n) / (6 * dpow * nfact * zeta)
        elif d == 7:
            value = two_pi * 2**n / (2 * dpow * nfact * zeta)
        else:
            value = two_pi * (1 + Fraction(2**n + 1, 3)) / (2 * dpow * nfact * zeta)
    else:
        sign = -1 if n % 4 == 0 else 1
        u = Fraction(1, d ** (n // 2))  # d^(-n/2)
        lval = l_odd_exact(n + 1, d).value
        droot = ExactValue.half_power(d, n + 1)  # d^((n+1)/2)
        if d == 3:
            top = 5 * (1 + sign * u) + (1 - sign * u) * (2**n - 1)
            value = two_pi * top / (6 * droot * nfact * lval)
        elif d == 7:
            top = 2 ** (2 * n) * (1 + sign * u)
            value = ExactValue(Fraction(top), n + 1) / (droot * nfact * lval)
        else:
            top = 1 + sign * u + Fraction(2**n - 1, 3) * (1 - sign * u)
            value = two_pi * top / (2 * droot * nfact * lval)
    return as_rational(value)


def freeness_bound(d: int, n: int) -> int:
    return 7 * n + 7 if d == 3 else 2 * n + 2


@dataclass(frozen=True)
class KReport:
    d: int
    n: int
    k_exact: Fraction
    bound: int
    congruence_ok: bool | None = None
    k_float: float = field(init=False)
    is_integer: bool = field(init=False)
    passes_bound: bool = field(init=False)
    verdict: Verdict = field(init=False)

    def __post_init__(self):
        k = Fraction(self.k_exact)
        object.__setattr__(self, "k_exact", k)
        object.__setattr__(self, "k_float", float(k))
        object.__setattr__(self, "is_integer", k.denominator == 1)
        object.__setattr__(self, "passes_bound", k >= self.bound)
        ok = self.passes_bound and self.is_integer and self.congruence_ok is not False
        object.__setattr__(self, "verdict", Verdict.PossiblyFree if ok else Verdict.NotFree)

    def k_decimal(self, digits: int = 6) -> str:
        return format_decimal(exact_to_float(ExactValue(self.k_exact), digits))

    def to_dict(self, digits: int = 6) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "k_exact": f"{self.k_exact.numerator}/{self.k_exact.denominator}",
            "k_float": float(self.k_decimal(digits)),
            "bound": self.bound,
            "is_integer": self.is_integer,
            "passes_bound": self.passes_bound,
            "congruence_ok": self.congruence_ok,
            "verdict": self.verdict.value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "KReport":
        """Rebuild a report; derived fields are recomputed and cross-checked."""
        report = cls(data["d"], data["n"], Fraction(data["k_exact"]), data["bound"], data.get("congruence_ok"))
        for key in ("is_integer", "passes_bound", "verdict"):
            if key in data and data[key] != report.to_dict()[key]:
                raise ValueError(f"inconsistent field {key!r}: {data[key]!r}")
        return report

    def to_json(self, digits: int = 6) -> str:
        return json.dumps(self.to_dict(digits))

    @classmethod
    def from_json(cls, text: str) -> "KReport":
        return cls.from_dict(json.loads(text))

    def to_text(self, digits: int = 6) -> str:
        bound_name = "7n+7" if self.d == 3 else "2n+2"
        lines = [
            f"d = {self.d}, n = {self.n}",
            f"K = {self.k_exact} (~ {self.k_decimal(digits)})",
            f"bound {bound_name} = {self.bound}: {'passed' if self.passes_bound else 'failed'}",
            f"integer: {'yes' if self.is_integer else 'no'}",
        ]
        if self.congruence_ok is not None:
            lines.append(f"K = n+1 (mod 6): {'yes' if self.congruence_ok else 'no'}")
        lines.append(f"verdict: {self.verdict.value}")
        return "\n".join(lines)


def verdict(d: int, n: int, enable_congruence: bool = False) -> KReport:
    raw = k_raw(d, n)
    closed = k_closed(d, n)
    if raw != closed:
        raise ConsistencyError(f"K(d={d}, n={n}): covolume ratio {raw} != closed form {closed}")
    congruence = None
    if enable_congruence and d == 3:
        # weights are multiples of 6, so K = n + 1 + sum k_i = n + 1 mod 6
        congruence = raw.denominator == 1 and (raw.numerator - (n + 1)) % 6 == 0
    return KReport(d, n, raw, freeness_bound(d, n), congruence)


@dataclass
class VerdictTable:
    reports: list[KReport]
    n_max: int
    enable_congruence: bool = False

    def possibly_free(self, d: int | None = None) -> list[KReport]:
        return [
            r
            for r in self.reports
            if r.verdict is Verdict.PossiblyFree and (d is None or r.d == d)
        ]

    def summary(self) -> list[str]:
        lines = []
        for d in sorted({r.d for r in self.reports}):
            ns = [r.n for r in self.possibly_free(d)]
            rng = f"2 <= n <= {self.n_max}"
            if not ns:
                lines.append(f"d = {d}: A_n is not free for all {rng}")
            else:
                lines.append(f"d = {d}: A_n can be free only for n in {{{', '.join(map(str, ns))}}} ({rng})")
        return lines

    def to_text(self, digits: int = 6) -> str:
        header = f"{'d':>4} {'n':>3} {'K':>28} {'K~':>12} {'bound':>6} {'int':>4} verdict"
        rows = [header]
        for r in self.reports:
            rows.append(
                f"{r.d:>4} {r.n:>3} {str(r.k_exact):>28} {r.k_decimal(digits):>12} "
                f"{r.bound:>6} {'yes' if r.is_integer else 'no':>4} {r.verdict.value}"
            )
        return "\n".join(rows + [""] + self.summary()) + "\n"

    def to_json(self, digits: int = 6) -> str:
        payload = {
            "n_max": self.n_max,
            "congruence": self.enable_congruence,
            "reports": [r.to_dict(digits) for r in self.reports],
            "summary": self.summary(),
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_csv(self, digits: int = 6) -> str:
        buf = io.StringIO()
        fields = ["d", "n", "k_exact", "k_float", "bound", "is_integer", "passes_bound", "congruence_ok", "verdict"]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in self.reports:
            writer.writerow(r.to_dict(digits))
        return buf.getvalue()


def sweep(d_list: Iterable[int], n_max: int, enable_congruence: bool = False) -> VerdictTable:
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    ds = sorted(set(d_list))
    for d in ds:
        _check(d, 2)
    reports = [verdict(d, n, enable_congruence) for d in ds for n in range(2, n_max + 1)]
    return VerdictTable(reports, n_max, enable_congruence)
