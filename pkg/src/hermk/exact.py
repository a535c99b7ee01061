"""Exact values of the form q * pi^a * sqrt(d)^b with q rational and b in {0, 1}.

Every covolume, zeta value and L-value handled by this package lives in this
set, so products and quotients never leave it.  Sums are only defined between
like terms (same pi and sqrt(d) exponents), which is all the invariant
computations need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

import mpmath

__all__ = [
    "ExactValue",
    "IncompatibleFieldError",
    "NotRationalError",
    "as_rational",
    "exact_div",
    "exact_mul",
    "exact_to_float",
    "format_decimal",
    "parse_exact",
    "squarefree_decomposition",
]

DEFAULT_DIGITS = 15
GUARD_DIGITS = 10

class IncompatibleFieldError(ValueError):
    pass


class NotRationalError(ValueError):
    def __init__(self, pi_exp: int, sqrt_d_exp: int, d: int):
        self.pi_exp = pi_exp
        self.sqrt_d_exp = sqrt_d_exp
        self.d = d
        super().__init__(
            f"not rational: pi exponent {pi_exp}, sqrt({d}) exponent {sqrt_d_exp}"
        )


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write n = s**2 * r with r squarefree; return (s, r)."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    s, r = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            r *= p
        p += 1
    return s, r * n


@dataclass(frozen=True)
class ExactValue:
    coeff: Fraction
    pi_exp: int = 0
    sqrt_d_exp: int = 0
    d: int = 1

    def __post_init__(self):
        coeff = Fraction(self.coeff)
        pi_exp, e, d = int(self.pi_exp), int(self.sqrt_d_exp), int(self.d)
        if d <= 0:
            raise ValueError(f"d must be positive, got {d}")
        if e:
            s, d = squarefree_decomposition(d)
            coeff *= Fraction(s) ** e
            coeff *= Fraction(d) ** (e // 2)  # floor division keeps e % 2 in {0, 1}
            e %= 2
            if d == 1:
                e = 0
        if coeff == 0 or e == 0:
            e, d = 0, 1
        if coeff == 0:
            pi_exp = 0
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "pi_exp", pi_exp)
        object.__setattr__(self, "sqrt_d_exp", e)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, n: int) -> "ExactValue":
        """sqrt(n) for a positive integer n, with square factors pulled out."""
        return cls(Fraction(1), 0, 1, n)

    @classmethod
    def pi_power(cls, a: int) -> "ExactValue":
        return cls(Fraction(1), a)

    @classmethod
    def half_power(cls, base: int, twice_exp: int) -> "ExactValue":
        """base ** (twice_exp / 2)."""
        q, r = divmod(twice_exp, 2)
        return cls(Fraction(base) ** q, 0, r, base)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def is_rational(self) -> bool:
        return self.pi_exp == 0 and self.sqrt_d_exp == 0

    def like(self, other: "ExactValue") -> bool:
        return (self.pi_exp, self.sqrt_d_exp, self.d) == (
            other.pi_exp,
            other.sqrt_d_exp,
            other.d,
        )

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return exact_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return exact_div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return exact_div(other, self)

    def __pow__(self, k: int) -> "ExactValue":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return exact_div(ExactValue(Fraction(1)), self**-k)
        return ExactValue(self.coeff**k, self.pi_exp * k, self.sqrt_d_exp * k, self.d)

    def __neg__(self) -> "ExactValue":
        return ExactValue(-self.coeff, self.pi_exp, self.sqrt_d_exp, self.d)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if not self.like(other):
            raise ValueError(f"cannot add unlike terms {self} and {other}")
        return ExactValue(self.coeff + other.coeff, self.pi_exp, self.sqrt_d_exp, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __float__(self) -> float:
        return float(exact_to_float(self, 17))

    def __str__(self) -> str:
        parts = [str(self.coeff)]
        if self.pi_exp:
            parts.append(f"pi^{self.pi_exp}")
        if self.sqrt_d_exp:
            parts.append(f"sqrt({self.d})")
        return " * ".join(parts)


def _coerce(x) -> ExactValue:
    if isinstance(x, ExactValue):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactValue(Fraction(x))
    return NotImplemented


def _common_d(x: ExactValue, y: ExactValue) -> int:
    if x.sqrt_d_exp and y.sqrt_d_exp and x.d != y.d:
        raise IncompatibleFieldError(
            f"incompatible field parameters: sqrt({x.d}) and sqrt({y.d})"
        )
    return x.d if x.sqrt_d_exp else y.d


def exact_mul(x: ExactValue, y: ExactValue) -> ExactValue:
    d = _common_d(x, y)
    return ExactValue(
        x.coeff * y.coeff, x.pi_exp + y.pi_exp, x.sqrt_d_exp + y.sqrt_d_exp, d
    )


def exact_div(x: ExactValue, y: ExactValue) -> ExactValue:
    if y.is_zero():
        raise ZeroDivisionError("division by a zero ExactValue")
    d = _common_d(x, y)
    coeff = x.coeff / y.coeff
    # 1/sqrt(d) = sqrt(d)/d
    if y.sqrt_d_exp:
        coeff /= d
    return ExactValue(coeff, x.pi_exp - y.pi_exp, x.sqrt_d_exp + y.sqrt_d_exp, d)


def exact_to_float(x: ExactValue, precision_digits: int = DEFAULT_DIGITS) -> Decimal:
    """Decimal approximation of x to `precision_digits` significant digits.

    The value is evaluated with GUARD_DIGITS extra digits and rounded
    half-even at the end.
    """
    if precision_digits < 1:
        raise ValueError("precision_digits must be >= 1")
    if x.is_zero():
        return Decimal(0)
    work = precision_digits + GUARD_DIGITS
    with mpmath.workdps(work):
        v = mpmath.mpf(x.coeff.numerator) / x.coeff.denominator
        if x.pi_exp:
            v *= mpmath.pi**x.pi_exp
        if x.sqrt_d_exp:
            v *= mpmath.sqrt(x.d)
        text = mpmath.nstr(v, work, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
    ctx = Context(prec=precision_digits, rounding=ROUND_HALF_EVEN)
    return ctx.plus(Decimal(text))


def format_decimal(x: Decimal) -> str:
    """Fixed notation for moderate magnitudes, scientific otherwise."""
    if x == 0:
        return "0"
    return format(x, "f") if -5 <= x.adjusted() < 15 else format(x, "e")


def as_rational(x: ExactValue) -> Fraction:
    if not x.is_rational():
        raise NotRationalError(x.pi_exp, x.sqrt_d_exp, x.d)
    return x.coeff


_TOKEN = re.compile(
    r"""^\s*(?:
        (?P<pi>pi(?:\^(?P<a>-?\d+))?)
      | (?P<sqrt>sqrt\((?P<d>\d+)\)(?:\^(?P<b>-?\d+))?)
      | (?P<coeff>-?\d+(?:/\d+)?)
    )\s*$""",
    re.VERBOSE,
)


def parse_exact(text: str) -> ExactValue:
    """Inverse of ``str(ExactValue)``; also accepts explicit ``^1`` / ``^0``."""
    coeff, a, b, d = Fraction(1), 0, 0, 1
    seen_coeff = False
    for tok in text.split("*"):
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"cannot parse {tok.strip()!r} in {text!r}")
        if m["coeff"]:
            if seen_coeff:
                raise ValueError(f"two coefficients in {text!r}")
            coeff, seen_coeff = Fraction(m["coeff"]), True
        elif m["pi"]:
            a += int(m["a"]) if m["a"] is not None else 1
        else:
            exp = int(m["b"]) if m["b"] is not None else 1
            if exp and b and int(m["d"]) != d:
                raise IncompatibleFieldError(f"two different radicals in {text!r}")
            if exp:
                d = int(m["d"])
            b += exp
    return ExactValue(coeff, a, b, d)
