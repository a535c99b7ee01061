"""Hirzebruch-Mumford covolumes of SU(L_n, O_K) and SU(M_n, O_K).

L_n = diag(1, ..., 1, -1) and M_n = diag(1, ..., 1, -2), both of signature (n, 1).
Every row of both tables has the shape

    |D|^((n^2+3n)/4) * prod_{j=1}^{n} j!/(2 pi)^(j+1) * zeta(2) L(3) zeta(4) ... X(n+1) * c

where X is zeta for even index and L(., chi_D) for odd index, and c is a
rational local correction depending on the lattice, the parity of n and D.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath

from .characters import kronecker, prime_divisors
from .exact import ExactValue, squarefree_decomposition
from .special_values import (
    DEFAULT_TERMS,
    l_numeric,
    l_odd_exact,
    zeta_even_exact,
    zeta_numeric,
)

__all__ = [
    "Covolume",
    "DiscCase",
    "Lattice",
    "OracleComparison",
    "covolume",
    "default_disc_case",
    "vol_L",
    "vol_M",
    "vol_numeric",
]


class Lattice(str, enum.Enum):
    L = "L"
    M = "M"


class DiscCase(str, enum.Enum):
    MinusD = "MinusD"
    Minus4D = "Minus4D"


def default_disc_case(d: int) -> DiscCase:
    return DiscCase.MinusD if d % 4 == 3 else DiscCase.Minus4D


@dataclass(frozen=True)
class Covolume:
    lattice: Lattice
    n: int
    d: int
    disc_case: DiscCase
    value: ExactValue

    def __str__(self):
        return str(self.value)


class _Factors(NamedTuple):
    abs_disc: int
    twice_disc_exp: int  # |D| is raised to twice_disc_exp / 2
    rational: Fraction  # factorials, powers of 2 and the local correction
    pi_exp: int  # from prod 1/(2 pi)^(j+1)
    chain: tuple[int, ...]  # arguments of zeta / L in the special-value chain


def _local_product(n: int, d: int, twist: int) -> Fraction:
    """prod_{p | d} (1 + ((twist * (-1)^((n+3)/2)) / p) p^(-(n+1)/2)) for odd n."""
    sign = -1 if (n + 3) // 2 % 2 else 1
    out = Fraction(1)
    for p in prime_divisors(d):
        out *= 1 + Fraction(kronecker(sign * twist, p), p ** ((n + 1) // 2))
    return out


def _two_adic(n: int, d: int) -> Fraction:
    """2^n (1 - s^(n+1) 2^-(n+1)) / (1 - s/2) with s = (-d/2)."""
    s = kronecker(-d, 2)
    return 2**n * (1 - Fraction(s ** (n + 1), 2 ** (n + 1))) / (1 - Fraction(s, 2))


def _factors(lattice: Lattice, n: int, d: int, case: DiscCase) -> _Factors:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if squarefree_decomposition(d)[0] != 1:
        raise ValueError(f"d = {d} is not squarefree")
    if (case is DiscCase.MinusD) != (d % 4 == 3):
        raise ValueError(f"disc case {case.value} does not apply to d = {d}")
    abs_disc = d if case is DiscCase.MinusD else 4 * d

    rational = Fraction(1)
    two_pi = 0
    for j in range(1, n + 1):
        rational *= Fraction(math.factorial(j), 2 ** (j + 1))
        two_pi += j + 1

    odd = n % 2 == 1
    if lattice is Lattice.L:
        if odd:
            rational *= _local_product(n, d, 1)
            if case is DiscCase.Minus4D:
                rational *= 1 - Fraction(1, 2 ** (n + 1))
    else:
        if odd:
            rational *= _local_product(n, d, 2)
            if case is DiscCase.Minus4D:
                rational *= (1 - Fraction(1, 2 ** (n + 1))) * 2**n
            else:
                rational *= _two_adic(n, d)
        elif case is DiscCase.Minus4D:
            rational *= 2**n - 1
        else:
            rational *= _two_adic(n, d)

    return _Factors(abs_disc, (n * n + 3 * n) // 2, rational, -two_pi, tuple(range(2, n + 2)))


def _special_exact(s: int, d: int) -> ExactValue:
    return zeta_even_exact(s) if s % 2 == 0 else l_odd_exact(s, d).value


def covolume(lattice: Lattice | str, n: int, d: int, disc_case: DiscCase | str | None = None) -> Covolume:
    lattice = Lattice(lattice)
    case = default_disc_case(d) if disc_case is None else DiscCase(disc_case)
    fac = _factors(lattice, n, d, case)

    value = ExactValue.half_power(fac.abs_disc, fac.twice_disc_exp)
    value *= ExactValue(fac.rational, fac.pi_exp)
    for s in fac.chain:
        value *= _special_exact(s, d)

    expected_pi = fac.pi_exp + sum(fac.chain)
    if value.pi_exp != expected_pi:
        raise ArithmeticError(f"pi exponent {value.pi_exp}, expected {expected_pi}")
    if value.coeff <= 0:
        raise ArithmeticError(f"non-positive covolume for {lattice.value}_{n}, d = {d}")
    return Covolume(lattice, n, d, case, value)


def vol_L(n: int, d: int, disc_case: DiscCase | str | None = None) -> Covolume:
    return covolume(Lattice.L, n, d, disc_case)


def vol_M(n: int, d: int, disc_case: DiscCase | str | None = None) -> Covolume:
    return covolume(Lattice.M, n, d, disc_case)


class OracleComparison(NamedTuple):
    numeric: float
    exact: float
    rel_dev: float


def vol_numeric(c: Covolume, terms: int = DEFAULT_TERMS) -> OracleComparison:
    """Re-evaluate the covolume with truncated Dirichlet series for zeta and L."""
    fac = _factors(c.lattice, c.n, c.d, c.disc_case)
    with mpmath.workdps(30):
        v = mpmath.mpf(fac.abs_disc) ** (mpmath.mpf(fac.twice_disc_exp) / 2)
        v *= mpmath.mpf(fac.rational.numerator) / fac.rational.denominator
        v *= mpmath.pi**fac.pi_exp
        for s in fac.chain:
            series = zeta_numeric(s, terms) if s % 2 == 0 else l_numeric(s, c.d, terms)
            v *= series.value
        numeric = float(v)
    exact = float(c.value)
    return OracleComparison(numeric, exact, abs(numeric - exact) / abs(exact))
