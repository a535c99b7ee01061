"""Closed forms for zeta(2m) and L(k, chi_D) at odd k, and series oracles for both.

Exact values go through Bernoulli numbers:

    zeta(2m)    = (-1)^(m+1) (2 pi)^(2m) B_2m / (2 (2m)!)
    L(k, chi_D) = (-1)^((k+1)/2) sqrt(f)/2 (2 pi / f)^k B_{k,chi} / k!     (k odd, f = |D|)

The second identity is the functional equation for an odd primitive real
character, whose Gauss sum is i*sqrt(f).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .characters import QuadChar
from .exact import ExactValue

__all__ = [
    "BernoulliCache",
    "LValueExact",
    "SeriesValue",
    "bernoulli",
    "bernoulli_poly",
    "gen_bernoulli",
    "l_numeric",
    "l_odd_exact",
    "zeta_even_exact",
    "zeta_numeric",
]

DEFAULT_TERMS = 10**5


class BernoulliCache:
    """Append-only table of B_n (B_1 = -1/2), extended on demand.

    Readers never see a partially written table: entries are appended under a
    lock, and a list append is the only mutation.
    """

    def __init__(self):
        self._table: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._table)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {n}")
        if n >= len(self._table):
            with self._lock:
                self._extend(n)
        return self._table[n]

    def _extend(self, n: int) -> None:
        B = self._table
        for m in range(len(B), n + 1):
            if m > 1 and m % 2:
                B.append(Fraction(0))
                continue
            # sum_{j=0}^{m} C(m+1, j) B_j = 0
            s = sum(math.comb(m + 1, j) * B[j] for j in range(m))
            B.append(-s / (m + 1))


_BERNOULLI = BernoulliCache()


def bernoulli(n: int) -> Fraction:
    return _BERNOULLI[n]


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    x = Fraction(x)
    return sum(
        (math.comb(n, j) * bernoulli(j) * x ** (n - j) for j in range(n + 1)),
        Fraction(0),
    )


def gen_bernoulli(n: int, char: QuadChar) -> Fraction:
    """Generalized Bernoulli number B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _gen_bernoulli(n, char.discriminant)


@lru_cache(maxsize=None)
def _gen_bernoulli(n: int, disc: int) -> Fraction:
    char = QuadChar.of(_d_from_disc(disc))
    f = char.conductor
    total = Fraction(0)
    for a in range(1, f + 1):
        c = char(a)
        if c:
            total += c * bernoulli_poly(n, Fraction(a, f))
    return total * f ** (n - 1)


def _d_from_disc(disc: int) -> int:
    return -disc if disc % 4 == 1 else -disc // 4


def zeta_even_exact(k: int) -> ExactValue:
    if k < 2 or k % 2:
        raise ValueError(f"zeta({k}): no closed form in scope (need even k >= 2)")
    coeff = (-1) ** (k // 2 + 1) * 2**k * bernoulli(k) / (2 * math.factorial(k))
    return ExactValue(coeff, k)


@dataclass(frozen=True)
class LValueExact:
    d: int
    k: int
    value: ExactValue

    def __str__(self):
        return str(self.value)


def l_odd_exact(k: int, d: int) -> LValueExact:
    """L(k, chi_D) for odd k >= 3, where D is the discriminant of Q(sqrt(-d))."""
    if k < 3 or k % 2 == 0:
        raise ValueError(f"L({k}): no algebraic closed form (need odd k >= 3)")
    return _l_odd_exact(k, d)


@lru_cache(maxsize=None)
def _l_odd_exact(k: int, d: int) -> LValueExact:
    char = QuadChar.of(d)
    f = char.conductor
    sign = 1 if (k + 1) // 2 % 2 == 0 else -1
    coeff = sign * Fraction(2**k, 2 * f**k) * gen_bernoulli(k, char) / math.factorial(k)
    value = ExactValue(coeff, k) * ExactValue.sqrt(f)
    if value.coeff <= 0:
        raise ArithmeticError(f"L({k}, chi_{char.discriminant}) came out non-positive")
    return LValueExact(d, k, value)


class SeriesValue(NamedTuple):
    """Truncated Dirichlet series: `value` is the estimate, `partial` the raw sum."""

    value: float
    partial: float
    tail_bound: float
    terms: int


def _series(coeffs: np.ndarray, k: int, terms: int) -> float:
    m = np.arange(1, terms + 1, dtype=np.float64)
    t = coeffs / m**k
    # smallest terms first
    return math.fsum(t[::-1])


@lru_cache(maxsize=512)
def zeta_numeric(k: int, terms: int = DEFAULT_TERMS) -> SeriesValue:
    """sum_{m<=N} m^-k plus the Euler-Maclaurin tail N^(1-k)/(k-1) - N^-k/2 + k N^(-k-1)/12."""
    if k < 2:
        raise ValueError("zeta_numeric needs k >= 2")
    if terms < 1:
        raise ValueError("terms must be positive")
    partial = _series(np.ones(terms), k, terms)
    N = float(terms)
    tail = N ** (1 - k) / (k - 1) - N**-k / 2 + k * N ** (-k - 1) / 12
    return SeriesValue(partial + tail, partial, N ** (1 - k) / (k - 1), terms)


@lru_cache(maxsize=512)
def l_numeric(k: int, d: int, terms: int = DEFAULT_TERMS) -> SeriesValue:
    """sum_{m<=N} chi_D(m) m^-k.  The tail is not estimated, only bounded."""
    if k < 2:
        raise ValueError("l_numeric needs k >= 2")
    if terms < 1000:
        raise ValueError("l_numeric needs at least 1000 terms")
    char = QuadChar.of(d)
    period = np.array(char.values(), dtype=np.float64)
    idx = np.arange(1, terms + 1) % char.conductor
    partial = _series(period[idx], k, terms)
    N = float(terms)
    return SeriesValue(partial, partial, N ** (1 - k) / (k - 1), terms)
