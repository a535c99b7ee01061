import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import class_number
from hermk.characters import SUPPORTED_D, QuadChar, chi, field_params, kronecker, prime_divisors


def kronecker_oracle(a, n):
    """Kronecker symbol from its definition: factor n and multiply local symbols."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    out = 1
    if n < 0:
        n = -n
        out = -1 if a < 0 else 1
    p, m = 2, n
    while m > 1:
        while m % p == 0:
            m //= p
            if p == 2:
                s = 0 if a % 2 == 0 else (1 if a % 8 in (1, 7) else -1)
            else:
                r = pow(a, (p - 1) // 2, p)  # Euler's criterion
                s = 0 if r == 0 else (1 if r == 1 else -1)
            out *= s
        p += 1
    return out


def test_kronecker_examples():
    assert kronecker(-7, 2) == 1
    assert kronecker(-3, 2) == -1
    assert kronecker(2, 7) == 1
    for d in SUPPORTED_D:
        assert kronecker(-1, d) == -1
    for a in range(-20, 21):
        assert kronecker(a, 1) == 1
    assert kronecker(1, 0) == 1 and kronecker(-1, 0) == 1 and kronecker(2, 0) == 0


@settings(max_examples=2000, deadline=None)
@given(st.integers(-10**4, 10**4), st.integers(-2000, 2000))
def test_kronecker_matches_definition(a, n):
    assert kronecker(a, n) == kronecker_oracle(a, n)


@settings(max_examples=2000, deadline=None)
@given(st.integers(-10**6, 10**6), st.integers(-10**4, 10**4), st.integers(-10**4, 10**4))
def test_kronecker_multiplicative_in_denominator(a, m, n):
    assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


@pytest.mark.parametrize("d", SUPPORTED_D)
def test_character_basics(d):
    char = QuadChar.of(d)
    f = char.conductor
    assert f == d
    assert sum(char(m) for m in range(1, f + 1)) == 0
    assert char(-1) == -1
    for m in range(1, 3 * f):
        assert char(m) in (-1, 0, 1)
        assert (char(m) == 0) == (math.gcd(m, f) > 1)


@settings(max_examples=3000, deadline=None)
@given(st.sampled_from(SUPPORTED_D), st.integers(-10**4, 10**4))
def test_character_periodic(d, m):
    char = QuadChar.of(d)
    assert char(m) == char(m + char.conductor)


@settings(max_examples=2000, deadline=None)
@given(st.sampled_from(SUPPORTED_D + (1, 2, 5, 6)), st.integers(1, 10**4), st.integers(1, 10**4))
def test_character_completely_multiplicative(d, m, n):
    char = QuadChar.of(d)
    assert char(m * n) == char(m) * char(n)


def test_chi_examples():
    assert chi(QuadChar.of(7), 2) == 1
    assert chi(QuadChar.of(163), 1) == 1
    assert [chi(QuadChar.of(3), m) for m in range(1, 7)] == [1, -1, 0, 1, -1, 0]


def test_field_params():
    p = field_params(7)
    assert (p.discriminant, p.conductor, p.two_unramified, p.class_number_one) == (-7, 7, True, True)
    p = field_params(1)
    assert (p.discriminant, p.two_unramified, p.class_number_one) == (-4, False, True)
    p = field_params(5)
    assert p.discriminant == -20 and not p.class_number_one
    assert class_number(-20) == 2
    for d in SUPPORTED_D:
        p = field_params(d)
        assert p.two_unramified and p.class_number_one
        assert class_number(p.discriminant) == 1
    with pytest.raises(ValueError, match="squarefree"):
        field_params(12)
    with pytest.raises(ValueError):
        field_params(0)


def test_prime_divisors():
    assert prime_divisors(163) == [163]
    assert prime_divisors(30) == [2, 3, 5]
    assert prime_divisors(1) == []
