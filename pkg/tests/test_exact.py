import random
from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermk.exact import (
    ExactValue,
    IncompatibleFieldError,
    NotRationalError,
    as_rational,
    exact_div,
    exact_mul,
    exact_to_float,
    parse_exact,
)

SQUAREFREE = [2, 3, 5, 7, 11, 19, 43, 67, 163]

# (numerator, denominator, pi exponent, sqrt(d) exponent); d is drawn separately
raw = st.tuples(st.integers(-10**9, 10**9), st.integers(1, 10**6), st.integers(-12, 12), st.integers(0, 1))
raw_nonzero = raw.filter(lambda t: t[0] != 0)
fields = st.sampled_from(SQUAREFREE)


def build(t, d):
    p, q, a, b = t
    return ExactValue(Fraction(p, q), a, b, d)


def random_value(rng, d):
    return ExactValue(
        Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**6)),
        rng.randint(-12, 12),
        rng.randint(0, 1),
        d,
    )


def ev(c, a=0, b=0, d=1):
    return ExactValue(Fraction(c), a, b, d)


def test_mul_examples():
    assert exact_mul(ev(1, 1, 1, 7), ev(1, 1, 1, 7)) == ev(7, 2)
    x = ev(Fraction(32, 2401), 3, 1, 7)
    assert exact_mul(x, ev(1)) == x
    assert exact_mul(ev(Fraction(1, 2), 2), ev(Fraction(1, 3), -1)) == ev(Fraction(1, 6), 1)


def test_mul_incompatible_fields():
    with pytest.raises(IncompatibleFieldError, match="incompatible field parameters"):
        exact_mul(ev(1, 0, 1, 7), ev(1, 0, 1, 3))
    # no radical on one side is fine
    assert exact_mul(ev(2, 0, 1, 7), ev(3, 1, 0, 3)) == ev(6, 1, 1, 7)


def test_div_examples():
    assert exact_div(ev(7, 2), ev(1, 1, 1, 7)) == ev(1, 1, 1, 7)
    x = ev(Fraction(4, 243), 3, 1, 3)
    assert exact_div(x, x) == ev(1)
    with pytest.raises(ZeroDivisionError):
        exact_div(x, ev(0))


def test_canonical_form():
    assert ev(3, 0, 2, 7) == ev(21)
    assert ev(1, 0, 1, 12) == ev(2, 0, 1, 3)  # sqrt(12) = 2 sqrt(3)
    assert ev(1, 0, -1, 7) == ev(Fraction(1, 7), 0, 1, 7)
    assert ev(0, 5, 1, 7) == ev(0)
    z = ev(0, 5, 1, 7)
    assert (z.pi_exp, z.sqrt_d_exp, z.d) == (0, 0, 1)
    assert ev(5, 0, 1, 1) == ev(5)


def test_as_rational():
    assert as_rational(ev(20)) == 20
    assert as_rational(ev(Fraction(5698, 61))) == Fraction(5698, 61)
    with pytest.raises(NotRationalError) as info:
        as_rational(ev(1, 1))
    assert (info.value.pi_exp, info.value.sqrt_d_exp) == (1, 0)


def test_to_float():
    assert exact_to_float(ev(1)) == Decimal(1)
    assert exact_to_float(ev(1, 1), 10) == Decimal("3.141592654")
    assert exact_to_float(ev(Fraction(1, 3)), 5) == Decimal("0.33333")
    assert exact_to_float(ev(-2, 0, 1, 2), 4) == Decimal("-2.828")
    # ties go to even: 0.125 at 2 digits
    assert exact_to_float(ev(Fraction(1, 8)), 2) == Decimal("0.12")
    with pytest.raises(ValueError):
        exact_to_float(ev(1), 0)


def test_render_and_parse():
    x = ev(Fraction(32, 2401), 3, 1, 7)
    assert str(x) == "32/2401 * pi^3 * sqrt(7)"
    assert str(ev(5)) == "5"
    assert str(ev(-1, -2)) == "-1 * pi^-2"
    assert parse_exact("32/2401 * pi^3 * sqrt(7)^1") == x
    assert parse_exact("2 * pi * sqrt(3)^0") == ev(2, 1)
    with pytest.raises(ValueError):
        parse_exact("2 * e^3")


def test_mul_laws_random_sweep():
    rng = random.Random(20261017)
    for _ in range(10_000):
        d = rng.choice(SQUAREFREE)
        x, y, z = (random_value(rng, d) for _ in range(3))
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)


@settings(max_examples=1000, deadline=None)
@given(fields, raw, raw, raw)
def test_mul_commutative_associative(d, a, b, c):
    x, y, z = build(a, d), build(b, d), build(c, d)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


@settings(max_examples=1000, deadline=None)
@given(fields, raw, raw_nonzero)
def test_div_inverts_mul(d, a, b):
    x, y = build(a, d), build(b, d)
    assert exact_div(exact_mul(x, y), y) == x


@settings(max_examples=1000, deadline=None)
@given(fields, raw, raw)
def test_canonical_after_arithmetic(d, a, b):
    x, y = build(a, d), build(b, d)
    for v in (x * y, x / y if not y.is_zero() else x, x**3):
        assert v.sqrt_d_exp in (0, 1)
        assert v.coeff == Fraction(v.coeff.numerator, v.coeff.denominator)
        assert v.coeff.denominator > 0
        if v.coeff == 0:
            assert (v.pi_exp, v.sqrt_d_exp) == (0, 0)


@settings(max_examples=300, deadline=None)
@given(fields, raw_nonzero, raw_nonzero)
def test_float_respects_mul(d, a, b):
    """30-digit rendering of x*y matches the product of 45-digit renderings to 1 ulp."""
    x, y = build(a, d), build(b, d)
    prod = exact_to_float(x * y, 30)
    with mpmath.workdps(60):
        ref = mpmath.mpf(str(exact_to_float(x, 45))) * mpmath.mpf(str(exact_to_float(y, 45)))
        ulp = mpmath.mpf(10) ** (mpmath.floor(mpmath.log10(abs(ref))) - 29)
        assert abs(mpmath.mpf(str(prod)) - ref) <= ulp


@settings(max_examples=500, deadline=None)
@given(fields, raw)
def test_parse_round_trip(d, a):
    x = build(a, d)
    assert parse_exact(str(x)) == x
