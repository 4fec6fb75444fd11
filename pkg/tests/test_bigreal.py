"""Fixed-precision decimal floats: construction, arithmetic, rendering."""
from __future__ import annotations

from fractions import Fraction

import pytest

from aperylimits.bigreal import BigReal, log, median, nth_root, sqrt
from aperylimits.errors import DomainError


# --- construction and normalization -------------------------------------

def test_mantissa_always_has_requested_width():
    for digits in (1, 5, 17, 40):
        x = BigReal.from_rational(Fraction(1, 3), digits=digits)
        assert len(str(abs(x.mantissa))) == digits
        assert x.digits == digits


def test_from_int_roundtrip():
    x = BigReal.from_int(12345, digits=10)
    assert x.to_fraction() == 12345
    assert x.to_decimal() == "12345.00000"


def test_rounding_is_half_away_from_zero():
    assert BigReal.from_rational(Fraction(5, 2), digits=1).to_decimal() == "3"
    assert BigReal.from_rational(Fraction(-5, 2), digits=1).to_decimal() == "-3"
    assert BigReal.from_rational(Fraction(49, 20), digits=1).to_decimal() == "2"


def test_zero_is_canonical():
    z = BigReal.zero(12)
    assert z.is_zero()
    assert z.sign == 0
    assert z.to_decimal() == "0"
    assert z.decimal_exponent() is None


def test_digits_must_be_positive():
    with pytest.raises(ValueError):
        BigReal(123, 0, digits=0)


# --- rendering -----------------------------------------------------------

def test_to_decimal_plain_forms():
    x = BigReal.from_rational(Fraction(355, 113), digits=10)
    assert x.to_decimal() == "3.141592920"
    y = BigReal.from_rational(Fraction(1, 8), digits=4)
    assert y.to_decimal() == "0.1250"


def test_to_decimal_scientific_for_extreme_exponents():
    tiny = BigReal.from_rational(Fraction(1, 10**50), digits=5)
    assert "e" in tiny.to_decimal()
    huge = BigReal.from_int(10**80, digits=5)
    assert "e" in huge.to_decimal()


def test_to_decimal_can_truncate():
    x = BigReal.from_rational(Fraction(2, 3), digits=30)
    assert x.to_decimal(5) == "0.66667"


def test_round_to_reduces_precision():
    x = BigReal.from_rational(Fraction(2, 3), digits=30)
    y = x.round_to(10)
    assert y.digits == 10
    assert abs(y.to_fraction() - Fraction(2, 3)) < Fraction(1, 10**9)


# --- arithmetic ----------------------------------------------------------

def test_add_sub_mul_div_match_exact_rationals():
    a = BigReal.from_rational(Fraction(22, 7), digits=30)
    b = BigReal.from_rational(Fraction(355, 113), digits=30)
    for op, ref in (
        (a + b, Fraction(22, 7) + Fraction(355, 113)),
        (a - b, Fraction(22, 7) - Fraction(355, 113)),
        (a * b, Fraction(22, 7) * Fraction(355, 113)),
        (a / b, Fraction(22, 7) / Fraction(355, 113)),
    ):
        assert abs(op.to_fraction() - ref) < Fraction(1, 10**27)


def test_catastrophic_cancellation_keeps_trailing_zeros():
    # Subtracting nearby values must not silently shorten the mantissa.
    x = BigReal.from_rational(Fraction(10996636078828940, 10**16), digits=25)
    one = BigReal.from_int(1, digits=25)
    diff = x - one
    assert diff.to_decimal() == "0.09966360788289400000000000"
    assert len(str(abs(diff.mantissa))) == 25


def test_add_far_apart_magnitudes():
    big = BigReal.from_int(10**40, digits=15)
    small = BigReal.from_rational(Fraction(1, 10**40), digits=15)
    s = big + small
    assert s.to_fraction() == 10**40
    assert (small + big).to_fraction() == 10**40


def test_pow_nonnegative_integers_only():
    x = BigReal.from_rational(Fraction(3, 2), digits=20)
    assert abs((x**3).to_fraction() - Fraction(27, 8)) < Fraction(1, 10**17)
    assert (x**0).to_fraction() == 1
    with pytest.raises(TypeError):
        x ** (-1)


def test_division_by_zero_raises():
    x = BigReal.from_int(1, digits=10)
    with pytest.raises(ZeroDivisionError):
        x / BigReal.zero(10)


def test_precision_propagates_as_minimum():
    a = BigReal.from_int(1, digits=30)
    b = BigReal.from_rational(Fraction(1, 3), digits=10)
    assert (a + b).digits == 10
    assert (a * b).digits == 10


def test_comparisons_are_exact():
    a = BigReal.from_rational(Fraction(1, 3), digits=20)
    b = BigReal.from_rational(Fraction(1, 3), digits=20)
    c = BigReal.from_rational(Fraction(1, 3), digits=5)
    assert a == b
    assert a != c  # different roundings of 1/3 differ as exact values
    assert c < a
    assert abs(-a) == a
    assert (-a).sign == -1


def test_float_conversion():
    x = BigReal.from_rational(Fraction(1, 4), digits=12)
    assert float(x) == 0.25


# --- elementary functions -------------------------------------------------

def test_sqrt_squares_back():
    r = sqrt(BigReal.from_int(2, digits=30), 30)
    assert abs(r.to_fraction() ** 2 - 2) < Fraction(1, 10**28)


def test_nth_root_pin():
    x = BigReal.from_int(18, digits=20)
    assert nth_root(x, 3, 10).to_decimal() == "2.620741394"


def test_nth_root_rejects_bad_inputs():
    with pytest.raises(DomainError):
        nth_root(BigReal.from_int(-2, digits=10), 2, 10)


def test_log_basics():
    one = BigReal.from_int(1, digits=20)
    assert log(one, 20).is_zero()
    two = log(BigReal.from_int(2, digits=40), 40)
    three = log(BigReal.from_int(3, digits=40), 40)
    six = log(BigReal.from_int(6, digits=40), 40)
    assert abs((two + three - six).to_fraction()) < Fraction(1, 10**35)
    with pytest.raises(DomainError):
        log(BigReal.zero(10), 10)
    with pytest.raises(DomainError):
        log(BigReal.from_int(-3, digits=10), 10)


def test_median_odd_and_even():
    vals = [BigReal.from_int(v, digits=10) for v in (5, 1, 9)]
    assert median(vals).to_fraction() == 5
    vals4 = [BigReal.from_int(v, digits=10) for v in (1, 2, 3, 10)]
    assert median(vals4).to_fraction() == Fraction(5, 2)
