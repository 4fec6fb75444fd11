"""Integerization, convergence reports, and error-decay measurements."""
from __future__ import annotations

from fractions import Fraction

import pytest

from aperylimits.bigreal import BigReal, sqrt
from aperylimits.constants import zeta3
from aperylimits.errors import (
    DivisionByZeroSolution,
    DomainError,
    InsufficientTerms,
    NonpositiveDelta,
    PrecisionExhausted,
)
from aperylimits.limits import (
    apery_limit,
    convergence_report,
    delta_estimate,
    error_sequence,
    integerize,
    integerize_sequence,
    measure_from_delta,
)
from aperylimits.recurrences import (
    ZETA3_DENOMINATOR_INIT,
    ZETA3_NUMERATOR_INIT,
    PRecurrence,
    RationalSequence,
    zeta3_recurrence,
)


# --- integerization -----------------------------------------------------

def test_integerize_pins():
    assert integerize(Fraction(7, 3), 2) == integerize(Fraction(7, 3), Fraction(2))
    pair = integerize(Fraction(7, 3), 2)
    assert (pair.a_int, pair.b_int) == (7, 6)
    pair = integerize(Fraction(351, 4), 73)
    assert (pair.a_int, pair.b_int) == (351, 292)
    pair = integerize(0, 5)
    assert (pair.a_int, pair.b_int) == (0, 1)


def test_integerize_preserves_ratio():
    pair = integerize(Fraction(-22, 7), Fraction(355, 113))
    assert Fraction(pair.a_int, pair.b_int) == Fraction(-22, 7) / Fraction(355, 113)


def test_integerize_zero_denominator():
    from aperylimits.errors import ZeroDenominator

    with pytest.raises(ZeroDenominator):
        integerize(Fraction(1, 2), 0)


def test_integerize_sequence_alignment():
    pairs = integerize_sequence([Fraction(1, 2), Fraction(2, 3)], [1, 1])
    assert [(p.a_int, p.b_int) for p in pairs] == [(1, 2), (2, 3)]
    with pytest.raises(DomainError):
        integerize_sequence([Fraction(1)], [1, 2])


# --- convergence reports --------------------------------------------------

def test_apery_limit_matches_reference_value():
    rec = zeta3_recurrence()
    report = apery_limit(rec, ZETA3_DENOMINATOR_INIT, ZETA3_NUMERATOR_INIT, 300, 30)
    assert report.converged
    assert report.achieved_digits >= 30
    assert abs(report.limit.to_fraction() - zeta3(40).to_fraction()) < Fraction(
        1, 10**29
    )
    # Error shrinks by a factor (1 + sqrt(2))^8 per step asymptotically.
    alpha = float(report.alpha_estimate)
    assert abs(alpha / 1153.998 - 1) < 0.01


def test_apery_limit_reports_non_convergence():
    # B/A = (3/2)^n diverges; the report must say so rather than raise.
    rec = PRecurrence([[6], [-5], [1]])
    report = apery_limit(rec, (1, 2), (1, 3), 60, 10)
    assert not report.converged
    assert report.achieved_digits < 10


def test_apery_limit_scaling():
    rec = zeta3_recurrence()
    base = apery_limit(rec, (1, 5), (0, 6), 60, 20)
    scaled_b = apery_limit(rec, (1, 5), (0, 12), 60, 20)
    assert scaled_b.limit_fraction == 2 * base.limit_fraction
    scaled_a = apery_limit(rec, (3, 15), (0, 6), 60, 20)
    assert scaled_a.limit_fraction * 3 == base.limit_fraction


def test_apery_limit_depth_validation():
    rec = zeta3_recurrence()
    with pytest.raises(DomainError):
        apery_limit(rec, (1, 5), (0, 6), 6, 10)


def test_report_guards():
    ones = RationalSequence(tuple(Fraction(1) for _ in range(8)))
    short = RationalSequence(tuple(Fraction(1) for _ in range(7)))
    shifted = RationalSequence(ones.terms, start=1)
    with pytest.raises(InsufficientTerms):
        convergence_report(short, short, 10)
    with pytest.raises(DomainError):
        convergence_report(ones, shifted, 10)
    ending_zero = RationalSequence(
        tuple(Fraction(v) for v in (1, 1, 1, 1, 1, 1, 1, 0))
    )
    with pytest.raises(DivisionByZeroSolution):
        convergence_report(ending_zero, ones, 10)


# --- error-decay deficit ----------------------------------------------------

def test_delta_zero_for_plain_geometric_convergence():
    # a/b = (2^n - 1)/2^n has error 2^-n with denominator 2^n: the decay
    # exponent matches the denominator growth exactly, so delta = 0.
    pairs = [integerize(Fraction(2**n - 1, 2**n), 1) for n in range(1, 49)]
    delta = delta_estimate(pairs, BigReal.from_int(1, digits=40))
    assert delta.is_zero()


def test_delta_one_for_quadratic_convergents():
    # Continued-fraction convergents of sqrt(2): |p/q - sqrt(2)| ~ q^-2.
    pairs = []
    p, q = 1, 1
    for _ in range(48):
        pairs.append(integerize(Fraction(p, q), 1))
        p, q = p + 2 * q, p + q
    limit = sqrt(BigReal.from_int(2, digits=130), 120)
    delta = delta_estimate(pairs, limit)
    assert abs(delta.to_fraction() - 1) < Fraction(1, 10**10)


def test_delta_needs_enough_pairs():
    pairs = [integerize(Fraction(2**n - 1, 2**n), 1) for n in range(1, 8)]
    with pytest.raises(InsufficientTerms):
        delta_estimate(pairs, BigReal.from_int(1, digits=40))


def test_delta_detects_coarse_limit():
    # Errors fall to ~1e-12 but the limit only carries 8 digits: the
    # computation must refuse rather than return noise.
    pairs = [integerize(Fraction(2**n - 1, 2**n), 1) for n in range(1, 41)]
    with pytest.raises(PrecisionExhausted):
        delta_estimate(pairs, BigReal.from_int(1, digits=8))


def test_measure_from_delta():
    two = measure_from_delta(BigReal.from_int(1, digits=20))
    assert two.to_fraction() == 2
    three = measure_from_delta(BigReal.from_rational(Fraction(1, 2), digits=20))
    assert three.to_fraction() == 3
    with pytest.raises(NonpositiveDelta):
        measure_from_delta(BigReal.zero(10))
    with pytest.raises(NonpositiveDelta):
        measure_from_delta(BigReal.from_int(-1, digits=10))


def test_error_sequence_drops_exact_hits():
    pairs = integerize_sequence(
        [Fraction(1, 2), Fraction(1), Fraction(3, 4)], [1, 1, 1]
    )
    errors = error_sequence(pairs, Fraction(1))
    assert set(errors) == {0, 2}
    assert errors[0] == Fraction(-1, 2)
    assert errors[2] == Fraction(-1, 4)
