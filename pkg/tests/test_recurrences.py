"""Polynomial coefficients, recurrence normalization, and exact iteration."""
from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from aperylimits.errors import InsufficientTerms, SingularLeadingCoefficient
from aperylimits.recurrences import (
    ZETA3_DENOMINATOR_INIT,
    ZETA3_NUMERATOR_INIT,
    PolyInt,
    PRecurrence,
    RationalSequence,
    iterate,
    residual,
    zeta3_recurrence,
)


# --- independent oracles for the classical zeta(3) pair ------------------

def apery_denominator(n: int) -> Fraction:
    """b(n) = sum_k binom(n,k)^2 binom(n+k,k)^2."""
    return Fraction(
        sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1))
    )


def apery_numerator(n: int) -> Fraction:
    """a(n) = sum_k binom(n,k)^2 binom(n+k,k)^2 (H3(n) + S(n,k)) where
    H3(n) = sum_{m<=n} 1/m^3 and
    S(n,k) = sum_{m<=k} (-1)^(m-1) / (2 m^3 binom(n,m) binom(n+m,m)).
    """
    h3 = sum((Fraction(1, m**3) for m in range(1, n + 1)), Fraction(0))
    total = Fraction(0)
    for k in range(n + 1):
        inner = sum(
            (
                Fraction((-1) ** (m - 1), 2 * m**3 * comb(n, m) * comb(n + m, m))
                for m in range(1, k + 1)
            ),
            Fraction(0),
        )
        total += comb(n, k) ** 2 * comb(n + k, k) ** 2 * (h3 + inner)
    return total


# --- PolyInt --------------------------------------------------------------

def test_polyint_evaluation():
    cube = PolyInt([0, 0, 0, 1])
    assert cube(5) == 125
    q = PolyInt([39, 51, 17])
    assert q(0) == 39
    assert q(1) == 107
    assert q(-1) == 5


def test_polyint_trailing_zeros_stripped():
    p = PolyInt([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1


def test_polyint_zero_polynomial():
    z = PolyInt([0, 0])
    assert z.coeffs == ()
    assert z.degree == -1
    assert z(7) == 0


def test_polyint_content():
    assert PolyInt([6, -9, 12]).content() == 3
    assert PolyInt([5]).content() == 5


def test_polyint_is_immutable():
    p = PolyInt([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


# --- PRecurrence normalization --------------------------------------------

def test_recurrence_content_and_sign_canonicalized():
    raw = PRecurrence([[4], [-8]])
    assert raw == PRecurrence([[-1], [2]])
    assert raw.coeffs[-1](0) > 0


def test_recurrence_normalization_idempotent():
    rec = zeta3_recurrence()
    assert PRecurrence([p.coeffs for p in rec.coeffs]) == rec


def test_recurrence_validation():
    with pytest.raises(ValueError):
        PRecurrence([[1]])  # order zero: need at least two coefficient polys
    with pytest.raises(ValueError):
        PRecurrence([[1], [0]])  # identically zero leading coefficient


def test_zeta3_recurrence_coefficients():
    rec = zeta3_recurrence()
    assert rec.order == 2
    assert [p.coeffs for p in rec.coeffs] == [
        (1, 3, 3, 1),
        (-117, -231, -153, -34),
        (8, 12, 6, 1),
    ]


# --- RationalSequence -------------------------------------------------------

def test_sequence_absolute_indexing():
    seq = RationalSequence((Fraction(1), Fraction(2), Fraction(4)), start=5)
    assert seq[5] == 1
    assert seq[7] == 4
    assert seq.end == 8
    with pytest.raises(IndexError):
        seq[4]
    with pytest.raises(IndexError):
        seq[8]


# --- iterate -----------------------------------------------------------------

def test_iterate_powers_of_two():
    rec = PRecurrence([[-2], [1]])
    seq = iterate(rec, (1,), 11)
    assert list(seq.terms) == [2**n for n in range(11)]


def test_iterate_respects_start_offset():
    rec = PRecurrence([[-2], [1]])
    seq = iterate(rec, (8,), 4, start=3)
    assert seq.start == 3
    assert seq[6] == 64


def test_iterate_matches_double_sum_oracles():
    rec = zeta3_recurrence()
    dens = iterate(rec, ZETA3_DENOMINATOR_INIT, 9)
    nums = iterate(rec, ZETA3_NUMERATOR_INIT, 9)
    for n in range(9):
        assert dens[n] == apery_denominator(n)
        assert nums[n] == apery_numerator(n)
    assert list(dens.terms[:5]) == [1, 5, 73, 1445, 33001]
    assert nums[2] == Fraction(351, 4)


def test_iterate_rejects_wrong_init_length():
    rec = zeta3_recurrence()
    with pytest.raises(ValueError):
        iterate(rec, (1,), 5)


def test_iterate_raises_on_vanishing_leading_coefficient():
    # Leading coefficient n - 3 vanishes when the relation at n = 3 is used.
    rec = PRecurrence([[-1], [-3, 1]])
    assert list(iterate(rec, (6,), 4).terms) == [6, -2, 1, -1]
    with pytest.raises(SingularLeadingCoefficient):
        iterate(rec, (6,), 5)


# --- residual ----------------------------------------------------------------

def test_residual_zero_on_true_solution(apery_solutions):
    nums, dens = apery_solutions
    rec = zeta3_recurrence()
    assert all(r == 0 for r in residual(rec, dens))
    assert all(r == 0 for r in residual(rec, nums))


def test_residual_detects_mismatch():
    rec = PRecurrence([[-2], [1]])
    seq = RationalSequence((Fraction(1), Fraction(3)))
    assert residual(rec, seq) == [1]


def test_residual_needs_enough_terms():
    rec = zeta3_recurrence()
    with pytest.raises(InsufficientTerms):
        residual(rec, RationalSequence((Fraction(1), Fraction(5))))
