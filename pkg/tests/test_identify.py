"""Integer-relation search and constant identification."""
from __future__ import annotations

from fractions import Fraction

import pytest

from aperylimits.bigreal import BigReal, sqrt
from aperylimits.constants import zeta2, zeta3
from aperylimits.errors import DomainError
from aperylimits.families import (
    cubic_poly,
    quadratic_closed_form,
    quadratic_poly,
    real_root,
)
from aperylimits.identify import identify_algebraic, identify_linear, pslq
from aperylimits.recurrences import PolyInt


def br(q, digits=40):
    return BigReal.from_rational(Fraction(q), digits=digits)


# --- integer-relation search ---------------------------------------------

def test_pslq_simple_rational_relations():
    res = pslq([br(1), br(Fraction(1, 2))], 40)
    assert res.relation is not None
    assert res.relation.coeffs == (1, -2)
    res = pslq([br(1), br(Fraction(3, 4))], 40)
    assert res.relation.coeffs == (3, -4)


def test_pslq_quadratic_irrational():
    root2 = sqrt(BigReal.from_int(2, 50), 40)
    res = pslq([br(1), root2, br(2)], 40)
    assert res.relation.coeffs == (2, 0, -1)
    assert abs(res.relation.residual.to_fraction()) < Fraction(1, 10**30)


def test_pslq_recovers_minimal_polynomial_vector():
    limit = real_root(2, 60)
    powers = [BigReal.from_int(1, 60), limit, limit * limit, limit * limit * limit]
    res = pslq(powers, 60)
    assert res.relation.coeffs == tuple(cubic_poly(2).coeffs)


def test_pslq_zero_entry_shortcut():
    res = pslq([br(3), BigReal.zero(40), br(7)], 40)
    assert res.relation.coeffs == (0, 1, 0)


def test_pslq_single_value_has_no_relation():
    res = pslq([br(5)], 40)
    assert res.relation is None
    assert res.norm_bound == 10**12


def test_pslq_no_relation_returns_exclusion_bound():
    # pi and e-like unrelated values: expect no relation, just a bound.
    res = pslq([br(1), zeta3(40)], 40)
    assert res.relation is None
    assert res.norm_bound >= 1


def test_pslq_input_validation():
    with pytest.raises(DomainError):
        pslq([], 40)
    with pytest.raises(DomainError):
        pslq([br(1)], 3)


def test_pslq_is_deterministic():
    args = [br(1), br(Fraction(355, 113))]
    assert pslq(args, 40).relation.coeffs == pslq(args, 40).relation.coeffs


# --- algebraic identification ------------------------------------------------

def test_identify_rational_as_degree_one():
    cand = identify_algebraic(br(Fraction(1, 2)), 3, 40)
    assert cand is not None
    assert cand.degree == 1
    assert cand.polynomial == PolyInt([-1, 2])


def test_identify_prefers_minimal_degree():
    value = sqrt(BigReal.from_int(2, 70), 60)
    cand = identify_algebraic(value, 4, 60)
    assert cand.degree == 2
    assert cand.polynomial == PolyInt([-2, 0, 1])


def test_identify_cubic_limits():
    cand = identify_algebraic(real_root(3, 70), 3, 70)
    assert cand.polynomial == cubic_poly(3)
    assert cand.polynomial.coeffs == (64, 1008, 3996, 189)


def test_identify_quadratic_closed_form():
    cand = identify_algebraic(quadratic_closed_form(1, 60), 3, 60)
    assert cand.degree == 2
    assert cand.polynomial == quadratic_poly(1)
    assert cand.polynomial.coeffs == (9, 36, 4)


def test_identify_rejects_non_algebraic_value():
    assert identify_algebraic(zeta3(60), 3, 60) is None


# --- linear identification over a constant basis ------------------------------

def test_identify_linear_exact_basis_element():
    match = identify_linear(zeta2(60), [("zeta2", zeta2(70))], 60)
    assert match is not None
    assert match.basis_name == "zeta2"
    assert match.coefficient == 1
    assert match.offset == 0


def test_identify_linear_with_coefficient_and_offset():
    value = zeta3(70) * BigReal.from_int(2, 70) + br(Fraction(1, 3), 70)
    match = identify_linear(value.round_to(60), [("zeta3", zeta3(70))], 60)
    assert match.basis_name == "zeta3"
    assert match.coefficient == 2
    assert match.offset == Fraction(1, 3)


def test_identify_linear_rejects_near_miss():
    # A 1e-30 perturbation at 60 working digits must not be "identified".
    perturbed = BigReal.from_rational(
        zeta2(60).to_fraction() + Fraction(1, 10**30), digits=60
    )
    assert identify_linear(perturbed, [("zeta2", zeta2(70))], 60) is None


def test_identify_linear_picks_simplest_basis_element():
    match = identify_linear(
        zeta2(60),
        [("zeta3", zeta3(70)), ("zeta2", zeta2(70))],
        60,
    )
    assert match.basis_name == "zeta2"


def test_identify_linear_requires_basis():
    with pytest.raises(DomainError):
        identify_linear(zeta2(40), [], 40)
