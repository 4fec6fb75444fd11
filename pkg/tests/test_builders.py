"""Binomial sums, the discrete potential, WZ components, family sequences."""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from math import comb

import pytest

from aperylimits.builders import (
    FamilySpec,
    PotentialTable,
    binomial_power_sum,
    family_terms,
    potential,
    weighted_potential_sum,
    wz_form_components,
)
from aperylimits.constants import zeta2
from aperylimits.errors import DomainError
from aperylimits.guess import guess_recurrence
from aperylimits.recurrences import PRecurrence, RationalSequence, residual


# --- binomial power sums ---------------------------------------------------

def test_power_sum_pins():
    assert binomial_power_sum(1, 10) == 1024
    assert [binomial_power_sum(3, n) for n in range(5)] == [1, 2, 10, 56, 346]


def test_power_sum_low_degree_closed_forms():
    for n in range(61):
        assert binomial_power_sum(1, n) == 2**n
        assert binomial_power_sum(2, n) == comb(2 * n, n)


def test_power_sum_matches_direct_summation():
    for d in (3, 4, 5):
        for n in (0, 1, 7, 23):
            assert binomial_power_sum(d, n) == sum(
                comb(n, k) ** d for k in range(n + 1)
            )


def test_power_sum_domain():
    with pytest.raises(DomainError):
        binomial_power_sum(-1, 3)
    with pytest.raises(DomainError):
        binomial_power_sum(2, -1)


# --- discrete potential ------------------------------------------------------

def test_potential_pins():
    assert potential(0, 0) == 0
    assert potential(1, 0) == 2
    assert potential(1, 1) == Fraction(3, 2)


def test_potential_rejects_out_of_range():
    with pytest.raises(DomainError):
        potential(3, 4)
    with pytest.raises(DomainError):
        potential(-1, 0)


def test_potential_converges_to_zeta2():
    z = zeta2(40).to_fraction()
    assert abs(potential(60, 60) - z) < Fraction(1, 10**5)

    def max_err(n):
        return max(abs(potential(n, k) - z) for k in range(n + 1))

    err60 = max_err(60)
    assert err60 < Fraction(1, 10**3)
    assert err60 < max_err(10)


def test_potential_table_reuse():
    table = PotentialTable()
    assert table.value(5, 2) == potential(5, 2)


# --- WZ-style certificate components ----------------------------------------

def test_wz_components_pin():
    f, g = wz_form_components(1, 0)
    assert f == Fraction(-1, 2)
    assert g == Fraction(-1, 2)


def test_wz_components_are_potential_differences():
    # First component: forward difference of the potential in k;
    # second component: forward difference in n.
    for n, k in [(2, 0), (2, 1), (5, 3), (9, 4), (12, 0), (12, 11)]:
        f, g = wz_form_components(n, k)
        assert f == potential(n, k + 1) - potential(n, k)
        assert g == potential(n + 1, k) - potential(n, k)


def test_wz_components_domain():
    with pytest.raises(DomainError):
        wz_form_components(3, 3)
    with pytest.raises(DomainError):
        wz_form_components(0, 0)


# --- weighted potential sums ---------------------------------------------------

def test_weighted_sum_pins():
    assert weighted_potential_sum(3, 0) == 0
    assert weighted_potential_sum(3, 1) == Fraction(7, 2)


def test_weighted_average_approaches_zeta2():
    z = zeta2(40).to_fraction()
    ratio = weighted_potential_sum(3, 40) / binomial_power_sum(3, 40)
    assert abs(ratio - z) < Fraction(1, 10**8)


# --- family sequences ------------------------------------------------------------

def test_family_spec_validation():
    with pytest.raises(DomainError):
        FamilySpec("quartic", 2)
    with pytest.raises(DomainError):
        FamilySpec("cubic", 0)


def test_family_first_terms():
    cubic = family_terms(FamilySpec("cubic", 2), 1)
    assert cubic[0] == 1
    quad = family_terms(FamilySpec("quadratic", 1), 3)
    assert quad == [1, Fraction(10, 3), Fraction(232, 15)]


def test_cubic_c2_terms_satisfy_known_recurrence():
    rec = PRecurrence(
        [[18, 27, 9], [-270, -315, -90], [35, 36, 9]]
    )
    terms = family_terms(FamilySpec("cubic", 2), 30)
    seq = RationalSequence(tuple(terms))
    assert all(r == 0 for r in residual(rec, seq))


def test_guessed_recurrence_annihilates_held_out_terms():
    terms = family_terms(FamilySpec("cubic", 2), 61)
    rec = guess_recurrence(RationalSequence(tuple(terms[:41])), 2, 2)
    assert rec is not None
    assert rec.order == 2
    assert all(r == 0 for r in residual(rec, RationalSequence(tuple(terms))))


def _contour_integral(kind: str, c: int, n: int, points: int) -> complex:
    """Midpoint quadrature of (q(x)/x)^n x^(-s) dx over |x| = 1/c.

    q(x) = (cx+1)((c+1)x+1), s = 2/3 for the cubic family and 1/2 for the
    quadratic one, principal branch along theta in (-pi, pi).
    """
    s = 2.0 / 3.0 if kind == "cubic" else 0.5
    total = 0j
    h = 2 * math.pi / points
    r = 1.0 / c
    for j in range(points):
        theta = -math.pi + (j + 0.5) * h
        x = r * cmath.exp(1j * theta)
        q = (c * x + 1) * ((c + 1) * x + 1)
        branch = r ** (-s) * cmath.exp(-1j * s * theta)
        total += (q / x) ** n * branch * (1j * x)
    return total * h


@pytest.mark.parametrize(
    "kind,c,expected_constant",
    [
        ("cubic", 2, 3 * math.sqrt(3) * 1j * 2 ** (-1.0 / 3.0)),
        ("quadratic", 1, 4j),
    ],
)
def test_terms_match_contour_integrals(kind, c, expected_constant):
    # The exact terms drop one n-independent constant from the true contour
    # integral; numerically the ratio integral/s(n) must equal that constant
    # for every n.
    spec = FamilySpec(kind, c)
    terms = family_terms(spec, 4)
    ratios = []
    for n in (1, 2, 3):
        integral = _contour_integral(kind, c, n, 20000)
        ratios.append(integral / float(terms[n]))
    for r in ratios[1:]:
        assert abs(r - ratios[0]) < 1e-7 * abs(ratios[0])
    assert abs(ratios[0] - expected_constant) < 1e-6 * abs(expected_constant)
