"""Cubic and quadratic integral families: exact algebra and end-to-end runs.

The cubic family (parameter c >= 1) has term sequences whose Apéry limit is
the unique real root of

    f_c(x) = 64 + 144(1+2c) x + 108(3c^2+3c+1) x^2 + 27(1+2c) x^3,

and that root has the exact closed form (4θ-4)/(-(9c+3)θ + 9c+6) with
θ = ((c+1)/c)^(1/3).  The identity "that expression is a root of f_c" is
verified here with *zero tolerance* in exact cubic-field arithmetic.  The
quadratic family's limit is -3c - 3/2 - 3 sqrt(c^2+c).  ``run_family``
chains term construction, recurrence guessing, limit extraction,
identification, and closed-form comparison into one report.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .bigreal import BigReal, log, nth_root, sqrt
from .builders import FamilySpec, family_terms
from .errors import (
    DomainError,
    ExperimentError,
    MultipleRealRoots,
    NonInvertibleDenominator,
)
from .guess import minimal_recurrence, terms_needed
from .identify import AlgebraicCandidate, identify_algebraic
from .limits import (
    ConvergenceReport,
    convergence_report,
    delta_estimate,
    integerize,
)
from .rationals import Rational, rational
from .recurrences import PolyInt, PRecurrence, RationalSequence, iterate


def cubic_poly(c: int) -> PolyInt:
    """The conjectured minimal polynomial of the cubic-family limit."""
    if c < 1:
        raise DomainError("family parameter c must be >= 1")
    return PolyInt(
        [
            64,
            144 * (1 + 2 * c),
            108 * (3 * c * c + 3 * c + 1),
            27 * (1 + 2 * c),
        ]
    )


def quadratic_poly(c: int) -> PolyInt:
    """Minimal polynomial 4x^2 + (24c+12)x + 9 of the quadratic-family limit.

    Derived by clearing the square root in x = -3c - 3/2 - 3 sqrt(c^2+c).
    """
    if c < 1:
        raise DomainError("family parameter c must be >= 1")
    return PolyInt([9, 24 * c + 12, 4])


@dataclass(frozen=True)
class CubicFieldElement:
    """p + q θ + r θ² with θ³ = (c+1)/c, exact rational coordinates.

    (c+1)/c is never a rational cube for integer c >= 1, so this is a field:
    every nonzero element is invertible.
    """

    c: int
    p: object
    q: object
    r: object

    def __post_init__(self):
        if self.c < 1:
            raise DomainError("field parameter c must be >= 1")
        object.__setattr__(self, "p", rational(self.p))
        object.__setattr__(self, "q", rational(self.q))
        object.__setattr__(self, "r", rational(self.r))

    @classmethod
    def theta(cls, c: int) -> "CubicFieldElement":
        return cls(c, 0, 1, 0)

    @classmethod
    def scalar(cls, c: int, value) -> "CubicFieldElement":
        return cls(c, value, 0, 0)

    def _cube(self):
        return Rational(self.c + 1, self.c)

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0 and self.r == 0

    def _check(self, other) -> "CubicFieldElement":
        if isinstance(other, CubicFieldElement):
            if other.c != self.c:
                raise DomainError("cannot mix elements of different cubic fields")
            return other
        return CubicFieldElement.scalar(self.c, other)

    def __add__(self, other):
        o = self._check(other)
        return CubicFieldElement(self.c, self.p + o.p, self.q + o.q, self.r + o.r)

    __radd__ = __add__

    def __neg__(self):
        return CubicFieldElement(self.c, -self.p, -self.q, -self.r)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._check(other)
        t = self._cube()
        p1, q1, r1 = self.p, self.q, self.r
        p2, q2, r2 = o.p, o.q, o.r
        return CubicFieldElement(
            self.c,
            p1 * p2 + t * (q1 * r2 + r1 * q2),
            p1 * q2 + q1 * p2 + t * r1 * r2,
            p1 * r2 + q1 * q2 + r1 * p2,
        )

    __rmul__ = __mul__

    def inverse(self) -> "CubicFieldElement":
        """Exact inverse by solving the 3x3 multiplication system.

        Multiplication by self sends basis vectors (1, θ, θ²) to columns
        (p,q,r), (tr,p,q), (tq,tr,p); the inverse is the solution of
        M v = (1,0,0).
        """
        if self.is_zero():
            raise NonInvertibleDenominator("zero element has no inverse")
        t = self._cube()
        p, q, r = self.p, self.q, self.r
        # Cramer's rule on M = [[p, t*r, t*q], [q, p, t*r], [r, q, p]].
        det = p * p * p + t * q * q * q + t * t * r * r * r - 3 * t * p * q * r
        if det == 0:
            raise NonInvertibleDenominator(
                "singular multiplication matrix (not a field element?)"
            )
        inv_p = (p * p - t * q * r) / det
        inv_q = (t * r * r - p * q) / det
        inv_r = (q * q - p * r) / det
        return CubicFieldElement(self.c, inv_p, inv_q, inv_r)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def embed(self, digits: int) -> BigReal:
        """Numeric value using the real cube root of (c+1)/c."""
        guard = digits + 8
        theta = nth_root(self._cube(), 3, guard)
        p = BigReal.from_rational(self.p, digits=guard)
        q = BigReal.from_rational(self.q, digits=guard)
        r = BigReal.from_rational(self.r, digits=guard)
        return (p + q * theta + r * theta * theta).round_to(digits)


def alpha_element(c: int) -> CubicFieldElement:
    """α_c = (4θ - 4)/(-(9c+3)θ + 9c+6) as an exact field element."""
    theta = CubicFieldElement.theta(c)
    num = 4 * theta - 4
    den = -(9 * c + 3) * theta + (9 * c + 6)
    if den.is_zero():
        raise NonInvertibleDenominator("denominator element is zero")
    return num / den


def verify_root_identity(c: int) -> bool:
    """Exact check that α_c is a root of f_c — no tolerance anywhere."""
    alpha = alpha_element(c)
    acc = CubicFieldElement.scalar(c, 0)
    for coeff in reversed(cubic_poly(c).coeffs):
        acc = acc * alpha + coeff
    return acc.is_zero()


def _discriminant(poly: PolyInt) -> int:
    """Exact discriminant of a cubic e3 x^3 + e2 x^2 + e1 x + e0."""
    if poly.degree != 3:
        raise DomainError("discriminant helper expects a cubic")
    e0, e1, e2, e3 = poly.coeffs
    return (
        18 * e3 * e2 * e1 * e0
        - 4 * e2**3 * e0
        + e2**2 * e1**2
        - 4 * e3 * e1**3
        - 27 * e3**2 * e0**2
    )


def real_root(c: int, digits: int) -> BigReal:
    """The unique real root of cubic_poly(c), to ``digits`` digits.

    The exact discriminant certifies uniqueness first; the root is then
    bracketed by sign change and polished by bracket-safeguarded Newton
    steps in exact rational arithmetic.
    """
    poly = cubic_poly(c)
    if _discriminant(poly) >= 0:
        raise MultipleRealRoots(
            f"cubic for c={c} does not have a single real root"
        )
    e0, e1, e2, e3 = poly.coeffs
    bound = 1 + max(abs(e0), abs(e1), abs(e2)) // e3 + 1
    lo, hi = rational(-bound), rational(0)
    if not poly(lo) < 0 < poly(hi):
        raise AssertionError("root bracket failed")  # pragma: no cover
    # A few bisection steps give Newton a safe, close seed.
    for _ in range(40):
        mid = (lo + hi) / 2
        if poly(mid) < 0:
            lo = mid
        else:
            hi = mid
    dp = PolyInt([e1, 2 * e2, 3 * e3])
    target = Rational(1, 10 ** (digits + 6))
    x = (lo + hi) / 2
    for _ in range(64):
        fx = poly(x)
        if fx == 0:
            break
        slope = dp(x)
        if slope == 0:
            break  # fall back to the bisection bracket  # pragma: no cover
        step = Rational(fx) / slope
        nxt = x - step
        if not lo <= nxt <= hi:
            nxt = (lo + hi) / 2  # pragma: no cover - safeguard only
        if poly(nxt) < 0:
            lo = nxt
        else:
            hi = nxt
        # Round to limit coordinate growth; guard far beyond the target.
        nxt = BigReal.from_rational(nxt, digits=2 * digits + 24).to_fraction()
        done = abs(nxt - x) < target
        x = nxt
        if done:
            break
    return BigReal.from_rational(x, digits=digits)


def quadratic_closed_form(c: int, digits: int) -> BigReal:
    """-3c - 3/2 - 3 sqrt(c^2 + c) at ``digits`` digits."""
    if c < 1:
        raise DomainError("family parameter c must be >= 1")
    guard = digits + 8
    root = sqrt(c * c + c, guard)
    value = BigReal.from_rational(Rational(-6 * c - 3, 2), digits=guard) - 3 * root
    return value.round_to(digits)


def kappa(c: int, digits: int = 30) -> BigReal:
    """Effective irrationality exponent bound for ((c+1)/c)^(1/3).

    kappa = (0.911 + 2 ln s) / (-0.911 + 2 ln s) with s = sqrt(c+1)+sqrt(c).
    The bound is meaningful (kappa < 2) only for c >= 4; see
    ``kappa_applies``.
    """
    if c < 1:
        raise DomainError("kappa needs c >= 1")
    guard = digits + 10
    s = sqrt(c + 1, guard) + sqrt(c, guard)
    two_ln_s = 2 * log(s, guard)
    shift = BigReal.from_rational(Rational(911, 1000), digits=guard)
    return ((shift + two_ln_s) / (two_ln_s - shift)).round_to(digits)


def kappa_applies(c: int) -> bool:
    """Whether the kappa bound improves on Liouville (true for c >= 4)."""
    return c >= 4


@dataclass(frozen=True)
class FamilyReport:
    """Everything one family run produces.

    ``identified`` is the guessed minimal polynomial of the limit (or None
    if identification failed); ``closed_form`` the independently computed
    reference value; ``matches_closed_form`` whether the empirical limit
    agrees with it to the requested digits; ``polynomial_expected`` whether
    the identified polynomial equals the conjectured one.  ``kappa_value``
    is filled for the cubic kind only, with ``kappa_effective`` false when
    c < 4 (the bound does not beat Liouville there).
    """

    spec: FamilySpec
    recurrence: PRecurrence
    initial_a: tuple
    initial_b: tuple
    convergence: ConvergenceReport
    identified: AlgebraicCandidate | None
    closed_form: BigReal
    matches_closed_form: bool
    polynomial_expected: bool | None
    kappa_value: BigReal | None
    kappa_effective: bool | None
    digits: int


def _default_depth(spec: FamilySpec, digits: int) -> int:
    # The error decays like ((2c+1) + 2 sqrt(c^2+c))^(-2n) for both kinds,
    # i.e. faster than (4c+2)^(-2n); solve for the digit target with slack.
    base = ((2 * spec.c + 1) + 2 * math.sqrt(spec.c * (spec.c + 1))) ** 2
    need = int(digits * math.log(10) / math.log(base)) + 1
    return max(64, 2 * need + 16)


def run_family(
    spec: FamilySpec,
    N: int | None = None,
    digits: int = 30,
    max_order: int = 3,
    max_degree: int = 8,
) -> FamilyReport:
    """Full pipeline for one family member.

    Builds terms, guesses the minimal recurrence, iterates the two canonical
    solutions A (1, 0, ...) and B (0, 1, ...), extracts the limit of B/A,
    identifies its minimal polynomial, compares against the closed form, and
    estimates delta/mu from the integerized ratios.
    """
    rec_terms = family_terms(spec, terms_needed(max_order, max_degree))
    rec = minimal_recurrence(RationalSequence(rec_terms, 0), max_order, max_degree)
    if rec.order != 2:
        raise ExperimentError(
            f"family recurrence has order {rec.order}, expected 2; "
            "the canonical (1,0)/(0,1) initial conditions do not apply"
        )
    depth = N if N is not None else _default_depth(spec, digits)
    init_a = (rational(1), rational(0))
    init_b = (rational(0), rational(1))
    seq_a = iterate(rec, init_a, depth + 1)
    seq_b = iterate(rec, init_b, depth + 1)
    report = convergence_report(seq_a, seq_b, digits)

    # A(1) = 0 by construction, so integerize only where the ratio exists.
    pairs = [
        integerize(b, a) for a, b in zip(seq_a.terms, seq_b.terms) if a != 0
    ]
    delta = delta_estimate(pairs, report.limit_fraction)
    report = report.attach_delta(delta)

    refined = BigReal.from_rational(report.limit_fraction, digits=2 * digits + 10)
    max_poly_degree = 3 if spec.kind == "cubic" else 2
    identified = identify_algebraic(refined, max_poly_degree, max(40, digits))

    # Guard digits keep the closed form's own rounding error well below
    # the comparison tolerance, which is relative: agreement to `digits`
    # significant digits, not `digits` places after the point.
    if spec.kind == "cubic":
        closed = real_root(spec.c, digits + 10)
        expected_poly = cubic_poly(spec.c)
        kappa_value = kappa(spec.c, digits=min(digits, 30))
        kappa_eff = kappa_applies(spec.c)
    else:
        closed = quadratic_closed_form(spec.c, digits + 10)
        expected_poly = quadratic_poly(spec.c)
        kappa_value = None
        kappa_eff = None
    closed_fraction = closed.to_fraction()
    gap = report.limit_fraction - closed_fraction
    matches = gap == 0 or abs(gap) < abs(closed_fraction) * Rational(
        1, 10 ** (digits - 1)
    )
    poly_ok = None if identified is None else identified.polynomial == expected_poly

    return FamilyReport(
        spec=spec,
        recurrence=rec,
        initial_a=init_a,
        initial_b=init_b,
        convergence=report,
        identified=identified,
        closed_form=closed,
        matches_closed_form=matches,
        polynomial_expected=poly_ok,
        kappa_value=kappa_value,
        kappa_effective=kappa_eff,
        digits=digits,
    )
