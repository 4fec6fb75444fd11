"""Limit extraction and convergence diagnostics for recurrence solutions.

Given two solutions A and B of the same recurrence, the object of interest
is lim B(n)/A(n).  All error quantities here are computed as *exact*
rational differences against the deepest available ratio B(N)/A(N); decimal
rounding happens only at the very end.  That keeps the diagnostics immune
to precision-management bugs: a difference of two exact ratios is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .bigreal import BigReal, log, median
from .errors import (
    DivisionByZeroSolution,
    DomainError,
    InsufficientTerms,
    NonpositiveDelta,
    PrecisionExhausted,
    ZeroDenominator,
)
from .rationals import Rational, decimal_magnitude, denominator, numerator, rational
from .recurrences import PRecurrence, RationalSequence, iterate


@dataclass(frozen=True)
class IntegerizedPair:
    """A ratio rewritten as a_int/b_int in lowest terms with b_int > 0."""

    a_int: int
    b_int: int


def integerize(a, b) -> IntegerizedPair:
    """Rewrite the rational ratio a/b as a coprime integer pair."""
    if b == 0:
        raise ZeroDenominator("cannot integerize a ratio with zero denominator")
    q = Rational(a) / Rational(b)
    return IntegerizedPair(numerator(q), denominator(q))


def integerize_sequence(nums, dens) -> list[IntegerizedPair]:
    """Elementwise integerize of two equal-length sequences."""
    if len(nums) != len(dens):
        raise DomainError("numerator and denominator sequences differ in length")
    return [integerize(a, b) for a, b in zip(nums, dens)]


@dataclass(frozen=True)
class ConvergenceReport:
    """What the deep ratio B(N)/A(N) looks like as a limit estimate.

    ``achieved_digits`` is certified by agreement between depth N and depth
    N//2; ``limit`` is rounded to the requested digits regardless, so check
    ``converged`` before trusting all of them.  ``alpha_estimate`` is the
    median of consecutive exact error ratios |e_n / e_{n+1}| over the last
    quarter of indices (errors are measured against the depth-N ratio, so a
    small guard gap at the very top is excluded where that reference
    contaminates them).  ``max_error_ratio`` is the window maximum of the
    forward ratios |e_{n+1} / e_n|; a value below 1 certifies geometric
    decay over the window.  ``delta_estimate``/``mu_estimate`` are filled
    by pipelines that integerize the ratios (see ``attach_delta``).
    Everything here is an empirical estimate, never a proof.
    """

    limit: BigReal
    limit_fraction: object  # exact B(N)/A(N)
    digits_requested: int
    achieved_digits: int
    converged: bool
    n_used: int
    stabilized_at: int | None
    alpha_estimate: BigReal | None
    max_error_ratio: BigReal | None
    delta_estimate: BigReal | None = None
    mu_estimate: BigReal | None = None
    empirical: bool = True

    def attach_delta(self, delta: BigReal) -> "ConvergenceReport":
        """Copy of the report with delta and the implied mu filled in."""
        mu = measure_from_delta(delta) if delta.sign > 0 else None
        return replace(self, delta_estimate=delta, mu_estimate=mu)


def convergence_report(
    seq_a: RationalSequence, seq_b: RationalSequence, digits: int
) -> ConvergenceReport:
    """Build a ConvergenceReport from two aligned solution sequences."""
    if len(seq_a) != len(seq_b) or seq_a.start != seq_b.start:
        raise DomainError("solution sequences must be aligned")
    if len(seq_a) < 8:
        raise InsufficientTerms("need at least 8 terms for a convergence report")
    last = seq_a.end - 1
    if seq_a[last] == 0:
        raise DivisionByZeroSolution(f"denominator solution vanishes at n={last}")
    ratios: dict[int, object] = {}
    for n in range(seq_a.start, seq_a.end):
        if seq_a[n] != 0:
            ratios[n] = Rational(seq_b[n]) / Rational(seq_a[n])
    deep = ratios[last]

    half = seq_a.start + (last - seq_a.start) // 2
    while half not in ratios and half > seq_a.start:
        half -= 1
    gap = deep - ratios[half] if half in ratios else rational(1)
    if gap == 0:
        achieved = digits
    else:
        achieved = max(0, -decimal_magnitude(gap) - 1)
    converged = achieved >= digits

    stabilized_at = None
    if converged:
        for n in sorted(ratios):
            err = ratios[n] - deep
            if err == 0 or decimal_magnitude(err) < -digits:
                stabilized_at = n
                break

    span = last - seq_a.start
    guard = max(2, span // 100)
    window_lo = last - max(4, span // 4)
    window_hi = last - guard
    errors: dict[int, object] = {}
    for n in range(window_lo, window_hi + 1):
        if n in ratios:
            err = ratios[n] - deep
            if err != 0:
                errors[n] = err
    forward_ratios: list[BigReal] = []
    backward_ratios: list[BigReal] = []
    for n in errors:
        if n + 1 in errors:
            step = abs(errors[n] / errors[n + 1])
            backward_ratios.append(BigReal.from_rational(step, digits=20))
            forward_ratios.append(BigReal.from_rational(1 / step, digits=20))
    alpha = median(backward_ratios) if len(backward_ratios) >= 3 else None
    max_ratio = max(forward_ratios) if forward_ratios else None

    return ConvergenceReport(
        limit=BigReal.from_rational(deep, digits=digits),
        limit_fraction=deep,
        digits_requested=digits,
        achieved_digits=achieved,
        converged=converged,
        n_used=last,
        stabilized_at=stabilized_at,
        alpha_estimate=alpha,
        max_error_ratio=max_ratio,
    )


def apery_limit(
    rec: PRecurrence,
    init_a,
    init_b,
    N: int,
    digits: int,
) -> ConvergenceReport:
    """Iterate two solutions of ``rec`` to depth N and report B(N)/A(N).

    ``init_a`` seeds the (denominator-like) solution A, ``init_b`` the
    solution B.  Non-convergence at the requested digits is reported, not
    raised: check ``converged`` / ``achieved_digits``.
    """
    if N < max(2 * rec.order, 8):
        raise DomainError("depth N too small for a meaningful report")
    count = N + 1
    seq_a = iterate(rec, init_a, count)
    seq_b = iterate(rec, init_b, count)
    return convergence_report(seq_a, seq_b, digits)


def delta_estimate(pairs, limit, work_digits: int = 25) -> BigReal:
    """Median irrationality-exponent deficit over the last half window.

    The exponent deficit delta is read off the inequality
    ``|a/b - L| <= C / b**(1+delta)``.  The unknown constant C would bias
    any single-index reading (for the classical zeta(3) pairs the slowly
    converging lcm(1..n) growth inflates it well above its limit at every
    reachable depth), so each sample compares two depths: for n in the
    window [len//2, len - guard) the sample is

        (log|e(n//2)| - log|e(n)|) / (log b(n) - log b(n//2)) - 1,

    in which C cancels.  The median of the samples is returned.  ``limit``
    may be an exact rational (errors are then exact) or a BigReal, in which
    case it must resolve the smallest error used or PrecisionExhausted is
    raised.
    """
    if isinstance(limit, BigReal):
        limit_fraction = limit.to_fraction()
        limit_ulp = limit.ulp_exponent()
    else:
        limit_fraction = Rational(limit)
        limit_ulp = None
    total = len(pairs)
    if total < 8:
        raise InsufficientTerms("need at least 8 pairs for a delta estimate")
    guard = max(2, total // 50)
    window = range(total // 2, total - guard)

    log_cache: dict[int, tuple] = {}
    smallest_err_mag = None

    def logs_at(n):
        nonlocal smallest_err_mag
        if n not in log_cache:
            pair = pairs[n]
            if pair.b_int <= 1:
                log_cache[n] = None
            else:
                err = Rational(pair.a_int, pair.b_int) - limit_fraction
                if err == 0:
                    log_cache[n] = None
                else:
                    mag = decimal_magnitude(err)
                    if smallest_err_mag is None or mag < smallest_err_mag:
                        smallest_err_mag = mag
                    log_cache[n] = (
                        log(abs(err), work_digits),
                        log(pair.b_int, work_digits),
                    )
        return log_cache[n]

    one = BigReal.from_int(1, work_digits)
    samples: list[BigReal] = []
    for n in window:
        near, far = logs_at(n), logs_at(n // 2)
        if near is None or far is None:
            continue
        err_drop = far[0] - near[0]
        den_growth = near[1] - far[1]
        if den_growth.sign <= 0:
            continue
        samples.append(err_drop / den_growth - one)
    if len(samples) < 3:
        raise InsufficientTerms("too few usable pairs in the delta window")
    if limit_ulp is not None and smallest_err_mag is not None:
        if limit_ulp >= smallest_err_mag - 2:
            raise PrecisionExhausted(
                "limit is not known finely enough to resolve the window errors"
            )
    return median(samples)


def measure_from_delta(delta: BigReal) -> BigReal:
    """Irrationality measure mu = 1 + 1/delta implied by a positive delta."""
    if delta.sign <= 0:
        raise NonpositiveDelta("irrationality measure needs a positive delta")
    one = BigReal.from_int(1, delta.digits)
    return one + one / delta


def error_sequence(pairs, limit_fraction) -> dict[int, object]:
    """Exact errors a/b - L for each index with a nonzero error."""
    out: dict[int, object] = {}
    for n, pair in enumerate(pairs):
        err = Rational(pair.a_int, pair.b_int) - Rational(limit_fraction)
        if err != 0:
            out[n] = err
    return out
