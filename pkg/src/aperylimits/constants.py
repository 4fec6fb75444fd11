"""Reference constants at arbitrary precision, with a per-precision cache.

pi comes from Machin-type arctangent series summed as exact rationals with
an alternating-series tail bound; every computation is cross-checked against
a second, independent Machin-type formula before it is cached.  zeta(2) is
pi^2/6.  zeta(3) bootstraps from the three-term recurrence in
:func:`aperylimits.recurrences.zeta3_recurrence`: the ratio of its two
classical solutions is taken at doubling indices until two consecutive
values agree beyond the requested precision.
"""
from __future__ import annotations

import threading

# The elementary BigReal operations are implemented next door but belong to
# this module's public surface: constants and the ops that consume them.
from .bigreal import BigReal, log, log10, median, nth_root, sqrt
from .rationals import Rational, decimal_magnitude, rational
from .recurrences import (
    ZETA3_DENOMINATOR_INIT,
    ZETA3_NUMERATOR_INIT,
    zeta3_recurrence,
)

__all__ = [
    "BigReal",
    "clear_cache",
    "log",
    "log10",
    "median",
    "nth_root",
    "pi",
    "sqrt",
    "zeta2",
    "zeta3",
    "zeta3_fraction",
]

_CACHE: dict[tuple[str, int], BigReal] = {}
_LOCK = threading.Lock()


def _cached(name: str, digits: int, compute) -> BigReal:
    key = (name, digits)
    value = _CACHE.get(key)
    if value is None:
        value = compute(digits)
        with _LOCK:
            _CACHE.setdefault(key, value)
            value = _CACHE[key]
    return value


def clear_cache() -> None:
    with _LOCK:
        _CACHE.clear()


def _arctan_inverse(q: int, digits: int) -> Rational:
    """Exact partial sum of arctan(1/q) with tail below 10**-(digits).

    The series alternates, so the error is bounded by the first omitted
    term 1/((2j+1) q^(2j+1)).
    """
    bound = 10**digits
    total = rational(0)
    power = q
    d = 1
    sign = 1
    while d * power <= bound:
        total += Rational(sign, d * power)
        sign = -sign
        d += 2
        power *= q * q
    return total


def _pi_fraction(digits: int, formula: str) -> Rational:
    guard = digits + 5
    if formula == "machin":
        # pi/4 = 4 arctan(1/5) - arctan(1/239)
        return 16 * _arctan_inverse(5, guard + 2) - 4 * _arctan_inverse(239, guard)
    if formula == "euler":
        # pi/4 = arctan(1/2) + arctan(1/3)
        return 4 * (_arctan_inverse(2, guard + 1) + _arctan_inverse(3, guard + 1))
    raise ValueError(f"unknown pi formula {formula!r}")


def _compute_pi(digits: int) -> BigReal:
    primary = _pi_fraction(digits, "machin")
    check = _pi_fraction(digits, "euler")
    diff = primary - check
    if diff != 0 and decimal_magnitude(diff) >= -(digits + 2):
        raise AssertionError("independent pi formulas disagree")  # pragma: no cover
    return BigReal.from_rational(primary, digits=digits)


def pi(digits: int) -> BigReal:
    """pi to ``digits`` significant digits."""
    return _cached("pi", digits, _compute_pi)


def _compute_zeta2(digits: int) -> BigReal:
    p = _pi_fraction(digits + 4, "machin")
    return BigReal.from_rational(p * p / 6, digits=digits)


def zeta2(digits: int) -> BigReal:
    """zeta(2) = pi^2/6 to ``digits`` significant digits."""
    return _cached("zeta2", digits, _compute_zeta2)


def zeta3_fraction(digits: int) -> Rational:
    """An exact rational within 10**-(digits) of zeta(3).

    Iterates the numerator and denominator solutions of the three-term
    recurrence and doubles the index until consecutive ratios agree to the
    requested tolerance.
    """
    rec = zeta3_recurrence()
    lead = rec.leading
    low0, low1 = rec.coeffs[0], rec.coeffs[1]
    a = list(ZETA3_NUMERATOR_INIT)
    b = list(ZETA3_DENOMINATOR_INIT)

    def extend(upto: int) -> None:
        for n in range(len(a) - 2, upto - 2):
            c0, c1, c2 = low0(n), low1(n), lead(n)
            a.append(Rational(-(c0 * a[n] + c1 * a[n + 1]), c2))
            b.append(Rational(-(c0 * b[n] + c1 * b[n + 1]), c2))

    # The error decays close to one digit per third of an index step, so
    # this start is already near the target; doubling certifies it.
    n = max(8, digits // 3 + 6)
    extend(n + 1)
    previous = a[n] / b[n]
    while True:
        n *= 2
        extend(n + 1)
        current = a[n] / b[n]
        diff = current - previous
        if diff == 0 or decimal_magnitude(diff) < -(digits + 5):
            return current
        previous = current


def _compute_zeta3(digits: int) -> BigReal:
    return BigReal.from_rational(zeta3_fraction(digits + 2), digits=digits)


def zeta3(digits: int) -> BigReal:
    """zeta(3) to ``digits`` significant digits."""
    return _cached("zeta3", digits, _compute_zeta3)
