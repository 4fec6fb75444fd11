"""Exact rational arithmetic helpers.

All sequence arithmetic in this package is exact: terms are arbitrary-
precision rationals and rounding happens only at the final conversion to
decimal.  gmpy2's ``mpq`` is used when available (it is much faster on
large operands); ``fractions.Fraction`` is a drop-in fallback with the
same ``numerator``/``denominator`` surface.
"""
from __future__ import annotations

import math

try:
    from gmpy2 import mpq as Rational
    from gmpy2 import mpz as _mpz

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rational

    _mpz = int
    HAVE_GMPY2 = False


def rational(num, den=1):
    """Build an exact rational from integers (or pass a rational through)."""
    return Rational(num, den)


def numerator(q) -> int:
    return int(q.numerator)


def denominator(q) -> int:
    return int(q.denominator)


def is_integral(q) -> bool:
    return q.denominator == 1


def lcm(a: int, b: int) -> int:
    return abs(a) // math.gcd(a, b) * abs(b)


_NDIGITS_POW_CACHE: dict[int, int] = {}


def _pow10_cached(k: int) -> int:
    p = _NDIGITS_POW_CACHE.get(k)
    if p is None:
        p = 10**k
        if k <= 1 << 16:
            _NDIGITS_POW_CACHE[k] = p
    return p


if HAVE_GMPY2:

    def ndigits(n) -> int:
        """Exact number of decimal digits of ``|n|`` (1 for n == 0)."""
        if not n:
            return 1
        z = abs(_mpz(n))
        # num_digits wraps mpz_sizeinbase, which may answer one too many
        # for base 10; compare against the power boundary to make it exact.
        estimate = z.num_digits(10)
        return estimate if z >= _pow10_cached(estimate - 1) else estimate - 1

else:  # pragma: no cover - exercised only without gmpy2

    def ndigits(n) -> int:
        return len(str(abs(int(n)))) if n else 1


def decimal_magnitude(q) -> int:
    """Exact floor(log10(|q|)) for a nonzero rational ``q``.

    That is, the unique ``e`` with ``10**e <= |q| < 10**(e+1)``.
    """
    num = abs(numerator(q))
    den = denominator(q)
    if num == 0:
        raise ValueError("decimal_magnitude of zero")
    e = ndigits(num) - ndigits(den)
    # |q| is within a factor of 10 of 10**e; fix up exactly.  With exact
    # ndigits each loop runs at most once, but loop anyway for robustness.
    while _ge_pow10(num, den, e + 1):
        e += 1
    while not _ge_pow10(num, den, e):
        e -= 1
    return e


def _ge_pow10(num: int, den: int, e: int) -> bool:
    """Whether num/den >= 10**e, exactly (num, den > 0)."""
    if e >= 0:
        return num >= den * _pow10_cached(e)
    return num * _pow10_cached(-e) >= den
