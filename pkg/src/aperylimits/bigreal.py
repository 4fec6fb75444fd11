"""Arbitrary-precision decimal floating point on plain integers.

A :class:`BigReal` is a triple ``(mantissa, exponent, digits)`` representing
the value ``mantissa * 10**exponent`` carried at a declared precision of
``digits`` significant decimal digits.  Nonzero values are kept normalized so
the mantissa has exactly ``digits`` decimal digits; every arithmetic result
is the exact integer result rounded once (half away from zero) to the
precision of the least-precise operand, which keeps results within one unit
in the last place of the declared precision.

Roots are computed by bisection-seeded integer Newton iteration and
logarithms by an argument-reduced atanh series, both with guard digits so the
returned value is correct to the declared precision.
"""
from __future__ import annotations

from .errors import DomainError
from .rationals import Rational, decimal_magnitude, denominator, ndigits, numerator

_POW10_CACHE: dict[int, int] = {}


def _pow10(k: int) -> int:
    p = _POW10_CACHE.get(k)
    if p is None:
        p = 10**k
        if k <= 1 << 16:
            _POW10_CACHE[k] = p
    return p


def _round_div(n: int, d: int) -> int:
    """Round n/d to the nearest integer, ties away from zero.  d > 0."""
    if n >= 0:
        q, r = divmod(n, d)
        return q + 1 if 2 * r >= d else q
    q, r = divmod(-n, d)
    return -(q + 1) if 2 * r >= d else -q


class BigReal:
    """A decimal float ``mantissa * 10**exponent`` at explicit precision."""

    __slots__ = ("mantissa", "exponent", "digits")

    def __init__(self, mantissa: int, exponent: int = 0, *, digits: int):
        if digits < 1:
            raise ValueError("precision must be at least 1 digit")
        mantissa = int(mantissa)
        if mantissa == 0:
            object.__setattr__(self, "mantissa", 0)
            object.__setattr__(self, "exponent", 0)
            object.__setattr__(self, "digits", digits)
            return
        shift = ndigits(mantissa) - digits
        if shift > 0:
            mantissa = _round_div(mantissa, _pow10(shift))
            exponent += shift
            if ndigits(mantissa) > digits:  # rounding carried 99..9 -> 100..0
                mantissa = _round_div(mantissa, 10)
                exponent += 1
        elif shift < 0:
            mantissa *= _pow10(-shift)
            exponent += shift
        object.__setattr__(self, "mantissa", mantissa)
        object.__setattr__(self, "exponent", exponent)
        object.__setattr__(self, "digits", digits)

    def __setattr__(self, name, value):
        raise AttributeError("BigReal is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_int(cls, n: int, digits: int) -> "BigReal":
        return cls(n, 0, digits=digits)

    @classmethod
    def from_rational(cls, num, den=1, *, digits: int) -> "BigReal":
        """Round an exact rational to ``digits`` significant digits."""
        q = Rational(num, den) if den != 1 else Rational(num)
        p, d = numerator(q), denominator(q)
        if p == 0:
            return cls(0, 0, digits=digits)
        scale = digits + 2 - (ndigits(p) - ndigits(d))
        if scale >= 0:
            man = _round_div(p * _pow10(scale), d)
        else:
            man = _round_div(p, d * _pow10(-scale))
        return cls(man, -scale, digits=digits)

    @classmethod
    def zero(cls, digits: int) -> "BigReal":
        return cls(0, 0, digits=digits)

    # -- views -------------------------------------------------------------

    def to_fraction(self):
        """The exactly represented value as a rational."""
        if self.exponent >= 0:
            return Rational(self.mantissa * _pow10(self.exponent))
        return Rational(self.mantissa, _pow10(-self.exponent))

    def round_to(self, digits: int) -> "BigReal":
        return BigReal(self.mantissa, self.exponent, digits=digits)

    def is_zero(self) -> bool:
        return self.mantissa == 0

    @property
    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def decimal_exponent(self):
        """floor(log10(|x|)) for nonzero x, None for zero."""
        if self.mantissa == 0:
            return None
        return self.exponent + self.digits - 1

    def ulp_exponent(self) -> int:
        """Power of ten of one unit in the last declared place."""
        if self.mantissa == 0:
            return self.exponent
        return self.exponent

    def to_decimal(self, digits: int | None = None) -> str:
        """Positional decimal string with the given significant digits."""
        digits = self.digits if digits is None else digits
        if self.mantissa == 0:
            return "0"
        r = self.round_to(digits) if digits != self.digits else self
        body = str(abs(r.mantissa))
        sign = "-" if r.mantissa < 0 else ""
        point = r.exponent + digits  # value = +-0.body * 10**point
        if point > digits + 21 or point < -21:
            head, tail = body[0], body[1:].rstrip("0")
            frac = "." + tail if tail else ""
            return f"{sign}{head}{frac}e{point - 1:+d}"
        if point <= 0:
            return sign + "0." + "0" * (-point) + body
        if point >= digits:
            return sign + body + "0" * (point - digits)
        return sign + body[:point] + "." + body[point:]

    def __repr__(self) -> str:
        shown = self.to_decimal(min(self.digits, 32))
        more = "..." if self.digits > 32 else ""
        return f"BigReal({shown}{more}, digits={self.digits})"

    def __float__(self) -> float:
        de = self.decimal_exponent()
        if de is None:
            return 0.0
        if de > 307:
            return float("inf") if self.mantissa > 0 else float("-inf")
        if de < -307:
            return 0.0
        return float(self.to_decimal(min(self.digits, 18)))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other, digits: int):
        if isinstance(other, BigReal):
            return other
        if isinstance(other, int):
            return BigReal.from_int(other, digits)
        return BigReal.from_rational(other, digits=digits)

    def __add__(self, other):
        other = self._coerce(other, self.digits)
        if other is NotImplemented:
            return NotImplemented
        digits = min(self.digits, other.digits)
        if self.mantissa == 0:
            return other.round_to(digits)
        if other.mantissa == 0:
            return self.round_to(digits)
        a, b = (self, other) if self.exponent >= other.exponent else (other, self)
        diff = a.exponent - b.exponent
        # When b lies entirely below the guard window of the result it can
        # only matter as a direction nudge in the final guard digit.
        if diff > digits + 4 + b.digits:
            man = a.mantissa * _pow10(4) + (4 if b.mantissa > 0 else -4)
            return BigReal(man, a.exponent - 4, digits=digits)
        return BigReal(a.mantissa * _pow10(diff) + b.mantissa, b.exponent, digits=digits)

    __radd__ = __add__

    def __neg__(self):
        return BigReal(-self.mantissa, self.exponent, digits=self.digits)

    def __sub__(self, other):
        other = self._coerce(other, self.digits)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other, self.digits)
        digits = min(self.digits, other.digits)
        return BigReal(
            self.mantissa * other.mantissa,
            self.exponent + other.exponent,
            digits=digits,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other, self.digits)
        if other.mantissa == 0:
            raise ZeroDivisionError("BigReal division by zero")
        digits = min(self.digits, other.digits)
        if self.mantissa == 0:
            return BigReal.zero(digits)
        scale = digits + 3 + ndigits(other.mantissa) - ndigits(self.mantissa)
        sg = 1 if other.mantissa > 0 else -1
        if scale >= 0:
            man = _round_div(self.mantissa * sg * _pow10(scale), abs(other.mantissa))
        else:
            man = _round_div(self.mantissa * sg, abs(other.mantissa) * _pow10(-scale))
        return BigReal(man, self.exponent - other.exponent - scale, digits=digits)

    def __rtruediv__(self, other):
        return self._coerce(other, self.digits).__truediv__(self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        if k == 0:
            return BigReal.from_int(1, self.digits)
        return BigReal(self.mantissa**k, self.exponent * k, digits=self.digits)

    def __abs__(self):
        return BigReal(abs(self.mantissa), self.exponent, digits=self.digits)

    # -- comparison ----------------------------------------------------------

    def _cmp(self, other) -> int:
        if isinstance(other, BigReal):
            rhs = other.to_fraction()
        elif isinstance(other, int):
            rhs = Rational(other)
        else:
            rhs = Rational(other)
        lhs = self.to_fraction()
        if lhs == rhs:
            return 0
        return 1 if lhs > rhs else -1

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        man, exp = self.mantissa, self.exponent
        while man and man % 10 == 0:
            man //= 10
            exp += 1
        return hash((man, exp))


# -- roots ---------------------------------------------------------------


def _introot(n: int, k: int) -> int:
    """floor(n ** (1/k)) by Newton iteration seeded from the bit length.

    The seed ``2**(bitlen//k + 1)`` always lies above the true root (the
    bisection bracket), and the iteration decreases monotonically to the
    floor root.
    """
    if n < 0:
        raise DomainError("integer root of a negative number")
    if n == 0:
        return 0
    x = 1 << (n.bit_length() // k + 1)
    while True:
        t = ((k - 1) * x + n // x ** (k - 1)) // k
        if t >= x:
            return x
        x = t


def _as_fraction(x):
    if isinstance(x, BigReal):
        return x.to_fraction()
    if isinstance(x, int):
        return Rational(x)
    return Rational(x)


def nth_root(x, k: int, digits: int) -> BigReal:
    """The real k-th root of a positive value, to ``digits`` digits."""
    if k < 1:
        raise DomainError("root index must be a positive integer")
    q = _as_fraction(x)
    if q < 0:
        raise DomainError("nth_root of a negative value")
    if q == 0:
        return BigReal.zero(digits)
    p, d = numerator(q), denominator(q)
    guard = digits + 12
    m = decimal_magnitude(q)
    s = m // k
    shift = k * (guard - s)
    if shift >= 0:
        scaled = p * _pow10(shift) // d
    else:
        scaled = p // (d * _pow10(-shift))
    root = _introot(scaled, k)
    return BigReal(root, s - guard, digits=digits)


def sqrt(x, digits: int) -> BigReal:
    return nth_root(x, 2, digits)


# -- logarithms -----------------------------------------------------------

_LN_CACHE: dict[int, tuple[int, int]] = {}


def _atanh_inv_int(q: int, one: int) -> int:
    """atanh(1/q) in fixed point (scaled by ``one``) for an integer q > 1."""
    total = 0
    power = q
    d = 1
    while True:
        term = one // (d * power)
        if term == 0:
            return total
        total += term
        d += 2
        power *= q * q


def _ln_constants(precision: int) -> tuple[int, int]:
    """Fixed-point (ln 2, ln 10) scaled by 10**precision."""
    cached = _LN_CACHE.get(precision)
    if cached is None:
        one = _pow10(precision)
        ln2 = 2 * _atanh_inv_int(3, one)
        # ln 10 = 3 ln 2 + ln(10/8) and (10/8 - 1)/(10/8 + 1) = 1/9.
        ln10 = 3 * ln2 + 2 * _atanh_inv_int(9, one)
        cached = (ln2, ln10)
        _LN_CACHE[precision] = cached
    return cached


def _atanh_fixed(z: int, one: int) -> int:
    """atanh(z/one) in fixed point for |z| < one/4 or so."""
    sg = 1 if z >= 0 else -1
    a = abs(z)
    aa = a * a // one
    total = 0
    power = a
    d = 1
    while power:
        total += power // d
        power = power * aa // one
        d += 2
    return sg * total


def log(x, digits: int) -> BigReal:
    """Natural logarithm of a positive value, to ``digits`` digits."""
    if not isinstance(x, BigReal):
        x = BigReal.from_rational(_as_fraction(x), digits=digits + 6)
    if x.mantissa <= 0:
        raise DomainError("log of a non-positive value")
    precision = digits + 15
    one = _pow10(precision)
    nd = x.digits
    q10 = x.exponent + nd - 1  # x = r * 10**q10 with r in [1, 10)
    if precision >= nd - 1:
        r = x.mantissa * _pow10(precision - (nd - 1))
    else:
        r = _round_div(x.mantissa, _pow10(nd - 1 - precision))
    halvings = 0
    while r >= 3 * one // 2:
        r //= 2
        halvings += 1
    z = (r - one) * one // (r + one)
    series = _atanh_fixed(z, one)
    ln2, ln10 = _ln_constants(precision)
    value = q10 * ln10 + halvings * ln2 + 2 * series
    return BigReal(value, -precision, digits=digits)


def log10(x, digits: int) -> BigReal:
    """Base-10 logarithm, to ``digits`` digits."""
    guard = digits + 6
    precision = guard + 15
    _, ln10 = _ln_constants(precision)
    num = log(x, guard)
    return num / BigReal(ln10, -precision, digits=guard)


def median(values: list) -> BigReal:
    """Median of a nonempty list of BigReals (average of middle pair)."""
    if not values:
        raise ValueError("median of an empty list")
    ordered = sorted(values)
    mid = len(ordered) // 2
    if len(ordered) % 2 == 1:
        return ordered[mid]
    two = BigReal.from_int(2, ordered[0].digits)
    return (ordered[mid - 1] + ordered[mid]) / two
