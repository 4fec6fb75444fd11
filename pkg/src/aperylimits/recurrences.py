"""Linear recurrences with integer polynomial coefficients.

A recurrence of order ``L`` is the relation

    sum(c[i](n) * u(n + i) for i in 0..L) == 0       for all n >= start,

stored in forward-shift form with ``c[i]`` integer-coefficient polynomials.
Recurrences are kept content-normalized: the gcd of all integer coefficients
across all ``c[i]`` is 1 and the leading polynomial ``c[L]`` has a positive
leading coefficient, so equal relations compare equal structurally.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InsufficientTerms, SingularLeadingCoefficient
from .rationals import Rational, rational


class PolyInt:
    """Univariate polynomial with integer coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyInt is immutable")

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, n):
        """Evaluate at an integer or rational by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def __eq__(self, other):
        if not isinstance(other, PolyInt):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return PolyInt([-c for c in self.coeffs])

    def __repr__(self):
        return f"PolyInt({list(self.coeffs)})"

    def format(self, var: str = "n") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append(f"{c}")
            elif j == 1:
                parts.append(f"{c}*{var}")
            else:
                parts.append(f"{c}*{var}^{j}")
        return " + ".join(parts).replace("+ -", "- ")


class PRecurrence:
    """A content-normalized linear recurrence with PolyInt coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        polys = [c if isinstance(c, PolyInt) else PolyInt(c) for c in coeffs]
        if len(polys) < 2:
            raise ValueError("a recurrence needs order at least 1")
        if polys[-1].is_zero():
            raise ValueError("leading coefficient polynomial must be nonzero")
        content = 0
        for p in polys:
            content = math.gcd(content, p.content())
        sign = 1 if polys[-1].leading_coefficient > 0 else -1
        divisor = sign * content
        if divisor != 1:
            polys = [PolyInt([c // divisor for c in p.coeffs]) for p in polys]
        object.__setattr__(self, "coeffs", tuple(polys))

    def __setattr__(self, name, value):
        raise AttributeError("PRecurrence is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.coeffs)

    @property
    def leading(self) -> PolyInt:
        return self.coeffs[-1]

    def eval_coeff(self, i: int, n) -> int:
        """Value of the i-th coefficient polynomial at n."""
        return self.coeffs[i](n)

    def __eq__(self, other):
        if not isinstance(other, PRecurrence):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        inner = ", ".join(repr(list(p.coeffs)) for p in self.coeffs)
        return f"PRecurrence([{inner}])"

    def format(self) -> str:
        parts = [f"({p.format()}) * u(n+{i})" for i, p in enumerate(self.coeffs)]
        return " + ".join(parts) + " = 0"


@dataclass
class RationalSequence:
    """A finite run of exact rational terms starting at ``start``."""

    terms: list
    start: int = 0

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n):
        """Term u(n) by absolute index."""
        i = n - self.start
        if i < 0 or i >= len(self.terms):
            raise IndexError(f"index {n} outside [{self.start}, {self.end})")
        return self.terms[i]

    @property
    def end(self) -> int:
        return self.start + len(self.terms)

    def __iter__(self):
        return iter(self.terms)


def iterate(rec: PRecurrence, init, count: int, start: int = 0) -> RationalSequence:
    """Extend initial values to ``count`` terms by forward iteration.

    ``init`` supplies ``u(start), ..., u(start + order - 1)``.  Raises
    SingularLeadingCoefficient if the leading coefficient vanishes at an
    index the iteration needs.
    """
    order = rec.order
    if len(init) != order:
        raise ValueError(f"need exactly {order} initial values, got {len(init)}")
    if count < len(init):
        raise ValueError("count must cover the initial values")
    terms = [rational(v) for v in init]
    lead = rec.leading
    lower = rec.coeffs[:-1]
    for n in range(start, start + count - order):
        div = lead(n)
        if div == 0:
            raise SingularLeadingCoefficient(
                f"leading coefficient vanishes at n={n}"
            )
        acc = 0
        base = n - start
        for i, poly in enumerate(lower):
            c = poly(n)
            if c:
                acc += c * terms[base + i]
        terms.append(Rational(-acc, div) if acc else rational(0))
    return RationalSequence(terms, start)


def residual(rec: PRecurrence, seq: RationalSequence) -> list:
    """Exact residuals sum_i c_i(n) u(n+i) at every applicable n."""
    order = rec.order
    if len(seq) < order + 1:
        raise InsufficientTerms(
            f"need at least {order + 1} terms to evaluate an order-{order} residual"
        )
    out = []
    terms = seq.terms
    for j in range(len(terms) - order):
        n = seq.start + j
        acc = 0
        for i, poly in enumerate(rec.coeffs):
            c = poly(n)
            if c:
                acc += c * terms[j + i]
        out.append(acc if acc else rational(0))
    return out


def zeta3_recurrence() -> PRecurrence:
    """The three-term recurrence whose two classical solutions have ratio
    converging to zeta(3):

        (n+2)^3 u(n+2) - (2n+3)(17n^2 + 51n + 39) u(n+1) + (n+1)^3 u(n) = 0

    With u = (1, 5, 73, 1445, ...) in the denominators and (0, 6, 351/4, ...)
    in the numerators, a(n)/b(n) -> zeta(3).
    """
    return PRecurrence(
        [
            PolyInt([1, 3, 3, 1]),  # (n+1)^3
            PolyInt([-117, -231, -153, -34]),  # -(2n+3)(17n^2+51n+39)
            PolyInt([8, 12, 6, 1]),  # (n+2)^3
        ]
    )


ZETA3_NUMERATOR_INIT = (rational(0), rational(6))
ZETA3_DENOMINATOR_INIT = (rational(1), rational(5))
