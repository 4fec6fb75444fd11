"""Constructors for the concrete sequences the experiments run on.

Three families live here:

* power sums of binomial coefficients  A(n) = sum_k C(n,k)^d;
* the two-variable potential c(n,k) whose mixed differences give the
  closed WZ pair (F, G), together with the weighted sums
  B(n) = sum_k C(n,k)^d c(n,k);
* term sequences s(n) for the contour-integral families
  ((cx+1)((c+1)x+1)/x)^n x^(-2/3) (cubic) and x^(-1/2) (quadratic),
  reduced to exact rational sums over the coefficients of
  ((cx+1)((c+1)x+1))^n.

Everything is exact rational arithmetic; binomial rows and potential prefix
sums are cached because the experiments sweep over full triangles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .rationals import Rational, rational

_BINOMIAL_ROWS: dict[int, tuple[int, ...]] = {}


def binomial_row(n: int) -> tuple[int, ...]:
    """The row (C(n,0), ..., C(n,n)), cached."""
    row = _BINOMIAL_ROWS.get(n)
    if row is None:
        row = tuple(math.comb(n, k) for k in range(n + 1))
        _BINOMIAL_ROWS[n] = row
    return row


def binomial_power_sum(d: int, n: int) -> int:
    """A(n) = sum_k C(n,k)^d."""
    if d < 0 or n < 0:
        raise DomainError("binomial power sums need d >= 0 and n >= 0")
    return sum(c**d for c in binomial_row(n))


def binomial_power_sums(d: int, count: int) -> list:
    """[A(0), ..., A(count-1)] as exact rationals."""
    return [rational(binomial_power_sum(d, n)) for n in range(count)]


class PotentialTable:
    """The potential

        c(n,k) = 2 sum_{m=1..n} (-1)^(m-1)/m^2
               + sum_{m=1..k} (-1)^(n+m-1) / (m^2 C(n,m) C(n+m,m))

    computed lazily with per-row prefix caching.  c(n,k) -> zeta(2) as
    (n,k) -> (infinity, infinity) along any path.
    """

    def __init__(self):
        self._outer = [rational(0)]  # outer[n] = 2 sum_{m<=n} (-1)^(m-1)/m^2
        self._inner: dict[int, list] = {}

    def _outer_sum(self, n: int):
        outer = self._outer
        while len(outer) <= n:
            m = len(outer)
            outer.append(outer[-1] + Rational(2 * (-1) ** (m - 1), m * m))
        return outer[n]

    def _inner_sums(self, n: int) -> list:
        """Prefix sums s[k] = sum_{m=1..k} (-1)^(m-1) / (m^2 C(n,m) C(n+m,m))."""
        sums = self._inner.get(n)
        if sums is None:
            sums = [rational(0)]
            binom_n = binomial_row(n)
            for m in range(1, n + 1):
                den = m * m * binom_n[m] * math.comb(n + m, m)
                sums.append(sums[-1] + Rational((-1) ** (m - 1), den))
            self._inner[n] = sums
        return sums

    def value(self, n: int, k: int):
        """c(n,k) as an exact rational; requires 0 <= k <= n."""
        if not 0 <= k <= n:
            raise DomainError(f"potential needs 0 <= k <= n, got (n,k)=({n},{k})")
        inner = self._inner_sums(n)[k]
        if n % 2 == 1:
            inner = -inner
        return self._outer_sum(n) + inner


_SHARED_POTENTIAL = PotentialTable()


def potential(n: int, k: int):
    """c(n,k) from a shared cached table."""
    return _SHARED_POTENTIAL.value(n, k)


def wz_form_components(n: int, k: int) -> tuple:
    """The closed pair (F, G) read off the differential form

        rho(n,k) [ (n+1) dk + 2(n-k) dn ],
        rho(n,k) = (-1)^(n+k) k!^2 (n-k-1)! / ((n+1) (n+k+1)!)

    so F(n,k) = rho(n,k)(n+1) and G(n,k) = 2 rho(n,k)(n-k).  These satisfy
    F(n,k) = c(n,k+1) - c(n,k) and G(n,k) = c(n+1,k) - c(n,k) for
    0 <= k < n.
    """
    if not 0 <= k < n:
        raise DomainError(f"closed-form pair needs 0 <= k < n, got (n,k)=({n},{k})")
    sign = -1 if (n + k) % 2 else 1
    rho = Rational(
        sign * math.factorial(k) ** 2 * math.factorial(n - k - 1),
        (n + 1) * math.factorial(n + k + 1),
    )
    return rho * (n + 1), rho * (2 * (n - k))


def weighted_potential_sum(d: int, n: int, table: PotentialTable | None = None):
    """B(n) = sum_k C(n,k)^d c(n,k), exactly."""
    table = table or _SHARED_POTENTIAL
    row = binomial_row(n)
    total = rational(0)
    for k in range(n + 1):
        total += row[k] ** d * table.value(n, k)
    return total


@dataclass(frozen=True)
class FamilySpec:
    """One member of the contour-integral families: kind is ``cubic``
    (weight x^(-2/3)) or ``quadratic`` (weight x^(-1/2)), with integer
    parameter c >= 1."""

    kind: str
    c: int

    def __post_init__(self):
        if self.kind not in ("cubic", "quadratic"):
            raise DomainError(f"unknown family kind {self.kind!r}")
        if self.c < 1:
            raise DomainError("family parameter c must be a positive integer")


def _base_polynomial(c: int) -> list:
    """Coefficients of (cx+1)((c+1)x+1) = c(c+1) x^2 + (2c+1) x + 1."""
    return [1, 2 * c + 1, c * (c + 1)]


def family_terms(spec: FamilySpec, count: int) -> list:
    """[s(0), ..., s(count-1)] for the family, as exact rationals.

    With ((cx+1)((c+1)x+1))^n = sum_k t_k x^k, the contour integral of
    (q(x)/x)^n x^(-2/3) is taken over the circle |x| = 1/c.  That radius
    matters: the integrand's branch cut (negative reals) crosses the
    contour at x = -1/c, a root of q, so the cut-edge boundary values
    vanish for n >= 1 and the integral satisfies the same two-term
    recurrence an integration-by-parts telescoping certificate yields.
    (Circles of other radii pick up a nonzero boundary mismatch at the
    cut and the minimal annihilator jumps to order 3.)

    Parameterizing x = (1/c) e^(i*theta), theta in (-pi, pi), with the
    principal branch x^(-2/3) = |x|^(-2/3) e^(-2i*theta/3), each monomial
    integrates to

        contour integral of x^(m - 2/3) dx
            = c^(-m-1/3) * 2i sin(pi(m + 1/3)) / (m + 1/3)
            = 3 sqrt(3) i c^(-1/3) * (-1)^m c^(-m) / (3m + 1),

    so up to one n-independent nonzero constant (dropped),

        s(n) = sum_k t_k (-1)^(k-n) c^(n-k) / (3(k-n)+1),

    and the x^(-1/2) family likewise gives
    s(n) = sum_k t_k (-1)^(k-n) c^(n-k) / (2(k-n)+1).
    """
    stride = 3 if spec.kind == "cubic" else 2
    base = _base_polynomial(spec.c)
    c = spec.c
    power = [1]  # q(x)^0
    out = []
    for n in range(count):
        if n > 0:
            nxt = [0] * (len(power) + 2)
            for i, t in enumerate(power):
                if t:
                    nxt[i] += t * base[0]
                    nxt[i + 1] += t * base[1]
                    nxt[i + 2] += t * base[2]
            power = nxt
        total = rational(0)
        for k, t in enumerate(power):
            if t:
                m = k - n
                signed = t if m % 2 == 0 else -t
                if m >= 0:
                    total += Rational(signed, c**m * (stride * m + 1))
                else:
                    total += Rational(signed * c**(-m), stride * m + 1)
        out.append(total)
    return out
