"""Integer-relation detection and constant identification.

The detector is a fixed-point PSLQ: inputs are scaled to integers at a
binary working precision derived from the requested decimal ``digits``, the
classic H-matrix reduction runs on plain Python integers (so every shift
and division is exact and deterministic), and any candidate the reduction
proposes is validated by an **exact rational residual** against the
original values before it is accepted.  A run therefore ends one of three
ways: an exactly-validated relation, a certified lower bound on the norm of
any relation that could still exist, or PrecisionExhausted when the
numerics collapse without an acceptable candidate.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Sequence

from .bigreal import BigReal
from .errors import DomainError, PrecisionExhausted
from .rationals import Rational, rational
from .recurrences import PolyInt

_BITS_PER_DIGIT = 3.321928094887362
_GUARD_BITS = 96


@dataclass(frozen=True)
class IntegerRelation:
    """Integer vector m with sum(m[i] * x[i]) exactly-rationally tiny."""

    coeffs: tuple[int, ...]
    residual: BigReal  # |sum m[i] x[i]| over the full-precision inputs
    input_precision: int  # decimal digits the inputs carried


@dataclass(frozen=True)
class RelationSearch:
    """Outcome of a relation search: a relation, or a certified bound.

    When ``relation`` is None, ``norm_bound`` certifies that no integer
    relation with Euclidean norm below it exists among the inputs.
    """

    relation: IntegerRelation | None
    norm_bound: int | None


def _iround_div(a: int, b: int) -> int:
    if b < 0:
        a, b = -a, -b
    return (2 * a + b) // (2 * b)


def _scaled(fraction, prec: int) -> int:
    num = int(fraction.numerator) << prec
    den = int(fraction.denominator)
    return _iround_div(num, den)


def _normalize_relation(vec: list[int]) -> tuple[int, ...]:
    content = 0
    for v in vec:
        content = gcd(content, v)
    if content > 1:
        vec = [v // content for v in vec]
    for v in vec:
        if v:
            if v < 0:
                vec = [-v2 for v2 in vec]
            break
    return tuple(vec)


def _exact_residual(coeffs, fractions):
    acc = rational(0)
    for m, x in zip(coeffs, fractions):
        if m:
            acc += m * x
    return acc


def _residual_bigreal(value) -> BigReal:
    if value == 0:
        return BigReal.zero(8)
    return BigReal.from_rational(abs(value), digits=8)


def pslq(
    values: Sequence[BigReal],
    digits: int,
    max_coeff_digits: int = 12,
) -> RelationSearch:
    """Search for an integer relation among ``values``.

    ``digits`` sets the working precision; a candidate is accepted only if
    its exact rational residual against the inputs is below
    10**-(0.8 * digits).  Coefficients are capped at 10**max_coeff_digits:
    once the certified norm bound exceeds the cap the search stops and
    reports the bound.
    """
    n = len(values)
    if n == 0:
        raise DomainError("relation search needs at least one value")
    if digits < 4:
        raise DomainError("working precision below 4 digits is meaningless")
    fractions = [v.to_fraction() for v in values]
    confirmed_at = min(v.digits for v in values)
    accept_exp = (8 * digits) // 10
    accept_threshold = Rational(1, 10**accept_exp)
    cap = 10**max_coeff_digits

    for idx, frac in enumerate(fractions):
        if frac == 0:
            coeffs = tuple(1 if k == idx else 0 for k in range(n))
            return RelationSearch(
                IntegerRelation(coeffs, BigReal.zero(8), confirmed_at), None
            )
    if n == 1:
        return RelationSearch(None, cap)

    prec = int(digits * _BITS_PER_DIGIT) + _GUARD_BITS
    one_fp = 1 << prec

    def fp_mul(a: int, b: int) -> int:
        return (a * b) >> prec

    def fp_div(a: int, b: int) -> int:
        return (a << prec) // b

    xs = [_scaled(f, prec) for f in fractions]
    if any(x == 0 for x in xs):
        raise PrecisionExhausted("a nonzero input vanishes at working precision")

    # Partial norms s[k] = |(x_k, ..., x_{n-1})| and the normalized y vector.
    s = [0] * n
    acc = 0
    for k in range(n - 1, -1, -1):
        acc += xs[k] * xs[k]
        s[k] = isqrt(acc)
    y = [fp_div(x, s[0]) for x in xs]
    s = [fp_div(v, s[0]) for v in s]

    h = [[0] * (n - 1) for _ in range(n)]
    for j in range(n - 1):
        h[j][j] = fp_div(s[j + 1], s[j])
        denom = fp_mul(s[j], s[j + 1])
        for i in range(j + 1, n):
            h[i][j] = -fp_div(fp_mul(y[i], y[j]), denom)

    a_mat = [[int(i == j) for j in range(n)] for i in range(n)]
    b_mat = [[int(i == j) for j in range(n)] for i in range(n)]

    def size_reduce(i: int, j_from: int) -> None:
        for j in range(j_from, -1, -1):
            if h[j][j] == 0:
                raise PrecisionExhausted("degenerate pivot during reduction")
            t = _iround_div(h[i][j], h[j][j])
            if t == 0:
                continue
            y[j] += t * y[i]
            row_i, row_j = h[i], h[j]
            for k in range(j + 1):
                row_i[k] -= t * row_j[k]
            ai, aj = a_mat[i], a_mat[j]
            for k in range(n):
                ai[k] -= t * aj[k]
            for k in range(n):
                b_mat[k][j] += t * b_mat[k][i]

    for i in range(1, n):
        size_reduce(i, i - 1)

    # gamma = 2/sqrt(3); gamma^(2i) * h[i][i]^2 compared exactly via
    # h[i][i]^2 * 4^i * 3^(n-2-i).
    pow4 = [4**i for i in range(n - 1)]
    pow3 = [3**i for i in range(n - 1)]
    collapse_tol = 1 << max(16, prec // 16)
    check_tol = max(collapse_tol << 1, (one_fp // 10**accept_exp) << 16)

    max_iterations = 200 + 40 * n * max(digits, 16)
    norm_bound = 1
    for _ in range(max_iterations):
        m = 0
        best = abs(h[0][0]) ** 2 * pow4[0] * pow3[n - 2]
        for i in range(1, n - 1):
            w = abs(h[i][i]) ** 2 * pow4[i] * pow3[n - 2 - i]
            if w > best:
                best, m = w, i

        y[m], y[m + 1] = y[m + 1], y[m]
        h[m], h[m + 1] = h[m + 1], h[m]
        a_mat[m], a_mat[m + 1] = a_mat[m + 1], a_mat[m]
        for k in range(n):
            row = b_mat[k]
            row[m], row[m + 1] = row[m + 1], row[m]

        if m < n - 2:
            t0 = isqrt(h[m][m] ** 2 + h[m][m + 1] ** 2)
            if t0 == 0:
                raise PrecisionExhausted("degenerate corner during reduction")
            t1 = fp_div(h[m][m], t0)
            t2 = fp_div(h[m][m + 1], t0)
            for i in range(m, n):
                t3, t4 = h[i][m], h[i][m + 1]
                h[i][m] = fp_mul(t1, t3) + fp_mul(t2, t4)
                h[i][m + 1] = fp_mul(t1, t4) - fp_mul(t2, t3)

        for i in range(m + 1, n):
            size_reduce(i, min(i - 1, m + 1))

        max_h = 0
        for i in range(n - 1):
            if abs(h[i][i]) > max_h:
                max_h = abs(h[i][i])
        norm_bound = one_fp // max_h if max_h else cap + 1

        # Try to extract a relation before acting on the bound: when a
        # relation is exact the H diagonal collapses at the same iteration
        # the relation appears (always so for n = 2, where the diagonal is
        # a single entry), and an exactly-validated relation trumps any
        # norm bound.
        y_min, arg_min = abs(y[0]), 0
        for i in range(1, n):
            if abs(y[i]) < y_min:
                y_min, arg_min = abs(y[i]), i
        if y_min < check_tol:
            candidate = [b_mat[k][arg_min] for k in range(n)]
            if any(candidate):
                coeffs = _normalize_relation(candidate)
                res = _exact_residual(coeffs, fractions)
                if abs(res) < accept_threshold and max(abs(c) for c in coeffs) <= cap:
                    return RelationSearch(
                        IntegerRelation(coeffs, _residual_bigreal(res), confirmed_at),
                        None,
                    )
            if y_min < collapse_tol:
                raise PrecisionExhausted(
                    "numeric relation vector collapsed without an exactly "
                    "acceptable relation"
                )
        if max_h == 0:
            raise PrecisionExhausted("reduction matrix collapsed entirely")
        if norm_bound > cap:
            return RelationSearch(None, cap)
    return RelationSearch(None, max(1, norm_bound))


@dataclass(frozen=True)
class AlgebraicCandidate:
    """A polynomial with integer coefficients that the value appears to root."""

    polynomial: PolyInt
    degree: int
    residual: BigReal
    confirmed_at: int


def _strong_threshold(digits: int, confirmed_at: int) -> Rational:
    effective = min(2 * digits, confirmed_at)
    return Rational(1, 10 ** ((8 * effective) // 10))


def _poly_at(coeffs, point):
    acc = rational(0)
    for c in reversed(coeffs):
        acc = acc * point + c
    return acc


def identify_algebraic(
    value: BigReal,
    max_degree: int,
    digits: int,
    max_coeff_digits: int = 12,
) -> AlgebraicCandidate | None:
    """Minimal-degree integer polynomial relation for ``value``, if any.

    Sweeps degree 1..max_degree; at each degree runs the relation search on
    exact rational powers [1, L, ..., L^d].  A hit must survive a stronger
    residual gate at min(2*digits, input precision) and a root-proximity
    check |p(L)| <= 10 * ulp(L) * |p'(L)| before it is reported.
    """
    if max_degree < 1:
        raise DomainError("algebraic identification needs max_degree >= 1")
    frac = value.to_fraction()
    carry = value.digits
    for deg in range(1, max_degree + 1):
        power = rational(1)
        powers = []
        for _ in range(deg + 1):
            powers.append(BigReal.from_rational(power, digits=carry))
            power = power * frac
        search = pslq(powers, digits, max_coeff_digits)
        if search.relation is None:
            continue
        rel = search.relation
        res = _exact_residual(rel.coeffs, [p.to_fraction() for p in powers])
        if abs(res) >= _strong_threshold(digits, rel.input_precision):
            continue  # demoted: does not survive the high-precision gate
        coeffs = list(rel.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            continue
        poly = PolyInt(coeffs)
        if poly.leading_coefficient < 0:
            poly = -poly
        p_at = _poly_at(poly.coeffs, frac)
        dp_coeffs = [k * c for k, c in enumerate(poly.coeffs)][1:]
        dp_at = _poly_at(dp_coeffs, frac)
        ulp_exp = value.ulp_exponent()
        ulp = rational(10**ulp_exp) if ulp_exp >= 0 else Rational(1, 10**-ulp_exp)
        if dp_at != 0 and abs(p_at) > 10 * abs(dp_at) * ulp:
            continue  # numerically near a relation but not near a root
        return AlgebraicCandidate(
            polynomial=poly,
            degree=poly.degree,
            residual=rel.residual,
            confirmed_at=rel.input_precision,
        )
    return None


@dataclass(frozen=True)
class LinearMatch:
    """value == coefficient * basis_value + offset, within the residual."""

    basis_name: str
    coefficient: object  # exact rational
    offset: object  # exact rational
    residual: BigReal
    confirmed_at: int


def identify_linear(
    value: BigReal,
    basis: Sequence[tuple[str, BigReal]],
    digits: int,
    max_coeff_digits: int = 12,
) -> LinearMatch | None:
    """Best rational-linear match of ``value`` against named constants.

    Each basis element is probed independently with a three-term relation
    search on (value, 1, constant); among surviving matches the one with
    the smallest combined height (|num| + |den| over both rationals) wins,
    ties resolved by basis order.
    """
    if not basis:
        raise DomainError("linear identification needs a non-empty basis")
    matches: list[tuple[int, int, LinearMatch]] = []
    for order_idx, (name, const) in enumerate(basis):
        one = BigReal.from_int(1, min(value.digits, const.digits))
        search = pslq([value, one, const], digits, max_coeff_digits)
        if search.relation is None:
            continue
        rel = search.relation
        c_val, c_one, c_const = rel.coeffs
        if c_val == 0:
            continue  # a relation among the constants alone says nothing here
        res = _exact_residual(
            rel.coeffs, [value.to_fraction(), rational(1), const.to_fraction()]
        )
        if abs(res) >= _strong_threshold(digits, rel.input_precision):
            continue
        coefficient = Rational(-c_const, c_val)
        offset = Rational(-c_one, c_val)
        height = (
            abs(int(coefficient.numerator))
            + abs(int(coefficient.denominator))
            + abs(int(offset.numerator))
            + abs(int(offset.denominator))
        )
        matches.append(
            (
                height,
                order_idx,
                LinearMatch(name, coefficient, offset, rel.residual, rel.input_precision),
            )
        )
    if not matches:
        return None
    matches.sort(key=lambda item: (item[0], item[1]))
    return matches[0][2]
