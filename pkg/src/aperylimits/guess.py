"""Recurrence guessing from exact sequence terms.

A candidate recurrence of order L with coefficient degree D is a nonzero
solution of the homogeneous linear system

    sum_{i=0..L} sum_{j=0..D} c[i][j] * n**j * u(n+i) == 0

over the first ``(L+1)(D+1) + 10`` usable indices n.  The nullspace is
computed exactly (fraction-free Bareiss elimination on integer rows, exact
rational back-substitution), a candidate is drawn from it deterministically,
and the candidate is then verified against **every** remaining term; only a
fully verified recurrence is returned.  The search sweeps (order, degree)
lexicographically, order outermost, and returns the first verified hit, so
the result is minimal in that ordering.
"""
from __future__ import annotations

from math import gcd

from .errors import InsufficientTerms, NotFound
from .rationals import Rational, denominator, lcm, numerator, rational
from .recurrences import PolyInt, PRecurrence, RationalSequence, residual

_OVERSAMPLE = 10  # equations beyond the unknown count


def terms_needed(max_order: int, max_degree: int) -> int:
    """Terms required to sweep up to (max_order, max_degree) with slack."""
    return (max_order + 1) * (max_degree + 1) + max_order + 2 * _OVERSAMPLE


def _nullspace(rows: list[list[int]], cols: int) -> list[list]:
    """Exact rational nullspace basis of an integer matrix.

    Forward elimination is fraction-free (Bareiss): every intermediate entry
    is a minor of the input matrix and divisions are exact.  Pivots are the
    first nonzero entry in column order, so the result is deterministic.
    """
    matrix = [row[:] for row in rows]
    nrows = len(matrix)
    pivots: list[tuple[int, int]] = []  # (row, col) in elimination order
    prev = 1
    r = 0
    for col in range(cols):
        pivot_row = None
        for i in range(r, nrows):
            if matrix[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        pivot = matrix[r][col]
        for i in range(r + 1, nrows):
            head = matrix[i][col]
            if head:
                row_i, row_r = matrix[i], matrix[r]
                for j in range(col + 1, cols):
                    num = row_i[j] * pivot - head * row_r[j]
                    q, rem = divmod(num, prev)
                    assert rem == 0, "fraction-free elimination lost exactness"
                    row_i[j] = q
                matrix[i][col] = 0
            else:
                row_i = matrix[i]
                for j in range(col + 1, cols):
                    num = row_i[j] * pivot
                    q, rem = divmod(num, prev)
                    assert rem == 0, "fraction-free elimination lost exactness"
                    row_i[j] = q
        prev = pivot
        pivots.append((r, col))
        r += 1
        if r == nrows:
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(cols):
        if free in pivot_cols:
            continue
        vec = [rational(0)] * cols
        vec[free] = rational(1)
        for row, col in reversed(pivots):
            acc = rational(0)
            row_vals = matrix[row]
            for j in range(col + 1, cols):
                if row_vals[j] and vec[j]:
                    acc += row_vals[j] * vec[j]
            vec[col] = Rational(-acc, row_vals[col]) if acc else rational(0)
        basis.append(vec)
    return basis


def _integerize_vector(vec: list) -> list[int]:
    scale = 1
    for v in vec:
        scale = lcm(scale, denominator(v))
    ints = [numerator(v) * (scale // denominator(v)) for v in vec]
    content = 0
    for v in ints:
        content = gcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    return ints


def _bit_length(vec: list[int]) -> int:
    return sum(abs(v).bit_length() for v in vec)


def _equation_rows(seqs, order: int, degree: int, count: int) -> list[list[int]]:
    """Integer coefficient rows for the first ``count`` usable indices.

    ``seqs`` is a list of RationalSequences that must all satisfy the same
    relation; their equations are stacked (round-robin by sequence, then by
    index) so a single nullspace serves them all.
    """
    rows: list[list[int]] = []
    per_seq = (count + len(seqs) - 1) // len(seqs)
    for seq in seqs:
        made = 0
        for shift in range(len(seq) - order):
            if made >= per_seq or len(rows) >= count:
                break
            n = seq.start + shift
            window = seq.terms[shift : shift + order + 1]
            scale = 1
            for u in window:
                scale = lcm(scale, denominator(u))
            powers = [1]
            for _ in range(degree):
                powers.append(powers[-1] * n)
            row: list[int] = []
            for u in window:
                u_scaled = numerator(u) * (scale // denominator(u))
                row.extend(u_scaled * p for p in powers)
            rows.append(row)
            made += 1
    return rows


def _candidate_vectors(seqs, order: int, degree: int):
    unknowns = (order + 1) * (degree + 1)
    count = unknowns + _OVERSAMPLE
    usable = sum(len(s) - order for s in seqs)
    if usable < count:
        raise InsufficientTerms(
            f"order {order}, degree {degree} needs {count + order} terms, "
            f"have {usable + order} usable"
        )
    rows = _equation_rows(seqs, order, degree, count)
    return _nullspace(rows, unknowns)


def _vector_to_recurrence(vec: list[int], order: int, degree: int) -> PRecurrence | None:
    width = degree + 1
    polys = [PolyInt(vec[i * width : (i + 1) * width]) for i in range(order + 1)]
    if polys[-1].is_zero():
        return None  # really a lower-order relation, not an order-L one
    return PRecurrence(polys)


def _verified(rec: PRecurrence, seqs) -> bool:
    return all(all(r == 0 for r in residual(rec, s)) for s in seqs)


def fit_recurrence(seq: RationalSequence, order: int, degree: int) -> PRecurrence | None:
    """Exact-fit recurrence of one specific (order, degree) shape, or None.

    Solves on an oversampled window, picks the nullspace basis vector with
    the smallest total coefficient bit-length, and verifies the candidate on
    every term of ``seq``; any nonzero residual rejects it.
    """
    return _fit_common([seq], order, degree)


def _fit_common(seqs, order: int, degree: int) -> PRecurrence | None:
    basis = _candidate_vectors(seqs, order, degree)
    candidates = []
    for vec in basis:
        ints = _integerize_vector(vec)
        rec = _vector_to_recurrence(ints, order, degree)
        if rec is not None:
            candidates.append((_bit_length(ints), ints, rec))
    if not candidates:
        return None
    candidates.sort(key=lambda item: (item[0], item[1]))
    rec = candidates[0][2]
    return rec if _verified(rec, seqs) else None


def guess_recurrence(
    seq: RationalSequence, max_order: int, max_degree: int
) -> PRecurrence | None:
    """First verified hit in the lexicographic (order, degree) sweep, or None.

    Orders are swept outermost, so the result has minimal order, and minimal
    coefficient degree for that order.  For each order the full-degree cell
    is solved first: if even it has an empty nullspace, no smaller degree
    can fit and the whole order is skipped (a degree-d solution is also a
    degree-cap solution, so this prunes without changing the answer).
    """
    return _sweep_common([seq], max_order, max_degree)


def guess_common_recurrence(seqs, max_order: int, max_degree: int) -> PRecurrence | None:
    """Minimal recurrence annihilating every sequence in ``seqs``, or None."""
    return _sweep_common(list(seqs), max_order, max_degree)


def _sweep_common(seqs, max_order: int, max_degree: int) -> PRecurrence | None:
    usable = sum(len(s) for s in seqs)
    if usable < terms_needed(max_order, max_degree):
        raise InsufficientTerms(
            f"sweeping to order {max_order}, degree {max_degree} needs "
            f"{terms_needed(max_order, max_degree)} terms, have {usable}"
        )
    for order in range(1, max_order + 1):
        if not _candidate_vectors(seqs, order, max_degree):
            continue
        for degree in range(0, max_degree + 1):
            rec = _fit_common(seqs, order, degree)
            if rec is not None:
                return rec
    return None


def minimal_recurrence(
    seq: RationalSequence, order_cap: int, degree_cap: int
) -> PRecurrence:
    """Like guess_recurrence, but an exhausted sweep is an error (NotFound)."""
    rec = guess_recurrence(seq, order_cap, degree_cap)
    if rec is None:
        raise NotFound(
            f"no recurrence with order <= {order_cap}, degree <= {degree_cap} "
            "annihilates all given terms"
        )
    return rec
