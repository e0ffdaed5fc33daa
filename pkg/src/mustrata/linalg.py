"""Dense Gauss-Jordan elimination over an exact :class:`~mustrata.fields.Field`.

Matrices are lists of row lists.  Pivoting is deterministic: columns are
scanned left to right and the first row with a nonzero entry is taken, so
the same input always yields the same echelon form and kernel basis.
"""

from __future__ import annotations


def _axpy(field):
    """Return ``f(row, c, prow) = row - c*prow`` for the given field."""
    p = field.p
    if p is None:
        return lambda row, c, prow: [x - c * y if y else x for x, y in zip(row, prow)]
    return lambda row, c, prow: [(x - c * y) % p for x, y in zip(row, prow)]


def rref(rows, ncols, field):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows and
    ``pivots[i]`` is the pivot column of ``R[i]`` (pivot entries are 1).
    """
    axpy = _axpy(field)
    norm = field.norm
    work = [list(r) for r in rows if any(r)]
    pivots = []
    top = 0
    for col in range(ncols):
        if top == len(work):
            break
        for r in range(top, len(work)):
            if work[r][col]:
                break
        else:
            continue
        work[top], work[r] = work[r], work[top]
        inv = field.inv(work[top][col])
        prow = [norm(x * inv) for x in work[top]]
        work[top] = prow
        for r in range(len(work)):
            if r != top and work[r][col]:
                work[r] = axpy(work[r], work[r][col], prow)
        pivots.append(col)
        top += 1
    return work[:top], pivots


def rank(rows, ncols, field) -> int:
    return len(rref(rows, ncols, field)[1])


def kernel_basis(rows, ncols, field):
    """Basis of the right nullspace ``{x : M x = 0}``.

    One vector per free column, with a 1 in that column and zeros in the
    other free columns; an injective ``M`` gives ``[]``.
    """
    R, pivots = rref(rows, ncols, field)
    pivot_set = set(pivots)
    zero, one = field.zero, field.one
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for row, pc in zip(R, pivots):
            if row[free]:
                v[pc] = field.norm(-row[free])
        basis.append(v)
    return basis


def reduce_vector(vec, R, pivots, field):
    """Reduce ``vec`` modulo the row space of an rref matrix ``(R, pivots)``."""
    axpy = _axpy(field)
    v = list(vec)
    for row, pc in zip(R, pivots):
        if v[pc]:
            v = axpy(v, v[pc], row)
    return v


def complement(base, candidates, ncols, field):
    """Echelon representatives of ``span(candidates)`` modulo ``span(base)``.

    The result is the rref of the candidates after reduction against the
    base, so its rows are independent modulo the base and come out in
    pivot order.
    """
    R, pivots = rref(base, ncols, field)
    reduced = [reduce_vector(c, R, pivots, field) for c in candidates]
    return rref(reduced, ncols, field)[0]


def in_span(vec, rows, ncols, field) -> bool:
    R, pivots = rref(rows, ncols, field)
    return not any(reduce_vector(vec, R, pivots, field))


def mat_vec(rows, vec, field):
    return [field.norm(sum(a * b for a, b in zip(row, vec))) for row in rows]
