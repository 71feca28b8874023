"""Dense exact linear algebra over Fraction or RationalFunction scalars.

Everything here works on tuples of tuples.  Vectors are coordinate tuples,
matrices are row tuples; a subspace is a tuple of reduced-row-echelon rows
(pivots one, pivot columns cleared), which makes subspace equality literal
tuple equality.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import RationalFunction


def one_like(x):
    if isinstance(x, RationalFunction):
        return RationalFunction.one()
    return Fraction(1)


def zero_like(x):
    if isinstance(x, RationalFunction):
        return RationalFunction.zero()
    return Fraction(0)


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a):
    return tuple(c * x for x in a)


def vec_is_zero(a):
    return all(not x for x in a)


def mat_vec(m, v):
    return tuple(sum((row[j] * v[j] for j in range(1, len(v))), row[0] * v[0])
                 for row in m)


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)),
                           zero_like(row[0])) for col in bt) for row in a)


def identity(n, exemplar=Fraction(1)):
    one = one_like(exemplar)
    zero = zero_like(exemplar)
    return tuple(tuple(one if i == j else zero for j in range(n))
                 for i in range(n))


def transpose(m):
    return tuple(zip(*m))


def rref(rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    work = [list(r) for r in rows if not vec_is_zero(r)]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = one_like(work[r][c]) / work[r][c]
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    work = [tuple(row) for row in work[:r]]
    return tuple(work), tuple(pivots)


def reduce_mod_rows(rows, pivots, v):
    """Residual of v after elimination against echelon rows (linear in v)."""
    v = list(v)
    for row, c in zip(rows, pivots):
        if v[c]:
            f = v[c]
            v = [x - f * y for x, y in zip(v, row)]
    return tuple(v)


def in_span(rows, pivots, v):
    return vec_is_zero(reduce_mod_rows(rows, pivots, v))


def span_coefficients(rows, pivots, v):
    """Coefficients expressing v in the echelon rows, or None."""
    v = list(v)
    coeffs = []
    for row, c in zip(rows, pivots):
        f = v[c]
        coeffs.append(f)
        if f:
            v = [x - f * y for x, y in zip(v, row)]
    if not vec_is_zero(v):
        return None
    return tuple(coeffs)


def kernel(rows):
    """Basis (echelon rows) of {x : M x = 0} for condition rows M."""
    if not rows:
        raise ValueError("kernel needs at least one row to fix the width")
    ncols = len(rows[0])
    ech, pivots = rref(rows)
    one = one_like(rows[0][0])
    zero = zero_like(rows[0][0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, c in zip(ech, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return rref(basis)[0] if basis else ()


def mat_inverse(m):
    n = len(m)
    aug = [list(row) + list(identity(n, m[0][0])[i]) for i, row in enumerate(m)]
    ech, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in ech)


def solve(m, v):
    """Solve M x = v exactly (M square invertible)."""
    return mat_vec(mat_inverse(m), v)


def span_dim(vectors):
    return len(rref(vectors)[0])


def subspace_intersection(rows_a, rows_b):
    """Echelon basis of span(rows_a) & span(rows_b)."""
    if not rows_a or not rows_b:
        return ()
    # x*A = y*B  <=>  (x, y) in kernel of [A^T | -B^T]
    n = len(rows_a[0])
    conditions = tuple(
        tuple(rows_a[i][c] for i in range(len(rows_a)))
        + tuple(-rows_b[j][c] for j in range(len(rows_b)))
        for c in range(n))
    sols = kernel(conditions)
    vectors = []
    for sol in sols:
        x = sol[:len(rows_a)]
        vec = [zero_like(rows_a[0][0])] * n
        for xi, row in zip(x, rows_a):
            if xi:
                vec = [a + xi * b for a, b in zip(vec, row)]
        vectors.append(tuple(vec))
    return rref(vectors)[0]
