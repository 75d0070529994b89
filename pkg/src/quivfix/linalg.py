"""Exact dense linear algebra over a :class:`~quivfix.fields.Field`.

Matrices are tuples of row tuples, vectors are tuples.  Every routine takes the
field first and returns canonical (reduced) entries.  Empty shapes are not
supported by the product routines; callers with zero-dimensional vertices handle
those blocks themselves.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import DivisionByZero, ShapeMismatch, TooLarge


def zeros(field, rows: int, cols: int):
    z = field.zero
    return tuple((z,) * cols for _ in range(rows))


def identity(field, n: int):
    z, o = field.zero, field.one
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def diag(field, entries):
    n = len(entries)
    z = field.zero
    return tuple(tuple(field.reduce(entries[i]) if i == j else z for j in range(n))
                 for i in range(n))


def scalar_matrix(field, t, n: int):
    return diag(field, [t] * n)


def shape(A):
    return (len(A), len(A[0]) if A else 0)


def transpose(A):
    return tuple(zip(*A))


def mat_mul(field, A, B):
    if A and B and len(A[0]) != len(B):
        raise ShapeMismatch(f"cannot multiply {shape(A)} by {shape(B)}")
    cols = tuple(zip(*B))
    red = field.reduce
    return tuple(tuple(red(sum(a * b for a, b in zip(row, col))) for col in cols) for row in A)


def mat_vec(field, A, v):
    red = field.reduce
    return tuple(red(sum(a * b for a, b in zip(row, v))) for row in A)


def mat_add(field, A, B):
    red = field.reduce
    return tuple(tuple(red(a + b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(field, A, B):
    red = field.reduce
    return tuple(tuple(red(a - b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_neg(field, A):
    red = field.reduce
    return tuple(tuple(red(-a) for a in row) for row in A)


def mat_scale(field, t, A):
    red = field.reduce
    return tuple(tuple(red(t * a) for a in row) for row in A)


def mat_conj(field, A):
    return tuple(tuple(field.conj(a) for a in row) for row in A)


def conj_transpose(field, A):
    return transpose(mat_conj(field, A))


def trace(field, A):
    return field.reduce(sum(A[i][i] for i in range(len(A))))


def commutator(field, A, B):
    return mat_sub(field, mat_mul(field, A, B), mat_mul(field, B, A))


def mat_pow(field, A, k: int):
    result = identity(field, len(A))
    for _ in range(k):
        result = mat_mul(field, result, A)
    return result


def is_zero_matrix(field, A) -> bool:
    return all(field.is_zero(a) for row in A for a in row)


def scalar_value(field, A):
    """Return t if A = t*Id, else None."""
    n = len(A)
    if n == 0:
        return None
    t = A[0][0]
    for i in range(n):
        for j in range(n):
            if A[i][j] != (t if i == j else field.zero):
                return None
    return t


def _eliminate(field, rows, ncols):
    """Gauss-Jordan elimination; returns (reduced rows, pivot columns, det factor)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    factor = field.one
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if not field.is_zero(m[i][c])), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
            factor = field.reduce(-factor)
        pv = m[r][c]
        factor = field.reduce(factor * pv)
        inv = field.inv(pv)
        m[r] = [field.reduce(x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.reduce(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots, factor


def rref(field, rows, ncols: int | None = None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    m, pivots, _ = _eliminate(field, rows, ncols)
    return tuple(tuple(row) for row in m[:len(pivots)]), tuple(pivots)


def rank(field, rows, ncols: int | None = None) -> int:
    return len(rref(field, rows, ncols)[1])


def det(field, A):
    n = len(A)
    if n == 0:
        return field.one
    m, pivots, factor = _eliminate(field, A, n)
    return factor if len(pivots) == n else field.zero


def inverse(field, A):
    n = len(A)
    aug = [tuple(A[i]) + identity(field, n)[i] for i in range(n)]
    m, pivots, _ = _eliminate(field, aug, n)
    if tuple(pivots) != tuple(range(n)):
        raise DivisionByZero("matrix is singular")
    return tuple(tuple(row[n:]) for row in m)


def nullspace(field, A, ncols: int):
    """RREF basis of {x : A x = 0}."""
    reduced, pivots = rref(field, A, ncols) if A else ((), ())
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(reduced, pivots):
            v[pc] = field.reduce(-row[f])
        basis.append(tuple(v))
    if not basis:
        return ()
    return rref(field, basis, ncols)[0]


def reduce_vector(field, basis, pivots, v):
    """Reduce v against an RREF basis; zero result iff v lies in the span."""
    v = list(v)
    for row, pc in zip(basis, pivots):
        if not field.is_zero(v[pc]):
            f = v[pc]
            v = [field.reduce(a - f * b) for a, b in zip(v, row)]
    return tuple(v)


def in_span(field, basis, pivots, v) -> bool:
    return all(field.is_zero(x) for x in reduce_vector(field, basis, pivots, v))


def span_points(field, basis, ncols: int):
    """All F_p-points of the span of ``basis`` (finite fields only)."""
    elems = field.elements()
    if not basis:
        yield (field.zero,) * ncols
        return
    for coeffs in itertools.product(elems, repeat=len(basis)):
        yield tuple(field.reduce(sum(c * row[j] for c, row in zip(coeffs, basis)))
                    for j in range(ncols))


@lru_cache(maxsize=None)
def subspaces(field, n: int):
    """All subspaces of F_p^n as RREF bases, by dimension then lexicographically."""
    if not field.is_finite:
        raise TooLarge(f"{field} has infinitely many subspaces")
    elems = field.elements()
    out = [()]
    for k in range(1, n + 1):
        found = []
        for pivots in itertools.combinations(range(n), k):
            slots = [(r, c) for r in range(k) for c in range(n)
                     if c > pivots[r] and c not in pivots]
            for values in itertools.product(elems, repeat=len(slots)):
                rows = [[field.zero] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = field.one
                for (r, c), x in zip(slots, values):
                    rows[r][c] = x
                found.append(tuple(tuple(row) for row in rows))
        out.extend(sorted(found))
    return tuple(out)


def count_subspaces(p: int, n: int) -> int:
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


def gl_order(p: int, n: int) -> int:
    order = 1
    for i in range(n):
        order *= p ** n - p ** i
    return order


@lru_cache(maxsize=None)
def gl_elements(field, n: int):
    """GL_n(F_p) in lexicographic order of row-major entries."""
    if not field.is_finite:
        raise TooLarge(f"GL_{n}({field}) is infinite")
    if gl_order(field.p, n) > 10 ** 6:
        raise TooLarge(f"|GL_{n}(F_{field.p})| exceeds 10^6")
    elems = field.elements()
    out = []
    for entries in itertools.product(elems, repeat=n * n):
        A = tuple(entries[i * n:(i + 1) * n] for i in range(n))
        if not field.is_zero(det(field, A)):
            out.append(A)
    return tuple(out)


def primitive_root(p: int) -> int:
    for g in range(1, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            return g
    raise ValueError(p)


def gl_generators(field, n: int):
    """A small generating set of GL_n(F_p): a diagonal unit plus elementary moves."""
    gens = [diag(field, [primitive_root(field.p)] + [1] * (n - 1))]
    for i in range(n - 1):
        t = [list(r) for r in identity(field, n)]
        t[i][i + 1] = field.one
        gens.append(tuple(tuple(r) for r in t))
        s = [list(r) for r in identity(field, n)]
        s[i][i], s[i + 1][i + 1] = field.zero, field.zero
        s[i][i + 1], s[i + 1][i] = field.one, field.one
        gens.append(tuple(tuple(r) for r in s))
    return gens
