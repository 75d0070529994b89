"""Points in the plane as framed Jordan-double representations over F_p.

A representation is (M_x, M_i, M_y, M_j) in the arrow order of
:func:`~quivfix.quiver.framed_jordan_double`; only GL_n at vertex ``0`` acts.
"""
from __future__ import annotations

import itertools

import numpy as np

from . import linalg
from .automorphisms import automorphism, close_subgroup
from .errors import NotInFiber, NotStable, TooLarge
from .moduli import ModuliProblem
from .quiver import framed_jordan_double
from .reps import RepSpace

MAX_ENUM = 3 ** 12


def hilbert_space(n: int, field) -> RepSpace:
    return RepSpace(framed_jordan_double(), {"0": n, "inf": 1}, field, acting=["0"])


def swap_group(space: RepSpace):
    """⟨σ⟩ with σ: x ↔ y, covariant, fixing i and j."""
    return close_subgroup([automorphism(space.quiver, "covariant", arrow_map={"x": "y", "y": "x"})])


def parts(space: RepSpace, m) -> dict:
    return space.as_dict(m)


def moment(space: RepSpace, m):
    """[M_x, M_y] + M_i M_j."""
    f = space.field
    d = parts(space, m)
    return linalg.mat_add(f, linalg.commutator(f, d["x"], d["y"]), linalg.mat_mul(f, d["i"], d["j"]))


def in_zero_fiber(space: RepSpace, m) -> bool:
    return linalg.is_zero_matrix(space.field, moment(space, m))


def krylov_span(space: RepSpace, m):
    """RREF basis of the span of all words in M_x, M_y applied to M_i."""
    f = space.field
    d = parts(space, m)
    n = space.dims["0"]
    vecs = [tuple(row[0] for row in d["i"])]
    basis, pivots = linalg.rref(f, vecs, n)
    frontier = list(vecs)
    while frontier:
        v = frontier.pop()
        for A in (d["x"], d["y"]):
            w = linalg.mat_vec(f, A, v)
            if not linalg.in_span(f, basis, pivots, w):
                basis, pivots = linalg.rref(f, list(basis) + [w], n)
                frontier.append(w)
    return basis


def is_cyclic(space: RepSpace, m) -> bool:
    return len(krylov_span(space, m)) == space.dims["0"]


def det_stable(space: RepSpace, m) -> bool:
    """Stable for the determinant character: in μ⁻¹(0) and M_i cyclic."""
    if not in_zero_fiber(space, m):
        raise NotInFiber("representation is not in the zero fibre of the moment map")
    return is_cyclic(space, m)


class Ideal:
    """J_M truncated to polynomials of degree ≤ n, as a kernel of the evaluation map."""

    def __init__(self, space: RepSpace, m):
        if not det_stable(space, m):
            raise NotStable("M_i is not a cyclic vector")
        f = space.field
        d = parts(space, m)
        n = space.dims["0"]
        self.space, self.rep = space, m
        self.monomials = [(a, t - a) for t in range(n + 1) for a in range(t, -1, -1)]
        vi = tuple(row[0] for row in d["i"])
        cols = [self._eval(f, d, a, b, vi) for a, b in self.monomials]
        self.evaluation = linalg.transpose(cols)
        self.codim = linalg.rank(f, self.evaluation, len(self.monomials))
        self.basis = linalg.nullspace(f, self.evaluation, len(self.monomials))

    @staticmethod
    def _eval(f, d, a, b, v):
        return linalg.mat_vec(f, linalg.mat_mul(f, linalg.mat_pow(f, d["x"], a),
                                                linalg.mat_pow(f, d["y"], b)), v)

    def contains(self, poly: dict) -> bool:
        """``poly`` maps exponent pairs (a, b) to coefficients."""
        f = self.space.field
        d = parts(self.space, self.rep)
        vi = tuple(row[0] for row in d["i"])
        total = [f.zero] * self.space.dims["0"]
        for (a, b), c in poly.items():
            v = self._eval(f, d, a, b, vi)
            total = [f.reduce(s + c * x) for s, x in zip(total, v)]
        return all(f.is_zero(x) for x in total)

    def generators_text(self) -> list:
        def term(c, a, b):
            mono = "*".join(["x"] * a + ["y"] * b) or "1"
            return mono if c == 1 else f"{c}*{mono}"
        return [" + ".join(term(c, *mon) for c, mon in zip(row, self.monomials) if c)
                for row in self.basis]


def ideal_of(space: RepSpace, m) -> Ideal:
    return Ideal(space, m)


def fixed_diagonal_check(space: RepSpace, m) -> bool:
    """For M_x = M_y stable: x − y lies in J_M and J_M has codimension n."""
    d = parts(space, m)
    if d["x"] != d["y"]:
        return False
    J = Ideal(space, m)
    f = space.field
    return J.contains({(1, 0): f.one, (0, 1): f.reduce(-1)}) and J.codim == space.dims["0"]


def involution_classes(n: int, field) -> dict:
    """Conjugacy classes of g ∈ GL_n with g² = 1, and the diagonal representatives u_r."""
    f = field
    ident = linalg.identity(f, n)
    invols = [g for g in linalg.gl_elements(f, n) if linalg.mat_mul(f, g, g) == ident]
    gl = linalg.gl_elements(f, n)
    classes, seen = [], set()
    for g in invols:
        if g in seen:
            continue
        cls = {linalg.mat_mul(f, linalg.mat_mul(f, h, g), linalg.inverse(f, h)) for h in gl}
        seen |= cls
        classes.append(cls)
    reps = [u_r(n, r, f) for r in range(n + 1)]
    matched = [next(k for k, c in enumerate(classes) if u in c) for u in reps]
    return {"representatives": reps, "class_sizes": [len(classes[k]) for k in matched],
            "class_count": len(classes), "matches_diagonal": sorted(matched) == list(range(len(classes)))}


def u_r(n: int, r: int, field):
    return linalg.diag(field, [field.reduce(-1)] * r + [field.one] * (n - r))


def family_u_r(space: RepSpace, group, r: int):
    """Modifying family with u_σ = (u_r, 1)."""
    n = space.dims["0"]
    u = (u_r(n, r, space.field), linalg.identity(space.field, 1))
    return tuple(space.identity() if s.is_identity() else u for s in group)


def zero_fiber_points(space: RepSpace, limit: int = MAX_ENUM) -> list:
    """All points of μ⁻¹(0), enumerated with vectorised arithmetic mod p."""
    f = space.field
    p = f.p
    size = space.size
    if p ** size > limit:
        raise TooLarge(f"{p}^{size} points exceed {limit}")
    grid = np.array(list(itertools.product(range(p), repeat=size)), dtype=np.int64)
    k = 0
    blocks = {}
    for a, (r, c) in zip(space.quiver.arrows, space.shapes):
        blocks[a] = grid[:, k:k + r * c].reshape(-1, r, c)
        k += r * c
    X, Y, I, J = blocks["x"], blocks["y"], blocks["i"], blocks["j"]
    mu = (X @ Y - Y @ X + I @ J) % p
    keep = np.all(mu.reshape(len(grid), -1) == 0, axis=1)
    return [space.unflatten(tuple(int(x) for x in row)) for row in grid[keep]]


class HilbertProblem(ModuliProblem):
    """Determinant stability on μ⁻¹(0) for the framed Jordan double, GL_n acting."""

    slope_based = False

    def __init__(self, n: int, field, max_points: int = MAX_ENUM):
        super().__init__(hilbert_space(n, field), {"0": -1, "inf": n}, max_points)
        self.n = n

    def stability(self, m):
        ok = in_zero_fiber(self.space, m) and is_cyclic(self.space, m)
        return ok, ok

    def candidate_points(self):
        return zero_fiber_points(self.space, self.max_points)


def hilbert_point_count(n: int, q: int) -> int:
    """#Hilb^n(A^2)(F_q) for n ≤ 2."""
    return {0: 1, 1: q ** 2, 2: q ** 4 + q ** 3}[n]
