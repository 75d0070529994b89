"""Representation spaces, gauge groups and the (twisted) automorphism actions.

A representation is a tuple of matrices in arrow order (``M_a`` has shape
``d_head × d_tail``); a gauge element is a tuple of invertible matrices in vertex
order.  Both are plain nested tuples, hence hashable and totally ordered: the
lexicographic order on nested tuples is the order on row-major entry vectors,
which is what canonical orbit representatives use.

Automorphisms act on the left.  Since ``QuiverAut`` composes as maps, the
reindexing uses the inverse map: ``Φ_σ(M)_a = M_{σ⁻¹(a)}`` (transposed for
contravariant σ) and ``Ψ_σ(g)_v = g_{σ⁻¹(v)}`` (inverse-transposed for
contravariant σ).  For involutions this is literally ``M_{σ(a)}``.
"""
from __future__ import annotations

import itertools
import math

from . import linalg
from .errors import (ContravariantElement, IncompatibleDim, NotAModifyingFamily, ShapeMismatch,
                     TooLarge)
from .quiver import Quiver, check_vertex_data, quotient_quiver

MAX_GAUGE = 10 ** 6
MAX_POINTS = 10 ** 7


class RepSpace:
    """Rep(Q, d) over a field together with the acting gauge group.

    ``acting`` restricts the gauge group to GL at the listed vertices (identity
    elsewhere); by default every vertex acts.
    """

    def __init__(self, quiver: Quiver, dims: dict, field, acting=None):
        self.quiver = quiver
        self.field = field
        self.dims = check_vertex_data(quiver, dims)
        acting_set = set(quiver.vertices) if acting is None else {str(v) for v in acting}
        unknown = acting_set - set(quiver.vertices)
        if unknown:
            raise IncompatibleDim(f"acting vertices {sorted(unknown)} are not in the quiver")
        self.acting = tuple(v for v in quiver.vertices if v in acting_set)
        self.dimlist = tuple(self.dims[v] for v in quiver.vertices)
        self.heads = tuple(quiver.vindex[quiver.head[a]] for a in quiver.arrows)
        self.tails = tuple(quiver.vindex[quiver.tail[a]] for a in quiver.arrows)
        self.shapes = tuple((self.dimlist[h], self.dimlist[t]) for h, t in zip(self.heads, self.tails))
        self.size = sum(r * c for r, c in self.shapes)
        self._perm_cache = {}

    @property
    def full_group(self) -> bool:
        return len(self.acting) == len(self.quiver.vertices)

    def __repr__(self):
        return (f"RepSpace({self.quiver.vertices}, dims={self.dimlist}, field={self.field!r}, "
                f"acting={self.acting})")

    # --- representations -------------------------------------------------------
    def zero(self):
        return tuple(linalg.zeros(self.field, r, c) for r, c in self.shapes)

    def check_rep(self, m):
        if len(m) != len(self.shapes):
            raise ShapeMismatch("wrong number of arrow matrices")
        for M, (r, c), a in zip(m, self.shapes, self.quiver.arrows):
            if len(M) != r or any(len(row) != c for row in M):
                raise ShapeMismatch(f"matrix of arrow {a!r} must be {r}x{c}")
        return m

    def make_rep(self, matrices):
        """Build a rep from a dict arrow -> matrix or a sequence in arrow order."""
        if isinstance(matrices, dict):
            matrices = [matrices[a] for a in self.quiver.arrows]
        red = self.field.reduce
        m = tuple(tuple(tuple(red(x) for x in row) for row in M) for M in matrices)
        return self.check_rep(m)

    def make_gauge(self, blocks):
        if isinstance(blocks, dict):
            blocks = [blocks[v] for v in self.quiver.vertices]
        red = self.field.reduce
        g = tuple(tuple(tuple(red(x) for x in row) for row in B) for B in blocks)
        for B, n, v in zip(g, self.dimlist, self.quiver.vertices):
            if len(B) != n or any(len(row) != n for row in B):
                raise ShapeMismatch(f"gauge block at {v!r} must be {n}x{n}")
            if n and self.field.is_zero(linalg.det(self.field, B)):
                raise ShapeMismatch(f"gauge block at {v!r} is singular")
        return g

    def as_dict(self, m) -> dict:
        return dict(zip(self.quiver.arrows, m))

    def flatten(self, m) -> tuple:
        return tuple(x for M in m for row in M for x in row)

    def unflatten(self, vec):
        out, k = [], 0
        for r, c in self.shapes:
            out.append(tuple(tuple(vec[k + i * c:k + (i + 1) * c]) for i in range(r)))
            k += r * c
        return tuple(out)

    def basis(self):
        z, o = self.field.zero, self.field.one
        for k in range(self.size):
            yield self.unflatten(tuple(o if j == k else z for j in range(self.size)))

    def points(self, limit: int = MAX_POINTS):
        if not self.field.is_finite:
            raise TooLarge("point enumeration needs a finite field")
        if self.field.p ** self.size > limit:
            raise TooLarge(f"|Rep| = {self.field.p}^{self.size} exceeds {limit}")
        for vec in itertools.product(range(self.field.p), repeat=self.size):
            yield self.unflatten(vec)

    def point_count(self) -> int:
        return self.field.p ** self.size

    def random_rep(self, rng):
        return self.unflatten(tuple(self.field.random(rng) for _ in range(self.size)))

    def add(self, m, n):
        return tuple(linalg.mat_add(self.field, A, B) for A, B in zip(m, n))

    def scale(self, t, m):
        return tuple(linalg.mat_scale(self.field, t, A) for A in m)

    # --- gauge group --------------------------------------------------------------
    def identity(self):
        return tuple(linalg.identity(self.field, n) for n in self.dimlist)

    def gauge_mul(self, g, h):
        return tuple(linalg.mat_mul(self.field, a, b) if a else a for a, b in zip(g, h))

    def gauge_inv(self, g):
        return tuple(linalg.inverse(self.field, a) if a else a for a in g)

    def act(self, g, m):
        """g·M = (g_{h(a)} M_a g_{t(a)}^{-1})."""
        f = self.field
        ginv = self.gauge_inv(g)
        out = []
        for M, h, t, (r, c) in zip(m, self.heads, self.tails, self.shapes):
            if r == 0 or c == 0:
                out.append(M)
            else:
                out.append(linalg.mat_mul(f, linalg.mat_mul(f, g[h], M), ginv[t]))
        return tuple(out)

    def _blocks(self):
        return [linalg.gl_elements(self.field, n) if v in self.acting and n else
                (linalg.identity(self.field, n),)
                for v, n in zip(self.quiver.vertices, self.dimlist)]

    def gauge_order(self) -> int:
        if not self.field.is_finite:
            raise TooLarge("infinite gauge group")
        return math.prod(linalg.gl_order(self.field.p, n) if v in self.acting else 1
                         for v, n in zip(self.quiver.vertices, self.dimlist))

    def gauge_elements(self, limit: int = MAX_GAUGE):
        if self.gauge_order() > limit:
            raise TooLarge(f"|G| = {self.gauge_order()} exceeds {limit}")
        return list(itertools.product(*self._blocks()))

    def gauge_generators(self):
        gens = []
        ident = self.identity()
        for k, (v, n) in enumerate(zip(self.quiver.vertices, self.dimlist)):
            if v not in self.acting or n == 0:
                continue
            for B in linalg.gl_generators(self.field, n):
                g = list(ident)
                g[k] = B
                gens.append(tuple(g))
        return gens

    def random_gauge(self, rng):
        f = self.field
        blocks = []
        for v, n in zip(self.quiver.vertices, self.dimlist):
            if v not in self.acting or n == 0:
                blocks.append(linalg.identity(f, n))
                continue
            while True:
                B = tuple(tuple(f.random(rng) for _ in range(n)) for _ in range(n))
                if not f.is_zero(linalg.det(f, B)):
                    blocks.append(B)
                    break
        return tuple(blocks)

    # --- the central subgroup Δ ---------------------------------------------------
    def delta_is_full(self) -> bool:
        """True when Δ ∩ (acting group) is all of k^× (every nonzero block acts)."""
        return all(v in self.acting for v, n in zip(self.quiver.vertices, self.dimlist) if n)

    def delta(self, t):
        return tuple(linalg.scalar_matrix(self.field, t, n) for n in self.dimlist)

    def delta_scalars(self):
        return self.field.units() if self.delta_is_full() else [self.field.one]

    def delta_order(self) -> int:
        return len(self.delta_scalars())

    def delta_value(self, g):
        """t if g = t·Id on every nonzero block and t·Id lies in the acting group."""
        t = None
        for B, n in zip(g, self.dimlist):
            if n == 0:
                continue
            s = linalg.scalar_value(self.field, B)
            if s is None or (t is not None and s != t):
                return None
            t = s
        if t is None:
            return self.field.one
        if t != self.field.one and not self.delta_is_full():
            return None
        return t

    # --- automorphism actions ----------------------------------------------------
    def _perms(self, s):
        cached = self._perm_cache.get(s)
        if cached is None:
            q = self.quiver
            inv = s.inverse()
            if any(self.dims[s.vertex_map[v]] != self.dims[v] for v in q.vertices):
                raise IncompatibleDim("dimension vector is not invariant under the automorphism")
            arrows = tuple(q.aindex[inv.arrow_map[a]] for a in q.arrows)
            verts = tuple(q.vindex[inv.vertex_map[v]] for v in q.vertices)
            cached = (arrows, verts)
            self._perm_cache[s] = cached
        return cached

    def phi(self, s, m):
        arrows, _ = self._perms(s)
        if s.covariant:
            return tuple(m[k] for k in arrows)
        out = []
        for k, (r, c) in zip(arrows, self.shapes):
            out.append(linalg.transpose(m[k]) if r and c else linalg.zeros(self.field, r, c))
        return tuple(out)

    def psi(self, s, g):
        _, verts = self._perms(s)
        if s.covariant:
            return tuple(g[k] for k in verts)
        return tuple(linalg.transpose(linalg.inverse(self.field, g[k])) if g[k] else g[k]
                     for k in verts)

    def phi_matrix(self, s, family_element=None):
        """Matrix (columns = images of basis vectors) of M ↦ u·Φ_σ(M) on flat coordinates."""
        cols = []
        for b in self.basis():
            img = self.phi(s, b)
            if family_element is not None:
                img = self.act(family_element, img)
            cols.append(self.flatten(img))
        return linalg.transpose(cols) if cols else ()


def act(space: RepSpace, g, m):
    return space.act(g, m)


def phi(space: RepSpace, s, m):
    return space.phi(s, m)


def psi(space: RepSpace, s, g):
    return space.psi(s, g)


def family_defect(space: RepSpace, group, u, i: int, j: int):
    """u_σ Ψ_σ(u_τ) u_{στ}^{-1} as a gauge element (σ, τ given by indices)."""
    s = group[i]
    k = group.mul(i, j)
    return space.gauge_mul(space.gauge_mul(u[i], space.psi(s, u[j])), space.gauge_inv(u[k]))


def trivial_family(space: RepSpace, group):
    return tuple(space.identity() for _ in range(len(group)))


class TwistedAction:
    """Φᵘ_σ = u_σ·Φ_σ and Ψᵘ_σ = Ad(u_σ)∘Ψ_σ for a modifying family u."""

    def __init__(self, space: RepSpace, group, family=None, validate: bool = True):
        self.space = space
        self.group = group
        self.family = tuple(family) if family is not None else trivial_family(space, group)
        if len(self.family) != len(group):
            raise NotAModifyingFamily("family must have one gauge element per group element")
        for s in group:
            space._perms(s)
            if any(s.vertex_map[v] not in space.acting for v in space.acting):
                raise IncompatibleDim("automorphism does not preserve the acting vertices")
        self._inv = tuple(space.gauge_inv(u) for u in self.family)
        if validate:
            from .cohomology import is_modifying_family
            if not is_modifying_family(space, group, self.family):
                raise NotAModifyingFamily("c_u leaves Δ or u_1 ≠ 1")

    def phi(self, i: int, m):
        return self.space.act(self.family[i], self.space.phi(self.group[i], m))

    def psi(self, i: int, g):
        sp = self.space
        return sp.gauge_mul(sp.gauge_mul(self.family[i], sp.psi(self.group[i], g)), self._inv[i])

    def is_trivial(self) -> bool:
        ident = self.space.identity()
        return all(u == ident for u in self.family)

    def check_laws(self, reps, gauges) -> list:
        """Failed identities among: compatibility, Φ action law, Ψ action law."""
        failures = []
        sp, G = self.space, self.group
        for i in range(len(G)):
            for m in reps:
                for g in gauges:
                    if self.phi(i, sp.act(g, m)) != sp.act(self.psi(i, g), self.phi(i, m)):
                        failures.append(("compatibility", i))
            for j in range(len(G)):
                k = G.mul(i, j)
                for m in reps:
                    if self.phi(k, m) != self.phi(i, self.phi(j, m)):
                        failures.append(("phi-law", i, j))
                for g in gauges:
                    if self.psi(k, g) != self.psi(i, self.psi(j, g)):
                        failures.append(("psi-law", i, j))
        return failures


def twisted_action(space: RepSpace, group, family=None) -> TwistedAction:
    return TwistedAction(space, group, family)


class FixedLocus:
    """Solution space of M = u_σ·Φ_σ(M) for all σ, as an RREF basis of flat vectors."""

    def __init__(self, action: TwistedAction):
        sp = action.space
        self.action = action
        self.space = sp
        rows = []
        for i in range(len(action.group)):
            if i == action.group.identity:
                continue
            L = sp.phi_matrix(action.group[i], action.family[i])
            for r in range(sp.size):
                rows.append(tuple(sp.field.reduce(L[r][c] - (1 if r == c else 0))
                                  for c in range(sp.size)))
        self.basis = linalg.nullspace(sp.field, rows, sp.size) if rows else \
            tuple(self.space.flatten(b) for b in sp.basis())
        self.dim = len(self.basis)

    def reps(self):
        return [self.space.unflatten(v) for v in self.basis]

    def contains(self, m) -> bool:
        return all(self.action.phi(i, m) == m for i in range(len(self.action.group)))

    def point_count(self) -> int:
        return self.space.field.p ** self.dim

    def points(self, limit: int = MAX_POINTS):
        f = self.space.field
        if not f.is_finite:
            raise TooLarge("point enumeration needs a finite field")
        if f.p ** self.dim > limit:
            raise TooLarge(f"fixed locus has {f.p}^{self.dim} points")
        for vec in linalg.span_points(f, self.basis, self.space.size):
            yield self.space.unflatten(vec)


def fixed_reps(action: TwistedAction) -> FixedLocus:
    return FixedLocus(action)


class FixedGauge:
    """Elements of G fixed by every Ψᵘ_σ, with an order cross-check."""

    def __init__(self, action: TwistedAction, limit: int = MAX_GAUGE):
        sp = action.space
        self.action = action
        n = len(action.group)
        self.elements = [g for g in sp.gauge_elements(limit)
                         if all(action.psi(i, g) == g for i in range(n))]
        self.order = len(self.elements)
        self.centralizer_orders = None
        self.predicted_order = None
        if action.group.is_covariant:
            self._predict()

    def _predict(self):
        """Order predicted by the centraliser description: one factor per vertex orbit."""
        sp, G, u = self.action.space, self.action.group, self.action.family
        q, f = sp.quiver, sp.field
        seen, orders = set(), {}
        for v in q.vertices:
            if v in seen:
                continue
            orbit = {s.vertex_map[v] for s in G}
            seen |= orbit
            n = sp.dims[v]
            if v not in sp.acting or n == 0:
                orders[v] = 1
                continue
            k = q.vindex[v]
            conds = [u[i][k] for i, s in enumerate(G) if s.vertex_map[v] == v]
            orders[v] = sum(1 for B in linalg.gl_elements(f, n)
                            if all(linalg.mat_mul(f, B, U) == linalg.mat_mul(f, U, B) for U in conds))
        self.centralizer_orders = orders
        self.predicted_order = math.prod(orders.values())

    def contains(self, g) -> bool:
        return all(self.action.psi(i, g) == g for i in range(len(self.action.group)))


def fixed_gauge(action: TwistedAction, limit: int = MAX_GAUGE) -> FixedGauge:
    return FixedGauge(action, limit)


class AlphaBeta:
    """Reindexing isomorphisms between data on Q/S and S-fixed data on Q."""

    def __init__(self, space: RepSpace, group):
        if not group.is_covariant:
            raise ContravariantElement("alpha/beta need a covariant group")
        from .quiver import induced_dim_stab
        self.space = space
        self.group = group
        self.quotient, self.vproj, self.aproj = quotient_quiver(space.quiver, group)
        zero_theta = {v: 0 for v in space.quiver.vertices}
        d_tilde, _ = induced_dim_stab(space.quiver, group, space.dims, zero_theta)
        acting = [o for o in self.quotient.vertices if o in space.acting]
        self.quotient_space = RepSpace(self.quotient, d_tilde, space.field, acting)
        qv, qa = self.quotient.vindex, self.quotient.aindex
        self._vsrc = tuple(qv[self.vproj[v]] for v in space.quiver.vertices)
        self._asrc = tuple(qa[self.aproj[a]] for a in space.quiver.arrows)
        self._vback = tuple(space.quiver.vindex[o] for o in self.quotient.vertices)
        self._aback = tuple(space.quiver.aindex[o] for o in self.quotient.arrows)

    def alpha(self, g_tilde):
        return tuple(g_tilde[k] for k in self._vsrc)

    def beta(self, n_tilde):
        return tuple(n_tilde[k] for k in self._asrc)

    def alpha_inverse(self, g):
        return tuple(g[k] for k in self._vback)

    def beta_inverse(self, m):
        return tuple(m[k] for k in self._aback)


def alpha_beta(space: RepSpace, group) -> AlphaBeta:
    return AlphaBeta(space, group)


def endo_dim(space: RepSpace, m) -> int:
    """dim of {(g_v) : g_{h(a)} M_a = M_a g_{t(a)} for all a}."""
    f = space.field
    offsets, k = [], 0
    for n in space.dimlist:
        offsets.append(k)
        k += n * n
    nvars = k
    rows = []
    for M, h, t, (r, c) in zip(m, space.heads, space.tails, space.shapes):
        if r == 0 or c == 0:
            continue
        dh, dt = space.dimlist[h], space.dimlist[t]
        for i in range(r):
            for j in range(c):
                row = [0] * nvars
                for x in range(dh):      # (g_h M)_{ij} = Σ_x g_h[i][x] M[x][j]
                    row[offsets[h] + i * dh + x] += M[x][j]
                for x in range(dt):      # (M g_t)_{ij} = Σ_x M[i][x] g_t[x][j]
                    row[offsets[t] + x * dt + j] -= M[i][x]
                rows.append(tuple(f.reduce(v) for v in row))
    return nvars - (linalg.rank(f, rows, nvars) if rows else 0)


def stabilizer(space: RepSpace, m, elements=None) -> list:
    elements = space.gauge_elements() if elements is None else elements
    return [g for g in elements if space.act(g, m) == m]
