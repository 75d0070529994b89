"""Slope (semi)stability by exhaustive subrepresentation search."""
from __future__ import annotations

from . import linalg
from .errors import ContravariantElement, IsSemistable, TieBreakViolation, TooLarge
from .quiver import slope
from .reps import RepSpace

MAX_SUBSPACE_TUPLES = 10 ** 6


class Subrep:
    """Per-vertex RREF bases (vertex order) of an arrow-invariant family of subspaces."""

    __slots__ = ("bases", "dimvec")

    def __init__(self, bases):
        self.bases = tuple(bases)
        self.dimvec = tuple(len(b) for b in self.bases)

    @property
    def total(self) -> int:
        return sum(self.dimvec)

    def dims(self, space: RepSpace) -> dict:
        return dict(zip(space.quiver.vertices, self.dimvec))

    def contains(self, other: "Subrep", field) -> bool:
        for big, small in zip(self.bases, other.bases):
            if len(small) > len(big):
                return False
            pivots = _pivots(big)
            if not all(linalg.in_span(field, big, pivots, v) for v in small):
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Subrep) and self.bases == other.bases

    def __hash__(self):
        return hash(self.bases)

    def __repr__(self):
        return f"Subrep(dims={self.dimvec})"


def _pivots(basis):
    out = []
    for row in basis:
        out.append(next(i for i, x in enumerate(row) if x))
    return tuple(out)


def _image_in(field, M, source, target) -> bool:
    pivots = _pivots(target)
    for w in source:
        if not linalg.in_span(field, target, pivots, linalg.mat_vec(field, M, w)):
            return False
    return True


def subreps(space: RepSpace, m, containing: Subrep | None = None,
            limit: int = MAX_SUBSPACE_TUPLES) -> list:
    """All subrepresentations of m (including 0 and m), optionally containing a given one."""
    f = space.field
    choices = [linalg.subspaces(f, n) for n in space.dimlist]
    total = 1
    for c in choices:
        total *= len(c)
    if total > limit:
        raise TooLarge(f"{total} subspace tuples exceed {limit}")
    nv = len(space.dimlist)
    # arrows checked once both of their endpoints are assigned
    due = [[] for _ in range(nv)]
    for k, (h, t) in enumerate(zip(space.heads, space.tails)):
        due[max(h, t)].append(k)
    out = []
    current = [None] * nv

    def extend(v):
        if v == nv:
            out.append(Subrep(current))
            return
        for W in choices[v]:
            if containing is not None:
                sub = containing.bases[v]
                if len(sub) > len(W) or not all(linalg.in_span(f, W, _pivots(W), x) for x in sub):
                    continue
            current[v] = W
            ok = True
            for k in due[v]:
                h, t = space.heads[k], space.tails[k]
                r, c = space.shapes[k]
                if r and c and current[t] and not _image_in(f, m[k], current[t], current[h]):
                    ok = False
                    break
            if ok:
                extend(v + 1)
        current[v] = None

    extend(0)
    return out


class StabilityReport:
    """Everything the slope criterion says about one representation."""

    def __init__(self, space: RepSpace, m, theta: dict, subs=None):
        self.space = space
        self.rep = m
        self.theta = theta
        dims = space.dims
        if sum(dims.values()) == 0:
            raise TooLarge("zero representation has no slope")
        self.slope = slope(theta, dims)
        subs = subreps(space, m) if subs is None else subs
        full = tuple(space.dimlist)
        self.proper = [s for s in subs if 0 < s.total < sum(full)]
        self.subreps = subs
        verts = space.quiver.vertices
        slopes = [(slope(theta, dict(zip(verts, s.dimvec))), s) for s in self.proper]
        self.semistable = all(x <= self.slope for x, _ in slopes)
        self.stable = all(x < self.slope for x, _ in slopes)
        self._slopes = slopes

    def scss(self) -> Subrep:
        """The unique nonzero subrep of maximal slope and, among those, maximal dimension."""
        if self.semistable:
            raise IsSemistable("representation is semistable")
        return _unique_max([(x, s.total, s) for x, s in self._slopes])


def _unique_max(candidates):
    best = max((x, t) for x, t, _ in candidates)
    winners = [s for x, t, s in candidates if (x, t) == best]
    if len(winners) != 1:
        raise TieBreakViolation(f"{len(winners)} subrepresentations tie for the maximum")
    return winners[0]


def analyze(space: RepSpace, m, theta: dict) -> StabilityReport:
    return StabilityReport(space, m, theta)


def is_semistable(space: RepSpace, m, theta: dict) -> bool:
    return StabilityReport(space, m, theta).semistable


def is_stable(space: RepSpace, m, theta: dict) -> bool:
    return StabilityReport(space, m, theta).stable


def scss(space: RepSpace, m, theta: dict) -> Subrep:
    return StabilityReport(space, m, theta).scss()


def hn_filtration(space: RepSpace, m, theta: dict) -> list:
    """0 = W_0 ⊂ W_1 ⊂ … ⊂ W_k = m, each step the scss of the quotient by the previous one."""
    verts = space.quiver.vertices
    zero = Subrep(tuple(() for _ in verts))
    chain = [zero]
    full_total = sum(space.dimlist)
    while chain[-1].total < full_total:
        prev = chain[-1]
        bigger = [s for s in subreps(space, m, containing=prev) if s.total > prev.total]
        cands = []
        for s in bigger:
            e = {v: a - b for v, a, b in zip(verts, s.dimvec, prev.dimvec)}
            cands.append((slope(theta, e), s.total, s))
        chain.append(_unique_max(cands))
    return chain


def hn_slopes(space: RepSpace, chain, theta: dict) -> list:
    verts = space.quiver.vertices
    return [slope(theta, {v: a - b for v, a, b in zip(verts, s.dimvec, r.dimvec)})
            for r, s in zip(chain, chain[1:])]


def _transport(space: RepSpace, s, u, sub: Subrep) -> Subrep:
    """γ_σ(σ(W′)): vertex v receives u_{σ,v}(W′_{σ⁻¹(v)})."""
    f = space.field
    _, verts = space._perms(s)
    bases = []
    for v, k in enumerate(verts):
        vecs = [linalg.mat_vec(f, u[v], w) for w in sub.bases[k]] if space.dimlist[v] else []
        bases.append(linalg.rref(f, vecs, space.dimlist[v])[0] if vecs else ())
    return Subrep(bases)


def equivariant_semistable(eq, theta: dict, stable: bool = False) -> bool:
    """Slope test restricted to γ-invariant subreps of an equivariant representation."""
    action = eq.action
    sp, G = action.space, action.group
    if not G.is_covariant:
        raise ContravariantElement("equivariant subrepresentations are defined for covariant groups")
    verts = sp.quiver.vertices
    total = slope(theta, sp.dims)
    full = sum(sp.dimlist)
    for sub in subreps(sp, eq.rep):
        if not 0 < sub.total < full:
            continue
        if any(_transport(sp, G[i], eq.gamma[i], sub) != sub for i in range(len(G))):
            continue
        x = slope(theta, dict(zip(verts, sub.dimvec)))
        if x > total or (stable and x == total):
            return False
    return True

