"""Covariant and contravariant quiver automorphisms and the finite groups they form."""
from __future__ import annotations

import itertools

from .errors import InvalidAutomorphism, NotStarAutomorphism, TooLarge
from .quiver import DoubledQuiver, Quiver

MAX_VERTICES = 10
MAX_ARROWS = 14
MAX_GROUP = 10 ** 4


class QuiverAut:
    """A pair of bijections (vertices, arrows) with a variance tag.

    Composition is composition of maps: ``(s * t)(x) = s(t(x))``.
    """

    __slots__ = ("quiver", "covariant", "vertex_map", "arrow_map", "_key")

    def __init__(self, quiver: Quiver, covariant: bool, vertex_map: dict, arrow_map: dict,
                 check: bool = True):
        self.quiver = quiver
        self.covariant = bool(covariant)
        self.vertex_map = {str(k): str(v) for k, v in vertex_map.items()}
        self.arrow_map = {str(k): str(v) for k, v in arrow_map.items()}
        self._key = (self.covariant,
                     tuple(quiver.vindex[self.vertex_map[v]] for v in quiver.vertices),
                     tuple(quiver.aindex[self.arrow_map[a]] for a in quiver.arrows))
        if check:
            self.check()

    def check(self):
        q = self.quiver
        if sorted(self._key[1]) != list(range(len(q.vertices))):
            raise InvalidAutomorphism("vertex map is not a bijection")
        if sorted(self._key[2]) != list(range(len(q.arrows))):
            raise InvalidAutomorphism("arrow map is not a bijection")
        for a in q.arrows:
            b = self.arrow_map[a]
            t, h = self.vertex_map[q.tail[a]], self.vertex_map[q.head[a]]
            ok = (q.tail[b], q.head[b]) == ((t, h) if self.covariant else (h, t))
            if not ok:
                raise InvalidAutomorphism(f"arrow {a!r} -> {b!r} breaks the variance equations")

    @property
    def variance(self) -> str:
        return "covariant" if self.covariant else "contravariant"

    @property
    def sign(self) -> int:
        return 1 if self.covariant else -1

    def vertex(self, v):
        return self.vertex_map[v]

    def arrow(self, a):
        return self.arrow_map[a]

    def __mul__(self, other: "QuiverAut") -> "QuiverAut":
        return QuiverAut(self.quiver, self.covariant == other.covariant,
                         {v: self.vertex_map[other.vertex_map[v]] for v in self.quiver.vertices},
                         {a: self.arrow_map[other.arrow_map[a]] for a in self.quiver.arrows},
                         check=False)

    def inverse(self) -> "QuiverAut":
        return QuiverAut(self.quiver, self.covariant,
                         {w: v for v, w in self.vertex_map.items()},
                         {b: a for a, b in self.arrow_map.items()}, check=False)

    def is_identity(self) -> bool:
        return (self.covariant and all(k == v for k, v in self.vertex_map.items())
                and all(k == v for k, v in self.arrow_map.items()))

    def order(self) -> int:
        power, n = self, 1
        while not power.is_identity():
            power, n = self * power, n + 1
        return n

    def __eq__(self, other):
        return isinstance(other, QuiverAut) and self.quiver == other.quiver and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def sort_key(self):
        return (0 if self.covariant else 1, self._key[1], self._key[2])

    def describe(self) -> str:
        """Short text such as ``contravariant a->a* a*->a``; only moved arrows are listed."""
        moved = [f"{a}->{b}" for a, b in self.arrow_map.items() if a != b]
        return " ".join([self.variance] + (moved or ["id"]))

    def __repr__(self):
        moved_v = {v: w for v, w in self.vertex_map.items() if v != w}
        moved_a = {a: b for a, b in self.arrow_map.items() if a != b}
        return f"QuiverAut({self.variance}, vertices={moved_v}, arrows={moved_a})"

    def to_json(self) -> dict:
        return {"variance": self.variance,
                "vertex_map": dict(self.vertex_map),
                "arrow_map": dict(self.arrow_map)}

    @classmethod
    def from_json(cls, quiver: Quiver, obj: dict):
        if obj.get("variance") not in ("covariant", "contravariant"):
            raise InvalidAutomorphism("variance must be 'covariant' or 'contravariant'")
        vmap = {v: v for v in quiver.vertices}
        vmap.update(obj.get("vertex_map", {}))
        amap = {a: a for a in quiver.arrows}
        amap.update(obj.get("arrow_map", {}))
        return cls(quiver, obj["variance"] == "covariant", vmap, amap)


def identity_aut(q: Quiver) -> QuiverAut:
    return QuiverAut(q, True, {v: v for v in q.vertices}, {a: a for a in q.arrows}, check=False)


def sign(s: QuiverAut) -> int:
    return s.sign


def enumerate_aut(q: Quiver, variance_filter: str = "all") -> list:
    """All automorphisms, covariant ones first, then lexicographic in the index images."""
    if len(q.vertices) > MAX_VERTICES or len(q.arrows) > MAX_ARROWS:
        raise TooLarge(f"enumeration limited to {MAX_VERTICES} vertices and {MAX_ARROWS} arrows")
    variances = {"all": (True, False), "covariant": (True,), "contravariant": (False,)}[variance_filter]
    verts = q.vertices
    between = {}
    for a in q.arrows:
        between.setdefault((q.tail[a], q.head[a]), []).append(a)
    count = {pair: len(arrs) for pair, arrs in between.items()}

    def arrow_count(u, v):
        return count.get((u, v), 0)

    found = []
    for covariant in variances:
        def consistent(assign, k):
            v = verts[k]
            for j in range(k + 1):
                u = verts[j]
                for x, y in ((u, v), (v, u)):
                    img = (assign[x], assign[y]) if covariant else (assign[y], assign[x])
                    if arrow_count(x, y) != arrow_count(*img):
                        return False
            return True

        def extend(assign, used, k):
            if k == len(verts):
                yield dict(assign)
                return
            for w in verts:
                if w in used:
                    continue
                assign[verts[k]] = w
                if consistent(assign, k):
                    used.add(w)
                    yield from extend(assign, used, k + 1)
                    used.discard(w)
                del assign[verts[k]]

        for vmap in extend({}, set(), 0):
            pairs = sorted(between)
            choices = []
            for (t, h) in pairs:
                target = (vmap[t], vmap[h]) if covariant else (vmap[h], vmap[t])
                choices.append([list(zip(between[(t, h)], perm))
                                for perm in itertools.permutations(between[target])])
            for combo in itertools.product(*choices):
                amap = dict(pair for block in combo for pair in block)
                found.append(QuiverAut(q, covariant, vmap, amap, check=False))
    return sorted(found, key=QuiverAut.sort_key)


class AutGroup:
    """A finite group of quiver automorphisms with its multiplication table."""

    def __init__(self, elements):
        elements = list(elements)
        if not elements:
            raise ValueError("empty group")
        self.quiver = elements[0].quiver
        self.elements = elements
        self.index = {s: i for i, s in enumerate(elements)}
        self.table = [[self.index[s * t] for t in elements] for s in elements]
        self.identity = next(i for i, s in enumerate(elements) if s.is_identity())
        self.inverse = [row.index(self.identity) for row in self.table]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def signs(self):
        return [s.sign for s in self.elements]

    @property
    def is_covariant(self) -> bool:
        return all(s.covariant for s in self.elements)

    def covariant_part(self) -> "AutGroup":
        return AutGroup([s for s in self.elements if s.covariant])

    def element_order(self, i: int) -> int:
        n, k = 1, i
        while k != self.identity:
            k, n = self.table[i][k], n + 1
        return n

    def cyclic_generator(self):
        """Index of an element generating the group, or None if it is not cyclic."""
        for i in range(len(self)):
            if self.element_order(i) == len(self):
                return i
        return None

    def non_identity(self):
        return [i for i in range(len(self)) if i != self.identity]

    def __repr__(self):
        return f"AutGroup(order={len(self)}, covariant={self.is_covariant})"

    def to_json(self) -> dict:
        return {"elements": [s.to_json() for s in self.elements]}


def close_subgroup(gens, quiver: Quiver | None = None, limit: int = MAX_GROUP) -> AutGroup:
    """Closure of the generators under composition, elements in discovery order."""
    gens = list(gens)
    if not gens:
        if quiver is None:
            raise ValueError("need a generator or a quiver")
        return AutGroup([identity_aut(quiver)])
    e = identity_aut(gens[0].quiver)
    elements, seen = [e], {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > limit:
                        raise TooLarge(f"group closure exceeds {limit} elements")
        frontier = nxt
    return AutGroup(elements)


def is_compatible(group, d: dict, theta: dict | None = None):
    """(σ(d) = d for all σ, σ(θ) = sign(σ)θ for all σ)."""
    dims = all(d[s.vertex_map[v]] == d[v] for s in group for v in d)
    if theta is None:
        return dims, True
    weights = all(theta[s.vertex_map[v]] == s.sign * theta[v] for s in group for v in theta)
    return dims, weights


def star_classify(s: QuiverAut) -> str:
    qd = s.quiver
    if not isinstance(qd, DoubledQuiver):
        raise NotStarAutomorphism("star classification needs a doubled quiver")
    star = qd.star
    if any(s.arrow_map[star[a]] != star[s.arrow_map[a]] for a in qd.arrows):
        return "not_star"
    image = {s.arrow_map[a] for a in qd.base_arrows}
    if image <= qd.base_arrows:
        return "symplectic"
    if image <= qd.dual_arrows:
        return "anti_symplectic"
    return "not_star"


def star_sign(s: QuiverAut) -> int:
    label = star_classify(s)
    if label == "not_star":
        raise NotStarAutomorphism(f"{s!r} is not a star automorphism")
    return 1 if label == "symplectic" else -1


def extend_to_double(s: QuiverAut, qd: DoubledQuiver) -> QuiverAut:
    """Extend σ ∈ Aut(Q) to Q̄ by σ(a*) := σ(a)*."""
    amap = dict(s.arrow_map)
    amap.update({qd.star[a]: qd.star[s.arrow_map[a]] for a in qd.base.arrows})
    return QuiverAut(qd, s.covariant, s.vertex_map, amap)


def canonical_contravariant(qd: DoubledQuiver) -> QuiverAut:
    """a ↦ a* on every arrow, identity on vertices."""
    return QuiverAut(qd, False, {v: v for v in qd.vertices}, {a: qd.star[a] for a in qd.arrows})


def automorphism(q: Quiver, variance: str = "covariant", vertex_map=None, arrow_map=None):
    """Build an automorphism from partial maps (unlisted ids are fixed)."""
    vmap = {v: v for v in q.vertices}
    vmap.update({str(k): str(v) for k, v in (vertex_map or {}).items()})
    amap = {a: a for a in q.arrows}
    amap.update({str(k): str(v) for k, v in (arrow_map or {}).items()})
    return QuiverAut(q, variance == "covariant", vmap, amap)
