"""Quivers, doubled quivers, quotient quivers, slopes and the GIT character."""
from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import (ContravariantElement, DanglingArrow, DuplicateId, IncompatibleData,
                     ZeroDimension)


class Quiver:
    """Finite quiver with ordered vertices and ordered arrows (name, tail, head).

    Ids are normalised to strings so that JSON round trips are lossless.
    """

    def __init__(self, vertices, arrows, validate_now: bool = True):
        self.vertices = tuple(str(v) for v in vertices)
        self.arrows = tuple(str(a[0]) for a in arrows)
        self.tail = {str(a): str(t) for a, t, _ in arrows}
        self.head = {str(a): str(h) for a, _, h in arrows}
        self._arrow_triples = tuple((str(a), str(t), str(h)) for a, t, h in arrows)
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        self.aindex = {a: i for i, a in enumerate(self.arrows)}
        if validate_now:
            self.validate()

    def validate(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise DuplicateId("duplicate vertex id")
        if len(set(self.arrows)) != len(self.arrows):
            raise DuplicateId("duplicate arrow id")
        for a, t, h in self._arrow_triples:
            for end in (t, h):
                if end not in self.vindex:
                    raise DanglingArrow(f"arrow {a!r} ends at undeclared vertex {end!r}")

    def arrow_triples(self):
        return self._arrow_triples

    def key(self):
        return (self.vertices, self._arrow_triples)

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        arrows = ", ".join(f"{a}:{t}->{h}" for a, t, h in self._arrow_triples)
        return f"Quiver(vertices={list(self.vertices)}, arrows=[{arrows}])"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "arrows": [{"name": a, "tail": t, "head": h} for a, t, h in self._arrow_triples]}

    @classmethod
    def from_json(cls, obj: dict):
        arrows = [(a["name"], a["tail"], a["head"]) for a in obj["arrows"]]
        if "star" in obj:
            return DoubledQuiver._from_parts(obj["vertices"], arrows, obj["star"])
        return cls(obj["vertices"], arrows)


class DoubledQuiver(Quiver):
    """The double of a quiver: arrows A ⊔ A* with the involution a <-> a*."""

    def __init__(self, base: Quiver, star_names: dict | None = None):
        star_names = {str(k): str(v) for k, v in (star_names or {}).items()}
        dual = {a: star_names.get(a, a + "*") for a in base.arrows}
        arrows = list(base.arrow_triples())
        arrows += [(dual[a], h, t) for a, t, h in base.arrow_triples()]
        super().__init__(base.vertices, arrows)
        self.base = base
        self.star = dict(dual)
        self.star.update({v: k for k, v in dual.items()})
        self.base_arrows = frozenset(base.arrows)
        self.dual_arrows = frozenset(dual.values())

    @classmethod
    def _from_parts(cls, vertices, arrows, star):
        dual_names = set(star.values())
        base = Quiver(vertices, [a for a in arrows if a[0] not in dual_names])
        qd = cls(base, star)
        if qd != Quiver(vertices, arrows):
            raise IncompatibleData("star pairing does not reverse the listed arrows")
        return qd

    def to_json(self) -> dict:
        obj = super().to_json()
        obj["star"] = {a: self.star[a] for a in self.base.arrows}
        return obj


def double(q: Quiver, star_names: dict | None = None) -> DoubledQuiver:
    return DoubledQuiver(q, star_names)


def check_vertex_data(q: Quiver, data: dict, what: str = "dimension vector") -> dict:
    data = {str(k): v for k, v in data.items()}
    if set(data) != set(q.vertices):
        raise IncompatibleData(f"{what} must be indexed exactly by the vertices {list(q.vertices)}")
    return {v: data[v] for v in q.vertices}


def slope(theta: dict, e: dict) -> Fraction:
    total = sum(e.values())
    if total == 0:
        raise ZeroDimension("slope of the zero dimension vector")
    return Fraction(sum(theta[v] * e[v] for v in e), total)


def theta_prime(theta: dict, d: dict) -> dict:
    """Balanced weights θ'_v = θ_v Σd − Σθd; they satisfy Σ θ'_v d_v = 0."""
    total_d = sum(d.values())
    total = sum(theta[v] * d[v] for v in d)
    return {v: theta[v] * total_d - total for v in d}


def chi_theta(field, theta: dict, d: dict, g, normalize: bool = True):
    """χ_θ(g) = Π det(g_v)^(−θ'_v); ``g`` maps vertices to matrices (or is vertex ordered).

    With ``normalize=False`` the exponents are −θ_v, the form that is natural for
    already balanced parameters.
    """
    weights = theta_prime(theta, d) if normalize else dict(theta)
    blocks = g if isinstance(g, dict) else dict(zip(d, g))
    value = field.one
    for v, w in weights.items():
        if w == 0 or d[v] == 0:
            continue
        det = linalg.det(field, blocks[v])
        value = field.reduce(value * (det ** (-w) if w < 0 else field.inv(det) ** w))
    return value


def orbit_partition(items, maps):
    """Orbits of a set under a list of permutations given as dicts."""
    seen, orbits = set(), []
    for x in items:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for m in maps:
                z = m[y]
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        seen |= orbit
        orbits.append(orbit)
    return orbits


def quotient_quiver(q: Quiver, group):
    """Q/S for a group of covariant automorphisms.

    Returns (quotient quiver, vertex projection, arrow projection); orbit ids are the
    least member id.
    """
    if any(not s.covariant for s in group):
        raise ContravariantElement("quotient quivers need covariant automorphisms")
    vorbits = orbit_partition(q.vertices, [s.vertex_map for s in group])
    aorbits = orbit_partition(q.arrows, [s.arrow_map for s in group])
    vproj = {v: min(orb) for orb in vorbits for v in orb}
    aproj = {a: min(orb) for orb in aorbits for a in orb}
    vertices = [v for v in q.vertices if vproj[v] == v]
    arrows = [(a, vproj[q.tail[a]], vproj[q.head[a]]) for a in q.arrows if aproj[a] == a]
    return Quiver(vertices, arrows), vproj, aproj


def orbit_sizes(vproj: dict) -> dict:
    sizes = {}
    for v, o in vproj.items():
        sizes[o] = sizes.get(o, 0) + 1
    return sizes


def induced_dim_stab(q: Quiver, group, d: dict, theta: dict):
    """(d̃, θ̃) on Q/S with d̃_{S·v} = d_v and θ̃_{S·v} = |S·v| θ_v."""
    from .automorphisms import is_compatible
    dims_ok, theta_ok = is_compatible(group, d, theta)
    if not (dims_ok and theta_ok):
        raise IncompatibleData("dimension vector and weights must be invariant under the group")
    _, vproj, _ = quotient_quiver(q, group)
    sizes = orbit_sizes(vproj)
    d_tilde = {o: d[o] for o in sizes}
    theta_tilde = {o: sizes[o] * theta[o] for o in sizes}
    return d_tilde, theta_tilde


# named quivers used throughout the tests, walkthroughs and fixtures

def a2_quiver() -> Quiver:
    return Quiver(["1", "2"], [("a", "1", "2")])


def k2_quiver() -> Quiver:
    return Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])


def c2_quiver() -> Quiver:
    return Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])


def jordan_quiver() -> Quiver:
    return Quiver(["1"], [("x", "1", "1")])


def framed_jordan_quiver() -> Quiver:
    return Quiver(["0", "inf"], [("x", "0", "0"), ("i", "inf", "0")])


def framed_jordan_double() -> DoubledQuiver:
    return double(framed_jordan_quiver(), {"x": "y", "i": "j"})


def star_quiver(n: int) -> Quiver:
    """Q_n: central vertex 0 and arrows a_k from outer vertex k into 0."""
    return Quiver([str(k) for k in range(n + 1)],
                  [(f"a{k}", str(k), "0") for k in range(1, n + 1)])


def star_dims(n: int) -> dict:
    return {"0": 2, **{str(k): 1 for k in range(1, n + 1)}}


def star_theta(weights) -> dict:
    """θ_r = (−Σr, 2r_1, …, 2r_n)."""
    return {"0": -sum(weights), **{str(k + 1): 2 * r for k, r in enumerate(weights)}}


def star_weights(theta: dict) -> list:
    n = len(theta) - 1
    return [Fraction(theta[str(k)], 2) for k in range(1, n + 1)]


def three_vertex_quiver() -> Quiver:
    """1 -a-> 2 -b-> 3 -c-> 2: its double carries a non-star automorphism."""
    return Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "2")])
