"""Modifying families, Δ-valued cocycles, twisted 1-cocycles and the type map.

All cohomology is computed by enumerating cochains.  Group elements are referred
to by their index in an :class:`~quivfix.automorphisms.AutGroup`; a group element
σ acts on scalars t ∈ Δ ≅ k^× trivially when covariant and by t ↦ t⁻¹ when
contravariant.
"""
from __future__ import annotations

import itertools
import math
import random

from .errors import (CocycleMismatch, InfiniteField, NotFixed, NotInDelta,
                     NotRegularlyStable, RelationFailure, TooLarge)
from .fields import power_class_quotient
from .reps import RepSpace, TwistedAction, family_defect

MAX_FAMILIES = 10 ** 7
MAX_COCHAINS = 2 * 10 ** 5


def act_on_scalar(field, group, i: int, t):
    return t if group[i].covariant else field.inv(t)


class Cocycle2:
    """Normalised Δ-valued 2-cochain stored as a table of scalars."""

    def __init__(self, group, field, table):
        self.group = group
        self.field = field
        self.table = tuple(tuple(field.reduce(x) for x in row) for row in table)

    def __call__(self, i: int, j: int):
        return self.table[i][j]

    def __eq__(self, other):
        return isinstance(other, Cocycle2) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __mul__(self, other):
        f = self.field
        return Cocycle2(self.group, f, [[f.reduce(a * b) for a, b in zip(r, s)]
                                        for r, s in zip(self.table, other.table)])

    def inverse(self):
        return Cocycle2(self.group, self.field, [[self.field.inv(a) for a in r] for r in self.table])

    def is_normalized(self) -> bool:
        e, one = self.group.identity, self.field.one
        return all(self.table[e][k] == one and self.table[k][e] == one for k in range(len(self.group)))

    def identity_failures(self) -> list:
        """Triples violating c(σ1,σ2)c(σ1σ2,σ3) = σ1(c(σ2,σ3)) c(σ1,σ2σ3)."""
        G, f, c = self.group, self.field, self.table
        n = len(G)
        bad = []
        for i, j, k in itertools.product(range(n), repeat=3):
            lhs = f.reduce(c[i][j] * c[G.mul(i, j)][k])
            rhs = f.reduce(act_on_scalar(f, G, i, c[j][k]) * c[i][G.mul(j, k)])
            if lhs != rhs:
                bad.append((i, j, k))
        return bad

    def is_cocycle(self) -> bool:
        return self.is_normalized() and not self.identity_failures()

    def to_json(self) -> dict:
        return {str(i): {str(j): self.field.format(x) for j, x in enumerate(row)}
                for i, row in enumerate(self.table)}


def coboundary2(group, field, a) -> Cocycle2:
    """(δa)(σ,τ) = a_σ σ(a_τ) a_{στ}^{-1}."""
    n = len(group)
    return Cocycle2(group, field, [[field.reduce(a[i] * act_on_scalar(field, group, i, a[j])
                                                 * field.inv(a[group.mul(i, j)]))
                                    for j in range(n)] for i in range(n)])


def cocycle2_of(space: RepSpace, group, u) -> Cocycle2:
    n = len(group)
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            t = space.delta_value(family_defect(space, group, u, i, j))
            if t is None:
                raise NotInDelta(f"c_u({i},{j}) is not a scalar in Δ")
            row.append(t)
        table.append(row)
    return Cocycle2(group, space.field, table)


def is_modifying_family(space: RepSpace, group, u) -> bool:
    if len(u) != len(group) or u[group.identity] != space.identity():
        return False
    try:
        c = cocycle2_of(space, group, u)
    except NotInDelta:
        return False
    return c.is_cocycle()


def enumerate_modifying_families(space: RepSpace, group, limit: int = MAX_FAMILIES) -> list:
    """Every valid family, in lexicographic order of (u_σ) over non-identity σ."""
    n = len(group)
    order = space.gauge_order()
    if order ** (n - 1) > limit:
        raise TooLarge(f"|G|^(|S|-1) = {order}^{n - 1} exceeds {limit}")
    elements = space.gauge_elements()
    slots = [i for i in range(n) if i != group.identity]
    u = [None] * n
    u[group.identity] = space.identity()
    found = []

    def consistent(assigned):
        for i in assigned:
            for j in assigned:
                k = group.mul(i, j)
                if k in assigned and space.delta_value(family_defect(space, group, u, i, j)) is None:
                    return False
        return True

    def extend(pos, assigned):
        if pos == len(slots):
            fam = tuple(u)
            if cocycle2_of(space, group, fam).is_cocycle():
                found.append(fam)
            return
        for g in elements:
            u[slots[pos]] = g
            assigned.add(slots[pos])
            if consistent(assigned):
                extend(pos + 1, assigned)
            assigned.discard(slots[pos])
        u[slots[pos]] = None

    extend(0, {group.identity})
    return found


class ClassSet:
    """Class representatives plus an equivalence oracle."""

    def __init__(self, representatives, equivalent, labels=None, closed: bool = False,
                 cocycle_count: int | None = None, note: str = ""):
        self.representatives = list(representatives)
        self.equivalent = equivalent
        self.labels = labels or [str(k) for k in range(len(self.representatives))]
        self.closed = closed
        self.cocycle_count = cocycle_count
        self.note = note

    def __len__(self):
        return len(self.labels)

    def classify(self, x) -> int:
        for k, r in enumerate(self.representatives):
            if self.equivalent(x, r):
                return k
        raise KeyError("element not cohomologous to any representative")


# ----- H^1(S, Δ) ------------------------------------------------------------------

def _units(field, units):
    if not field.is_finite:
        raise InfiniteField("cohomology is enumerated over finite fields only")
    return list(units) if units is not None else field.units()


def _abelianization_order(group) -> int:
    n = len(group)
    comm = {group.identity}
    for i in range(n):
        for j in range(n):
            comm.add(group.mul(group.mul(i, j), group.mul(group.inverse[i], group.inverse[j])))
    sub = set(comm)
    frontier = list(sub)
    while frontier:
        x = frontier.pop()
        for y in list(sub):
            z = group.mul(x, y)
            if z not in sub:
                sub.add(z)
                frontier.append(z)
    return n // len(sub)


def h1_delta(group, field, units=None, closed: bool = False) -> ClassSet:
    """H¹(S, Δ) with the sign action.  ``units`` restricts Δ (e.g. [1] when Δ is trivial)."""
    if closed:
        if group.is_covariant:
            m = _abelianization_order(group)
            return ClassSet([None] * m, lambda a, b: a == b, [f"character {k}" for k in range(m)],
                            closed=True, note="Hom(S, k̄^×): one class per character of S^ab")
        if len(group) == 2:
            return ClassSet([None], lambda a, b: True, ["1"], closed=True,
                            note="k̄^× / (k̄^×)^2 is trivial")
        raise TooLarge("closed-field H^1 is only tabulated for covariant or order-2 groups")
    units = _units(field, units)
    n = len(group)
    if len(units) ** (n - 1) > MAX_COCHAINS:
        raise TooLarge("too many 1-cochains")
    slots = [i for i in range(n) if i != group.identity]
    cocycles = []
    for values in itertools.product(units, repeat=len(slots)):
        a = [field.one] * n
        for i, v in zip(slots, values):
            a[i] = v
        if all(a[group.mul(i, j)] == field.reduce(a[i] * act_on_scalar(field, group, i, a[j]))
               for i in range(n) for j in range(n)):
            cocycles.append(tuple(a))

    def shift(a, t):
        return tuple(field.reduce(a[i] * act_on_scalar(field, group, i, t) * field.inv(t))
                     for i in range(n))

    def equivalent(a, b):
        return any(shift(a, t) == tuple(b) for t in units)

    reps, seen = [], set()
    for a in cocycles:
        if a in seen:
            continue
        reps.append(a)
        seen |= {shift(a, t) for t in units}
    labels = ["(" + ", ".join(field.format(x) for x in a) + ")" for a in reps]
    return ClassSet(reps, equivalent, labels, cocycle_count=len(cocycles))


# ----- H^2(S, Δ) ------------------------------------------------------------------

def _cyclic_invariant(group, field, c: Cocycle2, gen: int):
    """Π_i c(σ, σ^i) modulo n-th powers for cyclic S with trivial action."""
    n = len(group)
    value, power = field.one, group.identity
    for _ in range(n):
        value = field.reduce(value * c(gen, power))
        power = group.mul(gen, power)
    powers = {pow(x, n, field.p) for x in field.units()}
    return min(field.reduce(value * y) for y in powers)


def cohomologous2(group, field, c1: Cocycle2, c2: Cocycle2, units=None) -> bool:
    """Exhaustive search for a with c2 = c1·δa."""
    units = _units(field, units)
    n = len(group)
    gen = group.cyclic_generator()
    if gen is not None and group.is_covariant and units == field.units():
        return _cyclic_invariant(group, field, c1, gen) == _cyclic_invariant(group, field, c2, gen)
    if len(units) ** (n - 1) > MAX_COCHAINS:
        raise TooLarge("coboundary search too large")
    target = c2 * c1.inverse()
    slots = [i for i in range(n) if i != group.identity]
    for values in itertools.product(units, repeat=len(slots)):
        a = [field.one] * n
        for i, v in zip(slots, values):
            a[i] = v
        if coboundary2(group, field, a) == target:
            return True
    return False


def standard_cyclic_cocycle(group, field, gen: int, a) -> Cocycle2:
    """c(σ^i, σ^j) = a if i + j >= n else 1 (exponents with respect to ``gen``)."""
    n = len(group)
    exponent, power = {}, group.identity
    for k in range(n):
        exponent[power] = k
        power = group.mul(gen, power)
    return Cocycle2(group, field, [[a if exponent[i] + exponent[j] >= n else field.one
                                    for j in range(n)] for i in range(n)])


def h2_delta(group, field, units=None, closed: bool = False) -> ClassSet:
    """H²(S, Δ) with the sign action."""
    n = len(group)
    gen = group.cyclic_generator()
    if closed:
        if gen is not None and group.is_covariant:
            return ClassSet([None], lambda a, b: True, ["1"], closed=True,
                            note="cyclic S, divisible coefficients: H^2 = 1")
        if n == 2 and not group.is_covariant:
            return ClassSet([1, -1], lambda a, b: a == b, ["1", "-1"], closed=True,
                            note="Z/2 acting by inversion: H^2 = {±1}")
        raise TooLarge("closed-field H^2 is only tabulated for cyclic covariant or Z/2 inverting groups")
    units = _units(field, units)

    def equivalent(c1, c2):
        return cohomologous2(group, field, c1, c2, units)

    if gen is not None and group.is_covariant and units == field.units():
        reps = [standard_cyclic_cocycle(group, field, gen, s.value)
                for s in power_class_quotient(field, n)]
        labels = [field.format(s.value) for s in power_class_quotient(field, n)]
        return ClassSet(reps, equivalent, labels,
                        note="cyclic S: classes k^x/(k^x)^n via Π c(σ,σ^i)")
    m = (n - 1) ** 2
    if len(units) ** m > MAX_COCHAINS:
        raise TooLarge(f"{len(units)}^{m} normalized 2-cochains")
    nonid = [i for i in range(n) if i != group.identity]
    pairs = [(i, j) for i in nonid for j in nonid]
    cocycles = []
    for values in itertools.product(units, repeat=m):
        table = [[field.one] * n for _ in range(n)]
        for (i, j), v in zip(pairs, values):
            table[i][j] = v
        c = Cocycle2(group, field, table)
        if not c.identity_failures():
            cocycles.append(c)
    boundaries = set()
    for values in itertools.product(units, repeat=n - 1):
        a = [field.one] * n
        for i, v in zip(nonid, values):
            a[i] = v
        boundaries.add(coboundary2(group, field, a))
    reps, seen = [], set()
    for c in cocycles:
        if c in seen:
            continue
        reps.append(c)
        seen |= {c * b for b in boundaries}
    return ClassSet(reps, lambda c1, c2: (c2 * c1.inverse()) in boundaries,
                    [f"class {k}" for k in range(len(reps))], cocycle_count=len(cocycles))


def closed_field_class(group, field, c: Cocycle2):
    """Label of the image of [c] in H²(S, k̄^×), where tabulated."""
    if group.cyclic_generator() is not None and group.is_covariant:
        return "1"
    if len(group) == 2 and not group.is_covariant:
        s = next(i for i in range(2) if i != group.identity)
        return "1" if c(s, s) == field.one else "-1"
    return None


# ----- twisted H^1(S, G) --------------------------------------------------------------

def _generators(group):
    gens, reached = [], {group.identity}
    for i in range(len(group)):
        if i in reached:
            continue
        gens.append(i)
        frontier = list(reached)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = group.mul(g, x)
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
    return gens


def twisted_cocycles(action: TwistedAction, limit: int = MAX_FAMILIES) -> list:
    """All normalised b : S → G with b(στ) = b(σ) Ψᵘ_σ(b(τ))."""
    sp, G = action.space, action.group
    gens = _generators(G)
    order = sp.gauge_order()
    if order ** len(gens) > limit:
        raise TooLarge(f"|G|^{len(gens)} candidate cocycles")
    elements = sp.gauge_elements()
    ident = sp.identity()
    n = len(G)
    found = []
    for values in itertools.product(elements, repeat=len(gens)):
        b = [None] * n
        b[G.identity] = ident
        ok = True
        frontier = [G.identity]
        while frontier and ok:
            x = frontier.pop()
            for g, bg in zip(gens, values):
                y = G.mul(g, x)
                val = sp.gauge_mul(bg, action.psi(g, b[x]))
                if b[y] is None:
                    b[y] = val
                    frontier.append(y)
                elif b[y] != val:
                    ok = False
                    break
        if not ok or any(b[g] != v for g, v in zip(gens, values)):
            continue
        if all(b[G.mul(i, j)] == sp.gauge_mul(b[i], action.psi(i, b[j]))
               for i in range(n) for j in range(n)):
            found.append(tuple(b))
    return sorted(set(found))


def coboundary_translate(action: TwistedAction, g, b):
    """g·b : σ ↦ g b(σ) Ψᵘ_σ(g)^{-1}."""
    sp = action.space
    return tuple(sp.gauge_mul(sp.gauge_mul(g, bs), sp.gauge_inv(action.psi(i, g)))
                 for i, bs in enumerate(b))


class TwistedH1:
    """H¹_u(S, G) with the orbit of every cocycle under twisted coboundaries."""

    def __init__(self, action: TwistedAction, limit: int = MAX_FAMILIES):
        self.action = action
        self.cocycles = twisted_cocycles(action, limit)
        self.class_of = {}
        self.representatives = []
        gens = action.space.gauge_generators()
        for b in self.cocycles:
            if b in self.class_of:
                continue
            k = len(self.representatives)
            self.representatives.append(b)
            self.class_of[b] = k
            frontier = [b]
            while frontier:
                x = frontier.pop()
                for g in gens:
                    y = coboundary_translate(action, g, x)
                    if y not in self.class_of:
                        self.class_of[y] = k
                        frontier.append(y)

    def __len__(self):
        return len(self.representatives)

    def classify(self, b) -> int:
        return self.class_of[tuple(b)]

    def equivalent(self, b1, b2) -> bool:
        return self.class_of[tuple(b1)] == self.class_of[tuple(b2)]

    def trivial_class(self) -> int:
        ident = self.action.space.identity()
        return self.class_of[tuple(ident for _ in range(len(self.action.group)))]

    def delta_cocycle(self, a):
        """The G-valued cocycle σ ↦ a(σ)·Id for a Δ-valued cocycle a."""
        return tuple(self.action.space.delta(t) for t in a)

    def delta_orbits(self, h1d: ClassSet) -> list:
        """Orbits of H¹(S,Δ) acting by (a·b)(σ) = a(σ)b(σ); each is a sorted list of classes."""
        sp = self.action.space
        parent = list(range(len(self)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k, b in enumerate(self.representatives):
            for a in h1d.representatives:
                moved = tuple(sp.gauge_mul(sp.delta(t), bs) for t, bs in zip(a, b))
                r1, r2 = find(k), find(self.class_of[moved])
                if r1 != r2:
                    parent[max(r1, r2)] = min(r1, r2)
        groups = {}
        for k in range(len(self)):
            groups.setdefault(find(k), []).append(k)
        return [groups[r] for r in sorted(groups)]

    def to_json(self, formatter) -> dict:
        return {"classes": len(self), "cocycles": len(self.cocycles),
                "representatives": [formatter(b) for b in self.representatives]}


def h1_twisted_G(action: TwistedAction, limit: int = MAX_FAMILIES) -> TwistedH1:
    return TwistedH1(action, limit)


def delta_h1(action: TwistedAction, closed: bool = False) -> ClassSet:
    sp = action.space
    return h1_delta(action.group, sp.field, sp.delta_scalars(), closed=closed)


def kernel_to_G(action: TwistedAction, h1g: TwistedH1 | None = None,
                h1d: ClassSet | None = None) -> list:
    """Representatives a of H¹(S,Δ) whose image in H¹_u(S,G) is trivial."""
    h1g = h1g or TwistedH1(action)
    h1d = h1d or delta_h1(action)
    trivial = h1g.trivial_class()
    return [a for a in h1d.representatives if h1g.classify(h1g.delta_cocycle(a)) == trivial]


# ----- families, twists and the type map -----------------------------------------------

def twist_by_cocycle(space: RepSpace, u, b):
    """u^b_σ = b(σ) u_σ."""
    return tuple(space.gauge_mul(bs, us) for bs, us in zip(b, u))


def cocycle_between(space: RepSpace, group, u, u2):
    """b(σ) = u'_σ u_σ^{-1}; requires c_u = c_{u'}."""
    if cocycle2_of(space, group, u) != cocycle2_of(space, group, u2):
        raise CocycleMismatch("families have different 2-cocycles")
    b = tuple(space.gauge_mul(v, space.gauge_inv(w)) for v, w in zip(u2, u))
    action = TwistedAction(space, group, u)
    n = len(group)
    for i in range(n):
        for j in range(n):
            if b[group.mul(i, j)] != space.gauge_mul(b[i], action.psi(i, b[j])):
                raise CocycleMismatch("difference is not a twisted 1-cocycle")
    return b


def scale_family(space: RepSpace, a, u):
    return tuple(space.gauge_mul(space.delta(t), us) for t, us in zip(a, u))


def normalize_family(space: RepSpace, group, u, target: Cocycle2):
    """Rescale u by a : S → Δ so that c_{a·u} equals ``target``; None if impossible."""
    f = space.field
    n = len(group)
    current = cocycle2_of(space, group, u)
    nonid = [i for i in range(n) if i != group.identity]
    units = space.delta_scalars()
    if len(units) ** len(nonid) > MAX_COCHAINS:
        raise TooLarge("normalisation search too large")
    for values in itertools.product(units, repeat=len(nonid)):
        a = [f.one] * n
        for i, v in zip(nonid, values):
            a[i] = v
        if current * coboundary2(group, f, a) == target:
            return scale_family(space, a, u)
    return None


class TypeWitness:
    def __init__(self, rep, family, cocycle):
        self.rep = rep
        self.family = family
        self.cocycle = cocycle


def _find_witness(space, s, m, elements):
    target = space.phi(s, m)
    for g in elements:
        if space.act(g, target) == m:
            return g
    return None


def type_cocycle(space: RepSpace, group, m, elements=None, order_rng=None) -> TypeWitness:
    """Pick u_σ with u_σ·Φ_σ(M) = M (first hit in ``elements`` order) and return c_m."""
    elements = list(space.gauge_elements() if elements is None else elements)
    if order_rng is not None:
        order_rng.shuffle(elements)
    family = []
    for i, s in enumerate(group):
        if i == group.identity:
            family.append(space.identity())
            continue
        g = _find_witness(space, s, m, elements)
        if g is None:
            raise NotFixed(f"orbit is not fixed by group element {i}")
        family.append(g)
    family = tuple(family)
    try:
        c = cocycle2_of(space, group, family)
    except NotInDelta:
        raise NotRegularlyStable("the lifting defect leaves Δ: stabiliser is larger than Δ") from None
    return TypeWitness(m, family, c)


def type_map(space: RepSpace, group, m, h2: ClassSet | None = None, elements=None,
             checks: int = 2, seed: int = 0):
    """Class of c_m in H²(S,Δ); re-derived with random representatives and search orders."""
    h2 = h2 or h2_delta(group, space.field, space.delta_scalars())
    elements = list(space.gauge_elements() if elements is None else elements)
    base = type_cocycle(space, group, m, elements)
    k = h2.classify(base.cocycle)
    rng = random.Random(seed)
    for _ in range(checks):
        g = rng.choice(elements)
        other = type_cocycle(space, group, space.act(g, m), elements, order_rng=rng)
        if h2.classify(other.cocycle) != k:
            raise RelationFailure("type map depends on choices")
    return k, base


class EquivariantRep:
    """A fixed point M of Φᵘ with γ_σ = u_σ and the (S, c_u) relation verified."""

    def __init__(self, action: TwistedAction, m):
        sp, G = action.space, action.group
        self.action = action
        self.rep = m
        self.gamma = action.family
        self.cocycle = cocycle2_of(sp, G, self.gamma)
        n = len(G)
        for i in range(n):
            if sp.act(self.gamma[i], sp.phi(G[i], m)) != m:
                raise RelationFailure(f"γ_{i} is not an isomorphism σ(W) → W")
            for j in range(n):
                lhs = sp.gauge_mul(self.gamma[i], sp.psi(G[i], self.gamma[j]))
                rhs = sp.gauge_mul(sp.delta(self.cocycle(i, j)), self.gamma[G.mul(i, j)])
                if lhs != rhs:
                    raise RelationFailure(f"twisted relation fails at ({i},{j})")


def equivariant_structure(action: TwistedAction, m) -> EquivariantRep:
    return EquivariantRep(action, m)


def h1_delta_size_formula(n: int, p: int) -> int:
    return math.gcd(n, p - 1)
