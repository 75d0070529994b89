"""Stable orbits over finite fields, fixed moduli, twisted images and the decomposition report."""
from __future__ import annotations

from . import cohomology as coh
from .errors import ContravariantElement, NoModifyingFamilyForClass, TooLarge
from .quiver import chi_theta, induced_dim_stab, theta_prime
from .reps import AlphaBeta, FixedGauge, FixedLocus, RepSpace, TwistedAction, endo_dim
from .stability import StabilityReport, equivariant_semistable


def orbit_of(space: RepSpace, m, gens=None) -> set:
    gens = space.gauge_generators() if gens is None else gens
    orbit = {m}
    frontier = [m]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = space.act(g, x)
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def canonical_form(space: RepSpace, m) -> tuple:
    """Lexicographically least member of the gauge orbit."""
    return min(orbit_of(space, m))


class ModuliPoint:
    """A gauge orbit: canonical representative plus stability annotations."""

    __slots__ = ("rep", "orbit_size", "stabilizer_order", "semistable", "stable", "endo_dim",
                 "delta_order")

    def __init__(self, rep, orbit_size, stabilizer_order, semistable, stable, endo, delta_order):
        self.rep = rep
        self.orbit_size = orbit_size
        self.stabilizer_order = stabilizer_order
        self.semistable = semistable
        self.stable = stable
        self.endo_dim = endo
        self.delta_order = delta_order

    @property
    def regularly_stable(self) -> bool:
        """Stable, End = k, stabiliser equal to Δ(F_p)."""
        return self.stable and self.endo_dim == 1 and self.stabilizer_order == self.delta_order

    def __repr__(self):
        return (f"ModuliPoint(rep={self.rep}, orbit={self.orbit_size}, "
                f"stab={self.stabilizer_order}, stable={self.stable})")


class ModuliProblem:
    """Slope stability on Rep(Q, d) over F_p with a (possibly restricted) gauge group.

    Subclasses override :meth:`stability` and :meth:`candidate_points` for other
    stability notions (the framed Hilbert-scheme problem does).
    """

    slope_based = True

    def __init__(self, space: RepSpace, theta: dict | None = None, max_points: int = 10 ** 7):
        self.space = space
        self.theta = {v: (theta or {}).get(v, 0) for v in space.quiver.vertices}
        self.max_points = max_points
        self._gens = space.gauge_generators()
        self._index = None
        self._orbits = None

    def stability(self, m):
        """(semistable, stable) for a single representation."""
        rep = StabilityReport(self.space, m, self.theta)
        return rep.semistable, rep.stable

    def candidate_points(self):
        return self.space.points(self.max_points)

    def orbit(self, m) -> set:
        return orbit_of(self.space, m, self._gens)

    def canonical(self, m):
        if self._index is not None and m in self._index:
            return self._orbits[self._index[m]].rep
        return min(self.orbit(m))

    def _build(self):
        index, orbits = {}, []
        group_order = self.space.gauge_order()
        delta_order = self.space.delta_order()
        for m in self.candidate_points():
            if m in index:
                continue
            orbit = self.orbit(m)
            rep = min(orbit)
            ss, st = self.stability(rep)
            k = len(orbits)
            for x in orbit:
                index[x] = k
            orbits.append(ModuliPoint(rep, len(orbit), group_order // len(orbit), ss, st,
                                      endo_dim(self.space, rep), delta_order))
        self._index, self._orbits = index, orbits

    def all_orbits(self) -> list:
        if self._orbits is None:
            self._build()
        return self._orbits

    def stable_orbits(self) -> list:
        return [o for o in self.all_orbits() if o.stable]

    def semistable_orbits(self) -> list:
        return [o for o in self.all_orbits() if o.semistable]

    def lookup(self, m) -> ModuliPoint | None:
        self.all_orbits()
        k = self._index.get(m)
        return None if k is None else self._orbits[k]


def stable_orbits(space: RepSpace, theta: dict, max_points: int = 10 ** 7) -> list:
    return ModuliProblem(space, theta, max_points).stable_orbits()


def induced_permutation(problem: ModuliProblem, group, i: int) -> dict:
    """Canonical rep -> canonical rep of Φ_σ on stable orbits."""
    sp, s = problem.space, group[i]
    return {o.rep: problem.lookup(sp.phi(s, o.rep)).rep for o in problem.stable_orbits()}


def sigma_fixed_moduli(problem: ModuliProblem, group) -> list:
    """Stable orbits O with Φ_σ(O) = O for every σ."""
    sp = problem.space
    out = []
    for o in problem.stable_orbits():
        if all(problem.lookup(sp.phi(s, o.rep)) is o for s in group):
            out.append(o)
    return out


class FImage:
    """Result of enumerating the twisted map from fixed data to fixed moduli."""

    def __init__(self, action, classes, image, fibers, semistable_match):
        self.action = action
        self.classes = classes            # canonical reps of _uG^S orbits on stable fixed points
        self.image = image                # class rep -> canonical rep of its G-orbit
        self.fibers = fibers              # G-orbit rep -> number of classes above it
        self.semistable_match = semistable_match

    @property
    def image_set(self) -> set:
        return set(self.fibers)

    @property
    def injective(self) -> bool:
        return all(n == 1 for n in self.fibers.values())


def f_image(problem: ModuliProblem, action: TwistedAction, check_semistable: bool = True) -> FImage:
    sp = problem.space
    locus = FixedLocus(action)
    fixed_gauge = FixedGauge(action).elements
    seen, classes, image, fibers = set(), [], {}, {}
    match = True
    for m in locus.points(problem.max_points):
        if check_semistable and problem.slope_based and action.group.is_covariant:
            eq = coh.EquivariantRep(action, m)
            plain = problem.lookup(m)
            ss = plain.semistable if plain is not None else problem.stability(m)[0]
            if ss != equivariant_semistable(eq, problem.theta):
                match = False
        if m in seen:
            continue
        point = problem.lookup(m)
        if point is None or not point.stable:
            continue
        cls = {sp.act(g, m) for g in fixed_gauge}
        seen |= cls
        rep = min(cls)
        classes.append(rep)
        image[rep] = point.rep
        fibers[point.rep] = fibers.get(point.rep, 0) + 1
    return FImage(action, classes, image, fibers, match)


class Component:
    def __init__(self, family, twist, f, kernel_size):
        self.family = family              # the twisted family u^b
        self.twist = twist                # the 1-cocycle b
        self.f = f
        self.kernel_size = kernel_size

    @property
    def image(self) -> set:
        return self.f.image_set

    @property
    def fiber_law(self) -> bool:
        return all(n == self.kernel_size for n in self.f.fibers.values())


class DecompositionReport:
    """Fixed stable locus split by type class and twist class, with certificates."""

    def __init__(self, problem, group, mode):
        self.problem = problem
        self.group = group
        self.mode = mode
        self.fixed = []
        self.irregular = []
        self.types = {}                   # canonical rep -> H^2 class index
        self.h2 = None
        self.classes = {}                 # H^2 class index -> list[Component]
        self.base_family = {}
        self.uncovered = []
        self.disjoint = True
        self.caveat = ""

    @property
    def components(self) -> list:
        return [c for k in sorted(self.classes) for c in self.classes[k]]

    @property
    def nonempty_components(self) -> list:
        return [c for c in self.components if c.image]

    @property
    def fiber_law(self) -> bool:
        return all(c.fiber_law for c in self.components)

    def to_json(self) -> dict:
        from .io import rep_to_json, gauge_to_json
        sp = self.problem.space
        return {
            "mode": self.mode,
            "h2_classes": list(self.h2.labels) if self.h2 else [],
            "fixed_points": [rep_to_json(sp, o.rep) for o in self.fixed],
            "irregular_fixed_points": [rep_to_json(sp, o.rep) for o in self.irregular],
            "types": {str(i): self.h2.labels[k] for i, (_, k) in enumerate(sorted(self.types.items()))},
            "classes": {self.h2.labels[k]: [{
                "family": [gauge_to_json(sp, g) for g in c.family],
                "image": [rep_to_json(sp, r) for r in sorted(c.image)],
                "fiber_sizes": sorted(c.f.fibers.values()),
                "kernel_size": c.kernel_size,
            } for c in comps] for k, comps in sorted(self.classes.items())},
            "component_count": len(self.components),
            "uncovered": [rep_to_json(sp, r) for r in self.uncovered],
            "disjoint": self.disjoint,
            "fiber_law": self.fiber_law,
            "caveat": self.caveat,
        }


def _family_for_class(problem, group, h2, k):
    sp = problem.space
    for u in coh.enumerate_modifying_families(sp, group):
        c = coh.cocycle2_of(sp, group, u)
        if h2.classify(c) == k:
            target = h2.representatives[k]
            normal = coh.normalize_family(sp, group, u, target) if target is not None else None
            return normal or u
    raise NoModifyingFamilyForClass(f"no modifying family has type class {h2.labels[k]}")


def decompose_fixed_locus(problem: ModuliProblem, group, type_classes: str = "closed",
                          seed: int = 0) -> DecompositionReport:
    """Decompose the fixed regularly stable locus.

    ``type_classes="closed"`` picks one F_p type class per class of the algebraic
    closure (the trivial F_p class when present); ``"field"`` uses every F_p class.
    """
    sp = problem.space
    report = DecompositionReport(problem, group, type_classes)
    h2 = coh.h2_delta(group, sp.field, sp.delta_scalars())
    report.h2 = h2
    fixed = sigma_fixed_moduli(problem, group)
    report.fixed = [o for o in fixed if o.regularly_stable]
    report.irregular = [o for o in fixed if not o.regularly_stable]
    elements = sp.gauge_elements()
    for o in report.fixed:
        k, _ = coh.type_map(sp, group, o.rep, h2, elements, seed=seed)
        report.types[o.rep] = k
    image_classes = sorted(set(report.types.values()))
    trivial = h2.classify(coh.Cocycle2(group, sp.field,
                                       [[sp.field.one] * len(group) for _ in group]))
    if type_classes == "closed":
        by_closed = {}
        for k in image_classes:
            label = coh.closed_field_class(group, sp.field, h2.representatives[k])
            by_closed.setdefault(label, []).append(k)
        chosen = [trivial if trivial in ks else ks[0] for _, ks in sorted(by_closed.items(), key=str)]
    else:
        chosen = image_classes
    for k in sorted(chosen):
        u = (tuple(sp.identity() for _ in group) if k == trivial
             else _family_for_class(problem, group, h2, k))
        report.base_family[k] = u
        action = TwistedAction(sp, group, u)
        h1g = coh.TwistedH1(action)
        h1d = coh.delta_h1(action)
        comps = []
        for orbit in h1g.delta_orbits(h1d):
            b = h1g.representatives[orbit[0]]
            ub = coh.twist_by_cocycle(sp, u, b)
            twisted = TwistedAction(sp, group, ub)
            f = f_image(problem, twisted)
            kernel = coh.kernel_to_G(twisted)
            comps.append(Component(ub, b, f, len(kernel)))
        report.classes[k] = comps
    covered = set()
    for comps in report.classes.values():
        for c in comps:
            if covered & c.image:
                report.disjoint = False
            covered |= c.image
    report.uncovered = sorted(o.rep for o in report.fixed if o.rep not in covered)
    if report.uncovered:
        report.caveat = (f"rational-point gap over F_{sp.field.p}: these fixed points are covered "
                         "only over an extension field or by a type class excluded in this mode")
    return report


def injectivity_certificate(group, f: FImage | None = None) -> dict:
    """Every σ fixes a vertex ⇒ the untwisted map is injective; cross-check observed fibers."""
    q = group.quiver
    criterion = all(any(s.vertex_map[v] == v for v in q.vertices) for s in group)
    observed = None if f is None else f.injective
    return {"criterion": criterion, "observed_injective": observed,
            "consistent": observed is None or not criterion or observed}


class QuotientCheck:
    def __init__(self):
        self.bijective = True
        self.equivariant = True
        self.orbits_match = True
        self.flags_match = True
        self.chi_match = True
        self.chi_normalized_match = True
        self.orbit_counts = (0, 0)
        self.stable_counts = (0, 0)

    @property
    def ok(self) -> bool:
        return (self.bijective and self.equivariant and self.orbits_match and self.flags_match
                and self.chi_match)

    def to_json(self) -> dict:
        return {k: v for k, v in vars(self).items()} | {"ok": self.ok}


def verify_quotient_equivalence(space: RepSpace, group, theta: dict,
                                max_points: int = 10 ** 6) -> QuotientCheck:
    """Compare (Rep^S, G^S) with (Rep_{Q/S}, G_{Q/S}) through α and β.

    Stability flags are compared for the balanced weights θ′, for which slopes on
    both sides have the same sign; the χ identity is checked for θ′ with the
    exponents taken as given (and, separately, in the renormalised form).
    """
    if not group.is_covariant:
        raise ContravariantElement("quotient comparison needs a covariant group")
    res = QuotientCheck()
    ab = AlphaBeta(space, group)
    qs = ab.quotient_space
    tp = theta_prime(theta, space.dims)
    _, tp_tilde = induced_dim_stab(space.quiver, group, space.dims, tp)
    action = TwistedAction(space, group)
    locus = FixedLocus(action)
    fixed_points = set(locus.points(max_points))
    if qs.point_count() > max_points:
        raise TooLarge("quotient representation space too large")
    quotient_points = list(qs.points(max_points))
    images = [ab.beta(n) for n in quotient_points]
    res.bijective = len(set(images)) == len(images) and set(images) == fixed_points
    G_tilde = qs.gauge_elements()
    fixed_gauge = set(FixedGauge(action).elements)
    alphas = [ab.alpha(g) for g in G_tilde]
    res.bijective &= len(set(alphas)) == len(alphas) and set(alphas) == fixed_gauge
    gens_tilde = qs.gauge_generators()
    for g in gens_tilde:
        for n in quotient_points:
            if ab.beta(qs.act(g, n)) != space.act(ab.alpha(g), ab.beta(n)):
                res.equivariant = False
                break
    # orbit partitions on both sides
    q_orbits, seen = [], set()
    for n in quotient_points:
        if n in seen:
            continue
        orb = orbit_of(qs, n, gens_tilde)
        seen |= orb
        q_orbits.append(orb)
    alpha_gens = [ab.alpha(g) for g in gens_tilde]
    s_orbits, seen = [], set()
    for m in sorted(fixed_points):
        if m not in seen:
            orb = orbit_of(space, m, alpha_gens)
            seen |= orb
            s_orbits.append(orb)
    s_set = {frozenset(o) for o in s_orbits}
    for orb in q_orbits:
        if frozenset(ab.beta(x) for x in orb) not in s_set:
            res.orbits_match = False
    stable_q = stable_s = 0
    for orb in q_orbits:
        n = min(orb)
        rq = StabilityReport(qs, n, tp_tilde)
        eq = coh.EquivariantRep(action, ab.beta(n))
        ss = equivariant_semistable(eq, tp)
        st = equivariant_semistable(eq, tp, stable=True)
        plain = StabilityReport(space, ab.beta(n), tp)
        if rq.semistable != ss or rq.stable != st or plain.semistable != ss:
            res.flags_match = False
        stable_q += rq.stable
        stable_s += st
    res.orbit_counts = (len(q_orbits), len(s_orbits))
    res.stable_counts = (stable_q, stable_s)
    f = space.field
    raw_q = {o: v for o, v in tp_tilde.items()}
    for g in G_tilde:
        lhs = chi_theta(f, raw_q, qs.dims, g, normalize=False)
        rhs = chi_theta(f, tp, space.dims, ab.alpha(g), normalize=False)
        if lhs != rhs:
            res.chi_match = False
        if chi_theta(f, raw_q, qs.dims, g) != chi_theta(f, tp, space.dims, ab.alpha(g)):
            res.chi_normalized_match = False
    return res


def all_points_stability(problem: ModuliProblem):
    """Yield (point, orbit) for every enumerated point."""
    for o in problem.all_orbits():
        for m in problem.orbit(o.rep):
            yield m, o

