"""The eight acceptance checks, shared by the ``verify`` command and the test suite.

Every check returns a :class:`CriterionResult` whose ``checks`` map names a
concrete identity or count to whether it held.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field

from . import cohomology as coh
from . import hilbert as hb
from . import linalg
from .automorphisms import (canonical_contravariant, close_subgroup, enumerate_aut,
                             extend_to_double, star_classify)
from .errors import IdentityViolation
from .fields import QQ, QQI, PrimeField
from .fixtures import build_fixture
from .moduli import (ModuliProblem, decompose_fixed_locus, f_image, sigma_fixed_moduli,
                     verify_quotient_equivalence)
from .polygons import correspondence_table, cycle_group, symmetric_group, transposition_census
from .quiver import (a2_quiver, double, induced_dim_stab, jordan_quiver, quotient_quiver,
                     star_dims, star_quiver, star_theta, star_weights)
from .reps import FixedGauge, FixedLocus, RepSpace, TwistedAction, stabilizer
from .stability import StabilityReport, equivariant_semistable
from .symplectic import SymplecticContext


@dataclass
class CriterionResult:
    number: int
    name: str
    checks: dict
    details: dict = dc_field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list:
        return [k for k, v in self.checks.items() if not v]

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else "  failed: " + ", ".join(self.failed())
        return f"{status} [{self.number}] {self.name} ({self.seconds:.1f}s){tail}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "checks": dict(self.checks), "details": self.details,
                "seconds": round(self.seconds, 3)}


def _ratio(field, m):
    """[a : b] of a rank-one K2/C2 point as b/a (None for a = 0)."""
    a, b = m[0][0][0], m[1][0][0]
    return None if field.is_zero(a) else field.reduce(b * field.inv(a))


def _space(problem, field=None, acting=None):
    return RepSpace(problem.quiver, problem.dims, field or problem.field, acting or problem.acting)


def k2_decomposition() -> CriterionResult:
    fx = build_fixture("k2")
    sp, G, f = _space(fx), fx.group, fx.field
    prob = ModuliProblem(sp, fx.theta)
    checks, details = {}, {}
    checks["6 stable orbits"] = len(prob.stable_orbits()) == 6
    fixed = sigma_fixed_moduli(prob, G)
    checks["fixed orbits are [1:1] and [1:-1]"] = sorted(_ratio(f, o.rep) for o in fixed) == [1, 4]
    plain = f_image(prob, TwistedAction(sp, G))
    checks["untwisted image is {[1:1]}"] = {_ratio(f, r) for r in plain.image_set} == {1}
    checks["untwisted map injective"] = plain.injective
    s = G.non_identity()[0]
    u = [sp.identity()] * len(G)
    u[s] = sp.make_gauge({"1": ((1,),), "2": ((4,),)})
    twisted = f_image(prob, TwistedAction(sp, G, u))
    checks["u=(1,-1) image is {[1:-1]}"] = {_ratio(f, r) for r in twisted.image_set} == {4}
    report = decompose_fixed_locus(prob, G)
    checks["2 components"] = len(report.components) == 2
    checks["uncovered empty"] = report.uncovered == []
    action = TwistedAction(sp, G)
    h1d = coh.delta_h1(action)
    h1g = coh.TwistedH1(action)
    checks["H1(Delta) = {±1}"] = sorted(a[s] for a in h1d.representatives) == [1, 4]
    checks["H1(G) has 4 classes"] = len(h1g) == 4
    checks["kernel trivial"] = len(coh.kernel_to_G(action, h1g, h1d)) == 1
    details.update(stable=len(prob.stable_orbits()), components=len(report.components),
                   h1_G=len(h1g), uncovered=len(report.uncovered))
    return CriterionResult(1, "K2 over F5: fixed locus and decomposition", checks, details)


def c2_decomposition() -> CriterionResult:
    fx = build_fixture("c2")
    sp, G, f = _space(fx), fx.group, fx.field
    prob = ModuliProblem(sp, fx.theta)
    action = TwistedAction(sp, G)
    checks = {}
    fg = FixedGauge(action)
    delta = {sp.delta(t) for t in sp.delta_scalars()}
    checks["G^sigma = Delta"] = set(fg.elements) == delta and fg.order == 4

    def invariant(m):
        return f.reduce(m[0][0][0] * m[1][0][0])

    img = f_image(prob, action)
    checks["f is z -> z^2"] = all(invariant(img.image[c]) == f.reduce(c[0][0][0] ** 2)
                                  for c in img.classes)
    h1g = coh.TwistedH1(action)
    kernel = coh.kernel_to_G(action, h1g)
    checks["H1(G) trivial"] = len(h1g) == 1
    checks["fibers have size |ker| = 2"] = len(kernel) == 2 and all(n == 2 for n in img.fibers.values())
    report = decompose_fixed_locus(prob, G)
    uncovered = sorted(invariant(m) for m in report.uncovered)
    checks["uncovered invariants {2,3}"] = uncovered == [2, 3]
    checks["caveat flagged"] = bool(report.caveat)
    field_mode = decompose_fixed_locus(prob, G, "field")
    checks["all F5 type classes cover the fixed locus"] = not field_mode.uncovered
    return CriterionResult(2, "C2 over F5: squaring map and rational-point gap", checks,
                           {"uncovered": uncovered, "caveat": report.caveat})


def hilbert_suite() -> CriterionResult:
    f = PrimeField(3)
    sp = hb.hilbert_space(2, f)
    G = hb.swap_group(sp)
    checks = {}
    inv = hb.involution_classes(2, f)
    checks["3 involution classes"] = inv["class_count"] == 3
    checks["classes are I, diag(-1,1), -I"] = inv["matches_diagonal"]
    h1 = coh.TwistedH1(TwistedAction(sp, G))
    checks["H1 brute force has 3 classes"] = len(h1) == 3
    checks["|u1 GL2^sigma| = 4"] = FixedGauge(TwistedAction(sp, G, hb.family_u_r(sp, G, 1))).order == 4
    u2 = FixedLocus(TwistedAction(sp, G, hb.family_u_r(sp, G, 2)))
    stable_u2 = [m for m in u2.points() if hb.in_zero_fiber(sp, m) and hb.is_cyclic(sp, m)]
    checks["u2 fixed locus misses the stable locus"] = stable_u2 == []
    diag = [m for m in hb.zero_fiber_points(sp) if m[0] == m[2] and hb.is_cyclic(sp, m)]
    checks["x - y in J_M with codim 2"] = bool(diag) and all(hb.fixed_diagonal_check(sp, m) for m in diag)
    return CriterionResult(3, "Hilbert scheme n=2 over F3", checks,
                           {"class_sizes": inv["class_sizes"], "diagonal_points": len(diag),
                            "u2_fixed_points": u2.point_count()})


def _cocycle_spaces():
    f3 = PrimeField(3)
    out = []
    for name in ("k2", "c2"):
        fx = build_fixture(name)
        out.append((name, _space(fx, f3), fx.group))
    k2 = build_fixture("k2").quiver
    contra = [s for s in enumerate_aut(k2) if not s.covariant and s.order() == 2]
    out.append(("k2-contravariant", RepSpace(k2, {"1": 1, "2": 1}, f3), close_subgroup(contra[:1], k2)))
    out.append(("star-4", RepSpace(star_quiver(4), star_dims(4), f3), cycle_group(4, [1, 2])))
    return out


def cocycle_suite(random_checks: int = 10 ** 4, seed: int = 0) -> CriterionResult:
    rng = random.Random(seed)
    failures = {"cocycle": 0, "laws": 0, "round trip": 0, "type map": 0}
    counts = dict.fromkeys(failures, 0)
    pools = []
    for name, sp, G in _cocycle_spaces():
        fams = coh.enumerate_modifying_families(sp, G)
        for u in fams:
            counts["cocycle"] += 1
            if not coh.cocycle2_of(sp, G, u).is_cocycle():
                failures["cocycle"] += 1
        actions = [TwistedAction(sp, G, u) for u in fams]
        cocycles = {id(a): coh.twisted_cocycles(a) for a in actions}
        gauges = list(sp.gauge_elements())
        pools.append((name, sp, G, actions, cocycles, gauges))
    # exhaustive laws on the F3 fixtures with small spaces
    for name, sp, G, actions, _, gauges in pools:
        if sp.point_count() > 100:
            continue
        for a in actions:
            counts["laws"] += 1
            if a.check_laws(list(sp.points()), gauges):
                failures["laws"] += 1
    done = 0
    while done < random_checks:
        name, sp, G, actions, cocycles, gauges = pools[done % len(pools)]
        a = rng.choice(actions)
        m, g = sp.random_rep(rng), rng.choice(gauges)
        counts["laws"] += 1
        if a.check_laws([m], [g]):
            failures["laws"] += 1
        b = rng.choice(cocycles[id(a)])
        b = coh.coboundary_translate(a, rng.choice(gauges), b)
        counts["round trip"] += 1
        try:
            if coh.cocycle_between(sp, G, a.family, coh.twist_by_cocycle(sp, a.family, b)) != b:
                failures["round trip"] += 1
        except IdentityViolation:
            failures["round trip"] += 1
        done += 1
    for name, sp, G, _, _, gauges in pools:
        prob = ModuliProblem(sp, build_fixture(name).theta if name in ("k2", "c2")
                             else star_theta([1] * 4) if name == "star-4" else {"1": 1, "2": -1})
        h2 = coh.h2_delta(G, sp.field, sp.delta_scalars())
        for o in sigma_fixed_moduli(prob, G):
            if not o.regularly_stable:
                continue
            for trial in range(3):
                counts["type map"] += 1
                try:
                    coh.type_map(sp, G, o.rep, h2, gauges, checks=3, seed=rng.randrange(10 ** 6))
                except IdentityViolation:
                    failures["type map"] += 1
    checks = {f"{k}: 0 failures in {counts[k]}": failures[k] == 0 for k in failures}
    checks["at least 10^4 randomized checks"] = done >= random_checks
    return CriterionResult(4, "cocycle algebra", checks, {"counts": counts, "failures": failures})


def _stability_cases():
    f3 = PrimeField(3)
    k2, c2 = build_fixture("k2"), build_fixture("c2")
    star = RepSpace(star_quiver(4), star_dims(4), f3)
    return [("k2", _space(k2, f3), k2.theta, k2.group, k2.group),
            ("c2", _space(c2, f3), c2.theta, c2.group, c2.group),
            ("star-4", star, star_theta([1] * 4), cycle_group(4, [1, 2]), symmetric_group(4))]


def stability_suite() -> CriterionResult:
    bad = {"preserved": 0, "equivariant": 0, "scss": 0, "stabilizer": 0}
    counts = dict.fromkeys(bad, 0)
    for name, sp, theta, G, full in _stability_cases():
        delta = {sp.delta(t) for t in sp.delta_scalars()}
        gauges = list(sp.gauge_elements())
        for m in sp.points():
            rep = StabilityReport(sp, m, theta)
            if not rep.semistable:
                counts["scss"] += 1
                try:
                    rep.scss()
                except IdentityViolation:
                    bad["scss"] += 1
        prob = ModuliProblem(sp, theta)
        for o in prob.all_orbits():
            for s in full:
                counts["preserved"] += 1
                img = StabilityReport(sp, sp.phi(s, o.rep), theta)
                if (img.semistable, img.stable) != (o.semistable, o.stable):
                    bad["preserved"] += 1
            if o.stable and o.endo_dim == 1:
                counts["stabilizer"] += 1
                if set(stabilizer(sp, o.rep, gauges)) != delta:
                    bad["stabilizer"] += 1
        for u in coh.enumerate_modifying_families(sp, G):
            action = TwistedAction(sp, G, u)
            for m in FixedLocus(action).points():
                counts["equivariant"] += 1
                eq = coh.EquivariantRep(action, m)
                if equivariant_semistable(eq, theta) != prob.lookup(m).semistable:
                    bad["equivariant"] += 1
    checks = {f"{k}: 0 failures in {counts[k]}": bad[k] == 0 for k in bad}
    return CriterionResult(5, "stability over F3 (K2, C2, Star-4)", checks, {"counts": counts})


def _same_shape(q1, q2) -> bool:
    return (len(q1.vertices), sorted((q1.tail[a] == q1.head[a]) for a in q1.arrows)) == \
           (len(q2.vertices), sorted((q2.tail[a] == q2.head[a]) for a in q2.arrows))


def quotient_suite() -> CriterionResult:
    f3 = PrimeField(3)
    checks, details = {}, {}
    cases = [("K2 -> A2", build_fixture("k2"), a2_quiver()),
             ("C2 -> Jordan", build_fixture("c2"), jordan_quiver()),
             ("Star-4 -> Star-3", build_fixture("star-4"), star_quiver(3))]
    for label, fx, target in cases:
        sp = _space(fx, f3)
        qq, _, _ = quotient_quiver(fx.quiver, fx.group)
        checks[f"{label}: quotient quiver shape"] = _same_shape(qq, target) and \
            len(qq.arrows) == len(target.arrows)
        res = verify_quotient_equivalence(sp, fx.group, fx.theta)
        checks[f"{label}: orbit bijection"] = res.bijective and res.equivariant and res.orbits_match
        checks[f"{label}: stability flags"] = res.flags_match
        checks[f"{label}: chi identity"] = res.chi_match
        details[label] = res.to_json()
    fx = build_fixture("star-4")
    d_t, th_t = induced_dim_stab(fx.quiver, fx.group, fx.dims, fx.theta)
    expected = {"0": -4, "1": 4, "3": 2, "4": 2}
    checks["Star-4 induced weights r_I = (2,1,1)"] = th_t == expected and \
        th_t == dict(zip(["0", "1", "3", "4"], star_theta([2, 1, 1]).values()))
    return CriterionResult(6, "quotient quivers", checks, details)


def polygon_suite() -> CriterionResult:
    table = correspondence_table(PrimeField(3), [1, 1, 1, 1])
    agree = sum(c == q for _, c, q in table)
    checks = {"256 configurations": len(table) == 256, "all agree": agree == len(table)}
    return CriterionResult(7, "point configurations on P^1(F3)", checks,
                           {"agree": agree, "semistable": sum(c for _, c, _ in table)})


def _random_invertible(ctx, rng):
    f = ctx.field
    out = []
    for v in ctx.quiver.vertices:
        n = ctx.space.dims[v]
        while True:
            B = tuple(tuple(f.reduce(rng.randint(-3, 3)) for _ in range(n)) for _ in range(n))
            if n == 0 or not f.is_zero(linalg.det(f, B)):
                break
        out.append(B)
    return tuple(out)


def _transposition(qd):
    """(12) on the star quiver Q_3, extended to its double."""
    cyc = cycle_group(3, [1, 2])
    return extend_to_double(cyc[cyc.non_identity()[0]], qd)


def symplectic_suite(random_inputs: int = 100, seed: int = 0) -> CriterionResult:
    rng = random.Random(seed)
    checks = {}
    star3 = double(star_quiver(3))
    jd = double(jordan_quiver())
    contexts = [("star3", SymplecticContext(star3, star_dims(3), QQ)),
                ("jordan", SymplecticContext(jd, {"1": 2}, QQ))]
    for label, ctx in contexts:
        stars = [s for s in enumerate_aut(ctx.quiver) if star_classify(s) != "not_star"]
        checks[f"{label}: sigma*omega = s(sigma) omega"] = all(
            ctx.pullback_omega_sign(s) == (1 if star_classify(s) == "symplectic" else -1) for s in stars)
        ok_eq = ok_pair = ok_sign = True
        for _ in range(random_inputs):
            m, B = ctx.random_rep(rng), ctx.random_lie(rng)
            g = _random_invertible(ctx, rng)
            mu = ctx.moment(m)
            ok_pair &= ctx.moment_pairing(m, B) == ctx.trace_pairing(mu, B)
            ok_eq &= ctx.moment(ctx.space.act(g, m)) == ctx.conjugate_moment(g, mu)
            s = rng.choice(stars)
            ok_sign &= ctx.moment_sign(s, m, B) == (1 if star_classify(s) == "symplectic" else -1)
        checks[f"{label}: pairing identity"] = ok_pair
        checks[f"{label}: moment equivariance"] = ok_eq
        checks[f"{label}: moment sign under sigma"] = ok_sign
    ctx = SymplecticContext(star3, star_dims(3), QQI)
    hk = ctx.hk_structures()
    checks["quaternion identities"] = hk.quaternion_failures() == []
    checks["omega_J + i omega_K = omega"] = hk.complex_form_matches()
    swap = _transposition(star3)
    canon = canonical_contravariant(star3)
    types = {"(12) -> BBB": ctx.brane_type(swap).type == "BBB",
             "canonical -> BAA": ctx.brane_type(canon).type == "BAA",
             "tau -> ABA": ctx.brane_type(None, conjugate=True).type == "ABA",
             "canonical with tau -> AAB": ctx.brane_type(canon, conjugate=True).type == "AAB"}
    checks.update(types)
    ctxq = SymplecticContext(star3, star_dims(3), QQ)
    fixed = ctxq.fixed_subspace(canon)
    checks["anti-symplectic fixed subspace is Lagrangian"] = (
        2 * len(fixed) == ctxq.space.size and ctxq.restricted_omega_rank(fixed) == 0)
    fixed_sym = ctxq.fixed_subspace(swap)
    checks["symplectic fixed subspace is symplectic"] = (
        ctxq.restricted_omega_rank(fixed_sym) == len(fixed_sym))
    return CriterionResult(8, "symplectic forms and brane types", checks,
                           {"lagrangian_dim": len(fixed), "total_dim": ctxq.space.size})


CRITERIA = {1: ("k2", k2_decomposition), 2: ("c2", c2_decomposition), 3: ("hilbert", hilbert_suite),
            4: ("cocycle", cocycle_suite), 5: ("stability", stability_suite),
            6: ("quotient", quotient_suite), 7: ("polygons", polygon_suite),
            8: ("brane", symplectic_suite)}

SUITES = {name: k for k, (name, _) in CRITERIA.items()}


def run_criterion(number: int) -> CriterionResult:
    _, fn = CRITERIA[number]
    start = time.perf_counter()
    try:
        res = fn()
    except IdentityViolation as exc:
        res = CriterionResult(number, CRITERIA[number][0], {f"raised {type(exc).__name__}: {exc}": False})
    res.seconds = time.perf_counter() - start
    return res


def run_all(filter_name: str | None = None) -> list:
    numbers = sorted(CRITERIA)
    if filter_name:
        if filter_name not in SUITES:
            raise KeyError(filter_name)
        numbers = [SUITES[filter_name]]
    return [run_criterion(k) for k in numbers]


# ----- per-problem verification (``quivfix verify <fixture or file>``) --------------------

def _expect(checks, expected, key, value):
    if key in expected:
        checks[f"{key} = {expected[key]}"] = value == expected[key]


def _verify_moduli(problem, space, max_points):
    checks, details = {}, {}
    exp = problem.extra.get("expected", {})
    prob = ModuliProblem(space, problem.theta, max_points)
    G = problem.group
    report = decompose_fixed_locus(prob, G)
    action = TwistedAction(space, G)
    h1g = coh.TwistedH1(action)
    h1d = coh.delta_h1(action)
    kernel = coh.kernel_to_G(action, h1g, h1d)
    checks["fiber law |fiber| = |kernel|"] = report.fiber_law
    checks["components disjoint"] = report.disjoint
    _expect(checks, exp, "stable_orbits", len(prob.stable_orbits()))
    _expect(checks, exp, "fixed_orbits", len(report.fixed))
    _expect(checks, exp, "components", len(report.components))
    _expect(checks, exp, "uncovered", len(report.uncovered))
    _expect(checks, exp, "h1_delta", len(h1d))
    _expect(checks, exp, "h1_G", len(h1g))
    _expect(checks, exp, "kernel", len(kernel))
    _expect(checks, exp, "fixed_gauge_order", FixedGauge(action).order)
    if "fiber_size" in exp:
        sizes = {n for c in report.components for n in c.f.fibers.values()}
        checks[f"fiber_size = {exp['fiber_size']}"] = sizes == {exp["fiber_size"]}
    details["decomposition"] = report.to_json()
    details.update(h1_delta=len(h1d), h1_G=len(h1g), kernel=len(kernel))
    return checks, details


def _verify_hilbert(problem, field):
    checks, details = {}, {}
    exp = problem.extra.get("expected", {})
    n = problem.dims["0"]
    prob = hb.HilbertProblem(n, field)
    sp = prob.space
    G = hb.swap_group(sp)
    stable = prob.stable_orbits()
    _expect(checks, exp, "stable_points", len(stable))
    checks["all stable points regularly stable"] = all(o.regularly_stable for o in stable)
    report = decompose_fixed_locus(prob, G)
    checks["fiber law |fiber| = |kernel|"] = report.fiber_law
    checks["components disjoint"] = report.disjoint
    checks["every fixed point covered"] = report.uncovered == []
    inv = hb.involution_classes(n, field)
    checks["involution classes are the u_r"] = inv["matches_diagonal"]
    _expect(checks, exp, "h1_classes", len(coh.TwistedH1(TwistedAction(sp, G))))
    if n >= 1:
        _expect(checks, exp, "u1_fixed_gauge",
                FixedGauge(TwistedAction(sp, G, hb.family_u_r(sp, G, 1))).order)
    if n >= 2:
        u2 = FixedLocus(TwistedAction(sp, G, hb.family_u_r(sp, G, 2)))
        _expect(checks, exp, "u2_stable_fixed",
                sum(1 for m in u2.points() if hb.in_zero_fiber(sp, m) and hb.is_cyclic(sp, m)))
    diag = [o.rep for o in stable if o.rep[0] == o.rep[2]]
    checks["x - y in J_M for diagonal points"] = all(hb.fixed_diagonal_check(sp, m) for m in diag)
    if "ideal_codim" in exp:
        checks[f"ideal_codim = {exp['ideal_codim']}"] = all(hb.Ideal(sp, o.rep).codim == exp["ideal_codim"]
                                                           for o in stable)
    details.update(stable=len(stable), fixed=len(report.fixed),
                   component_sizes=[len(c.image) for c in report.components],
                   involution_class_sizes=inv["class_sizes"])
    return checks, details


def _verify_star(problem, space, max_points):
    checks, details = {}, {}
    exp = problem.extra.get("expected", {})
    weights = [int(w) for w in star_weights(problem.theta)]
    n = len(weights)
    table = correspondence_table(space.field, weights)
    checks["configuration and quiver semistability agree"] = all(c == q for _, c, q in table)
    res = verify_quotient_equivalence(space, problem.group, problem.theta, max_points)
    checks["quotient equivalence"] = res.ok
    _, th = induced_dim_stab(problem.quiver, problem.group, problem.dims, problem.theta)
    if "quotient_weights" in exp:
        outer = [th[v] // 2 for v in problem.quiver.vertices[1:] if v in th]
        checks[f"quotient weights = {exp['quotient_weights']}"] = outer == exp["quotient_weights"]
    details.update(configurations=len(table), quotient=res.to_json())
    if space.point_count() <= 10 ** 4:
        census = transposition_census(n, space.field, weights)
        census.pop("report")
        details["census"] = census
    return checks, details


def _verify_symplectic(problem):
    checks, details = {}, {}
    exp = problem.extra.get("expected", {})
    qd = problem.quiver
    ctx = SymplecticContext(qd, problem.dims, QQI)
    hk = ctx.hk_structures()
    checks["quaternion identities"] = hk.quaternion_failures() == []
    checks["omega_J + i omega_K = omega"] = hk.complex_form_matches()
    types = {}
    for s in enumerate_aut(qd):
        label = star_classify(s)
        if label == "not_star":
            continue
        sign = ctx.pullback_omega_sign(s)
        checks[f"pullback sign of {s.describe()}"] = sign == (1 if label == "symplectic" else -1)
        if s.order() <= 2:
            for conj in (False, True):
                types[f"{s.describe()}{' with tau' if conj else ''}"] = ctx.brane_type(s, conj).type
    details["brane_types"] = types
    named = {"canonical": (canonical_contravariant(qd), False),
             "canonical_conjugate": (canonical_contravariant(qd), True),
             "identity_conjugate": (None, True)}
    if "transposition" in exp:
        named["transposition"] = (_transposition(qd), False)
    for key, (s, conj) in named.items():
        if key in exp:
            checks[f"{key} -> {exp[key]}"] = ctx.brane_type(s, conj).type == exp[key]
    return checks, details


def verify_problem(problem, max_points: int = 10 ** 6) -> CriterionResult:
    """Run the identities relevant to one bundled problem; expected values come from the file."""
    start = time.perf_counter()
    kind = problem.extra.get("kind", "moduli")
    try:
        if kind == "hilbert":
            checks, details = _verify_hilbert(problem, problem.field)
        elif kind == "symplectic":
            checks, details = _verify_symplectic(problem)
        else:
            space = RepSpace(problem.quiver, problem.dims, problem.field, problem.acting)
            if kind == "star":
                checks, details = _verify_star(problem, space, max_points)
            else:
                checks, details = _verify_moduli(problem, space, max_points)
    except IdentityViolation as exc:
        checks, details = {f"raised {type(exc).__name__}: {exc}": False}, {}
    res = CriterionResult(0, problem.name or kind, checks, details)
    res.seconds = time.perf_counter() - start
    return res
