from quivfix import moduli as mod
from quivfix.fixtures import build_fixture
from quivfix.moduli import ModuliProblem
from quivfix.polygons import cycle_group, star_space
from quivfix.quiver import star_theta
from quivfix.reps import TwistedAction


def one(x):
    return ((x,),)


def reps_of(problem, orbits):
    return {tuple(x[0][0] for x in o.rep) for o in orbits}


def test_k2_orbits(k2):
    sp, G, prob = k2
    stable = prob.stable_orbits()
    assert len(stable) == 6
    assert all(o.regularly_stable for o in stable)
    # P^1(F_5): [a:b] up to scaling
    assert sum(o.orbit_size for o in stable) == 6 * 4
    fixed = mod.sigma_fixed_moduli(prob, G)
    assert reps_of(prob, fixed) == {(1, 1), (1, 4)}


def test_c2_orbits(c2):
    sp, G, prob = c2
    stable = prob.stable_orbits()
    assert len(stable) == 4
    invariants = sorted(o.rep[0][0][0] * o.rep[1][0][0] % 5 for o in stable)
    assert invariants == [1, 2, 3, 4]
    assert len(mod.sigma_fixed_moduli(prob, G)) == 4


def test_c2_untwisted_image(c2):
    sp, G, prob = c2
    f = mod.f_image(prob, TwistedAction(sp, G))
    invariants = {m[0][0][0] * m[1][0][0] % 5 for m in f.image_set}
    assert invariants == {1, 4}
    assert set(f.fibers.values()) == {2}
    assert not f.injective
    cert = mod.injectivity_certificate(G, f)
    assert not cert["criterion"] and cert["consistent"]


def test_k2_injectivity(k2):
    sp, G, prob = k2
    f = mod.f_image(prob, TwistedAction(sp, G))
    assert f.injective
    assert mod.injectivity_certificate(G, f)["criterion"]
    assert mod.injectivity_certificate(cycle_group(4, [1, 2]))["criterion"]


def test_k2_decomposition(k2):
    sp, G, prob = k2
    for mode in ("closed", "field"):
        rep = mod.decompose_fixed_locus(prob, G, mode)
        assert len(rep.components) == 2
        assert not rep.uncovered and rep.disjoint and rep.fiber_law
        assert sorted(len(c.image) for c in rep.components) == [1, 1]


def test_c2_decomposition_modes(c2):
    sp, G, prob = c2
    closed = mod.decompose_fixed_locus(prob, G, "closed")
    assert len(closed.uncovered) == 2 and closed.caveat
    assert closed.disjoint and closed.fiber_law
    field = mod.decompose_fixed_locus(prob, G, "field")
    assert len(field.components) == 2 and not field.uncovered
    assert field.to_json()["component_count"] == 2


def test_quotient_k2_and_c2(k2, c2):
    for sp, G, prob in (k2, c2):
        check = mod.verify_quotient_equivalence(sp, G, prob.theta)
        assert check.ok, check.to_json()
    sp, G, prob = k2
    assert mod.verify_quotient_equivalence(sp, G, prob.theta).stable_counts == (1, 1)


def test_quotient_star():
    fx = build_fixture("star-4")
    sp = star_space(4, fx.field)
    check = mod.verify_quotient_equivalence(sp, cycle_group(4, [1, 2]), star_theta([1] * 4))
    assert check.ok
    assert ModuliProblem(sp, star_theta([1] * 4)).stable_orbits()
