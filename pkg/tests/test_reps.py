import random

import pytest

from quivfix import hilbert as hb
from quivfix import linalg
from quivfix.automorphisms import canonical_contravariant, close_subgroup, enumerate_aut
from quivfix.errors import ShapeMismatch
from quivfix.polygons import cycle_group
from quivfix.quiver import double, jordan_quiver, k2_quiver, star_dims, star_quiver
from quivfix.reps import (AlphaBeta, FixedGauge, FixedLocus, RepSpace, TwistedAction, endo_dim,
                          stabilizer)

from conftest import F3, F5, space_of


def one(x):
    return ((x,),)


def test_k2_gauge_action(k2):
    sp, _, _ = k2
    f = sp.field
    for g in sp.gauge_elements():
        s1, s2 = g[0][0][0], g[1][0][0]
        m = sp.make_rep([one(2), one(3)])
        expect = tuple(one(f.reduce(s2 * x * f.inv(s1))) for x in (2, 3))
        assert sp.act(g, m) == expect
    m = sp.make_rep([one(1), one(4)])
    assert sp.act(sp.identity(), m) == m
    assert all(sp.act(sp.delta(t), m) == m for t in f.units())


def test_automorphism_actions(k2, c2):
    sp, G, _ = k2
    s = G[G.non_identity()[0]]
    assert sp.phi(s, sp.make_rep([one(1), one(2)])) == sp.make_rep([one(2), one(1)])
    sp2, G2, _ = c2
    s2 = G2[G2.non_identity()[0]]
    g = sp2.make_gauge({"1": one(2), "2": one(3)})
    assert sp2.psi(s2, g) == sp2.make_gauge({"1": one(3), "2": one(2)})
    jd = double(jordan_quiver())
    spj = RepSpace(jd, {"1": 1}, F5)
    canon = canonical_contravariant(jd)
    m = spj.make_rep({"x": one(1), "x*": one(3)})
    assert spj.phi(canon, m) == spj.make_rep({"x": one(3), "x*": one(1)})


def test_twisted_k2(k2):
    sp, G, _ = k2
    i = G.non_identity()[0]
    u = [sp.identity()] * 2
    u[i] = sp.make_gauge({"1": one(1), "2": one(4)})
    act = TwistedAction(sp, G, u)
    assert act.phi(i, sp.make_rep([one(1), one(2)])) == sp.make_rep([one(3), one(4)])
    assert all(act.psi(i, g) == g for g in sp.gauge_elements())
    plain = TwistedAction(sp, G)
    m = sp.make_rep([one(1), one(2)])
    assert plain.phi(i, m) == sp.phi(G[i], m)


def test_fixed_loci(k2, c2):
    for sp, G, _ in (k2, c2):
        locus = FixedLocus(TwistedAction(sp, G))
        pts = list(locus.points())
        assert locus.dim == 1 and len(pts) == 5 and all(m[0] == m[1] for m in pts)


def test_hilbert_twisted_fixed_loci():
    f = F3
    sp = hb.hilbert_space(2, f)
    G = hb.swap_group(sp)
    for r in range(3):
        act = TwistedAction(sp, G, hb.family_u_r(sp, G, r))
        ur = hb.u_r(2, r, f)
        for m in FixedLocus(act).points():
            d = sp.as_dict(m)
            assert linalg.mat_mul(f, ur, d["i"]) == d["i"]
            assert linalg.mat_mul(f, d["j"], ur) == d["j"]
            if r == 2:
                assert linalg.is_zero_matrix(f, d["i"]) and linalg.is_zero_matrix(f, d["j"])


def test_fixed_gauge(k2, c2):
    sp, G, _ = c2
    fg = FixedGauge(TwistedAction(sp, G))
    assert fg.order == 4 == fg.predicted_order
    assert set(fg.elements) == {sp.delta(t) for t in sp.field.units()}
    sp, G, _ = k2
    assert FixedGauge(TwistedAction(sp, G)).order == sp.gauge_order() == 16
    hs = hb.hilbert_space(2, F3)
    Gh = hb.swap_group(hs)
    fg = FixedGauge(TwistedAction(hs, Gh, hb.family_u_r(hs, Gh, 1)))
    assert fg.order == 4 == fg.predicted_order


def test_alpha_beta(k2, c2):
    for sp, G, _ in (k2, c2):
        ab = AlphaBeta(sp, G)
        qs = ab.quotient_space
        locus = set(FixedLocus(TwistedAction(sp, G)).points())
        images = {ab.beta(n) for n in qs.points()}
        assert images == locus
        for n in qs.points():
            assert ab.beta_inverse(ab.beta(n)) == n
        for g in qs.gauge_elements():
            for h in qs.gauge_elements():
                assert ab.alpha(qs.gauge_mul(g, h)) == sp.gauge_mul(ab.alpha(g), ab.alpha(h))
    trivial = close_subgroup([], k2[0].quiver)
    ab = AlphaBeta(k2[0], trivial)
    m = k2[0].make_rep([one(1), one(2)])
    assert ab.beta(m) == m


def test_endo_dim():
    sp = RepSpace(k2_quiver(), {"1": 1, "2": 1}, F5)
    assert endo_dim(sp, sp.make_rep([one(1), one(2)])) == 1
    assert endo_dim(sp, sp.zero()) == 2
    big = RepSpace(k2_quiver(), {"1": 2, "2": 2}, F5)
    ident = linalg.identity(F5, 2)
    assert endo_dim(big, big.make_rep([ident, ident])) == 4


def test_shape_checks(k2):
    sp, _, _ = k2
    with pytest.raises(ShapeMismatch):
        sp.make_rep([((1, 2),), one(1)])


def _law_spaces():
    yield space_of("k2", F3)[0], space_of("k2")[1].group
    yield space_of("c2", F3)[0], space_of("c2")[1].group
    q = k2_quiver()
    yield RepSpace(q, {"1": 1, "2": 1}, F3), close_subgroup(enumerate_aut(q), q)
    jd = double(jordan_quiver())
    yield RepSpace(jd, {"1": 2}, F3), close_subgroup(enumerate_aut(jd), jd)


def test_action_laws_exhaustive_f3():
    from quivfix.cohomology import enumerate_modifying_families
    rng = random.Random(3)
    for sp, G in _law_spaces():
        gauges = list(sp.gauge_elements())
        reps = list(sp.points()) if sp.point_count() <= 100 else [sp.random_rep(rng) for _ in range(12)]
        for u in enumerate_modifying_families(sp, G)[:4]:
            assert TwistedAction(sp, G, u).check_laws(reps, gauges[:12]) == []
        for s in G:
            for g in gauges[:15]:
                for h in gauges[:15]:
                    assert sp.psi(s, sp.gauge_mul(g, h)) == sp.gauge_mul(sp.psi(s, g), sp.psi(s, h))


def test_subgroup_mode():
    sp = hb.hilbert_space(2, F3)
    assert sp.gauge_order() == 48 and sp.delta_order() == 1
    assert not sp.full_group


def test_stabilizers_of_stable_points(k2):
    sp, _, prob = k2
    delta = {sp.delta(t) for t in sp.field.units()}
    gauges = list(sp.gauge_elements())
    for o in prob.stable_orbits():
        assert o.endo_dim == 1
        assert set(stabilizer(sp, o.rep, gauges)) == delta
    star = RepSpace(star_quiver(3), star_dims(3), F3)
    G = cycle_group(3, [1, 2])
    assert TwistedAction(star, G).check_laws([star.random_rep(random.Random(1))], list(star.gauge_generators())) == []
