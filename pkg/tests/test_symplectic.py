import random

import pytest

from quivfix import hilbert as hb
from quivfix.automorphisms import automorphism, canonical_contravariant, enumerate_aut, star_classify
from quivfix.errors import NotStarAutomorphism, WrongField
from quivfix.fields import QQ, QQI, GaussianRational
from quivfix.quiver import double, framed_jordan_double, jordan_quiver, k2_quiver, star_dims, star_quiver
from quivfix.symplectic import BRANE_BY_CLASS, SymplecticContext

from conftest import F3


@pytest.fixture(scope="module")
def star3():
    return SymplecticContext(double(star_quiver(3)), star_dims(3), QQI)


def outer_swap(qd):
    return automorphism(qd, "covariant", {"1": "2", "2": "1"},
                        {"a1": "a2", "a2": "a1", "a1*": "a2*", "a2*": "a1*"})


def test_jordan_omega():
    ctx = SymplecticContext(double(jordan_quiver()), {"1": 1}, QQ)
    m = ctx.space.make_rep([((1,),), ((0,),)])
    n = ctx.space.make_rep([((0,),), ((1,),)])
    assert ctx.omega(m, n) == 1 and ctx.omega(n, m) == -1
    rng = random.Random(3)
    big = SymplecticContext(double(jordan_quiver()), {"1": 2}, QQ)
    for _ in range(20):
        a = big.random_rep(rng)
        assert big.omega(a, a) == 0


def test_k2_double_standard_form():
    ctx = SymplecticContext(double(k2_quiver()), {"1": 1, "2": 1}, QQ)
    expected = ((0, 0, 1, 0), (0, 0, 0, 1), (-1, 0, 0, 0), (0, -1, 0, 0))
    assert ctx.omega_matrix() == expected


def test_hilbert_moment_matches():
    ctx = SymplecticContext(framed_jordan_double(), {"0": 2, "inf": 1}, F3)
    sp = hb.hilbert_space(2, F3)
    rng = random.Random(1)
    points = [sp.unflatten(tuple(rng.randrange(3) for _ in range(sp.size))) for _ in range(40)]
    for m in points + hb.zero_fiber_points(hb.hilbert_space(2, F3))[:20]:
        assert ctx.moment(m)["0"] == hb.moment(sp, m)
        assert ctx.moment_fiber(m, {}) == (hb.in_zero_fiber(sp, m) and not any(ctx.moment(m)["inf"][0]))


def test_moment_map_identity():
    ctx = SymplecticContext(double(star_quiver(3)), star_dims(3), QQ)
    rng = random.Random(0)
    for _ in range(10):
        m, B = ctx.random_rep(rng), ctx.random_lie(rng)
        assert ctx.moment_pairing(m, B) == ctx.trace_pairing(ctx.moment(m), B)


def test_quaternions(star3):
    hk = star3.hk_structures()
    assert hk.quaternion_failures() == []
    assert hk.complex_form_matches()
    literal = star3.hk_structures(literal_j=True)
    assert not literal.complex_form_matches()


def test_mu_real():
    ctx = SymplecticContext(double(jordan_quiver()), {"1": 1}, QQI)
    z = GaussianRational(2, -1)
    m = ctx.space.make_rep([((z,),), ((GaussianRational(0, 3),),)])
    assert ctx.mu_real(m)["1"] == ((QQI.zero,),)
    ctx2 = SymplecticContext(double(jordan_quiver()), {"1": 2}, QQI)
    rng = random.Random(5)
    swap = ((QQI.zero, QQI.one), (QQI.one, QQI.zero))
    g = ctx2.space.make_gauge({"1": swap})
    for _ in range(5):
        m = ctx2.random_rep(rng)
        mu = ctx2.mu_real(m)["1"]
        assert all(mu[r][c] == -mu[c][r].conjugate() for r in range(2) for c in range(2))
        moved = ctx2.mu_real(ctx2.space.act(g, m))["1"]
        assert moved == tuple(tuple(mu[1 - r][1 - c] for c in range(2)) for r in range(2))


def test_pullback_signs(star3):
    qd = star3.quiver
    can = canonical_contravariant(qd)
    assert star3.pullback_sign(can) == -1
    assert star3.pullback_sign(outer_swap(qd)) == 1
    assert star3.pullback_sign(can, "g") == 1
    assert star3.pullback_sign(None, "I", conjugate=True) == -1


def test_brane_types(star3):
    qd = star3.quiver
    can, swap = canonical_contravariant(qd), outer_swap(qd)
    assert star3.brane_type(can).type == "BAA"
    assert star3.brane_type(can, conjugate=True).type == "AAB"
    assert star3.brane_type(swap).type == "BBB"
    assert star3.brane_type(None, conjugate=True).type == "ABA"
    for s in enumerate_aut(qd):
        label = star_classify(s)
        if label != "not_star" and s.order() <= 2:
            assert star3.brane_type(s).type == BRANE_BY_CLASS[(label, False)]


def test_errors():
    qd = framed_jordan_double()
    ctx = SymplecticContext(qd, {"0": 1, "inf": 1}, QQI)
    with pytest.raises(NotStarAutomorphism):
        ctx.pullback_sign(automorphism(qd, "covariant", arrow_map={"x": "y", "y": "x"}))
    flip = automorphism(qd, "contravariant", arrow_map={"i": "j", "j": "i"})
    assert star_classify(flip) == "not_star"
    with pytest.raises(NotStarAutomorphism):
        ctx.brane_type(flip)
    with pytest.raises(WrongField):
        SymplecticContext(qd, {"0": 1, "inf": 1}, QQ).hk_structures()
