import pytest

from quivfix import stability as st
from quivfix.cohomology import EquivariantRep
from quivfix.errors import ContravariantElement, IsSemistable, TooLarge
from quivfix.polygons import star_rep, star_space
from quivfix.quiver import star_theta
from quivfix.reps import TwistedAction

from conftest import F5

THETA = {"1": 1, "2": -1}


def one(x):
    return ((x,),)


def test_k2_subreps(k2):
    sp = k2[0]
    subs = st.subreps(sp, sp.make_rep([one(1), one(1)]))
    assert sorted(s.dimvec for s in subs) == [(0, 0), (0, 1), (1, 1)]
    assert len(st.subreps(sp, sp.make_rep([one(0), one(0)]))) == 4


def test_k2_stability(k2):
    sp = k2[0]
    zero = sp.make_rep([one(0), one(0)])
    assert not st.is_semistable(sp, zero, THETA)
    assert st.scss(sp, zero, THETA).dimvec == (1, 0)
    chain = st.hn_filtration(sp, zero, THETA)
    assert [s.dimvec for s in chain] == [(0, 0), (1, 0), (1, 1)]
    slopes = st.hn_slopes(sp, chain, THETA)
    assert slopes == sorted(slopes, reverse=True)
    m = sp.make_rep([one(1), one(1)])
    assert st.is_stable(sp, m, THETA)
    with pytest.raises(IsSemistable):
        st.scss(sp, m, THETA)
    assert st.hn_filtration(sp, m, THETA)[-1].dimvec == (1, 1)


def test_c2_stability(c2):
    sp = c2[0]
    theta = {"1": 0, "2": 0}
    for a in range(5):
        for b in range(5):
            m = sp.make_rep([one(a), one(b)])
            assert st.is_stable(sp, m, theta) == (a * b % 5 != 0)
            assert st.is_semistable(sp, m, theta)


def test_zero_space_has_no_slope(k2):
    from quivfix.reps import RepSpace
    sp0 = RepSpace(k2[0].quiver, {"1": 0, "2": 0}, F5)
    with pytest.raises(TooLarge):
        st.analyze(sp0, next(iter(sp0.points())), THETA)


def test_star_subreps():
    f = F5
    sp = star_space(3, f)
    m = star_rep(sp, [(1, 0), (0, 1), (1, 1)])
    subs = st.subreps(sp, m)
    # a line L at the centre drags along exactly the outer lines that map into it
    dims = sorted(s.dimvec for s in subs)
    assert (0, 0, 0, 0) in dims and (2, 1, 1, 1) in dims
    assert all(s.dimvec[0] >= 1 or s.dimvec == (0, 0, 0, 0) for s in subs)
    assert st.is_stable(sp, m, star_theta([1, 1, 1]))
    m = star_rep(sp, [(1, 0), (1, 0), (0, 1)])
    assert not st.is_semistable(sp, m, star_theta([1, 1, 1]))


def test_equivariant_matches_plain_for_trivial_group(k2):
    from quivfix.automorphisms import close_subgroup
    sp = k2[0]
    G = close_subgroup([], sp.quiver)
    act = TwistedAction(sp, G)
    for m in list(sp.points())[:25]:
        eq = EquivariantRep(act, m)
        assert st.equivariant_semistable(eq, THETA) == st.is_semistable(sp, m, THETA)
        assert st.equivariant_semistable(eq, THETA, stable=True) == st.is_stable(sp, m, THETA)


def test_equivariant_rejects_contravariant():
    from test_cohomology import k2_contravariant
    sp, G = k2_contravariant(F5)
    act = TwistedAction(sp, G)
    with pytest.raises(ContravariantElement):
        st.equivariant_semistable(EquivariantRep(act, sp.make_rep([one(1), one(1)])), THETA)
