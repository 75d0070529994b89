import math

import pytest

from quivfix.automorphisms import (automorphism, canonical_contravariant, close_subgroup,
                                   enumerate_aut, extend_to_double, is_compatible, sign, star_classify)
from quivfix.errors import InvalidAutomorphism
from quivfix.polygons import cycle_group
from quivfix.quiver import (a2_quiver, c2_quiver, double, framed_jordan_double, star_dims,
                            star_quiver, star_theta, three_vertex_quiver)


def test_framed_jordan_double_group():
    q = framed_jordan_double()
    auts = enumerate_aut(q)
    assert len(auts) == 4
    g = close_subgroup(auts, q)
    assert all(g.element_order(i) <= 2 for i in range(4))
    swap = automorphism(q, arrow_map={"x": "y", "y": "x"})
    assert swap in auts and star_classify(swap) == "not_star"
    contra = [s for s in auts if not s.covariant]
    assert len(contra) == 2 and all(sign(s) == -1 for s in contra)
    assert any(s.arrow_map["i"] == "j" and s.arrow_map["x"] == "x" for s in contra)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_star_aut_is_symmetric_group(n):
    auts = enumerate_aut(star_quiver(n))
    assert len(auts) == math.factorial(n) and all(s.covariant for s in auts)
    assert all(s.vertex_map["0"] == "0" for s in auts)


def test_a2():
    auts = enumerate_aut(a2_quiver())
    assert len(enumerate_aut(a2_quiver(), "covariant")) == 1
    contra = enumerate_aut(a2_quiver(), "contravariant")
    assert len(auts) == 2 and len(contra) == 1 and contra[0].vertex_map["1"] == "2"


def test_group_closure_and_signs():
    assert len(cycle_group(4, [1, 2, 3])) == 3
    q3 = star_quiver(3)
    t12 = automorphism(q3, vertex_map={"1": "2", "2": "1"}, arrow_map={"a1": "a2", "a2": "a1"})
    t23 = automorphism(q3, vertex_map={"2": "3", "3": "2"}, arrow_map={"a2": "a3", "a3": "a2"})
    assert len(close_subgroup([t12, t23], q3)) == 6
    for q in (framed_jordan_double(), c2_quiver(), double(star_quiver(2))):
        G = close_subgroup(enumerate_aut(q), q)
        assert len(G) == len(enumerate_aut(q))
        for i in range(len(G)):
            for j in range(len(G)):
                assert sign(G[G.mul(i, j)]) == sign(G[i]) * sign(G[j])
            assert G[i].inverse() in G.elements


def test_invalid():
    with pytest.raises(InvalidAutomorphism):
        automorphism(a2_quiver(), vertex_map={"1": "2", "2": "1"})


def test_compatibility():
    q = c2_quiver()
    G = close_subgroup([automorphism(q, vertex_map={"1": "2", "2": "1"}, arrow_map={"a": "b", "b": "a"})])
    assert is_compatible(G, {"1": 1, "2": 1}, {"1": 0, "2": 0}) == (True, True)
    assert is_compatible(G, {"1": 1, "2": 1}, {"1": 1, "2": -1})[1] is False
    G = cycle_group(4, [1, 2])
    assert is_compatible(G, star_dims(4), star_theta([1, 1, 2, 3]))[1]
    assert not is_compatible(G, star_dims(4), star_theta([1, 2, 2, 3]))[1]
    fj = framed_jordan_double()
    contra = close_subgroup([s for s in enumerate_aut(fj, "contravariant")][:1], fj)
    assert is_compatible(contra, {"0": 1, "inf": 1}, {"0": -1, "inf": 1})[1] is False
    assert is_compatible(contra, {"0": 1, "inf": 1}, {"0": 0, "inf": 0})[1] is True


def test_star_classification():
    q3d = double(star_quiver(3))
    assert star_classify(canonical_contravariant(q3d)) == "anti_symplectic"
    for s in enumerate_aut(star_quiver(3)):
        e = extend_to_double(s, q3d)
        assert star_classify(e) == "symplectic" and e.covariant
    ident = extend_to_double(enumerate_aut(star_quiver(3))[0], q3d)
    assert ident.is_identity()
    tv = double(three_vertex_quiver())
    bad = [s for s in enumerate_aut(tv) if s.arrow_map["a"] == "a*" and s.arrow_map["b"] == "c"]
    assert bad and all(star_classify(s) == "not_star" for s in bad)
    stars = [s for s in enumerate_aut(q3d) if star_classify(s) != "not_star"]
    assert len(stars) == 12
    val = {"symplectic": 1, "anti_symplectic": -1}
    for s in stars:
        for t in stars:
            assert val[star_classify(s * t)] == val[star_classify(s)] * val[star_classify(t)]
