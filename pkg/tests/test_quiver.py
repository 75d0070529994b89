from fractions import Fraction

import pytest

from quivfix.errors import DanglingArrow, DuplicateId
from quivfix.fields import PrimeField
from quivfix.polygons import cycle_group
from quivfix.quiver import (Quiver, a2_quiver, chi_theta, double, framed_jordan_double,
                            induced_dim_stab, jordan_quiver, quotient_quiver, slope, star_dims,
                            star_quiver, star_theta, theta_prime)
from quivfix.reps import RepSpace

from conftest import space_of


def test_validation():
    a2 = a2_quiver()
    assert a2.head["a"] == "2"
    with pytest.raises(DanglingArrow):
        Quiver(["1"], [("a", "1", "2")])
    with pytest.raises(DuplicateId):
        Quiver(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])


def test_doubles():
    jd = double(jordan_quiver())
    assert set(jd.arrows) == {"x", "x*"} and jd.star["x"] == "x*"
    fj = framed_jordan_double()
    assert set(fj.arrows) == {"x", "y", "i", "j"}
    assert (fj.tail["j"], fj.head["j"]) == ("0", "inf") and fj.star["i"] == "j"
    a2d = double(a2_quiver())
    assert (a2d.tail["a*"], a2d.head["a*"]) == ("2", "1")


def test_quotient_quivers():
    _, k2 = space_of("k2")
    qq, vproj, aproj = quotient_quiver(k2.quiver, k2.group)
    assert len(qq.vertices) == 2 and len(qq.arrows) == 1
    _, c2 = space_of("c2")
    qq, vproj, aproj = quotient_quiver(c2.quiver, c2.group)
    assert len(qq.vertices) == 1 and len(qq.arrows) == 1
    assert qq.tail[qq.arrows[0]] == qq.head[qq.arrows[0]]
    q4 = star_quiver(4)
    qq, vproj, aproj = quotient_quiver(q4, cycle_group(4, [1, 2]))
    assert len(qq.vertices) == 4 and len(qq.arrows) == 3
    for a in q4.arrows:
        assert vproj[q4.head[a]] == qq.head[aproj[a]] and vproj[q4.tail[a]] == qq.tail[aproj[a]]


def test_induced_weights():
    _, k2 = space_of("k2")
    assert induced_dim_stab(k2.quiver, k2.group, k2.dims, k2.theta) == \
        ({"1": 1, "2": 1}, {"1": 1, "2": -1})
    for r in (1, 2):
        q = star_quiver(5)
        d, th = induced_dim_stab(q, cycle_group(5, [1, 2, 3]), star_dims(5), star_theta([r, r, r, 1, 2]))
        assert list(th.values()) == list(star_theta([3 * r, 1, 2]).values())


def test_slopes():
    assert slope({"1": 1, "2": -1}, {"1": 1, "2": 0}) == 1
    assert slope({"1": 1, "2": -1}, {"1": 1, "2": 1}) == 0
    r = [1, 2, 3, 4]
    assert slope(star_theta(r), star_dims(4)) == 0
    th = {"1": 3, "2": 5, "3": -1}
    d = {"1": 2, "2": 1, "3": 4}
    tp = theta_prime(th, d)
    assert sum(tp[v] * d[v] for v in d) == 0
    assert slope(th, d) == Fraction(7, 7)


def test_chi():
    f = PrimeField(5)
    th, d = {"1": 1, "2": -1}, {"1": 1, "2": 1}
    assert theta_prime(th, d) == {"1": 2, "2": -2}
    sp = RepSpace(a2_quiver(), d, f)
    for g in sp.gauge_elements():
        s1, s2 = g[0][0][0], g[1][0][0]
        assert chi_theta(f, th, d, g) == f.reduce(f.inv(s1) ** 2 * s2 ** 2)
        assert chi_theta(f, {"1": 0, "2": 0}, d, g) == 1
        for h in sp.gauge_elements():
            assert chi_theta(f, th, d, sp.gauge_mul(g, h)) == \
                f.reduce(chi_theta(f, th, d, g) * chi_theta(f, th, d, h))
    for t in f.units():
        assert chi_theta(f, th, d, sp.delta(t)) == 1
