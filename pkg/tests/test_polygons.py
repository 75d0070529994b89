import itertools

import pytest

from quivfix import polygons as pg
from quivfix.quiver import star_theta
from quivfix.stability import is_semistable

from conftest import F3, F5


def test_projective_line():
    assert len(pg.projective_line(F5)) == 6
    assert pg.normalize_point(F5, (2, 4)) == (1, 2)
    assert pg.normalize_point(F5, (0, 3)) == (0, 1)
    with pytest.raises(ValueError):
        pg.normalize_point(F5, (0, 0))


def test_configuration_rule():
    distinct = [(1, 0), (0, 1), (1, 1), (1, 2)]
    assert pg.configuration_semistability(F5, distinct, [1, 1, 1, 1])
    assert pg.quiver_semistability(F5, distinct, [1, 1, 1, 1])
    three_equal = [(1, 0), (2, 0), (3, 0), (0, 1)]
    assert not pg.configuration_semistability(F5, three_equal, [1, 1, 1, 1])
    assert not pg.quiver_semistability(F5, three_equal, [1, 1, 1, 1])
    # two equal points out of four balance exactly
    assert pg.configuration_semistability(F5, [(1, 0), (1, 0), (0, 1), (1, 1)], [1, 1, 1, 1])


def test_zero_arrow_is_unstable():
    sp = pg.star_space(3, F3)
    m = pg.star_rep(sp, [(0, 0), (1, 0), (0, 1)])
    assert not is_semistable(sp, m, star_theta([1, 1, 1]))


@pytest.mark.parametrize("weights", [[1, 1, 1], [2, 1, 1], [1, 1, 1, 1]])
def test_correspondence(weights):
    table = pg.correspondence_table(F3, weights)
    assert len(table) == 4 ** len(weights)
    assert all(c == q for _, c, q in table)


def test_correspondence_f5_sample():
    line = pg.projective_line(F5)
    for pts in itertools.islice(itertools.product(line, repeat=3), 0, None, 7):
        assert pg.configuration_semistability(F5, pts, [1, 1, 1]) == \
            pg.quiver_semistability(F5, pts, [1, 1, 1])


def test_groups():
    assert len(pg.cycle_group(5, [1, 2, 3])) == 3
    assert len(pg.symmetric_group(3)) == 6


def test_star4_census():
    census = pg.transposition_census(4, F3)
    assert census["candidates"] == 8
    assert census["computed"] == 6
    assert census["nonempty"] == 1 and census["uncovered"] == 0 and census["fixed"] == 1
    (full,) = [r for r in census["components"] if r["size"]]
    assert full["u0"] == "A" and full["outer"] == ["1 mod 3", "2 mod 3"]
    assert all(r["size"] == 0 for r in census["components"] if r["u0"] == "I")
