import pytest

from quivfix.fields import PrimeField
from quivfix.fixtures import build_fixture
from quivfix.moduli import ModuliProblem
from quivfix.reps import RepSpace

F3, F5 = PrimeField(3), PrimeField(5)


def space_of(name, field=None):
    fx = build_fixture(name)
    return RepSpace(fx.quiver, fx.dims, field or fx.field, fx.acting), fx


@pytest.fixture(scope="session")
def k2():
    sp, fx = space_of("k2")
    return sp, fx.group, ModuliProblem(sp, fx.theta)


@pytest.fixture(scope="session")
def c2():
    sp, fx = space_of("c2")
    return sp, fx.group, ModuliProblem(sp, fx.theta)
