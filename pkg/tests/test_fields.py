import itertools
import math
from fractions import Fraction

import pytest

from quivfix.errors import DivisionByZero, FieldMismatch, InfiniteField
from quivfix.fields import (QQ, QQI, GaussianRational, PrimeField, Scalar, arith, field_from_string,
                            power_class_quotient, unit_group)


def S(f, x):
    return Scalar(f, x)


def test_inverse_mod_5():
    assert arith("inv", S(PrimeField(5), 3)).value == 2


def test_multiplicative_identity():
    for f, x in [(PrimeField(7), 4), (QQ, Fraction(3, 7)), (QQI, GaussianRational(2, 3))]:
        assert arith("mul", S(f, x), S(f, 1)) == S(f, x)


def test_gaussian_conjugation():
    z = S(QQI, GaussianRational(2, 3))
    assert arith("conj", z) == S(QQI, GaussianRational(2, -3))
    assert arith("conj", arith("conj", z)) == z
    w = S(QQI, GaussianRational(Fraction(1, 2), -5))
    assert arith("conj", z * w) == arith("conj", z) * arith("conj", w)


def test_division_by_zero_and_mismatch():
    with pytest.raises(DivisionByZero):
        arith("inv", S(PrimeField(5), 0))
    with pytest.raises(FieldMismatch):
        arith("add", S(PrimeField(5), 1), S(PrimeField(3), 1))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_field_axioms_exhaustive(p):
    f = PrimeField(p)
    xs = [S(f, x) for x in range(p)]
    zero, one = S(f, 0), S(f, 1)
    for a, b, c in itertools.product(xs, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in xs:
        assert a + zero == a and a * one == a and a + (-a) == zero
        if a != zero:
            assert a * a.inv() == one


def test_unit_groups():
    assert [u.value for u in unit_group(PrimeField(3))] == [1, 2]
    assert [u.value for u in unit_group(PrimeField(5))] == [1, 2, 3, 4]
    assert len(unit_group(PrimeField(7))) == 6
    with pytest.raises(InfiniteField):
        unit_group(QQ)


def _brute_cosets(p, n):
    powers = {pow(x, n, p) for x in range(1, p)}
    return len({frozenset(x * y % p for y in powers) for x in range(1, p)})


def test_power_classes():
    assert [s.value for s in power_class_quotient(PrimeField(5), 2)] == [1, 2]
    assert [s.value for s in power_class_quotient(PrimeField(5), 1)] == [1]
    # cubes in F_7^x are {1, 6}, leaving three cosets
    assert [s.value for s in power_class_quotient(PrimeField(7), 3)] == [1, 2, 3]
    for p in (3, 5, 7, 11, 13):
        for n in range(1, 7):
            size = len(power_class_quotient(PrimeField(p), n))
            assert size == math.gcd(n, p - 1) == _brute_cosets(p, n)


def test_canonical_idempotent_and_parsing():
    f = PrimeField(5)
    assert f.reduce(f.reduce(-7)) == f.reduce(-7) == 3
    assert QQ.reduce(QQ.reduce(Fraction(6, 4))) == Fraction(3, 2)
    for text in ["2+3i", "-1/2i", "3/7", "i", "-i", "4-2/3i"]:
        z = QQI.parse(text)
        assert QQI.parse(QQI.format(z)) == z
    assert QQI.parse("2+3i") == GaussianRational(2, 3)
    assert field_from_string("Fp:5") == PrimeField(5)
    assert field_from_string("Qi") is QQI
