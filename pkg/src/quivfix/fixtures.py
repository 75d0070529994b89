"""Named example problems, bundled as JSON under ``quivfix/data``."""
from __future__ import annotations

import json
import os
from importlib import resources

from .automorphisms import automorphism, canonical_contravariant
from .errors import IncompatibleData
from .fields import QQI, PrimeField
from .io import Problem, dumps
from .quiver import (c2_quiver, double, framed_jordan_double, jordan_quiver, k2_quiver,
                     star_dims, star_quiver, star_theta)

FIXTURE_IDS = ("k2", "c2", "hilbert-n1", "hilbert-n2", "star-4", "star-5", "jordan-double",
               "star3-double")


def _k2():
    q = k2_quiver()
    return Problem(q, {"1": 1, "2": 1}, PrimeField(5), {"1": 1, "2": -1},
                   [automorphism(q, arrow_map={"a": "b", "b": "a"})], name="k2",
                   extra={"kind": "moduli",
                          "expected": {"stable_orbits": 6, "fixed_orbits": 2, "components": 2,
                                       "uncovered": 0, "h1_delta": 2, "h1_G": 4, "kernel": 1}})


def _c2():
    q = c2_quiver()
    return Problem(q, {"1": 1, "2": 1}, PrimeField(5), {"1": 0, "2": 0},
                   [automorphism(q, vertex_map={"1": "2", "2": "1"}, arrow_map={"a": "b", "b": "a"})],
                   name="c2",
                   extra={"kind": "moduli",
                          "expected": {"fixed_gauge_order": 4, "fiber_size": 2, "h1_G": 1,
                                       "uncovered": 2}})


def _hilbert(n):
    q = framed_jordan_double()
    expected = {"stable_points": 9} if n == 1 else {
        "stable_points": 108, "h1_classes": 3, "u1_fixed_gauge": 4, "u2_stable_fixed": 0,
        "ideal_codim": 2}
    return Problem(q, {"0": n, "inf": 1}, PrimeField(3), {"0": -1, "inf": n},
                   [automorphism(q, arrow_map={"x": "y", "y": "x"})], acting=["0"],
                   name=f"hilbert-n{n}", extra={"kind": "hilbert", "n": n, "expected": expected})


def _star(n):
    q = star_quiver(n)
    weights = [1] * n
    return Problem(q, star_dims(n), PrimeField(3), star_theta(weights),
                   [automorphism(q, vertex_map={"1": "2", "2": "1"}, arrow_map={"a1": "a2", "a2": "a1"})],
                   name=f"star-{n}",
                   extra={"kind": "star", "weights": weights,
                          "expected": {"candidate_components": 2 ** (n - 1),
                                       "quotient_weights": [2] + [1] * (n - 2)}})


def _jordan_double():
    qd = double(jordan_quiver())
    return Problem(qd, {"1": 2}, QQI, None, [], name="jordan-double",
                   extra={"kind": "symplectic"})


def _star3_double():
    qd = double(star_quiver(3))
    return Problem(qd, star_dims(3), QQI, None, [canonical_contravariant(qd)], name="star3-double",
                   extra={"kind": "symplectic",
                          "expected": {"canonical": "BAA", "canonical_conjugate": "AAB",
                                       "transposition": "BBB", "identity_conjugate": "ABA"}})


BUILDERS = {"k2": _k2, "c2": _c2, "hilbert-n1": lambda: _hilbert(1), "hilbert-n2": lambda: _hilbert(2),
            "star-4": lambda: _star(4), "star-5": lambda: _star(5), "jordan-double": _jordan_double,
            "star3-double": _star3_double}


def build_fixture(name: str) -> Problem:
    if name not in BUILDERS:
        raise IncompatibleData(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_IDS)}")
    return BUILDERS[name]()


def fixture_text(name: str) -> str:
    return resources.files("quivfix").joinpath("data", f"{name}.json").read_text()


def load_fixture(name: str, field=None) -> Problem:
    if name not in BUILDERS:
        raise IncompatibleData(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_IDS)}")
    return Problem.from_json(json.loads(fixture_text(name)), field)


def write_fixtures(directory: str) -> list:
    os.makedirs(directory, exist_ok=True)
    paths = []
    for name in FIXTURE_IDS:
        path = os.path.join(directory, f"{name}.json")
        with open(path, "w") as fh:
            fh.write(dumps(build_fixture(name).to_json()) + "\n")
        paths.append(path)
    return paths
