"""JSON (de)serialisation with scalars written as strings."""
from __future__ import annotations

import json

from .automorphisms import AutGroup, QuiverAut, close_subgroup
from .errors import IncompatibleData
from .fields import field_from_json, field_from_string
from .quiver import Quiver, check_vertex_data


def matrix_to_json(field, M) -> list:
    return [[field.format(x) for x in row] for row in M]


def matrix_from_json(field, rows) -> tuple:
    return tuple(tuple(field.parse(str(x)) for x in row) for row in rows)


def rep_to_json(space, m) -> dict:
    return {a: matrix_to_json(space.field, M) for a, M in zip(space.quiver.arrows, m)}


def rep_from_json(space, obj: dict):
    return space.make_rep({a: matrix_from_json(space.field, obj[a]) for a in space.quiver.arrows})


def gauge_to_json(space, g) -> dict:
    return {v: matrix_to_json(space.field, B) for v, B in zip(space.quiver.vertices, g)}


def gauge_from_json(space, obj: dict):
    return space.make_gauge({v: matrix_from_json(space.field, obj[v]) for v in space.quiver.vertices})


def parse_field(spec):
    if isinstance(spec, dict):
        return field_from_json(spec)
    return field_from_string(str(spec))


class Problem:
    """A bundled input: quiver, dimension vector, weights, group, field, acting vertices."""

    def __init__(self, quiver: Quiver, dims: dict, field, theta=None, generators=None,
                 acting=None, name: str = "", extra=None):
        self.quiver = quiver
        self.dims = check_vertex_data(quiver, dims)
        self.theta = check_vertex_data(quiver, theta, "stability parameter") if theta else \
            {v: 0 for v in quiver.vertices}
        self.field = field
        self.generators = None if generators is None else list(generators)
        self.group = None if generators is None else close_subgroup(self.generators, quiver)
        self.acting = acting
        self.name = name
        self.extra = dict(extra or {})

    def to_json(self) -> dict:
        obj = {"name": self.name, "quiver": self.quiver.to_json(), "dims": dict(self.dims),
               "theta": dict(self.theta), "field": self.field.to_json()}
        if self.group is not None:
            obj["group"] = {"generators": [s.to_json() for s in self.generators]}
        if self.acting is not None:
            obj["acting"] = list(self.acting)
        if self.extra:
            obj["extra"] = self.extra
        return obj

    @classmethod
    def from_json(cls, obj: dict, field=None):
        def at(path, fn):
            try:
                return fn()
            except (KeyError, TypeError, ValueError) as exc:
                raise IncompatibleData(f"bad input at {path}: {exc}") from None

        quiver = at("$.quiver", lambda: Quiver.from_json(obj["quiver"]))
        dims = at("$.dims", lambda: {str(k): int(v) for k, v in obj["dims"].items()})
        theta = at("$.theta", lambda: {str(k): int(v) for k, v in obj.get("theta", {}).items()})
        fld = field or at("$.field", lambda: parse_field(obj["field"]))
        gens = []
        for k, g in enumerate(obj.get("group", {}).get("generators", [])):
            gens.append(at(f"$.group.generators[{k}]", lambda g=g: QuiverAut.from_json(quiver, g)))
        return cls(quiver, dims, fld, theta or None, gens if "group" in obj else None,
                   obj.get("acting"), obj.get("name", ""), obj.get("extra"))


def load_problem(path: str, field=None) -> Problem:
    with open(path) as fh:
        return Problem.from_json(json.load(fh), field)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def group_from_json(quiver: Quiver, obj: dict) -> AutGroup:
    return close_subgroup([QuiverAut.from_json(quiver, g) for g in obj.get("generators", [])], quiver)
