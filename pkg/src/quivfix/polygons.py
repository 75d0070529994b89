"""Weighted points on the projective line and the star-quiver model."""
from __future__ import annotations

import itertools

from . import linalg
from .automorphisms import automorphism, close_subgroup
from .moduli import ModuliProblem, decompose_fixed_locus
from .quiver import star_dims, star_quiver, star_theta
from .reps import RepSpace
from .stability import is_semistable


def projective_line(field) -> list:
    """Normalised points [1:a] and [0:1] of P^1(F_p)."""
    return [(field.one, a) for a in field.elements()] + [(field.zero, field.one)]


def normalize_point(field, v) -> tuple:
    a, b = (field.reduce(x) for x in v)
    if not field.is_zero(a):
        return (field.one, field.reduce(b * field.inv(a)))
    if field.is_zero(b):
        raise ValueError("the zero vector is not a point of P^1")
    return (field.zero, field.one)


def configuration_semistability(field, points, weights) -> bool:
    """Σ_{p_i = p_0} r_i ≤ Σ_{p_i ≠ p_0} r_i for every p_0."""
    pts = [normalize_point(field, p) for p in points]
    total = sum(weights)
    for p0 in set(pts):
        here = sum(r for p, r in zip(pts, weights) if p == p0)
        if here > total - here:
            return False
    return True


def star_space(n: int, field) -> RepSpace:
    return RepSpace(star_quiver(n), star_dims(n), field)


def star_rep(space: RepSpace, vectors):
    """M_k is the 2×1 column of the k-th vector."""
    return space.make_rep([tuple((x,) for x in v) for v in vectors])


def quiver_semistability(field, points, weights) -> bool:
    n = len(points)
    sp = star_space(n, field)
    return is_semistable(sp, star_rep(sp, points), star_theta(weights))


def correspondence_table(field, weights) -> list:
    """(points, configuration flag, quiver flag) for every tuple of points of P^1(F_p)."""
    line = projective_line(field)
    out = []
    for pts in itertools.product(line, repeat=len(weights)):
        out.append((pts, configuration_semistability(field, pts, weights),
                    quiver_semistability(field, pts, weights)))
    return out


def cycle_group(n: int, subset):
    """Σ_I: the cyclic permutation of the outer vertices listed in ``subset``."""
    q = star_quiver(n)
    subset = [str(k) for k in subset]
    shifted = subset[1:] + subset[:1]
    vmap = dict(zip(subset, shifted))
    amap = {f"a{k}": f"a{w}" for k, w in zip(subset, shifted)}
    return close_subgroup([automorphism(q, "covariant", vmap, amap)], q)


def symmetric_group(n: int):
    q = star_quiver(n)
    gens = []
    for k in range(1, n):
        a, b = str(k), str(k + 1)
        gens.append(automorphism(q, "covariant", {a: b, b: a}, {f"a{a}": f"a{b}", f"a{b}": f"a{a}"}))
    return close_subgroup(gens, q)


def _conj_class(field, u0):
    """'I', 'A' (a reflection) or '-I' for an involution of F_p^2."""
    ident = linalg.identity(field, 2)
    if u0 == ident:
        return "I"
    if u0 == linalg.scalar_matrix(field, field.reduce(-1), 2):
        return "-I"
    return "A"


def transposition_census(n: int, field, weights=None) -> dict:
    """Components of the fixed stable locus of (12) on the star quiver Q_n.

    Compares the computed twist classes with the 2^{n-1} candidate labels
    (u_0 ∈ {I, A}, u_1 = u_2 = 1, u_i = ±1 for i ≥ 3) and records which
    components are empty.
    """
    weights = list(weights or [1] * n)
    sp = star_space(n, field)
    group = cycle_group(n, [1, 2])
    problem = ModuliProblem(sp, star_theta(weights))
    report = decompose_fixed_locus(problem, group)
    s = group.non_identity()[0]
    rows = []
    for comp in report.components:
        b = comp.twist[s]
        label = {"u0": _conj_class(field, b[0]),
                 "outer": [field.format(b[k][0][0]) for k in range(3, n + 1)],
                 "size": len(comp.image)}
        if label["u0"] == "I" and any(b[k][0][0] != field.one for k in range(3, n + 1)):
            label["case"] = "u0 = I with a sign: empty expected"
        elif label["u0"] == "I":
            label["case"] = "trivial family"
        else:
            label["case"] = "u0 reflection"
        rows.append(label)
    return {"candidates": 2 ** (n - 1), "computed": len(report.components),
            "nonempty": len(report.nonempty_components), "components": rows,
            "uncovered": len(report.uncovered), "fixed": len(report.fixed), "report": report}
