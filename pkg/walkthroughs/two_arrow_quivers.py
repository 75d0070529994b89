"""Fixed points of an arrow swap on small moduli over F_5.

Run: python walkthroughs/two_arrow_quivers.py
"""
from quivfix.fields import PrimeField
from quivfix.fixtures import load_fixture
from quivfix.moduli import ModuliProblem, decompose_fixed_locus, sigma_fixed_moduli
from quivfix.reps import RepSpace


def describe(name, mode="closed"):
    fx = load_fixture(name, PrimeField(5))
    space = RepSpace(fx.quiver, fx.dims, fx.field, fx.acting)
    problem = ModuliProblem(space, fx.theta)
    stable = problem.stable_orbits()
    fixed = sigma_fixed_moduli(problem, fx.group)
    print(f"{name}: {len(stable)} stable orbits, {len(fixed)} fixed by the swap")
    report = decompose_fixed_locus(problem, fx.group, mode)
    for k, comps in sorted(report.classes.items()):
        sizes = [len(c.image) for c in comps]
        print(f"  type class {report.h2.labels[k]}: component sizes {sizes}")
    print(f"  uncovered: {len(report.uncovered)}  fibres uniform: {report.fiber_law}")
    if report.caveat:
        print(f"  note: {report.caveat}")


if __name__ == "__main__":
    # Kronecker quiver, arrows swapped: two fixed points, each caught by its own twist.
    describe("k2")
    # Oriented 2-cycle, vertices and arrows swapped. Over F_5 two fixed points need a
    # non-square type class, so the closed-field recipe misses them ...
    describe("c2")
    # ... and using every F_5 type class recovers them.
    describe("c2", mode="field")
