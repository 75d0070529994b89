"""Two points in the plane over F_3 as framed commuting-matrix data.

Run: python walkthroughs/points_in_the_plane.py
"""
from collections import Counter

from quivfix import hilbert as hb
from quivfix.fields import PrimeField
from quivfix.moduli import sigma_fixed_moduli

F3 = PrimeField(3)

problem = hb.HilbertProblem(2, F3)
stable = problem.stable_orbits()
print(f"length-2 subschemes of the plane over F_3: {len(stable)} "
      f"(q^4 + q^3 = {hb.hilbert_point_count(2, 3)})")

# A stable point records an ideal of codimension 2; print a few.
for o in stable[:3]:
    J = hb.ideal_of(problem.space, o.rep)
    print("  J =", ", ".join(J.generators_text()[:3]))

# Swapping the coordinates x <-> y.
group = hb.swap_group(problem.space)
fixed = sigma_fixed_moduli(problem, group)
on_diagonal = [o for o in fixed if hb.parts(problem.space, o.rep)["x"] == hb.parts(problem.space, o.rep)["y"]]
print(f"fixed by x <-> y: {len(fixed)}, of which {len(on_diagonal)} have M_x = M_y")

# Involutions of GL_2(F_3) up to conjugacy label the possible twists.
info = hb.involution_classes(2, F3)
print("involution classes (sizes):", info["class_sizes"])

ranks = Counter(len(hb.krylov_span(problem.space, o.rep)) for o in fixed)
print("cyclic-span dimensions of fixed points:", dict(ranks))
