"""Brane types of involutions on the doubled three-arm star over Q(i).

Run: python walkthroughs/brane_types.py
"""
from quivfix.automorphisms import automorphism, canonical_contravariant
from quivfix.fields import QQI
from quivfix.quiver import double, star_dims, star_quiver
from quivfix.symplectic import SymplecticContext

qd = double(star_quiver(3))
ctx = SymplecticContext(qd, star_dims(3), QQI)

hk = ctx.hk_structures()
print("quaternion relations broken:", hk.quaternion_failures() or "none")
print("omega_J + i omega_K equals the Liouville form:", hk.complex_form_matches())

swap = automorphism(qd, "covariant", {"1": "2", "2": "1"},
                    {"a1": "a2", "a2": "a1", "a1*": "a2*", "a2*": "a1*"})
cases = [("outer swap", swap, False),
         ("a -> a*", canonical_contravariant(qd), False),
         ("a -> a*, conjugated", canonical_contravariant(qd), True),
         ("conjugation alone", None, True)]
for label, s, conj in cases:
    cert = ctx.brane_type(s, conj)
    signs = " ".join(f"{k}{'+' if v == 1 else '-'}" for k, v in cert.signs.items())
    print(f"{label:22s} {cert.star_class:16s} {signs}  ->  {cert.type}")
