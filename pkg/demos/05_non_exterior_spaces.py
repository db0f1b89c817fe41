"""
Spaces that are not rational exterior
=====================================
"""

# %%
from lefschetz import betti_compatible_with_exterior, odd_sphere_bundle, poincare_polynomial, recognize_shape
from lefschetz.criteria import betti_exterior_reason
from lefschetz.spaces import kodaira_thurston_betti, product, s5_bundle_fixture, sphere

kt = kodaira_thurston_betti()
print(tuple(kt), betti_compatible_with_exterior(kt), "-", betti_exterior_reason(kt))

# %%
# Degree-3 classes with vanishing products, so the degree-8 classes are new generators.
s5 = s5_bundle_fixture()
print(s5.betti())
print(recognize_shape(s5).witness)
print(betti_exterior_reason(s5.betti()))

# %%
# An odd sphere bundle whose fibre is at least as big as the base is a tensor product.
base = product(sphere(3), sphere(3))
e = odd_sphere_bundle(base, 7)
print(e.name, poincare_polynomial(e), recognize_shape(e).kind.value)
try:
    odd_sphere_bundle(base, 5)
except ValueError as exc:
    print("rejected:", exc)
