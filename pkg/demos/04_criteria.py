"""
Periodic-point verdicts
=======================

The recognizer picks the criterion; each Yes is backed by a nonzero L(f^k).
"""

# %%
from lefschetz import (
    RingPresentation,
    classify_lppf_extended,
    from_generator_images,
    identity_map,
    lefschetz_via_duan,
    lefschetz_via_extended,
    periodic_point_verdict,
    recognize_shape,
)
from lefschetz.spaces import exterior, product, sphere


def show(f):
    v = periodic_point_verdict(f)
    print(f"{recognize_shape(f.presentation).kind.value:26s} {v.has_periodic_point.value:8s} "
          f"[{v.applied_theorem}] {v.explanation}")


# %%
# Exterior spaces: the closed form is det(I - A(f)^k), no eigenvalues needed.
p = exterior(3, 5)
f = from_generator_images(p, {"x3": 2 * p.element("x3"), "x5": -p.element("x5")})
print([str(lefschetz_via_duan(f, k)) for k in range(1, 6)])
show(f)
show(identity_map(p))

# %%
# S3 x S2: odd eigenvalue -1 together with even eigenvalue -1 makes the map LPPF.
q = product(sphere(3), sphere(2))
for a, b in ((2, 1), (-1, -1), (2, -1)):
    g = from_generator_images(q, {"x3": a * q.element("x3"), "y2": b * q.element("y2")})
    print(a, b, classify_lppf_extended(g).value, [str(lefschetz_via_extended(g, n)) for n in range(1, 5)])
    show(g)

# %%
# A general tensor: Q[y]/(y^3) with an odd generator.
r = RingPresentation.build(odd=[("x3", 3)], even_basis=[("y2", 2), ("y4", 4)],
                           even_products={("y2", "y2"): {"y4": 1}})
show(from_generator_images(r, {"x3": 2 * r.element("x3"), "y2": r.element("y2")}))
show(from_generator_images(r, {"x3": -r.element("x3"), "y2": r.element("y2")}))

# %%
# Even cohomology only: some L(f^k) is always nonzero.
show(from_generator_images(sphere(4), {"y4": -sphere(4).element("y4")}))
