"""
Cohomology rings as exterior algebra times an even table
========================================================

Build a few rings, look at their bases and multiply classes.
"""

# %%
from lefschetz import RingPresentation, poincare_polynomial
from lefschetz.spaces import exterior, product, sphere, truncated_polynomial

# Odd spheres give exterior generators, even spheres give a table class y with y*y = 0.
s3xs2 = product(sphere(3), sphere(2))
for degree, basis in s3xs2.basis.items():
    print(degree, [s3xs2.format_basis(b) for b in basis])

# %%
# Odd classes anticommute and square to zero.
p = exterior(3, 5)
x3, x5 = p.element("x3"), p.element("x5")
print("x3*x5 =", x3 * x5, "  x5*x3 =", x5 * x3, "  x3*x3 =", x3 * x3)

# %%
# A table that is not an exterior algebra: Q[y]/(y^3) with deg y = 2.
q = truncated_polynomial(2, 2)
y = q.element("y2")
print(y * y, "|", y * y * y)

# The same ring written out by hand; build() validates the table.
same = RingPresentation.build(
    even_basis=[("y2", 2), ("y4", 4)],
    even_products={("y2", "y2"): {"y4": 1}},
)
print(poincare_polynomial(same), "==", poincare_polynomial(q))

# %%
# Poincare polynomials multiply under products.
print(poincare_polynomial(product(q, sphere(3))))
