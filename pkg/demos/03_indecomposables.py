"""
Indecomposables and the eigenvalues that matter
===============================================

Every criterion looks at the map induced on H/D, classes modulo products.
"""

# %%
from lefschetz import eigen_summary, from_generator_images, induced_map, quotient_basis
from lefschetz.polynomial import char_poly, cyclotomic, root_of_unity_orders
from lefschetz.spaces import exterior, product, sphere, truncated_polynomial

p = product(exterior(1, 3, 3), truncated_polynomial(2, 2))
qb = quotient_basis(p)
print({r: [p.format_basis(b) for b in q.representatives] for r, q in qb.degrees.items() if q.representatives})

# %%
# Decomposable corrections do not change the induced map.
img = {g.name: p.element(g.name) for g in p.odd_generators}
img["x3"] = img["x3"] + p.monomial(["x1"], "y2")
img["y2"] = -p.element("y2")
f = from_generator_images(p, img)
a = induced_map(f)
print("odd block:", [[str(c) for c in row] for row in a.odd_block])
print("even block:", [[str(c) for c in row] for row in a.even_block])

# %%
s = eigen_summary(a)
print("char poly odd:", s.char_poly_odd, " even:", s.char_poly_even)
print("roots of unity among odd eigenvalues, by order:", sorted(s.root_of_unity_orders_odd))

# %%
# Root-of-unity detection is trial division by cyclotomic polynomials.
m = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
print(char_poly(m), "=", cyclotomic(1) * cyclotomic(3))
print(sorted(root_of_unity_orders(char_poly(m))))
print(sorted(root_of_unity_orders(char_poly(((1, 1), (1, 0))))))  # golden ratio: none
