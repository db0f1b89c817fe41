"""
Lefschetz numbers of iterates and the zeta function
===================================================
"""

# %%
from lefschetz import from_generator_images, is_lppf, lefschetz_sequence, zeta_function, zeta_series_check
from lefschetz.spaces import exterior, sphere

s3 = sphere(3)
f = from_generator_images(s3, {"x3": 2 * s3.element("x3")})
print("L(f^k):", [str(v) for v in lefschetz_sequence(f, 6)])
print("zeta:", zeta_function(f))

# The log-derivative of zeta reproduces the sequence.
print("series check:", zeta_series_check(f, 10))

# %%
# Swapping the two factors of S3 x S3 kills every Lefschetz number.
p = exterior(3, 3)
swap = from_generator_images(p, {"x3": p.element("x3'"), "x3'": p.element("x3")})
print([str(v) for v in lefschetz_sequence(swap, 8)], is_lppf(swap), zeta_function(swap))

# %%
# A rotation of order three: the sequence is periodic but not identically zero.
x, y = p.element("x3"), p.element("x3'")
rot = from_generator_images(p, {"x3": y, "x3'": -x - y})
print([str(v) for v in lefschetz_sequence(rot, 9)])
print(zeta_function(rot))
