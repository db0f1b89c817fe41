"""Random presentations and endomorphisms for property and acceptance tests.

Every generator takes a ``random.Random`` so suites are reproducible from a
seed; hypothesis tests draw the seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from lefschetz import from_generator_images, quotient_basis
from lefschetz.endomorphism import EndomorphismError
from lefschetz.spaces import exterior, product, scalar_map, sphere, truncated_polynomial
from lefschetz.graded_algebra import RingPresentation

COEFFS = range(-3, 4)


def random_exterior(rng: random.Random, max_gens=4, max_degree=9) -> RingPresentation:
    n = rng.randint(1, max_gens)
    odd = [d for d in range(1, max_degree + 1, 2)]
    # small degrees repeat more often, which gives nontrivial A(f) blocks
    degs = sorted(rng.choice(odd[: rng.randint(1, len(odd))]) for _ in range(n))
    return exterior(*degs)


def even_exterior(*degrees: int) -> RingPresentation:
    """Tensor of even spheres of the given (distinct) degrees."""
    p = sphere(degrees[0])
    for d in degrees[1:]:
        p = product(p, sphere(d))
    return p


def random_extended(rng: random.Random, max_odd=3, max_even=2) -> RingPresentation:
    odd = sorted(rng.choice((1, 3, 5)) for _ in range(rng.randint(1, max_odd)))
    even = sorted(rng.sample((2, 4, 6), rng.randint(1, max_even)))
    return product(exterior(*odd), even_exterior(*even))


def random_even_table(rng: random.Random) -> RingPresentation:
    kind = rng.randrange(5)
    if kind == 0:
        return sphere(rng.choice((2, 4, 6)))
    if kind == 1:
        return truncated_polynomial(rng.choice((2, 4)), rng.randint(1, 3))
    if kind == 2:
        return even_exterior(*sorted(rng.sample((2, 4, 6), rng.randint(2, 3))))
    if kind == 3:
        d = rng.choice((2, 4))
        return product(sphere(d), sphere(d))
    return product(truncated_polynomial(2, rng.randint(1, 2)), sphere(rng.choice((2, 4))))


def random_general_tensor(rng: random.Random) -> RingPresentation:
    """Exterior ⊗ even table whose even part is usually not of extended shape."""
    odd = sorted(rng.choice((1, 3, 5)) for _ in range(rng.randint(1, 2)))
    even = rng.choice([
        lambda: truncated_polynomial(2, 2),
        lambda: product(sphere(2), sphere(2)),
        lambda: truncated_polynomial(4, 2),
    ])()
    return product(exterior(*odd), even)


def random_element(rng, p, degree, coeffs=COEFFS, sparsity=0.0):
    """Random element of one degree; each coefficient is dropped with probability ``sparsity``."""
    return p.from_vector(degree, [Fraction(0) if rng.random() < sparsity else Fraction(rng.choice(coeffs))
                                  for _ in p.basis.get(degree, ())])


def random_endomorphism(rng: random.Random, p: RingPresentation, tries=20,
                        odd_override=None, coeffs=COEFFS):
    """Random images of all generators (odd ones and table indecomposables).

    Images violating a relation are redrawn; after ``tries`` failures the
    even generators fall back to scalar multiples of themselves, and as a
    last resort the grading map ``e -> c^deg e`` is returned.
    """
    qb = quotient_basis(p)
    table_gens = [b for _, b in qb.representatives() if not b.odd_part]
    for attempt in range(tries + 1):
        images = {}
        for g in p.odd_generators:
            images[g.name] = random_element(rng, p, g.degree, coeffs)
        if odd_override:
            images.update(odd_override(p))
        for b in table_gens:
            name = p.format_basis(b)
            if attempt < tries:
                img = random_element(rng, p, p.degree_of(b), coeffs)
                # y*y = 0 must survive; redraw ever sparser images until it does
                for k in range(1, tries + 1):
                    if p.multiply_basis(b, b) or (img * img).is_zero():
                        break
                    img = random_element(rng, p, p.degree_of(b), coeffs, sparsity=k / tries)
                images[name] = img
            else:
                images[name] = p.basis_element(b) * rng.choice(coeffs)
        try:
            return from_generator_images(p, images)
        except EndomorphismError:
            continue
    return scalar_map(p, rng.choice(coeffs))


def random_extended_endomorphism(rng: random.Random, p: RingPresentation):
    """Like :func:`random_endomorphism` but biased towards eigenvalues ±1."""
    coeffs = rng.choice([COEFFS, (-1, 0, 1), (-1, 1)])
    return random_endomorphism(rng, p, coeffs=coeffs)
