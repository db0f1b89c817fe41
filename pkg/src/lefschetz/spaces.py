"""Ready-made cohomology rings: spheres, products, odd sphere bundles and
two spaces that are not rational exterior.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from . import linalg
from .endomorphism import GradedLinearMap, RingEndomorphism, from_generator_images
from .graded_algebra import (
    AlgebraElement,
    BasisElement,
    EvenAlgebraTable,
    GeneratorSpec,
    RingPresentation,
)


def sphere(n: int, name: str | None = None) -> RingPresentation:
    if n < 1:
        raise ValueError("sphere dimension must be positive")
    label = name or (f"x{n}" if n % 2 else f"y{n}")
    if n % 2:
        return RingPresentation.build(odd=[(label, n)], name=f"S{n}")
    return RingPresentation.build(even_basis=[(label, n)], name=f"S{n}")


def exterior(*degrees: int, name: str = "") -> RingPresentation:
    """Free exterior algebra; generators are named ``x<deg>``, primed on repeats."""
    names = _unique([f"x{d}" for d in degrees])
    return RingPresentation.build(odd=list(zip(names, degrees)),
                                  name=name or "Lambda(" + ",".join(names) + ")")


def truncated_polynomial(degree: int, height: int, name: str = "") -> RingPresentation:
    """``Q[y]/(y^(height+1))`` with ``deg y = degree`` (even); classes ``y<k*degree>``."""
    if degree % 2 or degree < 2 or height < 1:
        raise ValueError("need an even positive degree and height >= 1")
    basis = [(f"y{k * degree}", k * degree) for k in range(1, height + 1)]
    products = {
        (f"y{a * degree}", f"y{b * degree}"): {f"y{(a + b) * degree}": 1}
        for a in range(1, height + 1) for b in range(a, height + 1) if a + b <= height
    }
    return RingPresentation.build(even_basis=basis, even_products=products,
                                  name=name or f"Q[y{degree}]/(y^{height + 1})")


def _unique(names):
    out = []
    for n in names:
        while n in out:
            n += "'"
        out.append(n)
    return out


def _product_parts(p1: RingPresentation, p2: RingPresentation):
    if p1.even.has_odd_classes() or p2.even.has_odd_classes():
        raise ValueError("products are only formed for exterior ⊗ even presentations")
    t1, t2 = p1.even, p2.even
    odd_names = _unique([g.name for g in p1.odd_generators] + [g.name for g in p2.odd_generators])
    odd = [GeneratorSpec(n, g.degree)
           for n, g in zip(odd_names, p1.odd_generators + p2.odd_generators)]
    pairs = [(i, j) for i in range(t1.size + 1) for j in range(t2.size + 1) if (i, j) != (0, 0)]
    # first factor, then second factor, then mixed products named after both
    pairs.sort(key=lambda ij: 0 if ij[1] == 0 else 1 if ij[0] == 0 else 2)
    taken = set(odd_names)
    pair_names = {}
    for i, j in pairs:
        if j == 0:
            n = t1.name(i)
        elif i == 0:
            n = t2.name(j)
        else:
            n = f"{pair_names[(i, 0)]}*{pair_names[(0, j)]}"
        while n in taken:
            n += "'"
        taken.add(n)
        pair_names[(i, j)] = n
    pair_names[(0, 0)] = "1"
    basis = [(pair_names[ij], t1.degree(ij[0]) + t2.degree(ij[1])) for ij in pairs]
    products = {}
    for ia, ib in iproduct(range(len(pairs)), repeat=2):
        if ia > ib:
            continue
        a, b = pairs[ia], pairs[ib]
        left = t1.product(a[0], b[0])
        right = t2.product(a[1], b[1])
        res = {}
        for k1, c1 in left.items():
            for k2, c2 in right.items():
                res[pair_names[(k1, k2)]] = c1 * c2
        if res:
            products[(pair_names[a], pair_names[b])] = res
    name = f"{p1.name or 'X'}x{p2.name or 'Y'}"
    prod = RingPresentation.build(odd=[(g.name, g.degree) for g in odd], even_basis=basis,
                                  even_products=products, name=name)
    n1 = p1.n_odd
    table_index = {ij: prod.even.index(pair_names[ij]) for ij in pairs}
    table_index[(0, 0)] = 0

    def embed1(b: BasisElement) -> BasisElement:
        return BasisElement(b.odd_part, table_index[(b.even_part, 0)])

    def embed2(b: BasisElement) -> BasisElement:
        return BasisElement(tuple(i + n1 for i in b.odd_part), table_index[(0, b.even_part)])

    return prod, embed1, embed2


def product(p1: RingPresentation, p2: RingPresentation) -> RingPresentation:
    """Künneth product: odd generators concatenated, even tables tensored."""
    return _product_parts(p1, p2)[0]


def tensor_map(f1: GradedLinearMap, f2: GradedLinearMap):
    """The endomorphism ``f1 ⊗ f2`` of ``product(p1, p2)``."""
    prod, e1, e2 = _product_parts(f1.presentation, f2.presentation)

    def lift(f, embed, b):
        img = f.image(b)
        return AlgebraElement(prod, {embed(c): v for c, v in img.terms.items()})

    images = {}
    for f, embed in ((f1, e1), (f2, e2)):
        p = f.presentation
        for i, g in enumerate(p.odd_generators):
            b = BasisElement((i,), 0)
            images[prod.format_basis(embed(b))] = lift(f, embed, b)
        for j in range(1, p.even.size + 1):
            b = BasisElement((), j)
            images[prod.format_basis(embed(b))] = lift(f, embed, b)
    return from_generator_images(prod, images)


def odd_sphere_bundle(base: RingPresentation, k: int, dim_base: int | None = None,
                      name: str | None = None) -> RingPresentation:
    """Cohomology of an ``S^k``-bundle over ``base`` for odd ``k >= dim(base)``.

    Under those hypotheses the Serre spectral sequence has no room for a
    nonzero differential and the fibre class multiplies freely, so the ring is
    ``base ⊗ Λ(x_k)``.  ``dim_base`` defaults to the top nonzero degree of the
    base, which is the manifold dimension for a closed orientable base.
    """
    if k % 2 == 0:
        raise ValueError(f"fibre dimension {k} is even: the fibre class need not square "
                         "to zero, so the tensor description can fail")
    n = base.top_degree if dim_base is None else dim_base
    if k < n:
        raise ValueError(f"fibre dimension {k} is below the base dimension {n}: "
                         "a differential can hit the fibre row")
    if base.even.has_odd_classes():
        raise ValueError("base must be an exterior ⊗ even presentation")
    label = name or f"x{k}"
    names = [g.name for g in base.odd_generators] + [m for m, _ in base.even.basis]
    while label in names:
        label += "'"
    return RingPresentation(
        base.odd_generators + (GeneratorSpec(label, k),),
        base.even,
        f"S{k}-bundle over {base.name or 'B'}",
    ).check()


class BettiProfile(tuple):
    """Betti numbers indexed by degree, optionally carrying a space name."""

    def __new__(cls, betti, name: str = ""):
        obj = super().__new__(cls, (int(b) for b in betti))
        obj.name = name
        return obj

    @property
    def total(self) -> int:
        return sum(self)


def kodaira_thurston_betti() -> BettiProfile:
    """Betti numbers of the Kodaira-Thurston nilmanifold (a circle bundle over T^3)."""
    return BettiProfile((1, 3, 4, 3, 1), "Kodaira-Thurston")


S5_BUNDLE_BETTI = BettiProfile((1, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 1), "S5-bundle over S3xS3")


def s5_bundle_fixture() -> RingPresentation:
    """Unit sphere bundle of the pullback of ``TS^6`` along ``S^3×S^3 -> S^6``.

    Known structure: Betti numbers 1, 2, 2, 1 in degrees 0, 3, 8, 11 and all
    products of two degree-3 classes vanish.  The degree-3 by degree-8
    products are completed to the Poincaré duality pairing
    ``a_i b_j = δ_ij top``; that completion is a choice, not derived.

    The degree-3 classes are odd table classes under ``odd_products_vanish``
    rather than free exterior generators, which would force ``a1 a2 != 0``.
    """
    table = EvenAlgebraTable.build(
        [("a1", 3), ("a2", 3), ("b1", 8), ("b2", 8), ("top", 11)],
        {("a1", "b1"): {"top": 1}, ("a2", "b2"): {"top": 1}},
    )
    return RingPresentation((), table, "S5-bundle over S3xS3", odd_products_vanish=True).check()


def fixtures() -> dict:
    """Named fixtures: presentations, or Betti tuples for profile-only spaces."""
    s3 = sphere(3)
    s2 = sphere(2)
    return {
        "sphere1": sphere(1),
        "sphere2": s2,
        "sphere3": s3,
        "s3xs2": product(s3, s2),
        "s3xs3": product(s3, s3),
        "s2xs4": product(s2, sphere(4)),
        "truncated_y2_cubed": truncated_polynomial(2, 2),
        "s3xs3_s7_bundle": odd_sphere_bundle(product(s3, s3), 7),
        "kodaira_thurston_betti": kodaira_thurston_betti(),
        "s5_bundle": s5_bundle_fixture(),
    }


def scalar_map(p: RingPresentation, c) -> GradedLinearMap:
    """``e -> c^deg(e) e``; multiplicative for every presentation."""
    c = Fraction(c)
    return RingEndomorphism(p, {d: linalg.scale(c ** d, linalg.identity(len(b)))
                                for d, b in p.basis.items()}, check=False)
