"""Degree-preserving ring endomorphisms of a presented cohomology ring.

A map is stored as one exact square matrix per degree in the canonical basis
of :class:`~lefschetz.graded_algebra.RingPresentation`; column ``j`` of the
degree-``d`` block holds the image of the ``j``-th degree-``d`` basis element.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from . import linalg
from .graded_algebra import (
    ONE,
    AlgebraElement,
    BasisElement,
    RingPresentation,
    ValidationResult,
    _fail,
)
from .linalg import Matrix


class EndomorphismError(ValueError):
    def __init__(self, kind: str, message: str, result: ValidationResult | None = None):
        super().__init__(message)
        self.kind = kind
        self.result = result


class GradedLinearMap:
    """A graded linear endomorphism, one rational matrix per degree.

    Treat instances as immutable: the induced map and the zeta function are
    cached on the instance the first time they are computed.
    """

    def __init__(self, presentation: RingPresentation, blocks: Mapping[int, Matrix]):
        self.presentation = presentation
        out = {}
        for d, elems in presentation.basis.items():
            n = len(elems)
            block = linalg.as_matrix(blocks.get(d, linalg.zeros(n)))
            if linalg.shape(block) != (n, n):
                raise ValueError(f"degree {d} block has shape {linalg.shape(block)}, expected {(n, n)}")
            out[d] = block
        extra = set(blocks) - set(out)
        if any(blocks[d] for d in extra):
            raise ValueError(f"blocks given for empty degrees {sorted(extra)}")
        self.blocks: dict[int, Matrix] = out

    @classmethod
    def identity(cls, presentation: RingPresentation):
        return cls(presentation, {d: linalg.identity(len(b)) for d, b in presentation.basis.items()})

    def block(self, degree: int) -> Matrix:
        return self.blocks.get(degree, ())

    def image(self, b: BasisElement) -> AlgebraElement:
        p = self.presentation
        d = p.degree_of(b)
        col = p.position[b]
        return p.from_vector(d, [row[col] for row in self.blocks[d]])

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        out = AlgebraElement(self.presentation, {})
        for b, c in a.terms.items():
            out = out + self.image(b) * c
        return out

    def _check_same(self, other: GradedLinearMap):
        if other.presentation != self.presentation:
            raise ValueError("maps act on different presentations")

    def compose(self, other: GradedLinearMap) -> GradedLinearMap:
        """``self ∘ other``."""
        self._check_same(other)
        blocks = {d: linalg.matmul(self.blocks[d], other.blocks[d]) for d in self.blocks}
        return _same_kind(self, other)(self.presentation, blocks)

    def power(self, k: int) -> GradedLinearMap:
        if k < 1:
            raise ValueError("power needs k >= 1")
        blocks = {d: linalg.matpow(m, k) for d, m in self.blocks.items()}
        return _same_kind(self, self)(self.presentation, blocks)

    def trace_degree(self, n: int) -> Fraction:
        return linalg.trace(self.blocks[n]) if n in self.blocks else Fraction(0)

    def alternating_trace(self) -> Fraction:
        """``sum_n (-1)^n tr(F | degree n)``: the Lefschetz number."""
        return sum(((-1) ** d * linalg.trace(m) for d, m in self.blocks.items()), Fraction(0))

    def unsigned_trace(self) -> Fraction:
        return sum((linalg.trace(m) for m in self.blocks.values()), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, GradedLinearMap):
            return NotImplemented
        return self.presentation == other.presentation and self.blocks == other.blocks

    def __repr__(self):
        name = self.presentation.name or "ring"
        return f"{type(self).__name__}({name}, degrees={list(self.blocks)})"


class RingEndomorphism(GradedLinearMap):
    """A multiplicative, unital :class:`GradedLinearMap`.

    Construction validates multiplicativity unless ``check=False`` (used
    internally for composites of maps already known to be multiplicative).
    """

    def __init__(self, presentation, blocks, check: bool = True):
        super().__init__(presentation, blocks)
        if check:
            result = validate_multiplicative(self)
            if not result:
                raise EndomorphismError("not multiplicative", result.message, result)


def _same_kind(f, g):
    if isinstance(f, RingEndomorphism) and isinstance(g, RingEndomorphism):
        return lambda p, blocks: RingEndomorphism(p, blocks, check=False)
    return GradedLinearMap


def validate_multiplicative(f: GradedLinearMap) -> ValidationResult:
    p = f.presentation
    if f.image(ONE) != p.unit():
        return _fail("unital", ("1",), "F(1) != 1")
    elems = [b for bs in p.basis.values() for b in bs if b != ONE]
    images = {b: f.image(b) for b in elems}
    # Every basis element is (up to sign) a generator times a shorter basis
    # element, so F(g*b) = F(g)F(b) for generators g implies it for all pairs.
    gens = [b for b in elems if len(b.odd_part) + (b.even_part > 0) == 1]
    for a in gens:
        for b in elems:
            prod = p.multiply_basis(a, b)
            lhs = AlgebraElement(p, {})
            for c, coeff in prod.items():
                lhs = lhs + images[c] * coeff
            if lhs != images[a] * images[b]:
                pair = (p.format_basis(a), p.format_basis(b))
                return _fail("multiplicative", pair,
                             f"F(a*b) != F(a)*F(b) at basis pair {pair}")
    return ValidationResult(True, message="ok")


def from_generator_images(p: RingPresentation, images: Mapping[str, AlgebraElement]) -> RingEndomorphism:
    """Extend images of generators to a ring endomorphism.

    Every odd generator needs an image.  Table classes need one too, unless
    the class is a single-term product ``c * e_i e_k`` of classes whose images
    are known, in which case the image is extended multiplicatively.
    """
    p.check()
    names = p._names
    source: dict[BasisElement, AlgebraElement] = {}
    for name, img in images.items():
        if name not in names or name == "1":
            raise EndomorphismError("unknown generator", f"no generator or table class named {name!r}")
        b = names[name]
        if not isinstance(img, AlgebraElement):
            raise TypeError(f"image of {name} must be an AlgebraElement")
        if img.presentation != p:
            raise EndomorphismError("presentation", f"image of {name} lives in another presentation")
        want = p.degree_of(b)
        if not img.is_zero() and img.degree != want:
            got = "inhomogeneous" if img.degree is None else f"degree {img.degree}"
            raise EndomorphismError("degree mismatch",
                                    f"degree mismatch: {name} has degree {want}, image is {got}")
        source[b] = img

    for i, g in enumerate(p.odd_generators):
        if BasisElement((i,), 0) not in source:
            raise EndomorphismError("missing image", f"missing image for odd generator {g.name}")

    table = p.even
    even = {b.even_part: img for b, img in source.items() if not b.odd_part}
    even[0] = p.unit()
    progress = True
    while progress and len(even) < table.size + 1:
        progress = False
        for j in range(1, table.size + 1):
            if j in even:
                continue
            for i in list(even):
                for k in list(even):
                    if i and k:
                        prod = table.product(i, k)
                        if len(prod) == 1 and j in prod:
                            even[j] = even[i] * even[k] * (1 / prod[j])
                            progress = True
                            break
                if j in even:
                    break
    missing = [table.name(j) for j in range(1, table.size + 1) if j not in even]
    if missing:
        raise EndomorphismError("missing image", f"missing image for table class {missing[0]}")

    odd_images = [source[BasisElement((i,), 0)] for i in range(p.n_odd)]
    monomials = {(): p.unit()}

    def odd_image(s):
        if s not in monomials:
            monomials[s] = odd_image(s[:-1]) * odd_images[s[-1]]
        return monomials[s]

    blocks = {}
    for d, elems in p.basis.items():
        cols = []
        for b in elems:
            img = odd_image(b.odd_part)
            if b.even_part:
                img = img * even[b.even_part]
            cols.append(img.vector(d))
            if any(bb not in p.basis[d] for bb in img.terms):
                raise EndomorphismError("degree mismatch", f"image of {p.format_basis(b)} leaves degree {d}")
        blocks[d] = linalg.transpose(cols)
    try:
        return RingEndomorphism(p, blocks)
    except EndomorphismError as exc:
        raise EndomorphismError("relation violation",
                                f"images violate a relation: {exc}", exc.result) from None


def identity_map(p: RingPresentation) -> RingEndomorphism:
    return RingEndomorphism(p, GradedLinearMap.identity(p).blocks, check=False)


def compose(f: GradedLinearMap, g: GradedLinearMap) -> GradedLinearMap:
    return f.compose(g)


def power(f: GradedLinearMap, k: int) -> GradedLinearMap:
    return f.power(k)


def trace_degree(f: GradedLinearMap, n: int) -> Fraction:
    return f.trace_degree(n)


def alternating_trace(f: GradedLinearMap) -> Fraction:
    return f.alternating_trace()


def tensor_trace_decomposition(f: GradedLinearMap, signed: bool = False) -> tuple[Fraction, Fraction]:
    """Traces of the two projected factor maps of an endomorphism of Λ ⊗ E.

    The odd factor sees ``x_S -> (coefficient of x_S in F(x_S))`` and the even
    factor ``e_j -> (coefficient of e_j in F(e_j))``.  Their product is the
    unsigned trace of ``F``; with ``signed=True`` the odd factor carries the
    signs ``(-1)^deg`` and the product is the alternating trace.
    """
    p = f.presentation
    if p.even.has_odd_classes():
        raise ValueError("presentation is not an exterior ⊗ even tensor")
    odd = even = Fraction(0)
    for d, elems in p.basis.items():
        block = f.blocks[d]
        for k, b in enumerate(elems):
            if b.even_part == 0:
                odd += (-1) ** d * block[k][k] if signed else block[k][k]
            if not b.odd_part:
                even += block[k][k]
    return odd, even
