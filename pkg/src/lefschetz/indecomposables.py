"""Decomposables, the indecomposable quotient A(X) and the induced map A(f).

Degree 0 is left out of ``A``: its eigenvalue is always 1 and carries no
information for the periodic-point criteria, which all concern the
positive-degree part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .endomorphism import GradedLinearMap
from .graded_algebra import BasisElement, RingPresentation
from .linalg import Matrix
from .polynomial import Polynomial, char_poly, cyclotomic, root_of_unity_orders

__all__ = [
    "QuotientBasis", "InducedMap", "EigenSummary",
    "decomposable_subspace", "quotient_basis", "induced_map", "eigen_summary",
    "preserves_decomposables", "char_poly", "cyclotomic", "root_of_unity_orders",
]


def decomposable_subspace(p: RingPresentation, r: int) -> Matrix:
    """Rows (in RREF) spanning ``D^r``, the span of products of positive-degree classes."""
    if r < 1:
        raise ValueError("decomposables live in positive degrees")
    target = p.basis.get(r, ())
    if not target:
        return ()
    pos = {b: k for k, b in enumerate(target)}
    rows = []
    for i in range(1, r):
        for a in p.basis.get(i, ()):
            for b in p.basis.get(r - i, ()):
                prod = p.multiply_basis(a, b)
                if prod:
                    v = [Fraction(0)] * len(target)
                    for c, coeff in prod.items():
                        v[pos[c]] = coeff
                    rows.append(v)
    return linalg.rref(rows, ncols=len(target))[0]


@dataclass(frozen=True)
class QuotientDegree:
    decomposables: Matrix
    representatives: tuple[BasisElement, ...]
    projection: Matrix  # dim A^r x dim H^r


@dataclass(frozen=True)
class QuotientBasis:
    presentation: RingPresentation
    degrees: dict[int, QuotientDegree]

    def dim(self, r: int) -> int:
        q = self.degrees.get(r)
        return len(q.representatives) if q else 0

    def representatives(self) -> list[tuple[int, BasisElement]]:
        return [(r, b) for r, q in self.degrees.items() for b in q.representatives]

    def odd_degrees(self) -> list[int]:
        return [r for r in self.degrees if r % 2 and self.dim(r)]

    def even_degrees(self) -> list[int]:
        return [r for r in self.degrees if r % 2 == 0 and self.dim(r)]


def quotient_basis(p: RingPresentation, reverse: bool = False) -> QuotientBasis:
    """Representatives of ``A^r = H^r / D^r`` chosen greedily in canonical order.

    ``reverse=True`` scans the canonical basis backwards; this only exists to
    check that the characteristic polynomials do not depend on the choice.
    """
    key = ("quotient_basis", reverse)
    if key not in p._memo:
        p._memo[key] = _quotient_basis(p, reverse)
    return p._memo[key]


def _quotient_basis(p: RingPresentation, reverse: bool) -> QuotientBasis:
    out = {}
    for r, elems in p.basis.items():
        if r == 0:
            continue
        n = len(elems)
        dec = decomposable_subspace(p, r)
        order = range(n - 1, -1, -1) if reverse else range(n)
        span = list(dec)
        reps = []
        for k in order:
            e = [Fraction(int(i == k)) for i in range(n)]
            if not linalg.in_row_space(e, span):
                span.append(e)
                reps.append(k)
        # columns: decomposable spanning vectors, then representative unit vectors
        cols = [list(v) for v in dec] + [[Fraction(int(i == k)) for i in range(n)] for k in reps]
        inv = linalg.inverse(linalg.transpose(linalg.as_matrix(cols)))
        projection = inv[len(dec):]
        out[r] = QuotientDegree(dec, tuple(elems[k] for k in reps), projection)
    return QuotientBasis(p, out)


@dataclass(frozen=True)
class InducedMap:
    blocks: dict[int, Matrix]

    @property
    def odd_block(self) -> Matrix:
        return linalg.block_diagonal([m for r, m in self.blocks.items() if r % 2])

    @property
    def even_block(self) -> Matrix:
        return linalg.block_diagonal([m for r, m in self.blocks.items() if r % 2 == 0])

    def compose(self, other: InducedMap) -> InducedMap:
        return InducedMap({r: linalg.matmul(m, other.blocks[r]) for r, m in self.blocks.items()})


def induced_map(f: GradedLinearMap, qb: QuotientBasis | None = None) -> InducedMap:
    """Matrix of ``A^r(f)`` in the chosen representatives, for every ``r >= 1``."""
    p = f.presentation
    if qb is None:
        cached = getattr(f, "_induced", None)
        if cached is not None:
            return cached
        f._induced = induced_map(f, quotient_basis(p))
        return f._induced
    if qb.presentation != p:
        raise ValueError("quotient basis belongs to another presentation")
    blocks = {}
    for r, q in qb.degrees.items():
        if not q.representatives:
            continue
        block = f.blocks[r]
        cols = []
        for b in q.representatives:
            k = p.position[b]
            cols.append(linalg.matvec(q.projection, [row[k] for row in block]))
        blocks[r] = linalg.transpose(cols)
    return InducedMap(blocks)


def preserves_decomposables(f: GradedLinearMap) -> bool:
    """Each ``F(d)`` with ``d`` spanning ``D^r`` lies again in ``D^r``."""
    p = f.presentation
    for r in p.basis:
        if r == 0:
            continue
        dec = decomposable_subspace(p, r)
        for v in dec:
            if not linalg.in_row_space(linalg.matvec(f.blocks[r], v), dec):
                return False
    return True


@dataclass(frozen=True)
class EigenSummary:
    char_poly_odd: Polynomial
    char_poly_even: Polynomial
    has_one_odd: bool
    has_minus_one_odd: bool
    has_minus_one_even: bool
    root_of_unity_orders_odd: frozenset[int]


def eigen_summary(a: InducedMap) -> EigenSummary:
    odd = char_poly(a.odd_block)
    even = char_poly(a.even_block)
    return EigenSummary(
        odd,
        even,
        odd(1) == 0,
        odd(-1) == 0,
        even(-1) == 0,
        frozenset(root_of_unity_orders(odd)),
    )
