"""Shape recognition and the periodic-point criteria.

Every closed-form Lefschetz number here is a determinant in the induced map
on indecomposables, so no eigenvalue is ever computed numerically:
``prod (1 - λ_i^k) = det(I - M^k)`` and ``prod (1 + σ_i^k) = det(I + N^k)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .endomorphism import GradedLinearMap
from .graded_algebra import RingPresentation
from .indecomposables import EigenSummary, eigen_summary, induced_map, quotient_basis
from .lefschetz_core import lefschetz_sequence, lppf_horizon
from .polynomial import Polynomial


class Shape(enum.Enum):
    EVEN_ONLY = "EvenOnly"
    RATIONAL_EXTERIOR = "RationalExterior"
    EXTENDED_RATIONAL_EXTERIOR = "ExtendedRationalExterior"
    GENERAL_TENSOR = "GeneralTensor"
    UNRECOGNIZED = "Unrecognized"


@dataclass(frozen=True)
class SpaceShape:
    kind: Shape
    witness: str = ""

    @property
    def is_tensor(self) -> bool:
        return self.kind is not Shape.UNRECOGNIZED


class ShapeError(ValueError):
    """A criterion was asked for on a space of the wrong shape."""


def _even_indecomposable_degrees(p: RingPresentation) -> list[int]:
    qb = quotient_basis(p)
    return [r for r in qb.even_degrees()]


def _not_exterior_reason(p: RingPresentation) -> str:
    degs = _even_indecomposable_degrees(p)
    if degs:
        return f"not rational exterior: even indecomposable in degree {degs[0]}"
    return "not rational exterior: odd classes are not free exterior generators"


def recognize_shape(p: RingPresentation) -> SpaceShape:
    p.check()
    if "shape" not in p._memo:
        p._memo["shape"] = _recognize(p)
    return p._memo["shape"]


def _recognize(p: RingPresentation) -> SpaceShape:
    if p.even.has_odd_classes():
        return SpaceShape(Shape.UNRECOGNIZED,
                          _not_exterior_reason(p) + "; odd classes with vanishing products "
                          "make it no exterior ⊗ even tensor")
    if not p.odd_generators:
        return SpaceShape(Shape.EVEN_ONLY, "no odd generators: cohomology in even degrees only")
    if not p.even.size:
        return SpaceShape(Shape.RATIONAL_EXTERIOR, "free exterior algebra on odd generators")
    reason = _extended_failure(p)
    if reason is None:
        return SpaceShape(Shape.EXTENDED_RATIONAL_EXTERIOR,
                          "one even generator per degree, squares zero, "
                          "product of all generators spans the top degree")
    return SpaceShape(Shape.GENERAL_TENSOR, f"{_not_exterior_reason(p)}; not extended: {reason}")


def _extended_failure(p: RingPresentation) -> str | None:
    qb = quotient_basis(p)
    even_gens = []
    for r in qb.even_degrees():
        reps = qb.degrees[r].representatives
        if len(reps) > 1:
            return f"{len(reps)} even generators in degree {r}"
        even_gens.extend(reps)
    for y in even_gens:
        if p.multiply_basis(y, y):
            return f"generator {p.format_basis(y)} does not square to zero"
    prod = p.unit()
    for i in range(p.n_odd):
        prod = prod * p.element(p.odd_generators[i].name)
    for y in even_gens:
        prod = prod * p.basis_element(y)
    top = p.top_degree
    if prod.is_zero() or prod.degree != top or p.dim(top) != 1:
        return "product of all generators does not span the top degree"
    return None


# -- Betti profiles -----------------------------------------------------------

def _exterior_peel(betti: Sequence[int]) -> tuple[list[int] | None, str]:
    poly = Polynomial(betti)
    total = sum(betti)
    if not betti or betti[0] != 1:
        return None, "degree-0 Betti number must be 1"
    if any(b < 0 for b in betti):
        return None, "negative Betti number"
    if total & (total - 1):
        return None, f"total dimension {total} is not a power of 2"
    degrees = []
    while poly.degree > 0:
        d = next(k for k in range(1, poly.degree + 1) if poly[k])
        if d % 2 == 0:
            return None, f"lowest positive degree {d} is even"
        q, r = divmod(poly, Polynomial.monomial(d) + 1)
        if not r.is_zero() or any(c < 0 for c in q.coeffs):
            return None, f"profile is not divisible by 1 + t^{d}"
        degrees.append(d)
        poly = q
    return degrees, "matches an exterior algebra on generators of degrees " + str(degrees)


def betti_compatible_with_exterior(betti: Sequence[int]) -> bool:
    """Is the Betti profile the Poincaré series of an exterior algebra on odd generators?

    In ``prod (1 + t^{d_i})`` the lowest positive power is ``t^{min d_i}``,
    so peeling off factors from the bottom finds the only possible degrees.
    """
    return _exterior_peel(betti)[0] is not None


def betti_exterior_reason(betti: Sequence[int]) -> str:
    degrees, reason = _exterior_peel(betti)
    return reason if degrees is not None else f"not rational exterior: {reason}"


# -- closed-form Lefschetz numbers --------------------------------------------

def _require(p: RingPresentation, kind: Shape):
    shape = recognize_shape(p)
    if shape.kind is not kind:
        raise ShapeError(f"needs a {kind.value} space, got {shape.kind.value}")


def lefschetz_via_duan(f: GradedLinearMap, k: int) -> Fraction:
    """``prod (1 - λ_i^k)`` over the eigenvalues of ``A(f)``, as ``det(I - A(f)^k)``."""
    _require(f.presentation, Shape.RATIONAL_EXTERIOR)
    m = induced_map(f).odd_block
    return linalg.det(linalg.sub(linalg.identity(len(m)), linalg.matpow(m, k)))


def _extended_blocks(f: GradedLinearMap):
    _require(f.presentation, Shape.EXTENDED_RATIONAL_EXTERIOR)
    a = induced_map(f)
    even = a.even_block
    if not linalg.is_diagonal(even):
        raise ArithmeticError("induced map on even generators is not diagonal")
    return a.odd_block, even


def lefschetz_via_extended(f: GradedLinearMap, n: int) -> Fraction:
    """``prod (1 - λ_i^n) prod (1 + σ_j^n)`` with λ odd, σ even eigenvalues of ``A(f)``."""
    odd, even = _extended_blocks(f)
    left = linalg.det(linalg.sub(linalg.identity(len(odd)), linalg.matpow(odd, n)))
    right = linalg.det(linalg.add(linalg.identity(len(even)), linalg.matpow(even, n)))
    return left * right


class LppfClass(enum.Enum):
    NOT_LPPF = "NotLppf"
    LAMBDA_ONE = "LppfLambdaOne"
    MINUS_ONE_PAIR = "LppfMinusOnePair"


def classify_lppf_extended(f: GradedLinearMap) -> LppfClass:
    _extended_blocks(f)
    s = eigen_summary(induced_map(f))
    return _classify(s)


def _classify(s: EigenSummary) -> LppfClass:
    if s.has_one_odd:
        return LppfClass.LAMBDA_ONE
    if s.has_minus_one_odd and s.has_minus_one_even:
        return LppfClass.MINUS_ONE_PAIR
    return LppfClass.NOT_LPPF


def even_only_nonvanishing(f: GradedLinearMap) -> int:
    """Smallest ``k <= D`` with ``L(f^k) != 0`` on a space with even cohomology only."""
    _require(f.presentation, Shape.EVEN_ONLY)
    k = lefschetz_sequence(f, lppf_horizon(f)).first_nonzero()
    if k is None:
        raise AssertionError("all Lefschetz numbers vanish on an even-only space")
    return k


# -- verdicts ---------------------------------------------------------------

class Answer(enum.Enum):
    YES = "Yes"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    has_periodic_point: Answer
    applied_theorem: str
    explanation: str


THEOREM_TAGS = {
    "even": "even-cohomology-nonvanishing",
    "exterior": "exterior-eigenvalue-one",
    "extended": "extended-exterior-classification",
    "general": "odd-indecomposables-roots-of-unity",
    "direct": "lefschetz-nonvanishing",
}

MODES = ("auto", "exterior", "extended", "even", "general")

_MODE_SHAPE = {
    "exterior": {Shape.RATIONAL_EXTERIOR},
    "extended": {Shape.EXTENDED_RATIONAL_EXTERIOR},
    "even": {Shape.EVEN_ONLY},
    # the root-of-unity criterion holds for any exterior ⊗ even tensor
    "general": {Shape.EVEN_ONLY, Shape.RATIONAL_EXTERIOR,
                Shape.EXTENDED_RATIONAL_EXTERIOR, Shape.GENERAL_TENSOR},
}


def _auto_mode(shape: Shape) -> str | None:
    return {
        Shape.EVEN_ONLY: "even",
        Shape.RATIONAL_EXTERIOR: "exterior",
        Shape.EXTENDED_RATIONAL_EXTERIOR: "extended",
        Shape.GENERAL_TENSOR: "general",
    }.get(shape)


def periodic_point_verdict(f: GradedLinearMap, mode: str = "auto") -> Verdict:
    """Apply the criterion matching the shape (or the forced ``mode``).

    A theorem-based Yes is always cross-checked against a nonzero ``L(f^k)``
    with ``k <= D``.  When the theorem is silent but some ``L(f^k)`` is
    nonzero anyway, the answer is still Yes, tagged as a direct Lefschetz
    argument.
    """
    p = f.presentation
    shape = recognize_shape(p).kind
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "auto":
        mode = _auto_mode(shape)
    elif shape not in _MODE_SHAPE[mode]:
        raise ShapeError(f"mode {mode!r} does not apply to a {shape.value} space")

    seq = lefschetz_sequence(f, lppf_horizon(f))
    first = seq.first_nonzero()
    yes, tag, why = False, None, ""
    if mode == "even":
        k = even_only_nonvanishing(f)
        yes, tag = True, THEOREM_TAGS["even"]
        why = f"even cohomology only; L(f^{k}) = {seq[k]} != 0"
    elif mode is not None:
        s = eigen_summary(induced_map(f))
        if mode == "exterior":
            yes = not s.has_one_odd
            why = ("1 is an eigenvalue of A(f): every L(f^k) vanishes" if not yes
                   else "1 is not an eigenvalue of A(f)")
        elif mode == "extended":
            cls = classify_lppf_extended(f)
            yes = cls is LppfClass.NOT_LPPF
            why = f"classification {cls.value}"
        else:
            yes = not s.root_of_unity_orders_odd
            why = ("no root of unity among eigenvalues of A^odd(f)" if yes else
                   f"A^odd(f) has roots of unity of orders {sorted(s.root_of_unity_orders_odd)}")
        tag = THEOREM_TAGS[mode]
    if yes:
        if first is None:
            raise AssertionError(f"criterion {tag} claims a periodic point but L(f^k) = 0 for k <= D")
        return Verdict(Answer.YES, tag, f"{why}; witness L(f^{first}) = {seq[first]}")
    if first is not None:
        return Verdict(Answer.YES, THEOREM_TAGS["direct"],
                       f"{why + '; ' if why else ''}L(f^{first}) = {seq[first]} != 0")
    return Verdict(Answer.UNKNOWN, tag or THEOREM_TAGS["direct"],
                   f"{why + '; ' if why else ''}LPPF: L(f^k) = 0 for all k, Lefschetz theory is silent")
