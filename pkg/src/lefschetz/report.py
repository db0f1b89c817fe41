"""The full analysis pipeline behind ``lefschetz analyze``."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .criteria import (
    LppfClass,
    Shape,
    classify_lppf_extended,
    periodic_point_verdict,
    recognize_shape,
)
from .endomorphism import GradedLinearMap
from .indecomposables import eigen_summary, induced_map
from .lefschetz_core import (
    is_lppf,
    is_lppf_by_horizon,
    lefschetz_sequence,
    lppf_horizon,
    zeta_function,
    zeta_series_check,
)
from .polynomial import Polynomial, format_polynomial, fraction_str


@dataclass(frozen=True)
class AnalysisReport:
    space: str
    shape: str
    shape_witness: str
    betti: tuple[int, ...]
    total_dimension: int
    horizon: int
    lefschetz: tuple[str, ...]
    zeta_numerator: tuple[str, ...]
    zeta_denominator: tuple[str, ...]
    zeta_text: str
    zeta_series_consistent: bool
    char_poly_odd: tuple[str, ...]
    char_poly_even: tuple[str, ...]
    has_one_odd: bool
    has_minus_one_odd: bool
    has_minus_one_even: bool
    root_of_unity_orders_odd: tuple[int, ...]
    lppf: bool
    lppf_by_horizon: bool
    classification: str | None
    verdict: str
    theorem: str
    explanation: str
    mode: str

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "shape": {"kind": self.shape, "witness": self.shape_witness},
            "betti": list(self.betti),
            "total_dimension": self.total_dimension,
            "horizon": self.horizon,
            "lefschetz": list(self.lefschetz),
            "zeta": {
                "numerator": list(self.zeta_numerator),
                "denominator": list(self.zeta_denominator),
                "text": self.zeta_text,
                "series_consistent": self.zeta_series_consistent,
            },
            "char_poly_odd": list(self.char_poly_odd),
            "char_poly_even": list(self.char_poly_even),
            "eigen": {
                "has_one_odd": self.has_one_odd,
                "has_minus_one_odd": self.has_minus_one_odd,
                "has_minus_one_even": self.has_minus_one_even,
                "root_of_unity_orders_odd": list(self.root_of_unity_orders_odd),
            },
            "lppf": {
                "zeta_is_one": self.lppf,
                "vanishing_up_to_total_dimension": self.lppf_by_horizon,
                "certificate": "L(f^k) = 0 for k <= total dimension is equivalent to LPPF",
            },
            "classification": self.classification,
            "verdict": {
                "has_periodic_point": self.verdict,
                "theorem": self.theorem,
                "explanation": self.explanation,
            },
            "mode": self.mode,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [
            f"space: {self.space}",
            f"shape: {self.shape} ({self.shape_witness})",
            f"betti: {' '.join(map(str, self.betti))}",
            f"lefschetz L(f^1..f^{self.horizon}): {', '.join(self.lefschetz)}",
            f"zeta: {self.zeta_text}",
            f"zeta series consistent: {'yes' if self.zeta_series_consistent else 'NO'}",
            f"char poly A^odd(f): {_poly_text(self.char_poly_odd)}",
            f"char poly A^even(f): {_poly_text(self.char_poly_even)}",
            f"eigenvalue 1 (odd): {_yn(self.has_one_odd)}; "
            f"-1 (odd): {_yn(self.has_minus_one_odd)}; -1 (even): {_yn(self.has_minus_one_even)}",
            f"root-of-unity orders (odd): {list(self.root_of_unity_orders_odd) or 'none'}",
            f"LPPF: {_yn(self.lppf)}",
        ]
        if self.classification:
            lines.append(f"classification: {self.classification}")
        lines.append(f"periodic point: {self.verdict} [{self.theorem}] {self.explanation}")
        return "\n".join(lines) + "\n"


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _poly_text(coeffs) -> str:
    return format_polynomial(Polynomial(Fraction(c) for c in coeffs))


def analyze(f: GradedLinearMap, horizon: int | None = None, mode: str = "auto") -> AnalysisReport:
    p = f.presentation
    shape = recognize_shape(p)
    d = lppf_horizon(f)
    k = max(10, d) if horizon is None else horizon
    verdict = periodic_point_verdict(f, mode)
    seq = lefschetz_sequence(f, k)
    zeta = zeta_function(f)
    summary = eigen_summary(induced_map(f))
    if shape.kind is Shape.EXTENDED_RATIONAL_EXTERIOR:
        classification = classify_lppf_extended(f).value
    elif shape.kind is Shape.RATIONAL_EXTERIOR:
        classification = (LppfClass.LAMBDA_ONE if summary.has_one_odd else LppfClass.NOT_LPPF).value
    else:
        classification = None
    return AnalysisReport(
        space=p.name,
        shape=shape.kind.value,
        shape_witness=shape.witness,
        betti=p.betti(),
        total_dimension=d,
        horizon=k,
        lefschetz=tuple(fraction_str(v) for v in seq),
        zeta_numerator=tuple(zeta.numerator.to_strings()),
        zeta_denominator=tuple(zeta.denominator.to_strings()),
        zeta_text=str(zeta),
        zeta_series_consistent=zeta_series_check(f, k),
        char_poly_odd=tuple(summary.char_poly_odd.to_strings()),
        char_poly_even=tuple(summary.char_poly_even.to_strings()),
        has_one_odd=summary.has_one_odd,
        has_minus_one_odd=summary.has_minus_one_odd,
        has_minus_one_even=summary.has_minus_one_even,
        root_of_unity_orders_odd=tuple(sorted(summary.root_of_unity_orders_odd)),
        lppf=is_lppf(f),
        lppf_by_horizon=is_lppf_by_horizon(f),
        classification=classification,
        verdict=verdict.has_periodic_point.value,
        theorem=verdict.applied_theorem,
        explanation=verdict.explanation,
        mode=mode,
    )
