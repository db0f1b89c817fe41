"""Exact Lefschetz numbers, zeta functions and periodic-point criteria for
rational cohomology rings of the form (exterior algebra) ⊗ (even algebra).

>>> from lefschetz import sphere, from_generator_images, lefschetz_sequence
>>> s3 = sphere(3)
>>> f = from_generator_images(s3, {"x3": 2 * s3.element("x3")})
>>> [int(v) for v in lefschetz_sequence(f, 3)]
[-1, -3, -7]
"""

from .criteria import (
    Answer,
    LppfClass,
    Shape,
    SpaceShape,
    ShapeError,
    Verdict,
    betti_compatible_with_exterior,
    classify_lppf_extended,
    even_only_nonvanishing,
    lefschetz_via_duan,
    lefschetz_via_extended,
    periodic_point_verdict,
    recognize_shape,
)
from .endomorphism import (
    EndomorphismError,
    GradedLinearMap,
    RingEndomorphism,
    alternating_trace,
    compose,
    from_generator_images,
    identity_map,
    power,
    tensor_trace_decomposition,
    trace_degree,
    validate_multiplicative,
)
from .graded_algebra import (
    AlgebraElement,
    BasisElement,
    EvenAlgebraTable,
    GeneratorSpec,
    PresentationError,
    RingPresentation,
    build_basis,
    cup,
    koszul_sign,
    poincare_polynomial,
    validate_presentation,
)
from .indecomposables import (
    decomposable_subspace,
    eigen_summary,
    induced_map,
    quotient_basis,
)
from .lefschetz_core import (
    LefschetzSequence,
    is_lppf,
    lefschetz_sequence,
    zeta_function,
    zeta_series_check,
)
from .polynomial import Polynomial, RationalFunction, char_poly, cyclotomic, root_of_unity_orders
from .report import AnalysisReport, analyze
from .spaces import (
    BettiProfile,
    exterior,
    kodaira_thurston_betti,
    odd_sphere_bundle,
    product,
    s5_bundle_fixture,
    sphere,
    tensor_map,
    truncated_polynomial,
)

__version__ = "0.1.0"
