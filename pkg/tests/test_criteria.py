import random
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz import (
    Answer,
    LppfClass,
    RingPresentation,
    Shape,
    ShapeError,
    betti_compatible_with_exterior,
    classify_lppf_extended,
    even_only_nonvanishing,
    from_generator_images,
    identity_map,
    is_lppf,
    lefschetz_sequence,
    lefschetz_via_duan,
    lefschetz_via_extended,
    periodic_point_verdict,
    recognize_shape,
)
from lefschetz.criteria import THEOREM_TAGS, betti_exterior_reason
from lefschetz.indecomposables import eigen_summary, induced_map
from lefschetz.lefschetz_core import lppf_horizon
from lefschetz.polynomial import Polynomial
from lefschetz.spaces import exterior, kodaira_thurston_betti, product, s5_bundle_fixture, sphere

from randomized import random_endomorphism, random_even_table, random_general_tensor

Y2_Y4 = dict(even_basis=[("y2", 2), ("y4", 4)], even_products={("y2", "y2"): {"y4": 1}})
TWO_Y2 = dict(even_basis=[("y2", 2), ("y2'", 2)])


def s3xs2_map(a, b):
    p = product(sphere(3), sphere(2))
    return from_generator_images(p, {"x3": a * p.element("x3"), "y2": b * p.element("y2")})


def test_recognizer_examples():
    assert recognize_shape(exterior(3, 5)).kind is Shape.RATIONAL_EXTERIOR
    assert recognize_shape(product(sphere(3), sphere(2))).kind is Shape.EXTENDED_RATIONAL_EXTERIOR
    two = RingPresentation.build(odd=[("x3", 3)], **TWO_Y2)
    shape = recognize_shape(two)
    assert shape.kind is Shape.GENERAL_TENSOR
    assert "2 even generators in degree 2" in shape.witness
    # without odd generators the same table is an even-only space
    assert recognize_shape(RingPresentation.build(**TWO_Y2)).kind is Shape.EVEN_ONLY


def test_recognizer_top_product_condition():
    p = RingPresentation.build(odd=[("x1", 1)], even_basis=[("y2", 2), ("y4", 4), ("y6", 6)],
                               even_products={("y2", "y4"): {"y6": 1}})
    assert recognize_shape(p).kind is Shape.EXTENDED_RATIONAL_EXTERIOR
    # squares vanish but so does y2*y4: the generator product misses the top class
    q = RingPresentation.build(odd=[("x1", 1)], even_basis=[("y2", 2), ("y4", 4)])
    shape = recognize_shape(q)
    assert shape.kind is Shape.GENERAL_TENSOR
    assert "does not span the top degree" in shape.witness
    r = RingPresentation.build(odd=[("x1", 1)], **Y2_Y4)
    assert recognize_shape(r).kind is Shape.GENERAL_TENSOR


def exhaustive_exterior(betti):
    """Oracle: try every multiset of odd degrees."""
    total = sum(betti)
    target = Polynomial(betti)
    n = total.bit_length() - 1
    if betti[0] != 1 or 2 ** n != total:
        return False
    odd = range(1, len(betti), 2)
    for degs in combinations_with_replacement(odd, n):
        poly = Polynomial([1])
        for d in degs:
            poly = poly * (Polynomial.monomial(d) + 1)
        if poly == target:
            return True
    return n == 0 and target == Polynomial([1])


@pytest.mark.parametrize("betti, ok", [
    ((1, 3, 4, 3, 1), False),
    ((1, 0, 0, 1), True),
    ((1, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 1), False),
    ((1, 1, 0, 1, 1), True),
    ((1,), True),
    ((1, 0, 1), False),
])
def test_betti_examples(betti, ok):
    assert betti_compatible_with_exterior(betti) is ok
    assert exhaustive_exterior(betti) is ok


def test_betti_reason():
    assert betti_exterior_reason(kodaira_thurston_betti()) == \
        "not rational exterior: total dimension 12 is not a power of 2"


@given(st.lists(st.integers(0, 3), min_size=1, max_size=9))
@settings(max_examples=300, deadline=None)
def test_betti_peel_matches_exhaustive_search(tail):
    betti = [1] + tail
    assert betti_compatible_with_exterior(betti) == exhaustive_exterior(betti)


@given(st.lists(st.sampled_from([1, 3, 5, 7]), min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_exterior_betti_always_compatible(degrees):
    assert betti_compatible_with_exterior(exterior(*degrees).betti())


def test_duan_examples():
    p = sphere(3)
    f = from_generator_images(p, {"x3": 2 * p.element("x3")})
    assert lefschetz_via_duan(f, 2) == -3
    q = exterior(3, 3)
    swap = from_generator_images(q, {"x3": q.element("x3'"), "x3'": q.element("x3")})
    assert lefschetz_via_duan(swap, 1) == 0
    assert all(lefschetz_via_duan(identity_map(q), k) == 0 for k in range(1, 5))
    with pytest.raises(ShapeError):
        lefschetz_via_duan(identity_map(sphere(2)), 1)


def test_extended_examples():
    assert lefschetz_via_extended(s3xs2_map(2, 1), 1) == -2
    f = s3xs2_map(2, -1)
    assert lefschetz_via_extended(f, 1) == 0
    assert lefschetz_via_extended(f, 2) == -6
    ident = identity_map(product(sphere(3), sphere(2)))
    assert all(lefschetz_via_extended(ident, n) == 0 for n in range(1, 5))
    with pytest.raises(ShapeError):
        lefschetz_via_extended(identity_map(exterior(3)), 1)


def test_classification_examples():
    assert classify_lppf_extended(identity_map(product(sphere(3), sphere(2)))) is LppfClass.LAMBDA_ONE
    f = s3xs2_map(-1, -1)
    assert classify_lppf_extended(f) is LppfClass.MINUS_ONE_PAIR
    assert not any(lefschetz_sequence(f, 6))
    assert classify_lppf_extended(s3xs2_map(2, -1)) is LppfClass.NOT_LPPF


def test_even_only_examples():
    assert even_only_nonvanishing(identity_map(sphere(2))) == 1
    p = sphere(2)
    assert even_only_nonvanishing(from_generator_images(p, {"y2": -p.element("y2")})) == 2
    q = RingPresentation.build(**Y2_Y4)
    f = from_generator_images(q, {"y2": -q.element("y2")})
    assert even_only_nonvanishing(f) == 1
    assert lefschetz_sequence(f, 1)[1] == 1
    with pytest.raises(ShapeError):
        even_only_nonvanishing(identity_map(sphere(3)))


def test_verdict_examples():
    v = periodic_point_verdict(s3xs2_map(2, 1))
    assert v.has_periodic_point is Answer.YES and v.applied_theorem == THEOREM_TAGS["extended"]

    p = RingPresentation.build(odd=[("x3", 3)], **Y2_Y4)
    f = from_generator_images(p, {"x3": 2 * p.element("x3"), "y2": p.element("y2")})
    assert recognize_shape(p).kind is Shape.GENERAL_TENSOR
    assert eigen_summary(induced_map(f)).root_of_unity_orders_odd == set()
    v = periodic_point_verdict(f)
    assert v.has_periodic_point is Answer.YES and v.applied_theorem == THEOREM_TAGS["general"]

    for space in (exterior(3), product(sphere(3), sphere(2)), p, exterior(1, 5, 5)):
        v = periodic_point_verdict(identity_map(space))
        assert v.has_periodic_point is Answer.UNKNOWN


def test_verdict_exterior_and_even():
    s3 = sphere(3)
    v = periodic_point_verdict(from_generator_images(s3, {"x3": 2 * s3.element("x3")}))
    assert (v.has_periodic_point, v.applied_theorem) == (Answer.YES, THEOREM_TAGS["exterior"])
    v = periodic_point_verdict(identity_map(sphere(4)))
    assert (v.has_periodic_point, v.applied_theorem) == (Answer.YES, THEOREM_TAGS["even"])


def test_verdict_falls_back_to_direct_lefschetz():
    # the root-of-unity criterion is silent (odd eigenvalue -1) but L(f) != 0
    p = RingPresentation.build(odd=[("x3", 3)], **Y2_Y4)
    f = from_generator_images(p, {"x3": -p.element("x3"), "y2": p.element("y2")})
    v = periodic_point_verdict(f)
    assert v.has_periodic_point is Answer.YES
    assert v.applied_theorem == THEOREM_TAGS["direct"]


def test_forced_mode_mismatch():
    with pytest.raises(ShapeError):
        periodic_point_verdict(identity_map(exterior(3)), mode="even")
    with pytest.raises(ShapeError):
        periodic_point_verdict(identity_map(s5_bundle_fixture()), mode="general")
    v = periodic_point_verdict(s3xs2_map(2, 1), mode="general")
    assert v.applied_theorem == THEOREM_TAGS["general"]


def test_s5_fixture_verdict_is_direct():
    v = periodic_point_verdict(identity_map(s5_bundle_fixture()))
    assert v.has_periodic_point is Answer.UNKNOWN


def force_odd_eigenvalue_one(p):
    # fix the first odd generator: 1 is then an eigenvalue of A^odd(f)
    g = p.odd_generators[0].name
    return {g: p.element(g)}


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_root_of_unity_criterion_contrapositive(seed):
    rng = random.Random(seed)
    p = random_general_tensor(rng)
    assert recognize_shape(p).kind is Shape.GENERAL_TENSOR
    f = random_endomorphism(rng, p, odd_override=force_odd_eigenvalue_one)
    s = eigen_summary(induced_map(f))
    if is_lppf(f):
        assert s.root_of_unity_orders_odd
    if not s.root_of_unity_orders_odd:
        assert not is_lppf(f)


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_even_only_theorem(seed):
    rng = random.Random(seed)
    p = random_even_table(rng)
    f = random_endomorphism(rng, p)
    k = even_only_nonvanishing(f)
    assert 1 <= k <= lppf_horizon(f)
    assert not is_lppf(f)
