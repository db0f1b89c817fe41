import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz import (
    Shape,
    betti_compatible_with_exterior,
    lefschetz_sequence,
    odd_sphere_bundle,
    poincare_polynomial,
    product,
    recognize_shape,
    s5_bundle_fixture,
    sphere,
    tensor_map,
    validate_presentation,
)
from lefschetz.indecomposables import quotient_basis
from lefschetz.polynomial import Polynomial
from lefschetz.spaces import fixtures, kodaira_thurston_betti

from randomized import random_endomorphism, random_even_table, random_exterior

T = Polynomial([0, 1])


def test_sphere_examples():
    assert sphere(3).betti() == (1, 0, 0, 1)
    assert sphere(2).betti() == (1, 0, 1)
    assert [g.name for g in sphere(1).odd_generators] == ["x1"]
    with pytest.raises(ValueError):
        sphere(0)


def test_product_examples():
    p = product(sphere(3), sphere(2))
    assert [g.name for g in p.odd_generators] == ["x3"]
    assert [n for n, _ in p.even.basis] == ["y2"]
    assert [g.name for g in product(sphere(3), sphere(3)).odd_generators] == ["x3", "x3'"]
    assert poincare_polynomial(product(sphere(2), sphere(4))) == (1 + T ** 2) * (1 + T ** 4)


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_product_associative_up_to_relabeling(seed):
    rng = random.Random(seed)
    a, b, c = random_exterior(rng, max_gens=2), random_even_table(rng), random_even_table(rng)
    left, right = product(product(a, b), c), product(a, product(b, c))
    assert poincare_polynomial(left) == poincare_polynomial(right)
    assert validate_presentation(left) and validate_presentation(right)


def test_bundle_example():
    base = product(sphere(3), sphere(3))
    e = odd_sphere_bundle(base, 7, 6)
    assert [g.degree for g in e.odd_generators] == [3, 3, 7]
    assert [g.name for g in e.odd_generators] == ["x3", "x3'", "x7"]
    assert poincare_polynomial(e) == (1 + T ** 3) ** 2 * (1 + T ** 7)
    assert recognize_shape(e).kind is Shape.RATIONAL_EXTERIOR


def test_bundle_rejections():
    base = product(sphere(3), sphere(3))
    with pytest.raises(ValueError, match="below the base dimension"):
        odd_sphere_bundle(base, 5, 6)
    with pytest.raises(ValueError, match="even"):
        odd_sphere_bundle(sphere(2), 2, 2)
    # the default base dimension is the top degree
    with pytest.raises(ValueError):
        odd_sphere_bundle(base, 5)


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_bundle_multiplies_poincare(seed):
    rng = random.Random(seed)
    base = rng.choice([random_exterior, random_even_table])(rng)
    k = base.top_degree + rng.choice([0, 1, 2, 3])
    k += 1 - k % 2
    e = odd_sphere_bundle(base, k)
    assert poincare_polynomial(e) == poincare_polynomial(base) * (1 + T ** k)


def test_kodaira_thurston():
    kt = kodaira_thurston_betti()
    assert tuple(kt) == (1, 3, 4, 3, 1)
    assert kt.total == 12
    assert not betti_compatible_with_exterior(kt)


def test_s5_fixture():
    p = s5_bundle_fixture()
    assert validate_presentation(p)
    assert p.betti() == (1, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 1)
    assert p.euler_characteristic() == 0
    a1, a2 = p.element("a1"), p.element("a2")
    assert (a1 * a2).is_zero() and (a1 * a1).is_zero()
    assert a1 * p.element("b1") == p.element("top")
    assert (a1 * p.element("b2")).is_zero()
    assert not betti_compatible_with_exterior(p.betti())
    shape = recognize_shape(p)
    assert shape.kind is not Shape.RATIONAL_EXTERIOR
    assert shape.witness.startswith("not rational exterior: even indecomposable in degree 8")
    assert quotient_basis(p).dim(8) == 2


def test_fixture_table():
    table = fixtures()
    for name in ("sphere3", "s3xs2", "s3xs3", "kodaira_thurston_betti", "s5_bundle"):
        assert name in table
    for name, value in table.items():
        if not isinstance(value, tuple):
            assert validate_presentation(value), name


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_kunneth_lefschetz_sequences(seed):
    rng = random.Random(seed)
    p1, p2 = random_exterior(rng, max_gens=2), random_even_table(rng)
    f1, f2 = random_endomorphism(rng, p1), random_endomorphism(rng, p2)
    f = tensor_map(f1, f2)
    s, s1, s2 = (lefschetz_sequence(g, 4) for g in (f, f1, f2))
    assert all(s[k] == s1[k] * s2[k] for k in range(1, 5))


def test_product_rejects_hybrid():
    with pytest.raises(ValueError):
        product(s5_bundle_fixture(), sphere(3))
    with pytest.raises(ValueError):
        odd_sphere_bundle(s5_bundle_fixture(), 11)
