import random

from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz import (
    RingPresentation,
    decomposable_subspace,
    eigen_summary,
    from_generator_images,
    induced_map,
    power,
    quotient_basis,
)
from lefschetz import linalg
from lefschetz.indecomposables import preserves_decomposables
from lefschetz.polynomial import Polynomial, char_poly, root_of_unity_orders
from lefschetz.spaces import exterior, product, sphere

from randomized import random_endomorphism, random_even_table, random_exterior, random_extended, random_general_tensor

Y2_Y4 = RingPresentation.build(even_basis=[("y2", 2), ("y4", 4)], even_products={("y2", "y2"): {"y4": 1}})


def reps(p, reverse=False):
    return sorted(p.format_basis(b) for _, b in quotient_basis(p, reverse).representatives())


def test_decomposable_examples():
    p = exterior(3, 5)
    assert decomposable_subspace(p, 8) == ((1,),)
    assert decomposable_subspace(p, 3) == ()
    assert decomposable_subspace(Y2_Y4, 4) == ((1,),)


def test_quotient_examples():
    assert reps(exterior(3, 5)) == ["x3", "x5"]
    assert reps(Y2_Y4) == ["y2"]
    assert reps(product(sphere(3), sphere(2))) == ["x3", "y2"]


def test_induced_examples():
    p = sphere(3)
    a = induced_map(from_generator_images(p, {"x3": 7 * p.element("x3")}))
    assert a.odd_block == ((7,),) and a.even_block == ()
    q = exterior(3, 3)
    swap = from_generator_images(q, {"x3": q.element("x3'"), "x3'": q.element("x3")})
    assert induced_map(swap).odd_block == ((0, 1), (1, 0))


def test_decomposable_correction_is_invisible():
    # x7 -> x7 + x3*x1*x3': the correction is decomposable, so A(f) is the identity
    p = exterior(1, 3, 3, 7)
    img = {g.name: p.element(g.name) for g in p.odd_generators}
    img["x7"] = img["x7"] + p.monomial(["x1", "x3", "x3'"])
    a = induced_map(from_generator_images(p, img))
    assert a.odd_block == linalg.identity(4)


def test_eigen_summary_flags():
    p = exterior(3, 3)
    swap = from_generator_images(p, {"x3": p.element("x3'"), "x3'": p.element("x3")})
    s = eigen_summary(induced_map(swap))
    assert s.char_poly_odd == Polynomial([-1, 0, 1])
    assert s.has_one_odd and s.has_minus_one_odd and not s.has_minus_one_even
    assert s.root_of_unity_orders_odd == {1, 2}


def random_map(seed):
    rng = random.Random(seed)
    p = rng.choice([random_exterior, random_extended, random_even_table, random_general_tensor])(rng)
    return random_endomorphism(rng, p)


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_quotient_basis_invariants(seed):
    f = random_map(seed)
    p = f.presentation
    qb = quotient_basis(p)
    for r, q in qb.degrees.items():
        assert len(q.decomposables) + len(q.representatives) == p.dim(r)
        incl = [[int(b == c) for c in q.representatives] for b in p.basis[r]]
        assert linalg.matmul(q.projection, linalg.as_matrix(incl)) == linalg.identity(len(q.representatives))
        # decomposables project to zero
        for v in q.decomposables:
            assert not any(linalg.matvec(q.projection, v))


@given(st.integers(0, 10**6), st.integers(1, 5))
@settings(max_examples=30, deadline=None)
def test_functoriality(seed, k):
    f = random_map(seed)
    a = induced_map(f)
    ak = induced_map(power(f, k))
    assert all(ak.blocks[r] == linalg.matpow(m, k) for r, m in a.blocks.items())


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_decomposables_preserved(seed):
    assert preserves_decomposables(random_map(seed))


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_representative_choice_does_not_matter(seed):
    f = random_map(seed)
    p = f.presentation
    fwd = eigen_summary(induced_map(f, quotient_basis(p)))
    bwd = eigen_summary(induced_map(f, quotient_basis(p, reverse=True)))
    assert fwd.char_poly_odd == bwd.char_poly_odd
    assert fwd.char_poly_even == bwd.char_poly_even
    assert {r: quotient_basis(p).dim(r) for r in p.basis} == {r: quotient_basis(p, True).dim(r) for r in p.basis}


def determinant_oracle(m, bound):
    n = len(m)
    return any(linalg.det(linalg.sub(linalg.matpow(m, k), linalg.identity(n))) == 0 for k in range(1, bound + 1))


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=80, deadline=None)
def test_root_of_unity_matches_determinant_oracle(rows):
    m = linalg.as_matrix(rows)
    p = char_poly(m)
    orders = root_of_unity_orders(p)
    assert bool(orders) == determinant_oracle(m, 2 * p.degree ** 2)
    for k in orders:
        assert linalg.det(linalg.sub(linalg.matpow(m, k), linalg.identity(len(rows)))) == 0
