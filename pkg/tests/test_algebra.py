from fractions import Fraction

import pytest
from hypothesis import given, settings

from leibniz.algebra import (
    Algebra, Subspace, bracket, change_basis, check_leibniz, direct_sum, find_violations, is_ideal,
    is_lie, left_matrix, permute_basis, product_subspace, quotient, require_leibniz, right_matrix,
    subalgebra, subspace_from_spanners,
)
from leibniz.exceptions import DimensionMismatch, LeibnizViolation, NotAnIdeal, NotClosed
from leibniz.families import build_abelian, build_N, build_R_A, build_R_N
from leibniz.invariants import right_annihilator
from leibniz.utils.exactmat import Matrix
from tests.conftest import small_fractions, vectors


def test_abelian_brackets_vanish():
    A = build_abelian(3)
    x = A.element([1, 2, 3])
    assert bracket(x, x).is_zero()


def test_null_filiform_square():
    N, _ = build_N((2,))
    e1 = N.basis_element(0)
    assert bracket(e1, e1).coords == (0, 1)


def test_two_dim_lie_bracket(two_dim_lie):
    f, x = two_dim_lie.basis_element(0), two_dim_lie.basis_element(1)
    assert bracket(x, f) == -f
    assert bracket(f, x) == f


def test_bracket_rejects_mixed_algebras(sl2):
    with pytest.raises(DimensionMismatch):
        bracket(sl2.basis_element(0), build_abelian(3).basis_element(0))


def test_element_describe(sl2):
    assert str(sl2.element([2, 0, Fraction(-1, 2)])) == '2*e - 1/2*h'
    assert str(sl2.zero()) == '0'


def test_labels_must_be_unique():
    with pytest.raises(DimensionMismatch):
        Algebra.from_products(['a', 'a'], {})


def test_check_leibniz_passes_on_families(sl2):
    R, _ = build_R_A(2, [-1, 0])
    assert check_leibniz(R).ok
    assert check_leibniz(build_abelian(4)).ok
    assert check_leibniz(sl2).ok


def test_check_leibniz_reports_first_violating_triple(broken_table):
    verdict = check_leibniz(broken_table)
    assert not verdict.ok
    assert verdict.triple == (1, 1, 0)
    assert verdict.residual == (2, 0)
    with pytest.raises(LeibnizViolation) as excinfo:
        require_leibniz(broken_table)
    assert excinfo.value.triple == (1, 1, 0)


def test_find_violations_lists_every_triple_in_order(broken_table):
    triples = [triple for triple, _ in find_violations(broken_table)]
    assert triples == sorted(triples)
    assert triples[0] == (1, 1, 0)


def test_is_lie(sl2):
    assert is_lie(sl2)
    assert is_lie(build_abelian(3))
    assert not is_lie(build_N((2,))[0])
    assert not is_lie(build_R_A(1, [0])[0])


def test_spans_are_canonical():
    A = build_abelian(3)
    whole = subspace_from_spanners(A, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert whole == Subspace.whole(A)
    assert subspace_from_spanners(A, []).is_zero()
    assert subspace_from_spanners(A, [[1, 1, 0], [2, 2, 0]]).dim == 1


def test_product_subspaces():
    A = build_abelian(3)
    whole = Subspace.whole(A)
    assert product_subspace(A, whole, whole).is_zero()

    N, _ = build_N((3,))
    square = product_subspace(N, Subspace.whole(N), Subspace.whole(N))
    assert square == Subspace.from_indices(N, [1, 2])


def test_product_of_two_dim_lie_with_itself(two_dim_lie):
    whole = Subspace.whole(two_dim_lie)
    assert product_subspace(two_dim_lie, whole, whole) == Subspace.from_indices(two_dim_lie, [0])


def test_is_ideal(two_dim_lie):
    R, N = build_R_N((2, 1))
    assert is_ideal(R, N)
    assert not is_ideal(two_dim_lie, Subspace.from_indices(two_dim_lie, [1]))
    assert is_ideal(two_dim_lie, Subspace.zero(two_dim_lie))


def test_quotient_by_whole_is_zero_algebra():
    A = build_abelian(2)
    Q, _ = quotient(A, Subspace.whole(A))
    assert Q.dim == 0


def test_quotient_of_null_filiform_by_square():
    N, _ = build_N((3,))
    Q, projection = quotient(N, Subspace.from_indices(N, [1, 2]))
    assert Q.dim == 1
    assert not Q.products
    assert projection(N.basis_vector(2)) == (0,)


def test_quotient_of_R_N_keeps_torus_action():
    R, _ = build_R_N((2,))
    Q, _ = quotient(R, Subspace.from_indices(R, [1]))
    assert Q.labels == ('ēe1_1', 'ēx1')
    assert Q.product(0, 1) == (1, 0)
    assert Q.product(1, 0) == (-1, 0)
    assert check_leibniz(Q).ok


def test_quotient_requires_an_ideal(two_dim_lie):
    with pytest.raises(NotAnIdeal):
        quotient(two_dim_lie, Subspace.from_indices(two_dim_lie, [1]))


def test_direct_sum_blocks_are_ideals(sl2):
    R, _ = build_R_A(2, [-1, 0])
    L = direct_sum(R, sl2)
    assert is_ideal(L, Subspace.from_indices(L, range(4)))
    assert is_ideal(L, Subspace.from_indices(L, range(4, 7)))
    assert direct_sum(build_abelian(1), build_abelian(1)).products == ()
    assert direct_sum(build_abelian(1), build_abelian(1)).labels == ('a1', "a1'")


def test_R_A_is_a_sum_of_two_dimensional_blocks():
    R, _ = build_R_A(2, [-1, 0])
    first, _ = build_R_A(1, [-1])
    second, _ = build_R_A(1, [0])
    blocks = direct_sum(first, second)
    # blocks order f1, x1, f1', x1'; R orders f1, f2, x1, x2
    interleaved = permute_basis(blocks, [0, 2, 1, 3])
    assert interleaved.products == R.products


def test_left_and_right_matrices(two_dim_lie):
    x = two_dim_lie.basis_vector(1)
    assert right_matrix(two_dim_lie, x) == Matrix.from_rows([[1, 0], [0, 0]])
    assert left_matrix(two_dim_lie, x) == Matrix.from_rows([[-1, 0], [0, 0]])


def test_subalgebra_keeps_labels_on_coordinate_subspaces():
    R, _ = build_R_A(2, [-1, 0])
    S = subalgebra(R, Subspace.from_indices(R, [0, 2]))
    assert S.labels == ('f1', 'x1')
    assert S.product(0, 1) == (1, 0)


def test_subalgebra_rejects_open_subspaces(sl2):
    with pytest.raises(NotClosed):
        subalgebra(sl2, Subspace.from_indices(sl2, [0, 1]))


def test_change_basis_preserves_the_identity(sl2):
    P = Matrix.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, 2]])
    assert check_leibniz(change_basis(sl2, P)).ok


@pytest.mark.parametrize('shape', [(3,), (2, 1), (3, 2)])
def test_quotients_by_filtration_terms_are_leibniz(shape):
    R, N = build_R_N(shape)
    square = product_subspace(R, N, N)
    Q, _ = quotient(R, square)
    assert check_leibniz(Q).ok


@settings(max_examples=30, deadline=None)
@given(vectors(3), vectors(3), vectors(3), small_fractions(), small_fractions())
def test_bracket_is_bilinear(x, y, z, a, b):
    L = Algebra.from_products(('e', 'f', 'h'), {
        (0, 2): {0: 2}, (2, 0): {0: -2}, (1, 2): {1: -2}, (2, 1): {1: 2}, (0, 1): {2: 1}, (1, 0): {2: -1},
    })
    combo = tuple(a * u + b * v for u, v in zip(x, y))
    left = L.multiply(combo, z)
    assert left == tuple(a * u + b * v for u, v in zip(L.multiply(x, z), L.multiply(y, z)))
    right = L.multiply(z, combo)
    assert right == tuple(a * u + b * v for u, v in zip(L.multiply(z, x), L.multiply(z, y)))


@settings(max_examples=40, deadline=None)
@given(vectors(5), vectors(5), vectors(5))
def test_identity_holds_on_random_triples(x, y, z):
    R, _ = build_R_N((2, 1))
    lhs = R.multiply(x, R.multiply(y, z))
    rhs = tuple(a - b for a, b in zip(R.multiply(R.multiply(x, y), z), R.multiply(R.multiply(x, z), y)))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(vectors(4), vectors(4))
def test_symmetrised_brackets_annihilate_on_the_right(x, y):
    R, _ = build_R_A(2, [0, -1])
    symmetric = tuple(a + b for a, b in zip(R.multiply(x, y), R.multiply(y, x)))
    assert right_annihilator(R).contains_vector(symmetric)
    for i in range(R.dim):
        assert not any(R.multiply(R.basis_vector(i), symmetric))
