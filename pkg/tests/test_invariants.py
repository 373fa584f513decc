import math

import pytest

from leibniz.algebra import Subspace, direct_sum, permute_basis, right_matrix
from leibniz.exceptions import NotNilpotent
from leibniz.families import build_abelian, build_N, build_R_A, build_R_N, build_sl2, build_table2, heisenberg_params
from leibniz.invariants import (
    center, characteristic_sequence, check_radical_containment, check_symmetric_annihilation,
    derived_series, is_nilpotent, is_nilpotent_operator, is_solvable, jordan_profile_nilpotent,
    lower_central_series, right_annihilator, verify_declared_nilradical,
)
from leibniz.utils.exactmat import Matrix


def descending_shapes(total):
    """Every descending shape with the given sum."""
    def parts(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for size in range(min(remaining, largest), 0, -1):
            for rest in parts(remaining - size, size):
                yield (size,) + rest
    return list(parts(total, total))


SHAPES_UP_TO_7 = [shape for total in range(1, 8) for shape in descending_shapes(total)]


def test_descending_shapes_helper():
    assert descending_shapes(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(SHAPES_UP_TO_7) == 1 + 2 + 3 + 5 + 7 + 11 + 15


def test_lower_central_series_of_null_filiform():
    N, _ = build_N((3,))
    series = lower_central_series(N)
    assert series.dims == [3, 2, 1, 0]
    assert series.index == 4
    assert is_nilpotent(N)


def test_lower_central_series_of_two_block_algebra():
    N, _ = build_N((2, 1))
    assert lower_central_series(N).dims == [3, 1, 0]


def test_sl2_is_neither_nilpotent_nor_solvable():
    sl2 = build_sl2()
    series = lower_central_series(sl2)
    assert series.dims == [3]
    assert series.index is None
    assert series.to_dict()['index'] == 'not nilpotent'
    assert not is_solvable(sl2)
    assert derived_series(sl2).to_dict()['index'] == 'not solvable'


def test_two_dim_lie_is_solvable_not_nilpotent(two_dim_lie):
    assert lower_central_series(two_dim_lie).dims == [2, 1]
    assert not is_nilpotent(two_dim_lie)
    assert derived_series(two_dim_lie).dims == [2, 1, 0]
    assert is_solvable(two_dim_lie)


@pytest.mark.parametrize('shape', [(1,), (3,), (4, 2), (3, 3, 1), (5, 1, 1)])
def test_derived_series_of_N_reaches_zero_quickly(shape):
    N, _ = build_N(shape)
    series = derived_series(N)
    assert series.reaches_zero
    assert series.index <= math.ceil(math.log2(shape[0] + 1)) + 1


@pytest.mark.parametrize('shape', [(2,), (3, 1), (2, 2, 1)])
def test_R_N_is_solvable(shape):
    R, _ = build_R_N(shape)
    assert is_solvable(R)
    assert not is_nilpotent(R)


def test_center_and_right_annihilator():
    N, _ = build_N((2,))
    assert center(N) == Subspace.from_indices(N, [1])
    assert right_annihilator(N) == Subspace.from_indices(N, [1])

    R, _ = build_R_A(1, [0])
    assert center(R).is_zero()
    assert right_annihilator(R) == Subspace.from_indices(R, [0])

    assert center(build_sl2()).is_zero()
    A = build_abelian(3)
    assert center(A) == Subspace.whole(A)


@pytest.mark.parametrize('shape', [shape for shape in SHAPES_UP_TO_7 if shape[0] <= 5])
def test_nilindex_of_N_is_largest_block_plus_one(shape):
    N, _ = build_N(shape)
    assert lower_central_series(N).index == shape[0] + 1


@pytest.mark.parametrize('algebra', [
    build_N((3, 1))[0],
    build_N((2, 2, 1))[0],
    build_R_N((2, 1))[0],
    build_R_A(2, [-1, 0])[0],
    build_abelian(3),
    build_sl2(),
])
def test_center_lies_in_right_annihilator(algebra):
    assert right_annihilator(algebra).contains(center(algebra))


def test_jordan_profile_of_shift_and_zero():
    shift = Matrix.from_rows([[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]])
    assert jordan_profile_nilpotent(shift) == (3, 1)
    assert jordan_profile_nilpotent(Matrix.zeros(2, 2)) == (1, 1)
    assert jordan_profile_nilpotent(Matrix.zeros(0, 0)) == ()


def test_jordan_profile_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        jordan_profile_nilpotent(Matrix.identity(2))


def test_nilpotent_operators():
    N, _ = build_N((3, 2))
    assert all(is_nilpotent_operator(right_matrix(N, N.basis_vector(i))) for i in range(N.dim))
    assert not is_nilpotent_operator(right_matrix(build_sl2(), (0, 0, 1)))
    assert not is_nilpotent_operator(Matrix.zeros(2, 3))


@pytest.mark.parametrize('shape', SHAPES_UP_TO_7)
def test_characteristic_sequence_matches_shape(shape):
    N, _ = build_N(shape)
    result = characteristic_sequence(N, samples=50, seed=0)
    assert result.sequence == shape
    assert not result.witness.is_zero()


def test_characteristic_sequence_of_abelian():
    result = characteristic_sequence(build_abelian(4), samples=5, seed=0)
    assert result.sequence == (1, 1, 1, 1)


def test_characteristic_sequence_with_shape_hint():
    N, _ = build_N((3, 2))
    assert characteristic_sequence(N, samples=10, shape=(3, 2)).mode == 'exact-family'
    assert characteristic_sequence(N, samples=10, shape=(4, 1)).mode == 'sampled'


def test_characteristic_sequence_is_deterministic():
    N, _ = build_N((3, 2, 1))
    first = characteristic_sequence(N, samples=20, seed=7).to_dict()
    second = characteristic_sequence(N, samples=20, seed=7).to_dict()
    assert first == second


def test_characteristic_sequence_requires_nilpotent(two_dim_lie):
    with pytest.raises(NotNilpotent):
        characteristic_sequence(two_dim_lie, samples=1)


@pytest.mark.parametrize('shape, perm', [
    ((3, 2, 1), (5, 3, 1, 0, 4, 2)),
    ((4, 2), (2, 5, 0, 3, 1, 4)),
    ((2, 2, 1), (4, 0, 3, 1, 2)),
])
def test_characteristic_sequence_ignores_basis_order(shape, perm):
    N, _ = build_N(shape)
    reordered = permute_basis(N, perm)
    assert characteristic_sequence(reordered, samples=50, seed=0).sequence == shape


@pytest.mark.parametrize('build', [
    lambda: build_R_N((2, 1)),
    lambda: build_R_N((3,)),
    lambda: build_R_A(2, [-1, 0]),
    lambda: build_table2(heisenberg_params()),
])
def test_declared_nilradicals_pass(build):
    R, N = build()
    report = verify_declared_nilradical(R, N)
    assert report.passed, report.failures()
    assert report.to_dict()['maximality'] == 'probed, not certified'


def test_declared_nilradical_that_is_too_small_fails_extension_check():
    R, _ = build_R_N((2, 1))
    # e2_1 alone is a nilpotent ideal, but it extends by e1_2
    report = verify_declared_nilradical(R, Subspace.from_indices(R, [2]))
    assert 'extension-probe' in report.failures()


def test_declared_nilradical_that_is_not_nilpotent_fails(two_dim_lie):
    report = verify_declared_nilradical(two_dim_lie, Subspace.whole(two_dim_lie))
    assert 'nilpotent' in report.failures()


def test_radical_containment_in_direct_sum():
    R, N = build_R_A(1, [-1])
    L = direct_sum(R, build_sl2())
    radical = Subspace.from_indices(L, [0, 1])
    nilradical = Subspace.from_indices(L, [0])
    assert check_radical_containment(L, radical, nilradical)
    assert not check_radical_containment(L, radical, Subspace.zero(L))


@pytest.mark.parametrize('algebra', [
    build_sl2(),
    build_R_A(2, [0, -1])[0],
    build_R_N((3, 1))[0],
    build_N((2, 2))[0],
])
def test_symmetric_brackets_annihilate_on_the_right(algebra):
    verdict = check_symmetric_annihilation(algebra, trials=100, seed=0)
    assert verdict.holds
    assert verdict.trials == 100
