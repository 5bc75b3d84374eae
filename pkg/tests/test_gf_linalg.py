from itertools import product

import pytest

from src.gf_linalg import (
    DimensionMismatchError,
    FieldError,
    all_vectors,
    check_field_prime,
    coordinates_in,
    enumerate_subspaces,
    gaussian_binomial,
    inverse,
    is_prime,
    matmul,
    nullspace,
    rref,
    subspace_intersection,
    subspace_member,
    subspace_sum,
    unit_vector,
)


def test_is_prime():
    assert [n for n in range(12) if is_prime(n)] == [2, 3, 5, 7, 11]


@pytest.mark.parametrize("p", [2, 4, 9, 0, -3])
def test_check_field_prime_rejects(p):
    with pytest.raises(FieldError):
        check_field_prime(p)


def test_check_field_prime_rejects_bool():
    with pytest.raises(FieldError):
        check_field_prime(True)


def test_check_field_prime_accepts_odd_primes():
    assert check_field_prime(3) == 3
    assert check_field_prime(5) == 5


def test_rref_normalises_pivots():
    S = rref([[2, 4], [1, 2]], 5)
    assert S.rank == 1
    assert S.basis == ((1, 2),)


def test_rref_is_canonical():
    assert rref([[1, 0], [0, 1]], 3) == rref([[1, 1], [1, 2]], 3)
    assert hash(rref([[1, 1, 0]], 3)) == hash(rref([[2, 2, 0]], 3))


def test_rref_empty_needs_dimension():
    with pytest.raises(DimensionMismatchError):
        rref([], 3)
    assert rref([], 3, 2).is_zero()


def test_rref_rejects_ragged_rows():
    with pytest.raises(DimensionMismatchError):
        rref([[1, 0], [1, 0, 0]], 3)


def test_membership():
    S = rref([[1, 1, 0]], 3)
    assert (2, 2, 0) in S
    assert (1, 0, 0) not in S
    with pytest.raises(DimensionMismatchError):
        (1, 0) in S


def test_coordinates_in():
    S = rref([[1, 0, 1], [0, 1, 2]], 3)
    assert coordinates_in(S, (2, 1, 1)) == (2, 1)
    with pytest.raises(ValueError):
        coordinates_in(S, (0, 0, 1))


def test_sum_and_intersection():
    S = rref([unit_vector(3, 0), unit_vector(3, 1)], 3)
    T = rref([unit_vector(3, 1), unit_vector(3, 2)], 3)
    assert subspace_sum(S, T).is_full()
    assert subspace_intersection(S, T) == rref([unit_vector(3, 1)], 3)
    assert subspace_intersection(S, rref([], 3, 3)).is_zero()


def test_intersection_checks_compatibility():
    with pytest.raises(DimensionMismatchError):
        subspace_intersection(rref([[1, 0]], 3), rref([[1, 0]], 5))


def test_dimension_formula_for_sum_and_intersection():
    spaces = list(enumerate_subspaces(3, 3))
    for S in spaces:
        for T in spaces:
            total = subspace_sum(S, T).rank + subspace_intersection(S, T).rank
            assert total == S.rank + T.rank, (S.basis, T.basis)
            assert subspace_intersection(S, T).issubset(S)
            assert S.issubset(subspace_sum(S, T))


def test_membership_matches_span_enumeration():
    for S in enumerate_subspaces(3, 3):
        span = {
            tuple(sum(c * row[i] for c, row in zip(coeffs, S.basis)) % 3 for i in range(3))
            for coeffs in product(range(3), repeat=S.rank)
        }
        assert len(span) == 3 ** S.rank
        for v in all_vectors(3, 3):
            assert subspace_member(S, v) == (v in span)


def test_nullspace():
    K = nullspace([[1, 1]], 3)
    assert K.basis == ((1, 2),)
    assert nullspace([], 3, 2).is_full()


def test_inverse():
    inv = inverse([[1, 1], [0, 1]], 3)
    assert inv.tolist() == [[1, 2], [0, 1]]
    assert matmul([[1, 1], [0, 1]], inv, 3).tolist() == [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        inverse([[1, 1], [1, 1]], 3)


def test_elements_are_sorted():
    assert rref([[1, 0]], 3).elements() == [(0, 0), (1, 0), (2, 0)]
    assert rref([], 3, 2).elements() == [(0, 0)]


def test_is_graded():
    assert rref([[1, 0]], 3).is_graded(1)
    assert not rref([[1, 1]], 3).is_graded(1)


def test_gaussian_binomial():
    assert gaussian_binomial(2, 1, 3) == 4
    assert gaussian_binomial(3, 1, 3) == 13
    assert gaussian_binomial(3, 4, 3) == 0


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (5, 2)])
def test_enumerate_subspaces_counts_and_canonical(p, n):
    spaces = list(enumerate_subspaces(p, n))
    assert len(spaces) == sum(gaussian_binomial(n, k, p) for k in range(n + 1))
    assert len(set(spaces)) == len(spaces)
    for S in spaces:
        assert rref(S.basis, p, n) == S


def test_enumerate_subspaces_single_dimension():
    assert all(S.rank == 1 for S in enumerate_subspaces(3, 3, 1))
