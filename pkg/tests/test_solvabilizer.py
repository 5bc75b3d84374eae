import pytest

from src.config import Config
from src.gf_linalg import rref
from src.models import ElementSet
from src.solvabilizer import (
    EnumerationTooLargeError,
    PairOracle,
    get_oracle,
    maximal_solvable_subalgebras,
    nilpotentizer,
    nilpotentizer_of,
    pair_nilpotent,
    pair_solvable,
    solvabilizer,
    solvabilizer_of,
    solvabilizer_rel,
    solvable_singletons,
)
from src.superalgebra import direct_sum

H, X, Y = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def test_solvable_algebra_is_its_own_solvabilizer(e1):
    assert solvabilizer(e1) == ElementSet.everything(e1)
    assert len(solvabilizer(e1)) == 9


def test_e1_element_solvabilizer(e1):
    assert solvabilizer_of(e1, (1, 0)) == ElementSet.everything(e1)


def test_e2_solvabilizer_is_empty(e2):
    sol = solvabilizer(e2)
    assert sol.is_empty()
    assert sol.format() == "{} (empty)"


def test_e2_solvabilizer_of_h(e2):
    # x, y components cannot both be nonzero
    row = solvabilizer_of(e2, H)
    assert len(row) == 15
    assert all(v[1] == 0 or v[2] == 0 for v in row)


def test_pair_tests(e2):
    assert pair_solvable(e2, H, X)
    assert not pair_solvable(e2, X, Y)
    assert pair_nilpotent(e2, X, (0, 2, 0))
    assert not pair_nilpotent(e2, H, X)


def test_gl2split_solvabilizer_is_the_centre(gl2split):
    sol = solvabilizer(gl2split)
    assert list(sol) == [(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 2)]
    assert sol.format() == "{0, c, 2c}"


def test_cross_check_agrees(e1, e2):
    solvabilizer(e1, cross_check=True)
    solvabilizer(e2, cross_check=True)


def test_worker_count_does_not_change_results(e2):
    assert solvabilizer_of(e2, H, workers=4) == solvabilizer_of(e2, H, workers=1)
    assert solvabilizer(e2, workers=3) == solvabilizer(e2)


def test_direct_sum_element_solvabilizer(e1, e2):
    D = direct_sum(e2, e1)
    hh = D.join(H, (1, 0))
    assert len(solvabilizer_of(D.algebra, hh)) == 15 * 9


def test_nilpotentizers(e1):
    assert nilpotentizer_of(e1, (1, 0)) == ElementSet.of(e1, [(0, 0), (1, 0), (2, 0)])
    nil = nilpotentizer(e1)
    assert list(nil) == [(0, 0)]
    assert nil.issubset(solvabilizer(e1))


def test_solvable_singletons(e2):
    singles = solvable_singletons(e2)
    # <v> is solvable exactly when [v, v] = 0, i.e. not both odd coordinates nonzero
    assert len(singles) == 15
    assert (0, 1, 1) not in singles


def test_relative_solvabilizer_conventions(e2):
    everything = ElementSet.everything(e2)
    empty = ElementSet.empty(e2)
    assert solvabilizer_rel(e2, empty, everything).is_empty()
    assert solvabilizer_rel(e2, everything, empty) == solvable_singletons(e2)
    assert solvabilizer_rel(e2, everything, everything) == solvabilizer(e2)
    single = ElementSet.of(e2, [H])
    assert solvabilizer_rel(e2, everything, single) == solvabilizer_of(e2, H)


def test_relative_solvabilizer_checks_algebra(e1, e2):
    with pytest.raises(ValueError):
        solvabilizer_rel(e2, ElementSet.everything(e1), ElementSet.everything(e2))


def test_oracle_is_shared_and_cached(e2):
    oracle = get_oracle(e2)
    assert get_oracle(e2, "solvable", "plain") is oracle
    before = oracle.cache.misses
    oracle(X, H)
    oracle((0, 2, 0), (2, 0, 0))
    # both pairs span the same plane
    assert oracle.cache.misses <= before + 1


def test_oracle_rejects_unknown_property(e2):
    with pytest.raises(ValueError):
        PairOracle(e2, "abelian")


def test_maximal_solvable_subalgebras_of_e2(e2):
    maximal = maximal_solvable_subalgebras(e2, containing=H)
    assert {M.space for M in maximal} == {rref([H, X], 3), rref([H, Y], 3)}


def test_maximal_solvable_subalgebra_of_solvable_algebra(e1):
    maximal = maximal_solvable_subalgebras(e1)
    assert len(maximal) == 1
    assert maximal[0].space.is_full()


def test_enumeration_cap(e2):
    with pytest.raises(EnumerationTooLargeError):
        maximal_solvable_subalgebras(e2, config=Config(subspace_max_dim=2))
