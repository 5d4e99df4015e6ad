import numpy as np
import pytest

from focklab.adhm import (
    kempf_ness_flow,
    morse_index_numeric,
    random_stable_data,
    tangent_dimension,
)
from focklab.adhm.tangent import (
    IllConditionedRankError,
    NonGenericEpsError,
    tangent_weight_multiplicities,
)
from focklab.partitions import Partition, enumerate_partitions, morse_index


def level_set_datum(n, r, seed=0):
    return kempf_ness_flow(random_stable_data(n, r, seed)).data


@pytest.mark.parametrize("n,r", [(1, 1), (2, 1), (1, 2)])
def test_tangent_dimension_is_4nr(n, r):
    d = level_set_datum(n, r)
    assert tangent_dimension(d, tol=1e-6) == 4 * n * r


def test_tangent_dimension_rejects_off_level_data():
    d = random_stable_data(2, 1, seed=0)  # not flowed onto the level set
    with pytest.raises(ValueError, match="level set"):
        tangent_dimension(d, tol=1e-6)


def test_rank_ambiguity_detection():
    # a singular value planted right at the tolerance must be refused
    from focklab.adhm.tangent import _rank

    m = np.diag([1.0, 1e-6])
    with pytest.raises(IllConditionedRankError):
        _rank(m, 1e-6)
    assert _rank(np.diag([1.0, 1e-12]), 1e-6) == 1


def test_tangent_weights_sum_to_2n():
    for n in range(1, 5):
        for p in enumerate_partitions(n):
            mults = tangent_weight_multiplicities(p)
            assert sum(mults.values()) == 2 * n
            assert all(m > 0 for m in mults.values())
            assert (0, 0) not in mults


def test_single_cell_weights():
    # one box: the tangent space is the two coordinate directions of the plane
    mults = tangent_weight_multiplicities(Partition((1,)))
    assert mults == {(1, 0): 1, (0, 1): 1}


def test_morse_index_numeric_examples():
    assert morse_index_numeric(Partition((1,))) == 0
    assert morse_index_numeric(Partition((2,))) == 2
    assert morse_index_numeric(Partition((1, 1))) == 0


def test_morse_index_numeric_matches_combinatorics():
    for n in range(1, 4):
        for p in enumerate_partitions(n):
            assert morse_index_numeric(p, eps=0.01) == morse_index(p)


def test_morse_index_numeric_bad_eps():
    # large eps flips the sign of the pairing against weight (1, -1)
    with pytest.raises(NonGenericEpsError, match="choose different eps"):
        morse_index_numeric(Partition((2,)), eps=2.0)
    with pytest.raises(ValueError):
        morse_index_numeric(Partition((2,)), eps=-0.1)
