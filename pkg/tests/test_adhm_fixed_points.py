import numpy as np
import pytest

from focklab.adhm import fixed_point_data, mu_complex, stability_check, torus_act
from focklab.adhm.data import unit_scalar
from focklab.adhm.fixed_points import equivariance_residual
from focklab.partitions import Partition, enumerate_partitions


def test_single_cell():
    d, w = fixed_point_data(Partition((1,)))
    assert d.n == 1 and d.r == 1
    assert d.b1[0, 0] == 0 and d.b2[0, 0] == 0
    assert d.i[0, 0] == 1 and d.j[0, 0] == 0
    assert w.cells == ((1, 0),)


def test_hook_partition_structure():
    d, w = fixed_point_data(Partition((2, 1)))
    assert d.n == 3
    assert not mu_complex(d).any()
    assert stability_check(d)
    # basis is sorted cells: (1,0), (1,1), (2,0)
    assert w.cells == ((1, 0), (1, 1), (2, 0))
    assert d.b2[1, 0] == 1  # (1,0) -> (1,1)
    assert d.b1[2, 0] == 1  # (1,0) -> (2,0)
    assert d.b1[:, 1].sum() == 0  # (1,1) has no right neighbour
    assert d.i[0, 0] == 1


def test_all_small_fixed_points_satisfy_equations():
    for n in range(7):
        for p in enumerate_partitions(n):
            d, w = fixed_point_data(p)
            assert d.n == n
            assert not mu_complex(d).any()
            assert stability_check(d)
            assert not d.j.any()


def test_torus_equivariance_via_lambda():
    t1, t2 = unit_scalar(0.31), unit_scalar(1.17)
    for p in enumerate_partitions(5):
        d, w = fixed_point_data(p)
        assert equivariance_residual(d, w, t1, t2) < 1e-12
        acted = torus_act(t1, t2, d)
        lam = w.lam(t1, t2)
        lam_inv = w.lam(1 / t1, 1 / t2)
        assert np.allclose(acted.b1, lam @ d.b1 @ lam_inv)
        assert np.allclose(acted.i, lam @ d.i)


def test_empty_partition_degenerate_datum():
    d, w = fixed_point_data(Partition(()))
    assert d.n == 0 and d.r == 1
    assert w.cells == ()
    assert mu_complex(d).shape == (0, 0)
    assert stability_check(d)


def test_rank_other_than_one_rejected():
    with pytest.raises(ValueError):
        fixed_point_data(Partition((1,)), r=2)
