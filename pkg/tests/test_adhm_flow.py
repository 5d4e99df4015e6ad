import numpy as np
import pytest

from focklab.adhm import (
    ADHMData,
    FlowOptions,
    UnstableDataError,
    fixed_point_data,
    gl_act,
    kempf_ness_flow,
    mu_complex,
    mu_real,
    random_stable_data,
    unitary_invariants,
)
from focklab.adhm.flow import invariant_distance
from focklab.partitions import Partition


def residual(d, zeta_r=-1.0):
    return float(np.linalg.norm(mu_real(d) + zeta_r * np.eye(d.n)))


def test_scalar_closed_form():
    # n=1: only |i|^2 matters, the flow rescales i to hit |i|^2 = -zeta_r
    d = ADHMData([[0]], [[0]], [[3.0]], [[0]])
    out = kempf_ness_flow(d, FlowOptions(zeta_r=-1.0))
    assert out.converged
    assert out.residual <= 1e-8
    assert abs(abs(out.data.i[0, 0]) ** 2 - 1.0) < 1e-8


def test_two_cell_column_closed_form():
    # the (1,1) fixed point: diagonal solve gives |i|^2 = 2 and |B1 entry| = 1
    d, _ = fixed_point_data(Partition((1, 1)))
    out = kempf_ness_flow(d, FlowOptions(zeta_r=-1.0))
    assert out.converged
    assert abs(np.linalg.norm(out.data.i) ** 2 - 2.0) < 1e-6
    assert abs(np.abs(out.data.b1).max() - 1.0) < 1e-6


def test_unstable_datum_rejected():
    d = ADHMData(np.zeros((2, 2)), np.zeros((2, 2)), [[1], [0]], np.zeros((1, 2)))
    with pytest.raises(UnstableDataError, match="datum unstable"):
        kempf_ness_flow(d)


def test_nonzero_mu_complex_rejected():
    d = ADHMData([[0]], [[0]], [[1.0]], [[1.0]])  # mu_C = 1
    with pytest.raises(ValueError, match="mu_C"):
        kempf_ness_flow(d)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_flow_converges_and_preserves_structure(n):
    opts = FlowOptions()
    for seed in (0, 1):
        d = random_stable_data(n, 1, seed)
        out = kempf_ness_flow(d, opts)
        assert out.converged
        assert out.residual <= opts.tol
        assert residual(out.data) <= opts.tol
        # mu_C stays zero along the GL-action
        assert float(np.linalg.norm(mu_complex(out.data))) <= 10 * opts.tol
        # conjugation preserves the B-spectra
        for name in ("b1", "b2"):
            before = np.sort_complex(np.linalg.eigvals(getattr(d, name)))
            after = np.sort_complex(np.linalg.eigvals(getattr(out.data, name)))
            assert np.allclose(before, after, atol=1e-8)
        # result is the g-transform of the input
        moved = gl_act(out.g, d)
        assert np.allclose(moved.b1, out.data.b1, atol=1e-8)
        assert np.allclose(moved.i, out.data.i, atol=1e-8)


def test_gauge_equivalent_starts_agree_on_invariants():
    rng = np.random.default_rng(123)
    d = random_stable_data(3, 1, seed=8)
    g0 = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    g0 += 3 * np.eye(3)  # keep it comfortably invertible
    d_moved = gl_act(g0, d)
    out_a = kempf_ness_flow(d)
    out_b = kempf_ness_flow(d_moved)
    assert out_a.converged and out_b.converged
    dist = invariant_distance(unitary_invariants(out_a.data), unitary_invariants(out_b.data))
    assert dist <= 1e-6


def test_degenerate_flow():
    d = ADHMData(np.zeros((0, 0)), np.zeros((0, 0)), np.zeros((0, 1)), np.zeros((1, 0)))
    out = kempf_ness_flow(d)
    assert out.converged and out.residual == 0.0 and out.iterations == 0


def test_random_stable_data_deterministic():
    a = random_stable_data(3, 2, seed=17)
    b = random_stable_data(3, 2, seed=17)
    for name in ("b1", "b2", "i", "j"):
        assert np.array_equal(getattr(a, name), getattr(b, name))
    c = random_stable_data(3, 2, seed=18)
    assert not np.array_equal(a.i, c.i)


def test_random_stable_data_on_locus():
    for (n, r) in ((1, 1), (2, 1), (4, 1), (2, 2), (1, 2)):
        d = random_stable_data(n, r, seed=2)
        assert not mu_complex(d).any()
        assert all(abs(x) > 0.1 for x in d.i.reshape(-1))


def test_flow_options_validation():
    with pytest.raises(ValueError):
        FlowOptions(zeta_r=1.0)
    with pytest.raises(ValueError):
        FlowOptions(tol=0.0)
    with pytest.raises(ValueError):
        FlowOptions(max_iter=0)


def test_invariant_distance_requires_same_keys():
    with pytest.raises(ValueError):
        invariant_distance({"tr(a)": 1.0}, {"tr(b)": 1.0})
