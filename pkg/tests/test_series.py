import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from focklab.partitions import enumerate_partitions
from focklab.series import (
    BettiProfile,
    BivariateSeries,
    SeriesError,
    character_matches_goettsche,
    clifford_character,
    euler_generating,
    goettsche,
    heisenberg_character,
)
from focklab.tpoly import TPoly

SPHERE = BettiProfile((1, 0, 0, 0, 0))
K3 = BettiProfile((1, 0, 22, 0, 1))


def q_plus(sign, order):
    return BivariateSeries.one(order) + BivariateSeries.term(
        1, TPoly((sign,)), order
    )


def test_mul_examples():
    order2 = q_plus(1, 2) * q_plus(-1, 2)
    assert order2.coeffs == (TPoly((1,)), TPoly(()), TPoly((-1,)))
    f = goettsche(K3, 4)
    assert BivariateSeries.one(4) * f == f
    tq = BivariateSeries.one(2) + BivariateSeries.term(1, TPoly((0, 1)), 2)
    sq = tq * tq
    assert sq.coeffs == (TPoly((1,)), TPoly((0, 2)), TPoly((0, 0, 1)))


def test_mixed_orders_truncate_to_min():
    f = q_plus(1, 5)
    g = q_plus(1, 2)
    assert (f * g).order == 2
    assert (f + g).order == 2


def test_geom_inverse_examples():
    inv = q_plus(-1, 3).geom_inverse()
    assert inv.coeffs == (TPoly((1,)),) * 4
    u = BivariateSeries.one(2) - BivariateSeries.term(1, TPoly((0, 0, 1)), 2)
    inv = u.geom_inverse()
    assert inv.coeffs == (TPoly((1,)), TPoly((0, 0, 1)), TPoly((0, 0, 0, 0, 1)))
    assert BivariateSeries.one(4).geom_inverse() == BivariateSeries.one(4)


def test_geom_inverse_requires_unit():
    with pytest.raises(SeriesError):
        (BivariateSeries.zero(3)).geom_inverse()
    with pytest.raises(SeriesError):
        (q_plus(1, 3) + BivariateSeries.one(3)).geom_inverse()


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_mul_commutative_associative(data):
    def rand_series(order):
        coeffs = []
        for _ in range(order + 1):
            deg = data.draw(st.integers(0, 3))
            coeffs.append(TPoly(data.draw(
                st.lists(st.integers(-4, 4), min_size=deg + 1, max_size=deg + 1))))
        return BivariateSeries(order, tuple(coeffs))

    f, g, h = rand_series(4), rand_series(4), rand_series(4)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


def test_inverse_is_two_sided():
    f = goettsche(K3, 6)
    assert f.coeffs[0] == TPoly.one()
    inv = f.geom_inverse()
    assert f * inv == BivariateSeries.one(6)
    assert inv * f == BivariateSeries.one(6)


def test_goettsche_plane_matches_partition_morse_oracle():
    f = goettsche(SPHERE, 3)
    assert f.extract_poincare(3) == TPoly((1, 0, 1, 0, 1))
    assert f.extract_poincare(0) == TPoly.one()


def test_goettsche_q0_is_one():
    for betti in (SPHERE, K3, BettiProfile((1, 4, 6, 4, 1))):
        assert goettsche(betti, 5).extract_poincare(0) == TPoly.one()


def test_goettsche_plane_equals_single_product():
    # explicit product prod_m (1 - t^{2m-2} q^m)^{-1} assembled by hand
    order = 8
    out = BivariateSeries.one(order)
    for m in range(1, order + 1):
        factor = BivariateSeries.one(order) - BivariateSeries.term(
            m, TPoly.monomial(2 * m - 2), order
        )
        out = out * factor.geom_inverse()
    assert goettsche(SPHERE, order) == out


def test_extract_poincare_errors_beyond_truncation():
    f = goettsche(SPHERE, 4)
    with pytest.raises(SeriesError):
        f.extract_poincare(5)


def test_k3_first_coefficient_is_surface_poincare():
    f = goettsche(K3, 1)
    assert f.extract_poincare(1) == TPoly((1, 0, 22, 0, 1))
    for betti in (SPHERE, BettiProfile((1, 4, 6, 4, 1)), BettiProfile((2, 1, 3, 1, 2))):
        assert goettsche(betti, 2).extract_poincare(1) == TPoly(tuple(betti))


def test_euler_generating_plane_gives_partition_counts():
    f = goettsche(SPHERE, 10)
    assert euler_generating(f) == [len(enumerate_partitions(n)) for n in range(11)]


def test_euler_generating_k3():
    # independent oracle: expand prod (1-q^m)^{-24} by plain convolution,
    # multiplying in one geometric factor at a time
    order = 3
    oracle = [1] + [0] * order
    for m in range(1, order + 1):
        for _ in range(24):
            for n in range(m, order + 1):
                oracle[n] += oracle[n - m]
    assert oracle == [1, 24, 324, 3200]
    assert euler_generating(goettsche(K3, order)) == oracle


def test_heisenberg_character_small():
    ch = heisenberg_character(6)
    assert ch[0] == 1
    assert ch[4] == 5
    assert ch[6] == 11


def test_heisenberg_character_is_partition_count():
    ch = heisenberg_character(20)
    for n in range(21):
        assert ch[n] == len(enumerate_partitions(n))


def test_clifford_character_small():
    ch = clifford_character(6)
    assert ch[0] == 1
    assert ch[3] == 2
    assert ch[6] == 4


def test_clifford_character_counts_distinct_partitions():
    ch = clifford_character(20)
    for n in range(21):
        distinct = [p for p in enumerate_partitions(n) if len(set(p.parts)) == len(p.parts)]
        assert ch[n] == len(distinct)


def test_character_matches_goettsche():
    assert character_matches_goettsche(SPHERE, 8).equal
    assert character_matches_goettsche(K3, 5).equal
    zero = BettiProfile((0, 0, 0, 0, 0))
    report = character_matches_goettsche(zero, 5)
    assert report.equal
    assert goettsche(zero, 5) == BivariateSeries.one(5)


def test_betti_profile_validation():
    with pytest.raises(ValueError):
        BettiProfile((1, -1, 0, 0, 0))
    with pytest.raises(ValueError):
        BettiProfile((1, 0, 0, 0))
