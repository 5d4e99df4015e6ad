import pytest

from focklab.fermion import (
    FermionicState,
    apply_d,
    apply_psi,
    apply_psi_star,
)


def wedge(*indices):
    return FermionicState.wedge(indices)


def test_apply_psi_examples():
    assert apply_psi(2, wedge(3, 1)) == -1 * wedge(3, 2, 1)
    assert apply_psi(3, wedge(3)).is_zero()
    assert apply_psi(1, FermionicState.vacuum()) == wedge(1)


def test_apply_psi_star_examples():
    assert apply_psi_star(3, wedge(3, 1)) == wedge(1)
    assert apply_psi_star(1, wedge(3, 1)) == -1 * wedge(3)
    assert apply_psi_star(2, wedge(1)).is_zero()


def test_apply_d_examples():
    assert apply_d(wedge(3, 1)) == 4 * wedge(3, 1)
    assert apply_d(FermionicState.vacuum()).is_zero()
    assert apply_d(wedge(2)) == 2 * wedge(2)


def test_wedge_word_matches_paper_spanning_set():
    # psi_{i1} ... psi_{in} 1 with i1 > ... > in lands on +dx^{i1}^...^dx^{in}
    s = FermionicState.vacuum()
    for i in (1, 4, 6):  # apply smallest first, largest outermost
        s = apply_psi(i, s)
    assert s == wedge(6, 4, 1)


def test_key_validation():
    with pytest.raises(ValueError):
        FermionicState({(1, 3): 1})  # increasing
    with pytest.raises(ValueError):
        FermionicState({(2, 2): 1})  # repeated
    with pytest.raises(ValueError):
        FermionicState({(0,): 1})


def test_linearity_and_values():
    s = wedge(3, 1) + 2 * wedge(2)
    before = dict(s.terms)
    out = apply_psi(2, s)
    assert out == -1 * wedge(3, 2, 1)  # wedge with dx^2 kills the dx^2 term
    assert s.terms == before
