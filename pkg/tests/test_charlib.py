import random

import pytest
from hypothesis import given, settings, strategies as st

from hesslusztig import charlib, hess, weyl
from hesslusztig.charlib import Character
from hesslusztig.rootsys import root_system
from hesslusztig.weyl import from_word


def test_character_arithmetic():
    a = Character({(1,): 2, (0,): 1})
    b = Character({(1,): -2, (3,): 1})
    assert (a + b).mult == {(0,): 1, (3,): 1}
    assert (a - a) == Character()
    assert a.scale(3)[(1,)] == 6 and a[(7,)] == 0
    assert a.dim == 3 and a.is_effective() and not b.is_effective()
    assert a.to_list() == [[[0], 1], [[1], 2]]


def test_a2_standard_representation():
    rs = root_system("A", 2)
    assert charlib.weyl_character(rs, (1, 0)).mult == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}


@pytest.mark.parametrize("family,rank,lam,dim,zero", [
    ("A", 2, (1, 1), 8, 2),
    ("B", 2, (1, 0), 5, 1),
    ("B", 2, (0, 1), 4, 0),
    ("C", 3, (1, 0, 0), 6, 0),
    ("G", 2, (1, 0), 7, 1),
    ("G", 2, (0, 1), 14, 2),
    ("F", 4, (0, 0, 0, 1), 26, 2),
])
def test_small_modules(family, rank, lam, dim, zero):
    rs = root_system(family, rank)
    chi = charlib.weyl_character(rs, lam)
    assert chi.dim == dim == charlib.weyl_dimension(rs, lam)
    assert chi[(0,) * rank] == zero


def test_not_dominant():
    rs = root_system("A", 2)
    with pytest.raises(charlib.NotDominant):
        charlib.weyl_character(rs, (1, -1))
    with pytest.raises(charlib.NotDominant):
        charlib.weyl_dimension(rs, (1,))


def test_bott_a1():
    rs = root_system("A", 1)
    assert charlib.bott_euler(rs, (-1,)) == Character()
    assert charlib.bott_euler(rs, (-2,)) == -Character({(0,): 1})
    assert charlib.bott_euler(rs, (-4,)) == -charlib.weyl_character(rs, (2,))


def test_localization_a1_by_hand():
    # x/(1 - x^-2) + x^-1/(1 - x^2) = x + x^-1
    rs = root_system("A", 1)
    assert charlib.localization_euler(rs, (1,)).mult == {(1,): 1, (-1,): 1}


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("C", 3)])
def test_bott_matches_localization(family, rank):
    rs = root_system(family, rank)
    rng = random.Random(7)
    for _ in range(15):
        mu = tuple(rng.randint(-4, 4) for _ in range(rank))
        assert charlib.bott_euler(rs, mu) == charlib.localization_euler(rs, mu)


@settings(max_examples=25, deadline=None)
@given(st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
def test_bott_matches_localization_b2_property(mu):
    rs = root_system("B", 2)
    assert charlib.bott_euler(rs, mu) == charlib.localization_euler(rs, mu)


@settings(max_examples=25, deadline=None)
@given(st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_weyl_character_symmetric_and_sized(lam):
    rs = root_system("G", 2)
    chi = charlib.weyl_character(rs, lam)
    assert charlib.check_weight_symmetry(rs, chi)
    assert chi.dim == charlib.weyl_dimension(rs, lam)
    assert chi[lam] == 1


def test_koszul_weights():
    rs = root_system("A", 2)
    k = charlib.koszul_weights(rs, [(1, 0)])
    assert k == {(0, 0): 1, (-2, 1): -1}
    assert charlib.koszul_weights(rs, []) == {(0, 0): 1}


def test_hexagon_sections():
    rs = root_system("A", 2)
    w = from_word(rs, [1, 2])
    chi = charlib.v_w_character(rs, w, (1, 1))
    assert chi.dim == 7
    # the six vertices W.rho and the origin
    expected = {mu: 1 for mu in charlib.weyl_orbit(rs, (1, 1))}
    expected[(0, 0)] = 1
    assert chi.mult == expected


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("G", 2), ("C", 3)])
def test_identity_is_fixed_point_sum(family, rank):
    rs = root_system(family, rank)
    e = weyl.identity(rs)
    lam = (1,) * rank
    expected = {}
    for u in weyl.all_elements(rs):
        mu = charlib._act_on_weight(rs, u, lam)
        expected[mu] = expected.get(mu, 0) + 1
    assert charlib.v_w_character(rs, e, lam).mult == expected


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_longest_element_is_irreducible(family, rank):
    rs = root_system(family, rank)
    w0 = weyl.longest_element(rs)
    for lam in [(0,) * rank, (1,) * rank, (2,) + (0,) * (rank - 1)]:
        assert charlib.v_w_character(rs, w0, lam) == charlib.weyl_character(rs, lam)


def test_v_w_rejects_bad_input():
    rs = root_system("A", 3)
    with pytest.raises(ValueError):
        charlib.v_w_character(rs, hess.permutation_to_element((3, 4, 1, 2)), (1, 1, 1))
    with pytest.raises(charlib.NotDominant):
        charlib.v_w_character(rs, weyl.identity(rs), (1, -1, 0))
    b2 = root_system("B", 2)
    with pytest.raises(ValueError):
        charlib.v_w_character(b2, from_word(b2, [2, 1, 2]), (1, 1))


def test_weight_symmetry_check():
    rs = root_system("A", 2)
    assert charlib.check_weight_symmetry(rs, charlib.weyl_character(rs, (2, 1)))
    assert not charlib.check_weight_symmetry(rs, Character({(1, 0): 1}))
