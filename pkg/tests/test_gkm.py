import random

import pytest

from hesslusztig import gkm, hess, weyl
from hesslusztig.hess import RootIdeal
from hesslusztig.rootsys import root_system
from hesslusztig.weyl import LaurentPolyQ, from_word

from oracles import s_n


def hexagon():
    rs = root_system("A", 2)
    return rs, gkm.gkm_lusztig(rs, from_word(rs, [1, 2]))


def test_hexagon_graph():
    rs, g = hexagon()
    assert len(g.vertices) == 6 and len(g.edges) == 6
    assert set(g.degrees().values()) == {2}
    assert {e.beta for e in g.edges} == {(1, 0), (0, 1)}
    assert str(gkm.poincare_polynomial(g)) == "1 + 4q + q^2"


def test_edge_weights_are_opposite():
    rs = root_system("B", 2)
    for e in gkm.gkm_flag(rs).edges:
        assert e.weight_at_u == tuple(-c for c in e.u(e.beta))
        assert e.weight_at_v == tuple(-c for c in e.weight_at_u)
        assert e.v == e.u * weyl.reflection(rs, e.beta)
        assert all(c >= 0 for c in e.weight_at_u) and any(e.weight_at_u)


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2)])
def test_flag_graph_shape(family, rank):
    rs = root_system(family, rank)
    g = gkm.gkm_flag(rs)
    assert len(g.edges) == len(g.vertices) * rs.n_positive // 2
    assert set(g.degrees().values()) == {rs.n_positive}
    dims = gkm.cell_dimensions(g)
    assert all(dims[w] == w.length for w in g.vertices)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 2), ("C", 3), ("G", 2)])
def test_lusztig_matches_hessenberg(family, rank):
    rs = root_system(family, rank)
    for w in weyl.all_elements(rs):
        if hess.gkm_admissible(rs, w):
            assert gkm.graphs_equal(gkm.gkm_lusztig(rs, w), gkm.gkm_hessenberg(rs, hess.m_w(rs, w)))


def test_non_smooth_rejected():
    rs = root_system("A", 3)
    with pytest.raises(gkm.NotSmooth):
        gkm.gkm_lusztig(rs, hess.permutation_to_element((3, 4, 1, 2)))


def test_hessenberg_poincare_properties():
    rs = root_system("C", 3)
    order = weyl.group_order(rs)
    rng = random.Random(1)
    for M in hess.valid_ideals(rs):
        g = gkm.gkm_hessenberg(rs, M)
        assert set(g.degrees().values()) == {len(M)}
        P = gkm.poincare_polynomial(g)
        assert P.at_one() == order
        assert P.degree() == len(M) and P.is_palindromic(len(M))
        for _ in range(3):
            xi = tuple(rng.randint(-40, 40) for _ in range(3))
            if gkm.is_generic(g, xi):
                assert gkm.poincare_polynomial(g, xi) == P


def test_disconnected_constant_term():
    # M = {alpha2} in A2: three P^1 components
    rs = root_system("A", 2)
    g = gkm.gkm_hessenberg(rs, RootIdeal.from_roots(rs, [(0, 1)]))
    assert gkm.poincare_polynomial(g).coefficient_list() == [3, 3]


def test_non_generic_coweight():
    rs = root_system("A", 2)
    g = gkm.gkm_flag(rs)
    assert not gkm.is_generic(g, (1, -1))
    with pytest.raises(gkm.NonGenericCoweight):
        gkm.cell_dimensions(g, (1, -1))
    assert gkm.is_generic(g, gkm.default_coweight(g))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_poincare_matches_permutation_statistic(n):
    rs = root_system("A", n - 1)
    for h in hess.hessenberg_functions(n):
        g = gkm.gkm_hessenberg(rs, hess.ideal_from_hessenberg_function(h))
        assert gkm.poincare_polynomial(g) == gkm.hessenberg_poincare_by_permutations(h)


def test_permutation_statistic_by_hand():
    # h = (2,3,3): pairs (1,2), (2,3); S_3 has inversion counts over these pairs 0,1,1,1,1,2
    assert gkm.hessenberg_poincare_by_permutations((2, 3, 3)) == LaurentPolyQ({0: 1, 1: 4, 2: 1})
    assert gkm.hessenberg_poincare_by_permutations((1, 2, 3)).coefficient_list() == [6]


def test_json_roundtrip():
    for family, rank in (("A", 3), ("G", 2)):
        rs = root_system(family, rank)
        for M in hess.valid_ideals(rs)[:5]:
            g = gkm.gkm_hessenberg(rs, M)
            back = gkm.from_json(gkm.export_graph(g, "json"))
            assert gkm.graphs_equal(g, back)


def test_dot_discrete_a1():
    rs = root_system("A", 1)
    g = gkm.gkm_hessenberg(rs, RootIdeal(rs))
    assert gkm.export_graph(g, "dot") == 'graph A1 {\n  w0 [label="[]"];\n  w1 [label="[1]"];\n}\n'


def test_dot_hexagon():
    _, g = hexagon()
    text = gkm.export_graph(g, "dot")
    assert text.startswith("graph A2 {")
    assert text.count(" -- ") == 6
    assert '  w1 -- w0 [label="1,0"];' in text
    with pytest.raises(ValueError):
        gkm.export_graph(g, "svg")


def test_type_a_smooth_permutations_graph_regular():
    rs = root_system("A", 3)
    for p in s_n(4):
        if hess.smooth_type_a(p):
            w = hess.permutation_to_element(p)
            g = gkm.gkm_lusztig(rs, w)
            assert set(g.degrees().values()) == {w.length}
