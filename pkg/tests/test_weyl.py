import json

import pytest
from hypothesis import given, settings, strategies as st

from hesslusztig import weyl
from hesslusztig.hess import element_to_permutation, permutation_to_element
from hesslusztig.rootsys import root_system
from hesslusztig.weyl import LaurentPolyQ, bruhat_leq, from_word, identity

from oracles import perm_compose, perm_inversions, s_n, tableau_bruhat_leq

ORDERS = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("B", 2): 8, ("B", 3): 48,
          ("C", 3): 48, ("G", 2): 12, ("D", 4): 192, ("F", 4): 1152}


# --- LaurentPolyQ -------------------------------------------------------------

def test_poly_arithmetic_and_printing():
    q = LaurentPolyQ.monomial(1)
    p = LaurentPolyQ({0: 1}) + q.__mul__(LaurentPolyQ({0: 4})) + q * q
    assert str(p) == "1 + 4q + q^2"
    assert p.coefficient_list() == [1, 4, 1]
    assert p.at_one() == 6 and p.degree() == 2 and p.low_degree() == 0
    assert p.is_palindromic() and p.is_palindromic(2)
    assert not LaurentPolyQ({0: 3, 1: 3}).is_palindromic(2)
    assert str(LaurentPolyQ()) == "0"
    assert LaurentPolyQ.q_integer(3) == LaurentPolyQ({0: 1, 1: 1, 2: 1})


@given(st.dictionaries(st.integers(0, 6), st.integers(-5, 5)),
       st.dictionaries(st.integers(0, 6), st.integers(-5, 5)))
def test_poly_ring_laws(a, b):
    pa, pb = LaurentPolyQ(a), LaurentPolyQ(b)
    assert pa + pb == pb + pa
    assert pa * pb == pb * pa
    assert (pa * pb).at_one() == pa.at_one() * pb.at_one()


# --- elements -------------------------------------------------------------------

@pytest.mark.parametrize("family,rank", list(ORDERS))
def test_group_order(family, rank):
    rs = root_system(family, rank)
    elems = weyl.all_elements(rs)
    assert len(elems) == ORDERS[family, rank] == len(set(elems))


@pytest.mark.parametrize("family,rank", [(f, r) for f, r in ORDERS if (f, r) != ("F", 4)])
def test_length_generating_function_factors(family, rank):
    rs = root_system(family, rank)
    assert weyl.length_generating_function(rs) == weyl.degree_product(family, rank)


def test_a2_enumeration_against_permutations():
    rs = root_system("A", 2)
    elems = weyl.all_elements(rs)
    perms = {element_to_permutation(w): w for w in elems}
    assert set(perms) == set(s_n(3))
    for p, w in perms.items():
        assert w.length == perm_inversions(p)
    assert [w.reduced_word for w in elems] == [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]


def test_composition_convention():
    rs = root_system("A", 2)
    assert element_to_permutation(from_word(rs, [1, 2])) == (2, 3, 1)
    assert element_to_permutation(from_word(rs, [2, 1])) == (3, 1, 2)


def test_type_a_products_match_composition():
    rs = root_system("A", 3)
    for a in s_n(4):
        for b in s_n(4):
            ab = permutation_to_element(a) * permutation_to_element(b)
            assert element_to_permutation(ab) == perm_compose(a, b)


def test_from_word_rejects_bad_letters():
    rs = root_system("A", 2)
    with pytest.raises(IndexError):
        from_word(rs, [3])
    with pytest.raises(IndexError):
        from_word(rs, [0])


def test_parse_and_format_word():
    assert weyl.parse_word("23121") == (2, 3, 1, 2, 1)
    assert weyl.parse_word("[1,2]") == (1, 2)
    assert weyl.parse_word("") == ()
    assert weyl.format_word((1, 3, 2)) == "[132]"


def test_reduced_word_is_lex_least():
    rs = root_system("C", 3)
    w = from_word(rs, [1, 3, 2, 3, 1])
    assert w.reduced_word == (1, 3, 2, 1, 3)
    assert w == weyl.reflection(rs, (1, 1, 1))
    assert w.length == 5


def test_reflection_fixes_hyperplane():
    rs = root_system("B", 3)
    for alpha in rs.positive_roots:
        t = weyl.reflection(rs, alpha)
        assert t * t == identity(rs)
        assert t(alpha) == tuple(-c for c in alpha)


def test_longest_element():
    for family, rank in ORDERS:
        rs = root_system(family, rank)
        w0 = weyl.longest_element(rs)
        assert w0.length == rs.n_positive
        assert all(any(c < 0 for c in w0(a)) for a in rs.positive_roots)


def test_enumerate_by_length_c3():
    rs = root_system("C", 3)
    counts = [len(weyl.enumerate_by_length(rs, k)) for k in range(10)]
    assert counts == [1, 3, 5, 7, 8, 8, 7, 5, 3, 1]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A3", "B3", "C3", "G2", "F4"]), st.data())
def test_word_properties(name, data):
    rs = root_system(name[0], int(name[1]))
    word = data.draw(st.lists(st.integers(1, rs.rank), max_size=12))
    w = from_word(rs, word)
    assert w.length <= len(word)
    assert w.length % 2 == len(word) % 2
    assert from_word(rs, w.reduced_word) == w
    assert len(w.reduced_word) == w.length
    assert w.inverse().length == w.length
    assert (w * w.inverse()).is_identity()
    for i in range(1, rs.rank + 1):
        ws = w.times_simple(i)
        assert ws.length == w.length + (-1 if w.has_right_descent(i) else 1)
        assert w.simple_times(i) == from_word(rs, [i]) * w


# --- Bruhat ---------------------------------------------------------------------

def test_bruhat_examples():
    c3 = root_system("C", 3)
    e = identity(c3)
    w = from_word(c3, [2, 3, 1, 2, 1])
    assert bruhat_leq(e, w)
    assert bruhat_leq(from_word(c3, [1, 2]), from_word(c3, [1, 2, 1]))
    assert not bruhat_leq(from_word(c3, [3]), from_word(c3, [1, 2, 1]))
    assert from_word(c3, [2]) <= w


def test_bruhat_type_a_tableau_oracle():
    for n in (2, 3, 4):
        rs = root_system("A", n - 1)
        elems = {p: permutation_to_element(p) for p in s_n(n)}
        for v, ev in elems.items():
            for w, ew in elems.items():
                assert bruhat_leq(ev, ew) == tableau_bruhat_leq(v, w)


def test_weyl_cache_roundtrip(tmp_path):
    rs = root_system("B", 3)
    first = weyl.all_elements(rs, tmp_path)
    path = tmp_path / "weyl_B3.json"
    data = json.loads(path.read_text())
    assert data["version"] == weyl.CACHE_VERSION and data["order"] == 48
    second = weyl.all_elements(rs, tmp_path)
    assert [w.key for w in first] == [w.key for w in second]


def test_corrupt_cache_is_rebuilt(tmp_path):
    rs = root_system("A", 2)
    (tmp_path / "weyl_A2.json").write_text("{not json")
    assert len(weyl.all_elements(rs, tmp_path)) == 6
    assert json.loads((tmp_path / "weyl_A2.json").read_text())["order"] == 6


def test_lower_interval_polynomial():
    rs = root_system("A", 2)
    assert weyl.lower_interval_polynomial(from_word(rs, [1, 2])).coefficient_list() == [1, 2, 1]
    b2 = root_system("B", 2)
    assert weyl.lower_interval_polynomial(from_word(b2, [1, 2])).coefficient_list() == [1, 2, 1]
