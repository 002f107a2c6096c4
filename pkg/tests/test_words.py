import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxcay import fixtures, words
from coxcay.cayley import build_ball
from coxcay.errors import OrbitCapExceeded

from oracles import coset_min_in_ball, element_key, tits_generators


def test_small_examples(load):
    k2 = load("k2")
    assert words.canonical(k2, "ba") == (0, 1)
    assert words.canonical(k2, "abab") == ()
    d3 = load("dihedral3")
    assert words.canonical(d3, "bab") == (0, 1, 0)
    assert words.braid_orbit(d3, "aba") == {(0, 1, 0), (1, 0, 1)}
    assert words.reduce(d3, "aab") == (1,)
    assert words.length(d3, "ababab") == 0
    p4 = load("p4")
    assert words.canonical(p4, "ba") == (0, 1)
    assert words.canonical(p4, "ca") == (2, 0)  # m(a, c) = inf
    assert words.length(p4, "dbca") == 4
    # dbca -> dcba -> dcab -> cdab by commuting neighbours
    assert words.canonical(p4, "dbca") == (2, 3, 0, 1)


def test_longest_element_of_h3(load):
    g = load("h3")
    ball = build_ball(g, 15)
    assert len(ball) == 120
    assert len(ball.sphere(15)) == 1


def test_descent_and_inverse(load):
    g = load("p4")
    assert words.is_right_descent(g, "ab", "b")
    assert words.is_right_descent(g, "ab", "a")  # a and b commute
    assert not words.is_right_descent(g, "ab", "c")
    w = words.canonical(g, "abcd")
    assert words.multiply(g, w, words.inverse(g, w)) == ()


def test_coset_key_examples(load):
    g = load("delta")
    assert words.coset_key(g, "cab", "ab") == (2,)
    assert words.coset_key(g, "ab", "ab") == ()
    assert words.coset_key(g, "acb", "ab") == words.canonical(g, "ac")
    assert words.parabolic_member(g, "abab", "ab")
    assert not words.parabolic_member(g, "ac", "ab")


def test_support_is_orbit_invariant(load):
    g = load("h3")
    for w in ["abc", "cba", "abab", "bcbc"]:
        assert set(words.support(g, w)) == {x for u in words.braid_orbit(g, words.canonical(g, w)) for x in u}


def test_relabel_applies_permutation(load):
    g = load("delta")
    assert words.relabel(g, "acb", (1, 0, 2)) == words.canonical(g, "bca")


def test_orbit_cap(monkeypatch):
    g = fixtures.load("h3")
    monkeypatch.setenv("COXCAY_MAX_ORBIT", "3")
    g.cache.clear()
    with pytest.raises(OrbitCapExceeded):
        build_ball(g, 15)


def test_canonical_is_shortlex_least_reduced_word(load):
    # exhaustive over short words: no equal word is shorter or lex-smaller
    g = load("affine_a2")
    gens = tits_generators(g)
    from oracles import all_words

    best = {}
    for w in all_words(g.n, 5):
        k = element_key(g, w, gens)
        if k not in best or (len(w), w) < (len(best[k]), best[k]):
            best[k] = w
    for w in all_words(g.n, 5):
        assert words.canonical(g, w) == best[element_key(g, w, gens)]


GRAPHS = [fixtures.load(n) for n in fixtures.names()]


@st.composite
def graph_and_words(draw, count=3, max_len=8):
    g = draw(st.sampled_from(GRAPHS))
    ws = [tuple(draw(st.lists(st.integers(0, g.n - 1), max_size=max_len))) for _ in range(count)]
    return g, ws


@settings(max_examples=200, deadline=None)
@given(graph_and_words())
def test_group_axioms(data):
    g, (u, v, w) = data
    uv_w = words.multiply(g, words.multiply(g, u, v), w)
    u_vw = words.multiply(g, u, words.multiply(g, v, w))
    assert uv_w == u_vw
    assert words.multiply(g, u, words.inverse(g, u)) == ()
    assert words.canonical(g, words.canonical(g, u)) == words.canonical(g, u)
    assert words.is_normal_form(g, words.canonical(g, u))


@settings(max_examples=200, deadline=None)
@given(graph_and_words(count=2))
def test_equal_matches_tits_representation(data):
    g, (u, v) = data
    gens = tits_generators(g)
    assert words.equal(g, u, v) == (element_key(g, u, gens) == element_key(g, v, gens))
    # length parity is a homomorphism to Z/2
    assert (words.length(g, u) - len(u)) % 2 == 0


@settings(max_examples=100, deadline=None)
@given(graph_and_words(count=1))
def test_reduce_gives_reduced_word_of_same_element(data):
    g, (u,) = data
    r = words.reduce(g, u)
    assert len(r) == words.length(g, u)
    assert words.equal(g, r, u)


@pytest.mark.parametrize("name", ["delta", "p4", "one_ended", "affine_a2", "h3"])
def test_coset_key_matches_ball_search(name):
    g = fixtures.load(name)
    ball = build_ball(g, 4 if g.n <= 4 else 3)
    subsets = [tuple(range(g.n - 1)), (0,), tuple(range(1, g.n))]
    for sub in subsets:
        for i, w in enumerate(ball.vertices):
            assert words.coset_key(g, w, sub) == ball.vertices[coset_min_in_ball(ball, i, sub)]
