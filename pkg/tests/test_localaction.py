import random

import pytest

from coxcay import fixtures, words
from coxcay.autgamma import GraphAutomorphism, compose, enumerate_aut
from coxcay.cayley import build_ball
from coxcay.errors import ConfigurationError, LocalActionError, SynthesisError
from coxcay.localaction import (
    Configuration,
    almost_translation,
    boundary,
    check_star_condition,
    coset_keys,
    eligible_coset_keys,
    extend_by_identity,
    extract_local_action,
    fixed_point_component,
    identity_map,
    is_label_preserving,
    local_actions,
    make_constant_config,
    make_coset_config,
    star_agreement_failures,
    synthesize,
    translation,
    try_synthesize,
)


def swap_ab(g):
    return GraphAutomorphism.from_mapping(g, {"a": "b", "b": "a"})


def word_map(alpha):
    g = alpha.source.graph
    return {g.format_word(k): g.format_word(v) for k, v in alpha.word_map().items()}


def test_identity_has_trivial_local_actions(load):
    g = load("c5")
    ball = build_ball(g, 2)
    acts = local_actions(identity_map(ball))
    assert acts and all(a.is_identity for a in acts.values())


def test_k2_diagonal_reflection(load):
    g = load("k2")
    ball = build_ball(g, 2)
    alpha = synthesize(make_constant_config(ball, swap_ab(g)))
    assert word_map(alpha) == {"": "", "a": "b", "b": "a", "a b": "a b"}
    assert extract_local_action(ball, alpha, 0) == swap_ab(g)


def test_delta_coset_configuration(load):
    g = load("delta")
    ball = build_ball(g, 2)
    cfg = make_coset_config(ball, "ab", swap_ab(g), [words.coset_key(g, "c", "ab")])
    ident = GraphAutomorphism.identity(3)
    for w in ["c", "c a", "c b"]:
        assert cfg[ball.locate(w)] == swap_ab(g)
    for w in ["", "a", "b", "a b", "a c", "b c"]:
        assert cfg[ball.locate(w)] == ident
    assert check_star_condition(cfg)
    alpha = synthesize(cfg)
    moved = {k: v for k, v in word_map(alpha).items() if k != v}
    assert moved == {"c a": "c b", "c b": "c a"}
    assert extract_local_action(ball, alpha, ball.locate("c")) == swap_ab(g)
    assert cfg.provenance[0] == "coset"


def test_empty_chi_is_identity(load):
    g = load("delta")
    ball = build_ball(g, 3)
    cfg = make_coset_config(ball, "ab", swap_ab(g), [])
    assert all(v.is_identity for v in cfg.values)


def test_star_condition_failure_location(load):
    g = load("delta")
    ball = build_ball(g, 2)
    ident = GraphAutomorphism.identity(3)
    cfg = Configuration(ball, [swap_ab(g)] + [ident] * (len(ball) - 1))
    assert not check_star_condition(cfg)
    bad = star_agreement_failures(g, cfg.values, ball)
    assert (0, ball.locate("a"), 0) in bad
    with pytest.raises(SynthesisError):
        synthesize(cfg)
    assert try_synthesize(cfg) is None


def test_configuration_validation(load):
    g = load("p4")
    ball = build_ball(g, 1)
    with pytest.raises(ConfigurationError):
        Configuration(ball, [GraphAutomorphism.identity(4)])
    with pytest.raises(ConfigurationError):
        Configuration(ball, [GraphAutomorphism((1, 0, 2, 3))] * len(ball))


def test_coset_config_preconditions(load):
    g = load("delta")
    ball = build_ball(g, 2)
    with pytest.raises(ConfigurationError):
        make_coset_config(ball, "ab", swap_ab(g), ["c a"])  # not a minimal representative
    with pytest.raises(ConfigurationError):
        make_coset_config(ball, "ab", GraphAutomorphism.identity(3), ["c"])
    with pytest.raises(ConfigurationError):
        extend_by_identity(g, "ab", GraphAutomorphism.from_mapping(g, {"a": "c", "c": "a"}))
    p4 = load("p4")
    with pytest.raises(ConfigurationError):
        # the reversal of P4 does not fix the boundary {c} of {a, b, c}
        make_coset_config(build_ball(p4, 1), "abc", {"a": "c", "c": "a", "b": "b"}, [])


def test_coset_keys_and_boundary(load):
    g = load("delta")
    assert boundary(g, "ab") == ()
    assert boundary(load("triangle_pendant"), ["v1", "v2", "u"]) == (2,)
    ball = build_ball(g, 3)
    keys = coset_keys(ball, "ab")
    assert keys[:2] == [(), (2,)]
    assert eligible_coset_keys(ball, "ab") == [(), (2,), (0, 2), (1, 2)]


def test_translations(load):
    g = load("k2")
    ball = build_ball(g, 1)
    assert word_map(translation(g, ball, ())) == {"": "", "a": "a", "b": "b"}
    assert word_map(translation(g, ball, "a")) == {"": "a", "a": "", "b": "a b"}
    rng = random.Random(1)
    for name in fixtures.names():
        h = fixtures.load(name)
        b = build_ball(h, 2)
        for _ in range(3):
            w = [rng.randrange(h.n) for _ in range(rng.randrange(4))]
            L = translation(h, b, w)
            assert is_label_preserving(L)
            assert L.is_injective() and L.preserves_edges()


@pytest.mark.parametrize("name", fixtures.names())
def test_almost_translation_at_identity_is_constant_synthesis(name):
    g = fixtures.load(name)
    ball = build_ball(g, 2)
    for sigma in enumerate_aut(g):
        a = almost_translation(g, ball, (), sigma)
        b = synthesize(make_constant_config(ball, sigma))
        assert a.same_map(b)
        assert all(p == sigma for p in local_actions(a).values())
        # fixed-label component is fixed pointwise
        for v in fixed_point_component(ball, 0, sigma):
            assert b(v) == v


def test_fixed_point_component_delta(load):
    g = load("delta")
    ball = build_ball(g, 1)
    comp = fixed_point_component(ball, 0, swap_ab(g))
    assert {ball.word(i) for i in comp} == {"", "c"}
    assert len(fixed_point_component(ball, 0, GraphAutomorphism.identity(3))) == len(ball)


def _random_legal(g, ball, rng):
    """Either a constant or (on Δ) a random coset configuration."""
    if g.vertices == ("a", "b", "c") and rng.random() < 0.7:
        keys = coset_keys(ball, "ab")
        return make_coset_config(ball, "ab", swap_ab(g), [k for k in keys if rng.random() < 0.5])
    return make_constant_config(ball, rng.choice(enumerate_aut(g)))


@pytest.mark.parametrize("name", ["delta", "p4", "triangle_pendant"])
def test_synthesis_properties(name):
    g = fixtures.load(name)
    ball = build_ball(g, 3)
    rng = random.Random(7)
    for _ in range(20):
        cfg = _random_legal(g, ball, rng)
        alpha = synthesize(cfg)
        # local actions agree with the configuration at interior vertices
        for v, p in local_actions(alpha).items():
            assert p == cfg[v]
        # spheres are preserved
        assert all(ball.distance[alpha(i)] == ball.distance[i] for i in range(len(ball)))
        # inverse and composition
        assert alpha.compose(alpha.inverse()).same_map(identity_map(ball))


def test_cocycle_identity(load):
    g = load("delta")
    ball = build_ball(g, 3)
    rng = random.Random(3)
    for _ in range(10):
        a = synthesize(_random_legal(g, ball, rng))
        b = synthesize(_random_legal(g, ball, rng))
        ab = a.compose(b)
        for v in ball.sphere(0) + ball.sphere(1) + ball.sphere(2):
            lhs = extract_local_action(ball, ab, v)
            rhs = compose(extract_local_action(ball, a, b(v)), extract_local_action(ball, b, v))
            assert lhs == rhs


def test_restriction_matches_truncated_synthesis(load):
    g = load("delta")
    big = build_ball(g, 4)
    cfg = make_coset_config(big, "ab", swap_ab(g), ["c", "a c"])
    alpha = synthesize(cfg)
    small = build_ball(g, 2)
    assert alpha.restrict(2).same_map(synthesize(cfg.regenerate(small)))
    with pytest.raises(ConfigurationError):
        Configuration(small, cfg.regenerate(small).values).regenerate(big)


def test_translation_after_synthesis_is_an_isomorphism(load):
    g = load("delta")
    ball = build_ball(g, 3)
    alpha = synthesize(make_coset_config(ball, "ab", swap_ab(g), ["c"]))
    L = translation(g, ball, "c a")
    beta = L.compose(alpha)
    assert beta.is_injective() and beta.preserves_edges()
    assert len(beta.mapping) == len(ball)


def test_local_action_needs_full_neighbourhood(load):
    g = load("p4")
    ball = build_ball(g, 1)
    with pytest.raises(LocalActionError):
        extract_local_action(ball, identity_map(ball), 1)


def test_almost_translation_rejects_non_symmetry(load):
    g = load("p4")
    ball = build_ball(g, 2)
    with pytest.raises(LocalActionError):
        almost_translation(g, ball, (), GraphAutomorphism((1, 0, 2, 3)))
