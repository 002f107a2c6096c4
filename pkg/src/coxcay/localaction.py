"""Local actions, configurations and automorphisms of Cayley balls.

An automorphism ``α`` of the Cayley graph induces at every vertex ``v`` a
bijection of labels, its *local action*: ``x`` goes to the label of the
image edge ``{α(v), α(vx)}``.  A configuration assigns a symmetry of ``Γ``
to every vertex of a ball; it is realised by an automorphism exactly when
neighbouring values agree on the star of the connecting label (the star
condition).  :func:`synthesize` builds that automorphism sphere by sphere.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import words
from .autgamma import GraphAutomorphism, is_weight_preserving
from .cayley import CayleyBall, build_ball
from .defgraph import DefiningGraph, star
from .errors import ConfigurationError, GraphError, LocalActionError, SynthesisError


@dataclass(frozen=True, eq=False)
class BallAutomorphism:
    """Partial map between two Cayley balls; ``mapping`` keys are the domain."""

    source: CayleyBall
    target: CayleyBall
    mapping: dict

    def __call__(self, i):
        return self.mapping[i]

    @property
    def domain(self):
        return tuple(sorted(self.mapping))

    def key(self):
        return tuple(self.target.vertices[self.mapping[i]] for i in self.domain)

    def word_map(self):
        """``{source normal form: target normal form}``."""
        return {self.source.vertices[i]: self.target.vertices[j] for i, j in self.mapping.items()}

    def same_map(self, other):
        return self.word_map() == other.word_map()

    def agrees_with(self, other):
        """Pointwise agreement on the common domain (compared as group elements)."""
        a, b = self.word_map(), other.word_map()
        common = a.keys() & b.keys()
        return bool(common) and all(a[k] == b[k] for k in common)

    def is_injective(self):
        return len(set(self.mapping.values())) == len(self.mapping)

    def preserves_edges(self):
        for i, j, _ in self.source.edges:
            if i in self.mapping and j in self.mapping:
                if self.target.label(self.mapping[i], self.mapping[j]) is None:
                    return False
        return True

    def inverse(self):
        return BallAutomorphism(self.target, self.source, {j: i for i, j in self.mapping.items()})

    def compose(self, other):
        """``self ∘ other``: defined where ``other``'s image lies in ``self``'s domain."""
        out = {}
        for i, j in other.mapping.items():
            k = self.source.index.get(other.target.vertices[j])
            if k is not None and k in self.mapping:
                out[i] = self.mapping[k]
        return BallAutomorphism(other.source, self.target, out)

    def restrict(self, radius):
        """Restriction to the concentric sub-ball of the given radius."""
        if radius > self.source.radius:
            raise GraphError("restriction radius exceeds the source ball")
        sub = build_ball(self.source.graph, radius, self.source.center)
        out = {}
        for i, w in enumerate(sub.vertices):
            k = self.source.index[w]
            if k in self.mapping:
                out[i] = self.mapping[k]
        return BallAutomorphism(sub, self.target, out)

    def to_json(self):
        g = self.source.graph
        return {
            "map": {
                g.format_word(self.source.vertices[i]): g.format_word(self.target.vertices[j])
                for i, j in sorted(self.mapping.items())
            }
        }


def identity_map(ball: CayleyBall) -> BallAutomorphism:
    return BallAutomorphism(ball, ball, {i: i for i in range(len(ball))})


# local actions -----------------------------------------------------------


def local_label_map(ball: CayleyBall, alpha: BallAutomorphism, v: int) -> tuple:
    """Raw label bijection at ``v`` (no weight check)."""
    g = ball.graph
    nbrs = alpha.source.adjacency[v]
    if len(nbrs) != g.n or v not in alpha.mapping:
        raise LocalActionError(f"B({alpha.source.word(v)!r}, 1) is not inside the ball")
    if any(u not in alpha.mapping for u in nbrs.values()):
        raise LocalActionError(f"B({alpha.source.word(v)!r}, 1) is not inside the domain")
    av = alpha.mapping[v]
    back = {j: y for y, j in alpha.target.adjacency[av].items()}
    perm = []
    for x in range(g.n):
        y = back.get(alpha.mapping[nbrs[x]])
        if y is None:
            raise LocalActionError(
                f"image of edge {alpha.source.word(v)!r}--{g.vertices[x]} is not an edge of the target ball"
            )
        perm.append(y)
    if len(set(perm)) != g.n:
        raise LocalActionError(f"local action at {alpha.source.word(v)!r} is not a bijection")
    return tuple(perm)


def extract_local_action(ball: CayleyBall, alpha: BallAutomorphism, v: int) -> GraphAutomorphism:
    """``σ(α, v)``, asserted to preserve weights."""
    perm = local_label_map(ball, alpha, v)
    if not is_weight_preserving(ball.graph, GraphAutomorphism(perm)):
        raise LocalActionError(f"local action at {alpha.source.word(v)!r} does not preserve weights")
    return GraphAutomorphism(perm)


def _stars(g):
    hit = g.cache.get("stars")
    if hit is None:
        hit = g.cache["stars"] = tuple(star(g, x) for x in range(g.n))
    return hit


def star_agreement_failures(g: DefiningGraph, maps, ball: CayleyBall, edges=None):
    """Edges ``(i, j, x)`` where ``maps[i]`` and ``maps[j]`` differ on ``star(x)``.

    ``maps`` is indexable by ball vertex and yields permutations (tuples or
    :class:`GraphAutomorphism`); vertices missing from a dict are skipped.
    """
    stars = _stars(g)
    bad = []
    for i, j, x in ball.edges if edges is None else edges:
        if isinstance(maps, dict) and (i not in maps or j not in maps):
            continue
        p, q = maps[i], maps[j]
        if any(p[y] != q[y] for y in stars[x]):
            bad.append((i, j, x))
    return bad


# configurations ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Configuration:
    """A symmetry of ``Γ`` for every vertex of ``ball``.

    ``provenance`` records how the table was made, so it can be regenerated
    on another ball: ``("constant", σ)``, ``("coset", gamma1, ν, χ)`` or
    ``("explicit",)``.
    """

    ball: CayleyBall
    values: tuple
    provenance: tuple = field(default=("explicit",))

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        g = self.ball.graph
        if len(self.values) != len(self.ball):
            raise ConfigurationError("configuration must assign a value to every ball vertex")
        for p in set(self.values):
            if not isinstance(p, GraphAutomorphism) or not is_weight_preserving(g, p):
                raise ConfigurationError(f"{p!r} is not a symmetry of the defining graph")

    def __getitem__(self, i):
        return self.values[i]

    def regenerate(self, ball: CayleyBall):
        kind = self.provenance[0]
        if kind == "constant":
            return make_constant_config(ball, self.provenance[1])
        if kind == "coset":
            _, gamma1, nu, chi = self.provenance
            return make_coset_config(ball, gamma1, nu, chi)
        raise ConfigurationError("an explicit table cannot be regenerated on another ball")


def check_star_condition(cfg: Configuration) -> bool:
    return not star_agreement_failures(cfg.ball.graph, cfg.values, cfg.ball)


def make_constant_config(ball: CayleyBall, sigma: GraphAutomorphism) -> Configuration:
    return Configuration(ball, (sigma,) * len(ball), ("constant", sigma))


def boundary(g: DefiningGraph, side) -> tuple:
    """Vertices of ``side`` adjacent to some vertex outside it."""
    side = set(g.vertex_set(side))
    return tuple(sorted(x for x in side if any(y not in side for y in g.neighbours(x))))


def extend_by_identity(g: DefiningGraph, gamma1, nu) -> GraphAutomorphism:
    """``ν'``: ``ν`` on ``gamma1``, identity elsewhere."""
    gamma1 = g.vertex_set(gamma1)
    if isinstance(nu, GraphAutomorphism):
        mapping = {x: nu[x] for x in gamma1}
    else:
        mapping = {g.index(k): g.index(v) for k, v in nu.items()}
    perm = tuple(mapping.get(x, x) for x in range(g.n))
    if sorted(perm) != list(range(g.n)) or any(perm[x] != x for x in range(g.n) if x not in gamma1):
        raise ConfigurationError("ν must permute the vertices of gamma1")
    ext = GraphAutomorphism(perm)
    if not is_weight_preserving(g, ext):
        raise ConfigurationError("ν does not extend to a weight-preserving symmetry of Γ")
    return ext


def make_coset_config(ball: CayleyBall, gamma1, nu, chi) -> Configuration:
    """``ν̄_χ``: ``ν'`` on vertices whose coset ``w·W_{gamma1}`` is keyed in ``χ``, identity elsewhere.

    ``ν`` must be non-trivial on ``gamma1`` and fix its boundary pointwise,
    so that ``boundary(gamma1)`` and ``gamma1`` form a good separating set.
    """
    from .classifier import verify_good_sep

    g = ball.graph
    gamma1 = g.vertex_set(gamma1)
    ext = extend_by_identity(g, gamma1, nu)
    S = boundary(g, gamma1)
    if not verify_good_sep(g, S, gamma1, ext):
        raise ConfigurationError("gamma1 and ν do not form a good separating set")
    chi = frozenset(words.canonical(g, k) for k in chi)
    for k in chi:
        if words.coset_key(g, k, gamma1) != k:
            raise ConfigurationError(f"{g.format_word(k)!r} is not a minimal coset representative")
    ident = GraphAutomorphism.identity(g.n)
    values = [ext if words.coset_key(g, w, gamma1) in chi else ident for w in ball.vertices]
    return Configuration(ball, values, ("coset", gamma1, ext, chi))


def coset_keys(ball: CayleyBall, gamma1) -> list:
    """Distinct coset keys of the ball's vertices, shortlex-sorted."""
    g = ball.graph
    keys = {words.coset_key(g, w, gamma1) for w in ball.vertices}
    return sorted(keys, key=lambda k: (len(k), k))


def eligible_coset_keys(ball: CayleyBall, gamma1) -> list:
    """Keys ``k`` with ``‖k‖ + 1 <= radius``: the coset has a ``gamma1``-edge leaving ``k`` inside the ball."""
    g = ball.graph
    gamma1 = g.vertex_set(gamma1)
    out = []
    for k in coset_keys(ball, gamma1):
        i = ball.index[k]
        if ball.distance[i] + 1 <= ball.radius and any(x in ball.adjacency[i] for x in gamma1):
            out.append(k)
    return out


# synthesis ---------------------------------------------------------------


def synthesize(cfg: Configuration) -> BallAutomorphism:
    """The automorphism of ``cfg.ball`` fixing its center with local actions ``cfg``.

    For ``v`` at distance ``n`` pick a descent label ``x`` (neighbour ``vx``
    at distance ``n - 1``) and set ``α(v) = α(vx)·cfg[vx](x)``.  Every descent
    label is checked to give the same answer, and the result is checked to
    be a bijection preserving edges whose image labels match ``cfg`` at both
    endpoints.  Raises :class:`SynthesisError` when any check fails.
    """
    ball = cfg.ball
    g = ball.graph
    image = {0: 0}
    for i in range(1, len(ball)):
        d = ball.distance[i]
        descents = sorted((x, u) for x, u in ball.adjacency[i].items() if ball.distance[u] == d - 1)
        candidates = set()
        for x, u in descents:
            t = ball.adjacency[image[u]].get(cfg[u][x])
            if t is None:
                raise SynthesisError(f"image edge missing at {ball.word(i)!r}")
            candidates.add(t)
        if len(candidates) != 1:
            raise SynthesisError(f"image of {ball.word(i)!r} depends on the descent letter")
        image[i] = candidates.pop()
    alpha = BallAutomorphism(ball, ball, image)
    if not alpha.is_injective():
        raise SynthesisError("synthesized map is not injective")
    for i, j, x in ball.edges:
        y = ball.label(image[i], image[j])
        if y is None:
            raise SynthesisError(f"edge {ball.word(i)!r}--{ball.word(j)!r} is not mapped to an edge")
        if y != cfg[i][x] or y != cfg[j][x]:
            raise SynthesisError(
                f"image of edge {ball.word(i)!r}--{ball.word(j)!r} has label {g.vertices[y]}, "
                "not the one prescribed at its endpoints"
            )
    return alpha


def try_synthesize(cfg):
    try:
        return synthesize(cfg)
    except SynthesisError:
        return None


# translations ------------------------------------------------------------


def almost_translation(g: DefiningGraph, ball: CayleyBall, w, sigma: GraphAutomorphism, check=True):
    """``v ↦ w·σ(v)`` where ``σ`` acts letterwise on reduced words.

    The target is the ball of the same radius around the image of the center.
    With ``check``, every reduced word of every vertex is verified to give
    the same image.
    """
    w = words.canonical(g, w)
    target = build_ball(g, ball.radius, words.multiply(g, w, words.relabel(g, ball.center, sigma.perm)))
    mapping = {}
    for i, v in enumerate(ball.vertices):
        img = words.multiply(g, w, words.relabel(g, v, sigma.perm))
        if check:
            for u in words.braid_orbit(g, v):
                if words.multiply(g, w, words.relabel(g, u, sigma.perm)) != img:
                    raise LocalActionError(f"σ does not respect braid moves at {ball.word(i)!r}")
        mapping[i] = target.index[img]
    return BallAutomorphism(ball, target, mapping)


def translation(g: DefiningGraph, ball: CayleyBall, w) -> BallAutomorphism:
    """Left multiplication ``L_w``; label-preserving by construction."""
    return almost_translation(g, ball, w, GraphAutomorphism.identity(g.n), check=False)


def is_label_preserving(alpha: BallAutomorphism) -> bool:
    for i, j, x in alpha.source.edges:
        if i in alpha.mapping and j in alpha.mapping:
            if alpha.target.label(alpha.mapping[i], alpha.mapping[j]) != x:
                return False
    return True


def fixed_point_component(ball: CayleyBall, v: int, sigma: GraphAutomorphism) -> set:
    """Vertices reachable from ``v`` along edges whose labels ``σ`` fixes."""
    fixed = [x for x in range(ball.graph.n) if sigma[x] == x]
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for x in fixed:
            t = ball.adjacency[u].get(x)
            if t is not None and t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def interior_vertices(alpha: BallAutomorphism):
    """Vertices whose full unit neighbourhood lies in the domain and maps into the target."""
    g = alpha.source.graph
    out = []
    for v in alpha.domain:
        nbrs = alpha.source.adjacency[v]
        if len(nbrs) == g.n and all(u in alpha.mapping for u in nbrs.values()):
            if len(alpha.target.adjacency[alpha.mapping[v]]) == g.n:
                out.append(v)
    return out


def local_actions(alpha: BallAutomorphism, validate=True) -> dict:
    """``{v: σ(α, v)}`` over the interior vertices of ``alpha``."""
    extract = extract_local_action if validate else local_label_map
    return {v: extract(alpha.source, alpha, v) for v in interior_vertices(alpha)}

