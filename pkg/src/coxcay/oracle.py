"""Brute-force ground truth: every automorphism of a finite Cayley ball.

Only adjacency is used; labels are ignored because automorphisms of the
Cayley graph need not preserve them.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field

from . import config
from .cayley import CayleyBall, build_ball
from .defgraph import DefiningGraph, star
from .errors import NodeBudgetExceeded
from .localaction import BallAutomorphism


def _bfs_distances(nbrs, start):
    dist = [-1] * len(nbrs)
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in nbrs[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def twin_classes(ball: CayleyBall) -> list:
    """Classes of two or more vertices sharing the same neighbourhood, sorted.

    Any permutation inside such a class is an automorphism, so these are
    what make ball automorphism groups explode at the boundary.
    """
    groups = {}
    for v, adj in enumerate(ball.adjacency):
        groups.setdefault(frozenset(adj.values()), []).append(v)
    return sorted(tuple(c) for c in groups.values() if len(c) > 1)


def twin_group_order(ball: CayleyBall, fix=()) -> int:
    """Order of the group of twin permutations fixing ``fix`` pointwise."""
    fix = set(fix)
    return math.prod(math.factorial(sum(1 for v in c if v not in fix)) for c in twin_classes(ball))


def count_ball_autos(ball: CayleyBall, fix=(), budget=None) -> int:
    """``|Aut(ball)_fix|`` without listing every element."""
    reps = enumerate_ball_autos(ball, fix, budget, modulo_twins=True)
    return len(reps) * twin_group_order(ball, fix)


def enumerate_ball_autos(ball: CayleyBall, fix=(), budget=None, modulo_twins=False) -> list:
    """Every adjacency-preserving bijection of the ball fixing ``fix`` pointwise.

    Backtracks vertex by vertex in BFS order; each vertex after the first is
    placed on a neighbour of its parent's image.  Candidates are pruned by
    degree, neighbour-degree multiset and distances to the fixed vertices.
    Results are sorted by their image tuple.

    With ``modulo_twins`` only one map per coset of the twin permutation
    group is returned: the one whose images increase along every twin
    class.  Every automorphism is then ``τ ∘ β`` for a unique returned ``β``
    and twin permutation ``τ``.
    """
    budget = config.max_nodes() if budget is None else budget
    N = len(ball)
    nbrs = [frozenset(adj.values()) for adj in ball.adjacency]
    deg = [len(s) for s in nbrs]
    fix = sorted(set(fix))
    profiles = [_bfs_distances(nbrs, f) for f in fix]
    sig = [
        (tuple(p[v] for p in profiles), deg[v], tuple(sorted(deg[u] for u in nbrs[v])))
        for v in range(N)
    ]

    roots = fix or [0]
    order = []
    placed = [False] * N
    queue = deque()
    for r in roots:
        if not placed[r]:
            placed[r] = True
            order.append(r)
            queue.append(r)
    while queue:
        v = queue.popleft()
        for u in sorted(nbrs[v]):
            if not placed[u]:
                placed[u] = True
                order.append(u)
                queue.append(u)
    pos = {v: k for k, v in enumerate(order)}
    earlier = [sorted((u for u in nbrs[v] if pos[u] < pos[v]), key=pos.get) for v in order]
    fixset = set(fix)
    # previous free member of the same twin class, by vertex index
    twin_prev = [-1] * N
    if modulo_twins:
        for c in twin_classes(ball):
            free = [v for v in c if v not in fixset]
            for a, b in zip(free, free[1:]):
                twin_prev[b] = a

    image = [-1] * N
    used = [False] * N
    used_count = [0] * N  # number of already-used vertices adjacent to each vertex
    results = []
    nodes = 0

    def candidates(k):
        v = order[k]
        if v in fixset:
            pool = [v]
        elif earlier[k]:
            pool = sorted(nbrs[image[earlier[k][0]]])
        else:
            pool = range(N)
        need = len(earlier[k])
        floor = -1
        p = twin_prev[v]
        if p >= 0:
            if image[p] < 0:
                return []  # cannot happen: twins share a parent placed earlier
            floor = image[p]
        out = []
        for c in pool:
            if used[c] or sig[c] != sig[v] or used_count[c] != need or c <= floor:
                continue
            if all(image[u] in nbrs[c] for u in earlier[k]):
                out.append(c)
        return out

    def place(v, c):
        image[v] = c
        used[c] = True
        for u in nbrs[c]:
            used_count[u] += 1

    def unplace(v):
        c = image[v]
        image[v] = -1
        used[c] = False
        for u in nbrs[c]:
            used_count[u] -= 1

    stack = [iter(candidates(0))]
    while stack:
        k = len(stack) - 1
        v = order[k]
        if image[v] >= 0:
            unplace(v)
        c = next(stack[-1], None)
        if c is None:
            stack.pop()
            continue
        nodes += 1
        if nodes > budget:
            raise NodeBudgetExceeded(f"oracle search exceeded {budget} nodes (COXCAY_MAX_NODES)")
        place(v, c)
        if k + 1 == N:
            results.append(tuple(image))
            continue
        stack.append(iter(candidates(k + 1)))
    results.sort()
    return [BallAutomorphism(ball, ball, dict(enumerate(r))) for r in results]


def stable_restrictions(g: DefiningGraph, n: int, fix_center=True, outer_radius=None) -> list:
    """Distinct restrictions to ``B(ε, n)`` of the automorphisms of ``B(ε, outer_radius)``.

    ``outer_radius`` defaults to ``n + 1``.  The maps have the inner ball as
    source and the outer ball as target.
    """
    outer_radius = n + 1 if outer_radius is None else outer_radius
    outer = build_ball(g, outer_radius)
    inner = build_ball(g, n)
    autos = enumerate_ball_autos(outer, (0,) if fix_center else ())
    embed = [outer.index[w] for w in inner.vertices]
    seen = {}
    for a in autos:
        key = tuple(a.mapping[i] for i in embed)
        if key not in seen:
            seen[key] = BallAutomorphism(inner, outer, dict(enumerate(key)))
    return [seen[k] for k in sorted(seen)]


@dataclass
class StarReport:
    automorphisms: int  # |Aut(ball)_fix|, counted through twin cosets
    representatives: int
    interior_edges: int
    checks: int  # (representative, edge, local twin permutation) triples examined
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def _permutations_of(classes):
    """Every product of permutations of the given disjoint classes, as dicts."""
    maps = [{}]
    for c in classes:
        maps = [{**m, **dict(zip(c, p))} for m in maps for p in itertools.permutations(c)]
    return maps


def star_condition_over_all_autos(ball: CayleyBall, fix=(0,), budget=None, max_listed=20) -> StarReport:
    """Check the star condition for every automorphism of ``ball`` fixing ``fix``.

    Automorphisms are ``τ ∘ β`` with ``β`` a twin-coset representative and
    ``τ`` a twin permutation.  The local actions at the ends of an edge only
    see ``τ`` on the twin classes meeting the images of their closed
    neighbourhoods, so all such restrictions of ``τ`` are tried per edge.
    Edges are interior when both endpoints have full degree.
    """
    g = ball.graph
    stars = [set(star(g, x)) for x in range(g.n)]
    fixset = set(fix)
    classes = [tuple(v for v in c if v not in fixset) for c in twin_classes(ball)]
    classes = [c for c in classes if len(c) > 1]
    class_of = {v: c for c in classes for v in c}
    reps = enumerate_ball_autos(ball, fix, budget, modulo_twins=True)
    interior = [len(adj) == g.n for adj in ball.adjacency]
    edges = [(i, j, x) for i, j, x in ball.edges if interior[i] and interior[j]]
    checks = 0
    failures = []
    for rep in reps:
        beta = rep.mapping
        for i, j, x in edges:
            touched = {beta[i], beta[j]}
            touched.update(beta[u] for u in ball.adjacency[i].values())
            touched.update(beta[u] for u in ball.adjacency[j].values())
            affected = sorted({class_of[t] for t in touched if t in class_of})
            for tau in _permutations_of(affected):
                checks += 1
                image = lambda w: tau.get(beta[w], beta[w])  # noqa: E731
                maps = []
                for v in (i, j):
                    av = image(v)
                    labels = {}
                    for y, u in ball.adjacency[v].items():
                        labels[y] = ball.label(av, image(u))
                    maps.append(labels)
                if any(maps[0][y] != maps[1][y] for y in stars[x]):
                    if len(failures) < max_listed:
                        failures.append((ball.word(i), ball.word(j), g.vertices[x]))
    return StarReport(
        automorphisms=len(reps) * twin_group_order(ball, fix),
        representatives=len(reps),
        interior_edges=len(edges),
        checks=checks,
        failures=failures,
    )


@dataclass
class CrossValidation:
    oracle_count: int
    constructed_count: int
    matched: int
    missing: list = field(default_factory=list)  # constructed maps absent from the oracle
    extra_count: int = 0  # oracle maps not among the constructed ones
    extra: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.missing

    def to_json(self):
        return {
            "ok": self.ok,
            "oracle_count": self.oracle_count,
            "constructed_count": self.constructed_count,
            "matched": self.matched,
            "missing": self.missing,
            "extra_count": self.extra_count,
            "extra": self.extra,
        }


def cross_validate(ball: CayleyBall, constructed, fix=None, oracle=None, max_listed=20) -> CrossValidation:
    """Check every constructed map against the oracle enumeration of ``ball``.

    Constructed maps are aligned to ``ball`` through their word maps, so
    they may live on a different (but equal) ball object.  ``fix`` defaults
    to the center when every constructed map fixes it.
    """
    g = ball.graph
    constructed = list(constructed)
    if fix is None:
        fix = (0,) if all(a.word_map().get(ball.center) == ball.center for a in constructed) else ()
    if oracle is None:
        oracle = enumerate_ball_autos(ball, fix)
    oracle_maps = {frozenset(a.word_map().items()) for a in oracle}
    fmt = g.format_word
    missing, found = [], set()
    for a in constructed:
        key = frozenset(a.word_map().items())
        if key in oracle_maps:
            found.add(key)
        else:
            missing.append({fmt(k): fmt(v) for k, v in sorted(a.word_map().items())})
    extra_keys = sorted(
        (sorted(k) for k in oracle_maps - found),
    )
    return CrossValidation(
        oracle_count=len(oracle_maps),
        constructed_count=len(constructed),
        matched=len(constructed) - len(missing),
        missing=missing[:max_listed],
        extra_count=len(extra_keys),
        extra=[{fmt(k): fmt(v) for k, v in items} for items in extra_keys[:max_listed]],
    )
