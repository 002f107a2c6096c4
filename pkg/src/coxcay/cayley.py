"""Finite balls of the labelled Cayley graph of a Coxeter group."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import config, words
from .defgraph import DefiningGraph
from .errors import BallCapExceeded, GraphError


@dataclass(frozen=True, eq=False)
class CayleyBall:
    """The ball ``B(center, radius)`` with vertices stored as normal forms.

    ``vertices`` are ordered by distance from the center, then shortlex.
    ``adjacency[i]`` maps a label to the neighbour index across that edge;
    only neighbours inside the ball are present.
    """

    graph: DefiningGraph
    center: tuple
    radius: int
    vertices: tuple
    distance: tuple
    adjacency: tuple
    index: dict = field(repr=False)

    def __len__(self):
        return len(self.vertices)

    @property
    def edges(self):
        """``(i, j, label)`` with ``i < j``, sorted."""
        return tuple(
            (i, j, x)
            for i, nbrs in enumerate(self.adjacency)
            for x, j in sorted(nbrs.items())
            if i < j
        )

    def label(self, i, j):
        """Label of the edge ``{i, j}`` or ``None``."""
        for x, k in self.adjacency[i].items():
            if k == j:
                return x
        return None

    def is_interior(self, i):
        return self.distance[i] < self.radius

    def sphere(self, k):
        return [i for i, d in enumerate(self.distance) if d == k]

    def word(self, i):
        return self.graph.format_word(self.vertices[i])

    def locate(self, w):
        """Index of the element represented by ``w``, or ``None`` if outside."""
        return self.index.get(words.canonical(self.graph, w))


def build_ball(g: DefiningGraph, radius: int, center=()) -> CayleyBall:
    if radius < 0:
        raise GraphError("radius must be non-negative")
    cap = config.max_ball()
    center = words.canonical(g, center)
    index = {center: 0}
    vertices = [center]
    distance = [0]
    layer = [center]
    for d in range(1, radius + 1):
        fresh = set()
        for v in layer:
            for x in range(g.n):
                u = words.step(g, v, x)
                if u not in index:
                    fresh.add(u)
        layer = sorted(fresh, key=lambda w: (len(w), w))
        for u in layer:
            index[u] = len(vertices)
            vertices.append(u)
            distance.append(d)
        if len(vertices) > cap:
            raise BallCapExceeded(f"ball exceeds {cap} vertices (COXCAY_MAX_BALL)")
    adjacency = []
    for v in vertices:
        nbrs = {}
        for x in range(g.n):
            j = index.get(words.step(g, v, x))
            if j is not None:
                nbrs[x] = j
        adjacency.append(nbrs)
    return CayleyBall(g, center, radius, tuple(vertices), tuple(distance), tuple(adjacency), index)


def neighbors(ball: CayleyBall, v: int) -> list:
    """``(label, index)`` pairs sorted by label."""
    return sorted(ball.adjacency[v].items())


def relation_cycle(ball: CayleyBall, v: int, x, y):
    """The ``2·m(x, y)`` vertices ``v, vx, vxy, ...`` or ``None`` if one leaves the ball."""
    g = ball.graph
    x, y = g.index(x), g.index(y)
    if not g.adjacent(x, y):
        raise GraphError(f"no relation between {g.vertices[x]} and {g.vertices[y]} (m = ∞)")
    m = g.weights[x][y]
    cycle = [v]
    cur = v
    for k in range(2 * m - 1):
        cur = ball.adjacency[cur].get(x if k % 2 == 0 else y)
        if cur is None:
            return None
        cycle.append(cur)
    # closing edge is labelled y
    if ball.adjacency[cur].get(y) != v:
        return None
    return cycle


def to_json(ball: CayleyBall) -> dict:
    g = ball.graph
    return {
        "graph": g.to_json(),
        "center": g.format_word(ball.center),
        "radius": ball.radius,
        "vertices": [g.format_word(w) for w in ball.vertices],
        "edges": [[i, j, g.vertices[x]] for i, j, x in ball.edges],
    }


def _dot_id(text):
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(ball: CayleyBall) -> str:
    g = ball.graph
    lines = ["graph cayley {"]
    for w in ball.vertices:
        name = g.format_word(w)
        lines.append(f"  {_dot_id(name)} [label={_dot_id(name or 'ε')}];")
    for i, j, x in ball.edges:
        lines.append(f"  {_dot_id(ball.word(i))} -- {_dot_id(ball.word(j))} [label={_dot_id(g.vertices[x])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(ball: CayleyBall, format="json") -> str:
    if format == "json":
        return json.dumps(to_json(ball), indent=2, ensure_ascii=False) + "\n"
    if format == "dot":
        return to_dot(ball)
    raise ValueError(f"unknown export format {format!r}")


def from_json(doc) -> CayleyBall:
    """Rebuild a ball from its JSON export, checking it against the group."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    g = DefiningGraph.from_json(doc["graph"])
    center = g.parse_word(doc["center"])
    ball = build_ball(g, int(doc["radius"]), center)
    listed = [words.canonical(g, g.parse_word(s)) for s in doc["vertices"]]
    if tuple(listed) != ball.vertices:
        raise GraphError("vertex list does not match the ball of the given center and radius")
    edges = tuple((int(i), int(j), g.index(x)) for i, j, x in doc["edges"])
    if edges != ball.edges:
        raise GraphError("edge list does not match the ball of the given center and radius")
    return ball
