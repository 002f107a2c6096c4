"""Finite weighted defining graphs of Coxeter groups.

A :class:`DefiningGraph` holds an ordered tuple of generator names and a
symmetric weight table.  ``m(x, x) == 1``, every other entry is either an
integer ``>= 2`` or :data:`INF`, and the edge set is *derived* from the table:
``{x, y}`` is an edge iff ``x != y`` and ``m(x, y)`` is finite.

Vertices are addressed by index everywhere inside the package; the public
helpers also accept vertex names.  Vertex sets are sorted tuples of indices,
so declaration order drives every tie-break downstream.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .config import DEFAULT_MAX_WEIGHT
from .errors import GraphError, GraphParseError

INF = math.inf


def _is_weight(value):
    return value == INF or (isinstance(value, int) and not isinstance(value, bool))


@dataclass(frozen=True)
class DefiningGraph:
    vertices: tuple
    weights: tuple
    # Per-graph memo space for the word engine and friends; not part of identity.
    cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "weights", tuple(tuple(row) for row in self.weights))
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise GraphError("vertex names must be unique")
        for name in self.vertices:
            if not isinstance(name, str) or not name or any(c.isspace() for c in name) or name == "ε":
                raise GraphError(f"invalid vertex name {name!r}")
        if len(self.weights) != n or any(len(row) != n for row in self.weights):
            raise GraphError("weight table must be square over the vertex set")
        for i in range(n):
            for j in range(n):
                w = self.weights[i][j]
                if not _is_weight(w):
                    raise GraphError(f"weight m({self.vertices[i]},{self.vertices[j]})={w!r} is not an integer or INF")
                if w != self.weights[j][i]:
                    raise GraphError(f"weights not symmetric at {self.vertices[i]},{self.vertices[j]}")
                if (i == j) != (w == 1):
                    raise GraphError(f"m({self.vertices[i]},{self.vertices[j]}) must be 1 exactly on the diagonal")
                if w != INF and w < 1:
                    raise GraphError(f"weight {w} is not a positive integer")

    @classmethod
    def from_edges(cls, vertices, edges=(), max_weight=DEFAULT_MAX_WEIGHT):
        """Build from vertex names and ``(u, v, m)`` triples; unlisted pairs get INF."""
        vertices = tuple(vertices)
        pos = {name: i for i, name in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise GraphError("duplicate vertex name")
        n = len(vertices)
        table = [[1 if i == j else INF for j in range(n)] for i in range(n)]
        for u, v, m in edges:
            if u not in pos or v not in pos:
                raise GraphError(f"edge {u}-{v} references an unknown vertex")
            if u == v:
                raise GraphError(f"loop at {u}")
            if not isinstance(m, int) or m < 2:
                raise GraphError(f"edge weight {m!r} must be an integer >= 2")
            if m > max_weight:
                raise GraphError(f"edge weight {m} exceeds the maximum {max_weight}")
            i, j = pos[u], pos[v]
            if table[i][j] != INF and table[i][j] != m:
                raise GraphError(f"conflicting weights for edge {u}-{v}")
            table[i][j] = table[j][i] = m
        return cls(vertices, table)

    @property
    def n(self):
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def index(self, x):
        """Resolve a vertex name or index to an index."""
        if isinstance(x, str):
            try:
                return self._positions[x]
            except KeyError:
                raise GraphError(f"unknown vertex {x!r}") from None
        if isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.n:
            return x
        raise GraphError(f"unknown vertex {x!r}")

    @property
    def _positions(self):
        try:
            return self.cache["positions"]
        except KeyError:
            pos = self.cache["positions"] = {name: i for i, name in enumerate(self.vertices)}
            return pos

    def vertex_set(self, xs: Iterable) -> tuple:
        """Canonical VertexSet: sorted, deduplicated indices."""
        return tuple(sorted({self.index(x) for x in xs}))

    def names(self, xs) -> list:
        return [self.vertices[i] for i in xs]

    def m(self, x, y):
        return self.weights[self.index(x)][self.index(y)]

    def adjacent(self, x, y):
        i, j = self.index(x), self.index(y)
        return i != j and self.weights[i][j] != INF

    @property
    def edges(self):
        """Derived edge list ``(i, j, m)`` with ``i < j``."""
        return tuple(
            (i, j, self.weights[i][j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.weights[i][j] != INF
        )

    def neighbours(self, x):
        i = self.index(x)
        return tuple(j for j in range(self.n) if j != i and self.weights[i][j] != INF)

    @property
    def is_right_angled(self):
        return all(m == 2 for _, _, m in self.edges)

    # words ----------------------------------------------------------------

    def parse_word(self, text) -> tuple:
        """Space-separated generator names; ``""`` or ``"ε"`` is the empty word."""
        text = text.strip()
        if text in ("", "ε"):
            return ()
        return tuple(self.index(tok) for tok in text.split())

    def format_word(self, word) -> str:
        return " ".join(self.vertices[i] for i in word)

    # serialisation --------------------------------------------------------

    def to_text(self):
        lines = [f"vertex {name}" for name in self.vertices]
        lines += [f"edge {self.vertices[i]} {self.vertices[j]} {m}" for i, j, m in self.edges]
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "edges": [[self.vertices[i], self.vertices[j], m] for i, j, m in self.edges],
        }

    @classmethod
    def from_json(cls, doc):
        return cls.from_edges(doc["vertices"], [tuple(e) for e in doc["edges"]])


def parse_graph(text, max_weight=DEFAULT_MAX_WEIGHT) -> DefiningGraph:
    """Parse the line-based graph format.

    ``vertex <name>`` declares a generator, ``edge <u> <v> <m>`` sets
    ``m(u, v) = m`` for an integer ``m >= 2``, and ``#`` starts a comment.
    Errors carry the number of the first offending line.
    """
    vertices = []
    seen = set()
    weights = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kind = toks[0]
        if kind == "vertex":
            if len(toks) != 2:
                raise GraphParseError("expected 'vertex <name>'", lineno)
            name = toks[1]
            if name in seen:
                raise GraphParseError(f"duplicate vertex {name!r}", lineno)
            if name == "ε":
                raise GraphParseError("'ε' is reserved for the empty word", lineno)
            seen.add(name)
            vertices.append(name)
        elif kind == "edge":
            if len(toks) != 4:
                raise GraphParseError("expected 'edge <u> <v> <m>'", lineno)
            u, v, raw_m = toks[1:]
            for x in (u, v):
                if x not in seen:
                    raise GraphParseError(f"edge references unknown vertex {x!r}", lineno)
            if u == v:
                raise GraphParseError(f"loop at {u!r}", lineno)
            try:
                m = int(raw_m)
            except ValueError:
                raise GraphParseError(f"weight {raw_m!r} is not an integer", lineno) from None
            if m < 2:
                raise GraphParseError(f"edge weight must be >= 2, got {m}", lineno)
            if m > max_weight:
                raise GraphParseError(f"edge weight {m} exceeds the maximum {max_weight}", lineno)
            key = frozenset((u, v))
            if key in weights and weights[key] != m:
                raise GraphParseError(f"conflicting weights for edge {u}-{v}: {weights[key]} vs {m}", lineno)
            weights[key] = m
        else:
            raise GraphParseError(f"unknown directive {kind!r}", lineno)
    edges = [(*sorted(k, key=vertices.index), m) for k, m in weights.items()]
    return DefiningGraph.from_edges(vertices, edges, max_weight=max_weight)


def star(g: DefiningGraph, x) -> tuple:
    """``x`` together with all of its neighbours."""
    i = g.index(x)
    return tuple(sorted((i, *g.neighbours(i))))


def link(g: DefiningGraph, x) -> tuple:
    return g.neighbours(x)


def connected_components(g: DefiningGraph, omit=()) -> list:
    """Components of the subgraph induced on ``VΓ ∖ omit``, ordered by least vertex."""
    omit = set(g.vertex_set(omit))
    remaining = [i for i in range(g.n) if i not in omit]
    seen = set()
    comps = []
    for start in remaining:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.neighbours(v):
                if u not in omit and u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return comps


def induced_subgraph(g: DefiningGraph, vs) -> DefiningGraph:
    """Subgraph induced on ``vs``; vertices keep their relative declaration order."""
    vs = g.vertex_set(vs)
    return DefiningGraph(
        tuple(g.vertices[i] for i in vs),
        tuple(tuple(g.weights[i][j] for j in vs) for i in vs),
    )


def complement(g: DefiningGraph) -> DefiningGraph:
    """Complement of a right-angled graph, new edges all of weight 2."""
    if not g.is_right_angled:
        raise GraphError("complement is only defined for right-angled graphs (weights 2 or INF)")
    n = g.n
    table = [
        [1 if i == j else (INF if g.weights[i][j] == 2 else 2) for j in range(n)]
        for i in range(n)
    ]
    return DefiningGraph(g.vertices, table)


def is_separating(g: DefiningGraph, S) -> bool:
    S = g.vertex_set(S)
    if len(S) == g.n:
        raise GraphError("a separating set must be a proper subset of the vertices")
    return len(connected_components(g, S)) >= 2
