"""Weight-preserving symmetries of a defining graph."""
from __future__ import annotations

from dataclasses import dataclass

from .defgraph import DefiningGraph
from .errors import GraphError


@dataclass(frozen=True, order=True)
class GraphAutomorphism:
    """Permutation of ``VΓ`` as an index array: ``perm[x]`` is the image of ``x``.

    Ordering is lexicographic on ``perm``, so the identity sorts first.
    """

    perm: tuple

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise GraphError(f"{self.perm} is not a permutation")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_mapping(cls, g: DefiningGraph, mapping):
        """From ``{vertex: image}``; unmentioned vertices are fixed."""
        perm = list(range(g.n))
        for k, v in mapping.items():
            perm[g.index(k)] = g.index(v)
        return cls(perm)

    def __call__(self, x):
        return self.perm[x]

    def __getitem__(self, x):
        return self.perm[x]

    def __len__(self):
        return len(self.perm)

    @property
    def is_identity(self):
        return all(i == p for i, p in enumerate(self.perm))

    def moved(self):
        return tuple(i for i, p in enumerate(self.perm) if i != p)

    def fixes(self, xs):
        return all(self.perm[x] == x for x in xs)

    def restrict(self, xs):
        return {x: self.perm[x] for x in xs}

    def to_json(self, g: DefiningGraph):
        return {g.vertices[i]: g.vertices[p] for i, p in enumerate(self.perm)}


def compose(p: GraphAutomorphism, q: GraphAutomorphism) -> GraphAutomorphism:
    """``p ∘ q``: apply ``q`` first."""
    return GraphAutomorphism(tuple(p.perm[i] for i in q.perm))


def invert(p: GraphAutomorphism) -> GraphAutomorphism:
    inv = [0] * len(p.perm)
    for i, pi in enumerate(p.perm):
        inv[pi] = i
    return GraphAutomorphism(tuple(inv))


def is_weight_preserving(g: DefiningGraph, p) -> bool:
    perm = p.perm if isinstance(p, GraphAutomorphism) else tuple(g.index(x) for x in p)
    if sorted(perm) != list(range(g.n)):
        return False
    w = g.weights
    return all(w[i][j] == w[perm[i]][perm[j]] for i in range(g.n) for j in range(i + 1, g.n))


def _signature(g, x):
    return tuple(sorted(g.weights[x][y] for y in range(g.n) if y != x))


def _search(g, fixed):
    n = g.n
    w = g.weights
    sig = [_signature(g, x) for x in range(n)]
    image = [None] * n
    used = [False] * n
    out = []

    def extend(x):
        if x == n:
            out.append(GraphAutomorphism(tuple(image)))
            return
        cands = [x] if x in fixed else range(n)
        for y in cands:
            if used[y] or sig[y] != sig[x]:
                continue
            if any(w[x][z] != w[y][image[z]] for z in range(x)):
                continue
            image[x] = y
            used[y] = True
            extend(x + 1)
            used[y] = False
        image[x] = None

    extend(0)
    return sorted(out)


def enumerate_aut(g: DefiningGraph) -> list:
    """All of ``Aut(Γ)`` in lexicographic order (identity first)."""
    key = "aut"
    hit = g.cache.get(key)
    if hit is None:
        hit = g.cache[key] = tuple(_search(g, frozenset()))
    return list(hit)


def pointwise_stabilizer(g: DefiningGraph, fix) -> list:
    fix = frozenset(g.vertex_set(fix))
    return _search(g, fix)
