"""Word problem in Coxeter groups by braid-orbit search.

Words are tuples of generator indices.  A normal form is the shortlex-least
reduced word of an element; since all reduced words of an element have the
same length, this is the lexicographically least member of its braid orbit.

Correctness rests on Tits' solution of the word problem: a word is reduced
iff no word in its braid orbit contains two equal adjacent letters, and any
two reduced words of one element are joined by braid moves.  Orbits are
enumerated exhaustively and memoized per graph; the enumeration is capped by
``COXCAY_MAX_ORBIT``.
"""
from __future__ import annotations

from collections import deque

from . import config
from .defgraph import INF, DefiningGraph
from .errors import OrbitCapExceeded


class _Engine:
    """Memo tables for one defining graph."""

    def __init__(self, g):
        self.g = g
        n = g.n
        # blocks[x][y]: the alternating block x,y,x,... of length m(x,y)
        self.blocks = [
            [
                tuple(x if k % 2 == 0 else y for k in range(g.weights[x][y]))
                if x != y and g.weights[x][y] != INF
                else None
                for y in range(n)
            ]
            for x in range(n)
        ]
        self.orbits = {}  # reduced word -> frozenset orbit
        self.steps = {}  # (normal form, x) -> normal form
        self.minimum = {}  # frozenset orbit -> min member

    def moves(self, w):
        """All words one braid move away from ``w``."""
        out = []
        L = len(w)
        for i in range(L - 1):
            x, y = w[i], w[i + 1]
            if x == y:
                continue
            block = self.blocks[x][y]
            if block is None or i + len(block) > L:
                continue
            if w[i:i + len(block)] == block:
                swapped = self.blocks[y][x]
                out.append(w[:i] + swapped + w[i + len(block):])
        return out

    def orbit(self, w):
        w = tuple(w)
        hit = self.orbits.get(w)
        if hit is not None:
            return hit
        cap = config.max_orbit()
        seen = {w}
        queue = deque([w])
        while queue:
            u = queue.popleft()
            for v in self.moves(u):
                if v not in seen:
                    seen.add(v)
                    if len(seen) > cap:
                        raise OrbitCapExceeded(f"braid orbit exceeds {cap} words (COXCAY_MAX_ORBIT)")
                    queue.append(v)
        orbit = frozenset(seen)
        if len(w) < 2 or all(not _has_square(u) for u in orbit):
            # only reduced orbits are stored for reuse by every member
            for u in orbit:
                self.orbits[u] = orbit
        return orbit

    def find_cancellation(self, w):
        """BFS the braid orbit of ``w`` until some member has a square ``xx``.

        Returns the shortened word, or ``None`` if ``w`` is reduced.
        """
        w = tuple(w)
        if w in self.orbits:
            return None
        cap = config.max_orbit()
        seen = {w}
        queue = deque([w])
        while queue:
            u = queue.popleft()
            for i in range(len(u) - 1):
                if u[i] == u[i + 1]:
                    return u[:i] + u[i + 2:]
            for v in self.moves(u):
                if v not in seen:
                    seen.add(v)
                    if len(seen) > cap:
                        raise OrbitCapExceeded(f"braid orbit exceeds {cap} words (COXCAY_MAX_ORBIT)")
                    queue.append(v)
        orbit = frozenset(seen)
        for u in orbit:
            self.orbits[u] = orbit
        return None

    def least(self, orbit):
        hit = self.minimum.get(orbit)
        if hit is None:
            hit = self.minimum[orbit] = min(orbit)
        return hit

    def step(self, nf, x):
        """Normal form of ``nf · x`` for a normal form ``nf``."""
        key = (nf, x)
        hit = self.steps.get(key)
        if hit is not None:
            return hit
        orbit = self.orbit(nf)
        shorter = next((u[:-1] for u in orbit if u and u[-1] == x), None)
        if shorter is not None:
            result = self.least(self.orbit(shorter))
        else:
            result = self.least(self.orbit(nf + (x,)))
        self.steps[key] = result
        return result


def _has_square(w):
    return any(w[i] == w[i + 1] for i in range(len(w) - 1))


def _engine(g: DefiningGraph) -> _Engine:
    eng = g.cache.get("words")
    if eng is None:
        eng = g.cache["words"] = _Engine(g)
    return eng


def _word(g, w):
    """Tuple of indices from a sequence of names/indices or from text.

    Text is space-separated names; without spaces it is read as one vertex
    name if it is one, else letter by letter (``"abc"``).
    """
    if isinstance(w, str):
        if w.strip() in ("", "ε") or any(c.isspace() for c in w.strip()) or w in g.vertices:
            return g.parse_word(w)
    return tuple(g.index(x) for x in w)


def braid_orbit(g: DefiningGraph, w) -> frozenset:
    """Closure of ``{w}`` under single braid moves (all members have length ``|w|``)."""
    return _engine(g).orbit(_word(g, w))


def reduce(g: DefiningGraph, w) -> tuple:
    """A reduced word for the element represented by ``w``.

    Repeatedly search the braid orbit for a member with two equal adjacent
    letters and cancel them, until the orbit has none.
    """
    eng = _engine(g)
    w = _word(g, w)
    while True:
        shorter = eng.find_cancellation(w)
        if shorter is None:
            return w
        w = shorter


def step(g: DefiningGraph, nf, x) -> tuple:
    """Normal form of ``nf·x``; ``nf`` must already be a normal form."""
    return _engine(g).step(tuple(nf), g.index(x))


def canonical(g: DefiningGraph, w) -> tuple:
    """Shortlex-least reduced word of the element represented by ``w``."""
    eng = _engine(g)
    nf = ()
    for x in _word(g, w):
        nf = eng.step(nf, x)
    return nf


def is_normal_form(g, w):
    w = _word(g, w)
    return canonical(g, w) == w


def equal(g: DefiningGraph, w1, w2) -> bool:
    return canonical(g, w1) == canonical(g, w2)


def length(g: DefiningGraph, w) -> int:
    return len(canonical(g, w))


def inverse(g: DefiningGraph, w) -> tuple:
    # generators are involutions
    return canonical(g, tuple(reversed(_word(g, w))))


def multiply(g: DefiningGraph, u, v) -> tuple:
    eng = _engine(g)
    nf = canonical(g, u)
    for x in _word(g, v):
        nf = eng.step(nf, x)
    return nf


def is_right_descent(g: DefiningGraph, w, x) -> bool:
    """True iff ``‖wx‖ < ‖w‖``."""
    nf = canonical(g, w)
    return len(step(g, nf, x)) < len(nf)


def relabel(g: DefiningGraph, w, perm) -> tuple:
    """Normal form of the word obtained by applying ``perm`` letterwise."""
    return canonical(g, tuple(perm[x] for x in _word(g, w)))


def support(g: DefiningGraph, w) -> tuple:
    """Letters occurring in any reduced word of ``w`` (a braid-orbit invariant)."""
    return tuple(sorted(set(canonical(g, w))))


def parabolic_member(g: DefiningGraph, w, sub) -> bool:
    sub = set(g.vertex_set(sub))
    return set(support(g, w)) <= sub


def coset_key(g: DefiningGraph, w, sub) -> tuple:
    """Minimal-length representative of the left coset ``w·W_sub``.

    The minimal element of a parabolic coset is unique, so it is reached by
    right-multiplying by any generator of ``sub`` that shortens the word
    until none does.
    """
    sub = g.vertex_set(sub)
    nf = canonical(g, w)
    eng = _engine(g)
    changed = True
    while changed:
        changed = False
        for x in sub:
            shorter = eng.step(nf, x)
            if len(shorter) < len(nf):
                nf = shorter
                changed = True
                break
    return nf
