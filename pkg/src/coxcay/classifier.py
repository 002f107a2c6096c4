"""Discreteness of the automorphism group of the Cayley graph ``C_Γ``.

For finite ``Γ`` the group is non-discrete exactly when some non-trivial
weight-preserving symmetry of ``Γ`` fixes the star of a vertex pointwise;
equivalently, when ``Γ`` has a good separating set.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .autgamma import GraphAutomorphism, enumerate_aut, pointwise_stabilizer
from .defgraph import DefiningGraph, connected_components, link, star


@dataclass(frozen=True)
class GoodSeparatingSet:
    S: tuple
    gamma1: tuple
    alpha: GraphAutomorphism  # acts on gamma1, identity elsewhere

    def gamma2(self, g):
        inside = set(self.gamma1) - set(self.S)
        return tuple(i for i in range(g.n) if i not in inside)

    def to_json(self, g):
        return {
            "S": g.names(self.S),
            "gamma1": g.names(self.gamma1),
            "alpha": {g.vertices[i]: g.vertices[self.alpha[i]] for i in self.gamma1},
        }


@dataclass(frozen=True)
class Verdict:
    discrete: bool
    witness: Optional[tuple]  # (vertex index, GraphAutomorphism)
    good_sep: Optional[GoodSeparatingSet]
    aut_order: int

    def to_json(self, g: DefiningGraph):
        witness = None
        if self.witness is not None:
            x, alpha = self.witness
            witness = {"vertex": g.vertices[x], "alpha": alpha.to_json(g)}
        return {
            "discrete": self.discrete,
            "witness": witness,
            "good_separating_set": self.good_sep.to_json(g) if self.good_sep else None,
            "aut_gamma_order": self.aut_order,
        }


def star_fixing_witness(g: DefiningGraph):
    """Least vertex whose star is fixed by a non-trivial symmetry, with the least such symmetry."""
    for x in range(g.n):
        stab = pointwise_stabilizer(g, star(g, x))
        nontrivial = [a for a in stab if not a.is_identity]
        if nontrivial:
            return x, nontrivial[0]
    return None


def find_good_separating_set(g: DefiningGraph) -> Optional[GoodSeparatingSet]:
    """``link(x)`` for a star-fixing witness ``(x, α)``.

    ``{x}`` is its own component of ``Γ ∖ link(x)``; every other component
    goes to the ``Γ₁`` side, on which ``α`` acts non-trivially.
    """
    found = star_fixing_witness(g)
    if found is None:
        return None
    x, alpha = found
    S = link(g, x)
    gamma1 = tuple(sorted(set(range(g.n)) - set(star(g, x)) | set(S)))
    return GoodSeparatingSet(S, gamma1, alpha)


def verify_good_sep(g: DefiningGraph, S, side, alpha) -> bool:
    """Check every clause of the good-separating-set definition.

    ``alpha`` may be a :class:`GraphAutomorphism` of ``Γ`` or a mapping on
    ``side``; only its restriction to ``side`` is used.  The extension of
    that restriction by the identity is also checked to lie in ``Aut(Γ)``.
    """
    S = g.vertex_set(S)
    side = g.vertex_set(side)
    if len(S) >= g.n:
        return False
    comps = connected_components(g, S)
    if len(comps) < 2:
        return False
    if not set(S) <= set(side):
        return False
    chosen = [c for c in comps if set(c) <= set(side)]
    if set().union(*map(set, chosen), S) != set(side):
        return False  # side is not S plus a union of components
    if not chosen or len(chosen) == len(comps):
        return False  # I must be non-empty and proper
    if isinstance(alpha, GraphAutomorphism):
        mapping = {i: alpha[i] for i in side}
    else:
        mapping = {g.index(k): g.index(v) for k, v in alpha.items()}
        if set(mapping) != set(side):
            return False
    if sorted(mapping.values()) != list(side):
        return False
    if any(mapping[s] != s for s in S):
        return False
    if all(mapping[i] == i for i in side):
        return False
    w = g.weights
    if any(w[i][j] != w[mapping[i]][mapping[j]] for i in side for j in side):
        return False
    extended = tuple(mapping.get(i, i) for i in range(g.n))
    return all(w[i][j] == w[extended[i]][extended[j]] for i in range(g.n) for j in range(g.n))


def classify(g: DefiningGraph) -> Verdict:
    found = star_fixing_witness(g)
    good = find_good_separating_set(g) if found else None
    return Verdict(
        discrete=found is None,
        witness=found,
        good_sep=good,
        aut_order=len(enumerate_aut(g)),
    )
