"""Named defining graphs used throughout the tests and the docs.

``delta`` is an edge plus an isolated vertex, ``triangle_pendant`` a
triangle ``v1 v2 u`` with a pendant ``z`` on ``u``, ``one_ended`` a
six-vertex graph whose right-angled Coxeter group is one-ended.
"""
from .defgraph import parse_graph

TEXTS = {
    "k2": """
vertex a
vertex b
edge a b 2
""",
    "p3": """
vertex a
vertex b
vertex c
edge a b 2
edge b c 2
""",
    "p4": """
vertex a
vertex b
vertex c
vertex d
edge a b 2
edge b c 2
edge c d 2
""",
    "delta": """
vertex a
vertex b
vertex c
edge a b 2
""",
    "c4": """
vertex a
vertex b
vertex c
vertex d
edge a b 2
edge b c 2
edge c d 2
edge d a 2
""",
    "c5": """
vertex a
vertex b
vertex c
vertex d
vertex f
edge a b 2
edge b c 2
edge c d 2
edge d f 2
edge f a 2
""",
    "k4_minus_edge": """
vertex p
vertex q
vertex r
vertex s
edge p q 2
edge p r 2
edge q r 2
edge q s 2
edge r s 2
""",
    "triangle_pendant": """
vertex v1
vertex v2
vertex u
vertex z
edge v1 v2 2
edge v1 u 2
edge v2 u 2
edge u z 2
""",
    "one_ended": """
vertex a
vertex b
vertex c
vertex d
vertex f
vertex g
edge a b 2
edge a c 2
edge b d 2
edge c f 2
edge d g 2
edge f g 2
edge c g 2
edge d f 2
""",
    "dihedral3": """
vertex a
vertex b
edge a b 3
""",
    "affine_a2": """
vertex a
vertex b
vertex c
edge a b 3
edge b c 3
edge a c 3
""",
    "h3": """
vertex a
vertex b
vertex c
edge a b 5
edge b c 3
edge a c 2
""",
    "binary_tree": """
vertex r
vertex l
vertex m
vertex l1
vertex l2
vertex m1
vertex m2
edge r l 2
edge r m 2
edge l l1 2
edge l l2 2
edge m m1 2
edge m m2 2
""",
}


def load(name):
    return parse_graph(TEXTS[name])


def names():
    return sorted(TEXTS)
