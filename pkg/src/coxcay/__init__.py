"""Cayley graphs of Coxeter groups and the discreteness of their automorphism groups."""
from .autgamma import GraphAutomorphism, enumerate_aut, pointwise_stabilizer
from .cayley import CayleyBall, build_ball
from .classifier import GoodSeparatingSet, Verdict, classify, find_good_separating_set, verify_good_sep
from .defgraph import INF, DefiningGraph, parse_graph
from .errors import (
    BallCapExceeded,
    CapExceeded,
    ConfigurationError,
    CoxcayError,
    GraphError,
    GraphParseError,
    LocalActionError,
    NodeBudgetExceeded,
    OrbitCapExceeded,
    SynthesisError,
)
from .localaction import (
    BallAutomorphism,
    Configuration,
    almost_translation,
    check_star_condition,
    extract_local_action,
    make_constant_config,
    make_coset_config,
    synthesize,
    translation,
)
from .oracle import cross_validate, enumerate_ball_autos, stable_restrictions

__version__ = "0.1.0"

__all__ = [
    "BallAutomorphism",
    "BallCapExceeded",
    "CapExceeded",
    "CayleyBall",
    "Configuration",
    "ConfigurationError",
    "CoxcayError",
    "DefiningGraph",
    "GoodSeparatingSet",
    "GraphAutomorphism",
    "GraphError",
    "GraphParseError",
    "INF",
    "LocalActionError",
    "NodeBudgetExceeded",
    "OrbitCapExceeded",
    "SynthesisError",
    "Verdict",
    "almost_translation",
    "build_ball",
    "check_star_condition",
    "classify",
    "cross_validate",
    "enumerate_aut",
    "enumerate_ball_autos",
    "extract_local_action",
    "find_good_separating_set",
    "make_constant_config",
    "make_coset_config",
    "parse_graph",
    "pointwise_stabilizer",
    "stable_restrictions",
    "synthesize",
    "translation",
    "verify_good_sep",
]
