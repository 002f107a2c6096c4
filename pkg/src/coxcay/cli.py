"""Command-line entry point: ``coxcay <subcommand> <graph-file> ...``.

Exit codes: 0 success, 1 domain or file error (message on stderr), 2 usage.
"""
from __future__ import annotations

import argparse
import itertools
import json
import re
import sys

from . import cayley, words
from .autgamma import GraphAutomorphism, enumerate_aut, pointwise_stabilizer
from .classifier import classify, find_good_separating_set, verify_good_sep
from .defgraph import parse_graph
from .errors import CapExceeded, ConfigurationError, CoxcayError
from .localaction import (
    Configuration,
    boundary,
    coset_keys,
    eligible_coset_keys,
    extend_by_identity,
    make_coset_config,
    star_agreement_failures,
    synthesize,
)
from .oracle import enumerate_ball_autos, twin_classes, twin_group_order

MAX_SUBSETS_LOG2 = 16


def _dump(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _load_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _vertex_list(g, text):
    return [g.index(t) for t in text.split(",") if t.strip()] if text else []


def _perm_from_json(g, doc):
    """A JSON object ``{vertex: image}`` (others fixed) or a list of images in vertex order."""
    if isinstance(doc, dict):
        return GraphAutomorphism.from_mapping(g, doc)
    if isinstance(doc, list):
        if len(doc) != g.n:
            raise ConfigurationError(f"permutation list needs {g.n} entries")
        return GraphAutomorphism(tuple(g.index(x) for x in doc))
    raise ConfigurationError("permutation must be a JSON object or list")


_decoder = json.JSONDecoder()


def parse_config(g, ball, text):
    """Build a :class:`Configuration` from ``default``/``coset`` lines.

    ``default <perm>`` sets every vertex; each ``coset <gamma1> <ν> <χ>``
    line then overwrites the vertices of the listed cosets.  Later lines win.
    """
    values = [GraphAutomorphism.identity(g.n)] * len(ball)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            head, _, rest = line.partition(" ")
            rest = rest.strip()
            if head == "default":
                doc, end = _decoder.raw_decode(rest)
                if rest[end:].strip():
                    raise ConfigurationError("trailing text after permutation")
                values = [_perm_from_json(g, doc)] * len(ball)
            elif head == "coset":
                m = re.match(r"(\S+)\s+", rest)
                if not m:
                    raise ConfigurationError("expected: coset <gamma1> <nu> <chi>")
                gamma1 = _vertex_list(g, m.group(1))
                doc, end = _decoder.raw_decode(rest, m.end())
                nu = _perm_from_json(g, doc)
                chi = [g.parse_word(w) for w in rest[end:].split(",") if w.strip()]
                cfg = make_coset_config(ball, gamma1, extend_by_identity(g, gamma1, nu), chi)
                chosen = cfg.provenance[3]
                ext = cfg.provenance[2]
                for i, w in enumerate(ball.vertices):
                    if words.coset_key(g, w, gamma1) in chosen:
                        values[i] = ext
            else:
                raise ConfigurationError(f"unknown directive {head!r}")
        except (ValueError, KeyError) as exc:
            raise ConfigurationError(f"config line {lineno}: {exc}") from exc
    return Configuration(ball, values)


# subcommands -------------------------------------------------------------


def cmd_classify(args):
    g = _load_graph(args.file)
    return _dump(classify(g).to_json(g))


def cmd_ball(args):
    g = _load_graph(args.file)
    center = words.canonical(g, g.parse_word(args.center))
    return cayley.export(cayley.build_ball(g, args.radius, center), args.format)


def cmd_autgamma(args):
    g = _load_graph(args.file)
    fix = _vertex_list(g, args.fix)
    autos = pointwise_stabilizer(g, fix) if fix else enumerate_aut(g)
    return _dump({
        "fixed": g.names(sorted(fix)),
        "order": len(autos),
        "automorphisms": [a.to_json(g) for a in autos],
    })


def cmd_goodsep(args):
    g = _load_graph(args.file)
    good = find_good_separating_set(g)
    doc = {"good_separating_set": None, "verified": False}
    if good is not None:
        doc = {
            "good_separating_set": good.to_json(g),
            "verified": verify_good_sep(g, good.S, good.gamma1, good.alpha),
        }
    return _dump(doc)


def cmd_synth(args):
    g = _load_graph(args.file)
    ball = cayley.build_ball(g, args.radius)
    with open(args.config, encoding="utf-8") as fh:
        cfg = parse_config(g, ball, fh.read())
    bad = star_agreement_failures(g, cfg.values, ball)
    if bad:
        i, j, x = bad[0]
        raise ConfigurationError(
            f"star condition fails on edge {ball.word(i) or 'ε'!r}--{ball.word(j)!r} (label {g.vertices[x]})"
        )
    return _dump(synthesize(cfg).to_json())


def cmd_oracle(args):
    g = _load_graph(args.file)
    ball = cayley.build_ball(g, args.radius)
    fix = (0,) if args.fix_center else ()
    reps = enumerate_ball_autos(ball, fix, modulo_twins=True)
    total = len(reps) * twin_group_order(ball, fix)
    listed = None
    if total <= args.max_list:
        listed = [a.to_json()["map"] for a in enumerate_ball_autos(ball, fix)]
    return _dump({
        "radius": args.radius,
        "fix_center": args.fix_center,
        "vertices": len(ball),
        "automorphism_count": total,
        "twin_classes": len(twin_classes(ball)),
        "twin_coset_representatives": len(reps),
        "automorphisms": listed,
    })


def cmd_count_configs(args):
    """Synthesize ``ν̄_χ`` for every subset ``χ`` of coset keys and count distinct maps."""
    g = _load_graph(args.file)
    gamma1 = g.vertex_set(_vertex_list(g, args.gamma1))
    ball = cayley.build_ball(g, args.radius)
    S = boundary(g, gamma1)
    nu = None
    for a in pointwise_stabilizer(g, S):
        if not a.is_identity and all(a[x] in gamma1 for x in gamma1):
            ext = GraphAutomorphism(tuple(a[x] if x in gamma1 else x for x in range(g.n)))
            if verify_good_sep(g, S, gamma1, ext):
                nu = ext
                break
    if nu is None:
        raise ConfigurationError("no non-trivial symmetry of gamma1 fixes its boundary")
    keys = coset_keys(ball, gamma1)
    eligible = eligible_coset_keys(ball, gamma1)
    if len(keys) > MAX_SUBSETS_LOG2:
        raise CapExceeded(f"{len(keys)} coset keys; refusing to enumerate 2^{len(keys)} subsets")
    seen = set()
    for r in range(len(keys) + 1):
        for chi in itertools.combinations(keys, r):
            alpha = synthesize(make_coset_config(ball, gamma1, nu, chi))
            seen.add(tuple(sorted(alpha.mapping.items())))
    fmt = lambda w: g.format_word(w) or "ε"  # noqa: E731
    return _dump({
        "gamma1": g.names(gamma1),
        "boundary": g.names(S),
        "nu": nu.to_json(g),
        "radius": args.radius,
        "coset_keys": [fmt(k) for k in keys],
        "eligible_keys": [fmt(k) for k in eligible],
        "k": len(eligible),
        "distinct_automorphisms": len(seen),
        "expected": 2 ** len(eligible),
    })


def build_parser():
    p = argparse.ArgumentParser(prog="coxcay", description="Cayley graphs of Coxeter groups and their symmetries.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="discrete or non-discrete, with witness")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("ball", help="export B(center, N)")
    s.add_argument("file")
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--center", default="", help="space-separated word, default ε")
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.set_defaults(func=cmd_ball)

    s = sub.add_parser("autgamma", help="weight-preserving symmetries of the defining graph")
    s.add_argument("file")
    s.add_argument("--fix", default="", help="comma-separated vertices to fix pointwise")
    s.set_defaults(func=cmd_autgamma)

    s = sub.add_parser("goodsep", help="good separating set, if any")
    s.add_argument("file")
    s.set_defaults(func=cmd_goodsep)

    s = sub.add_parser("synth", help="synthesize a ball automorphism from a configuration file")
    s.add_argument("file")
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--config", required=True)
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("oracle", help="brute-force automorphisms of B(ε, N)")
    s.add_argument("file")
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--fix-center", action="store_true")
    s.add_argument("--max-list", type=int, default=1000, help="list maps only when there are at most this many")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("count-configs", help="count distinct coset-configuration automorphisms")
    s.add_argument("file")
    s.add_argument("--gamma1", required=True)
    s.add_argument("--radius", type=int, required=True)
    s.set_defaults(func=cmd_count_configs)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "radius", 0) is not None and getattr(args, "radius", 0) < 0:
        parser.error("--radius must be non-negative")
    try:
        out = args.func(args)
    except (CoxcayError, OSError) as exc:
        print(f"coxcay {args.command}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
