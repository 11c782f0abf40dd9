"""Command-line interface: ``xbtool compute|census|construct|verify|generate``.

Results go to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 on a usage or input error and 2 when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from .canon import canonical_form
from .constructions import (
    FIXTURE_NAMES,
    GATE_P_BASIS_VERTICES,
    HypothesisError,
    SoundnessError,
    construct,
    equal_x,
    fixture,
)
from .formats import (
    FormatError,
    parse_edgelist,
    parse_graph6,
    write_edgelist,
    write_graph6,
)
from .generate import all_graphs
from .graph import GraphError, VWGraph, with_weights
from .invariants import XB_METHODS, b_function, tutte, w_polynomial, xb
from .search import census, digest64

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

METHOD_ALIASES = {
    "split": "split",
    "ore": "path_swap",
    "path_swap": "path_swap",
    "nbhd": "neighborhood",
    "neighborhood": "neighborhood",
    "double": "double_graph",
    "double_graph": "double_graph",
    "fixture": "fixture",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _load_graph(args) -> VWGraph:
    if args.graph6 is not None:
        g = parse_graph6(args.graph6)
    else:
        with open(args.edgelist) as fh:
            g = parse_edgelist(fh.read())
    if args.weights:
        try:
            w = [int(x) for x in args.weights.split(",")]
        except ValueError:
            raise UsageError(f"bad --weights {args.weights!r}") from None
        if len(w) != g.n:
            raise UsageError(f"--weights gives {len(w)} values for {g.n} vertices")
        g = with_weights(g, w)
    return g


# --------------------------------------------------------------------------
# compute

def cmd_compute(args) -> int:
    g = _load_graph(args)
    inv = args.invariant
    vals = [_fraction(x) for x in args.eval.split(",")] if args.eval else None
    if inv in ("x", "xb"):
        value = xb(g, args.method)
        if inv == "x":
            value = value.at_t(-1)
        if vals is None:
            print(value.render())
        else:
            t, xs = vals[0], vals[1:]
            print(_rational(Fraction(value.evaluate(t, xs))))
    elif inv == "tutte":
        value = tutte(g)
        if vals is None:
            print(value.render())
        else:
            if len(vals) != 2:
                raise UsageError("tutte --eval takes x,y")
            print(_rational(Fraction(value.evaluate(*vals))))
    elif inv == "w":
        if vals is not None:
            raise UsageError("--eval is not available for the W polynomial")
        print(w_polynomial(g).render())
    elif inv == "b":
        if args.r is None or args.q is None or args.t is None:
            raise UsageError("--invariant b needs --r, --q and --t")
        print(b_function(g, args.r, args.q, args.t))
    return EXIT_OK


# --------------------------------------------------------------------------
# census

def cmd_census(args) -> int:
    lines = []
    for path in args.input:
        if path == "-":
            lines.extend(sys.stdin.read().splitlines())
        else:
            with open(path) as fh:
                lines.extend(fh.read().splitlines())
    cache = args.cache or os.environ.get("XBTOOL_CACHE") or None
    report = census(lines, jobs=args.jobs, method=args.method, cache_path=cache,
                    verify=not args.no_verify)
    text = report.to_json()
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
        sys.stdout.write(report.summary())
    else:
        sys.stdout.write(text)
        sys.stderr.write(report.summary())
    return EXIT_VERIFY if report.counts["verification_failures"] else EXIT_OK


# --------------------------------------------------------------------------
# construct / verify

def _graph_entry(g: VWGraph) -> dict:
    entry = {"edgelist": write_edgelist(g)}
    if g.is_simple() and g.is_unweighted():
        entry["graph6"] = write_graph6(g)
    return entry


def _pair_facts(g1: VWGraph, g2: VWGraph) -> dict:
    iso = g1.n == g2.n and canonical_form(g1, 64) == canonical_form(g2, 64)
    if max(g1.n, g2.n) > GATE_P_BASIS_VERTICES:
        # XB is out of reach here; X is compared in the augmented monomial basis
        return {"equal_x": equal_x(g1, g2), "equal_xb": None, "isomorphic": iso,
                "fingerprints": {}}
    xb1, xb2 = xb(g1), xb(g2)
    x1, x2 = xb1.at_t(-1), xb2.at_t(-1)
    return {
        "equal_x": x1 == x2,
        "equal_xb": xb1 == xb2,
        "isomorphic": iso,
        "fingerprints": {
            "x": [digest64(x1.serialize()).hex(), digest64(x2.serialize()).hex()],
            "xb": [digest64(xb1.serialize()).hex(), digest64(xb2.serialize()).hex()],
        },
    }


def cmd_construct(args) -> int:
    method = METHOD_ALIASES.get(args.method)
    if method is None:
        raise UsageError(f"unknown method {args.method!r}")
    if method == "fixture":
        if args.name not in FIXTURE_NAMES:
            raise UsageError(f"--name must be one of {', '.join(FIXTURE_NAMES)}")
        pair = fixture(args.name)
    else:
        if args.seed_graph6 is None or args.vertices is None:
            raise UsageError(f"{args.method} needs --seed-graph6 and --vertices")
        pair = construct(method, parse_graph6(args.seed_graph6), args.vertices)
    facts = _pair_facts(pair.g1, pair.g2)
    manifest = {
        "method": pair.method,
        "witnesses": pair.witnesses,
        "g1": _graph_entry(pair.g1),
        "g2": _graph_entry(pair.g2),
        "claims": {k: facts[k] for k in ("equal_x", "equal_xb", "isomorphic")},
        "fingerprints": facts["fingerprints"],
    }
    text = json.dumps(manifest, indent=1, sort_keys=True) + "\n"
    if args.out:
        with open(args.out + ".json", "w") as fh:
            fh.write(text)
        for tag in ("g1", "g2"):
            with open(f"{args.out}.{tag}.txt", "w") as fh:
                fh.write(manifest[tag]["edgelist"])
        print(args.out + ".json")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _read_pair(path: str) -> tuple:
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
            graphs = [parse_edgelist(data[k]["edgelist"]) for k in ("g1", "g2")]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"{path}: not a pair manifest ({exc})") from None
        return graphs[0], graphs[1], data.get("claims", {})
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(rows) != 2:
        raise UsageError(f"{path}: expected a JSON manifest or two graph6 lines")
    return parse_graph6(rows[0]), parse_graph6(rows[1]), {}


def cmd_verify(args) -> int:
    g1, g2, claims = _read_pair(args.pair)
    facts = _pair_facts(g1, g2)
    for k in ("equal_x", "equal_xb", "isomorphic"):
        v = facts[k]
        print(f"{k}: {'unknown' if v is None else str(v).lower()}")
    expected = claims or {"equal_x": True}
    bad = [k for k, v in expected.items()
           if v is not None and facts.get(k) is not None and facts[k] != v]
    if bad:
        print(f"verification failed: {', '.join(bad)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_generate(args) -> int:
    out = sys.stdout
    for g in all_graphs(args.max_n, args.min_n):
        out.write(write_graph6(g) + "\n")
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="xbtool", description="Tutte and chromatic symmetric functions of graphs")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="compute an invariant of one graph")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6")
    src.add_argument("--edgelist", metavar="FILE")
    c.add_argument("--weights", help="comma-separated vertex weights")
    c.add_argument("--invariant", choices=("x", "xb", "tutte", "w", "b"), default="xb")
    c.add_argument("--eval", help="t,x1,...,xk for x/xb (t is ignored for x); x,y for tutte")
    c.add_argument("--method", choices=XB_METHODS, default="blocks")
    c.add_argument("--r", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--t", type=int)
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("census", help="group graph6 graphs by equal X and XB")
    s.add_argument("--input", nargs="+", required=True, metavar="FILE")
    s.add_argument("--cache", metavar="FILE", help="persistent XB cache (default $XBTOOL_CACHE)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--report", metavar="FILE")
    s.add_argument("--method", choices=XB_METHODS, default="delcon")
    s.add_argument("--no-verify", action="store_true")
    s.set_defaults(func=cmd_census)

    k = sub.add_parser("construct", help="build a pair with equal X")
    k.add_argument("--method", required=True, choices=sorted(METHOD_ALIASES))
    k.add_argument("--seed-graph6")
    k.add_argument("--vertices", type=int, nargs="+")
    k.add_argument("--name", help=f"fixture name: {', '.join(FIXTURE_NAMES)}")
    k.add_argument("--out", metavar="PREFIX", help="write PREFIX.json and edge lists")
    k.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="recheck a pair manifest")
    v.add_argument("--pair", required=True, metavar="FILE")
    v.set_defaults(func=cmd_verify)

    gen = sub.add_parser("generate", help="print all graphs up to n vertices in graph6")
    gen.add_argument("--max-n", type=int, required=True)
    gen.add_argument("--min-n", type=int, default=0)
    gen.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help and usage errors
        return exc.code
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except SoundnessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (UsageError, HypothesisError, FormatError, GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
