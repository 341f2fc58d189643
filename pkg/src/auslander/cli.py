"""Command-line interface: ``auslander <subcommand> ...``.

JSON goes to stdout (DOT or CSV where requested), diagnostics to stderr.
Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Sequence

from . import repcore
from .actions import (
    build_cayley_graph, check_action_consistency, reduction_path, right_mutate,
    strip_spherical, twist_diagram,
)
from .classify import classify_homological, classify_module, counts, enumerate_thin
from .errors import AuslanderError
from .homcalc import ext_dims, ext_dims_oracle
from .repcore import QuiverAlgebra, Representation, ThinModule
from .verify import run_suite
from .worms import (
    diagram_from_permutation, diagram_to_json, enumerate_diagrams, f_count,
    format_permutation, lambda_perm, parse_permutation, sigma,
)


class UsageError(Exception):
    pass


_NAMED = re.compile(r"^(S|P|I|Delta|Nabla)\((\d+)\)$")
_BUILDERS = {"S": repcore.simple, "P": repcore.projective, "I": repcore.injective,
             "Delta": repcore.delta, "Nabla": repcore.nabla}


def parse_module(text: str, t: int) -> Representation:
    """A worm string (``1:AB``, ``1-2:B``) or a named module (``S(2)``, ``Delta(3)``)."""
    alg = QuiverAlgebra(t)
    m = _NAMED.match(text.strip())
    try:
        if m:
            return _BUILDERS[m.group(1)](alg, int(m.group(2)))
        return ThinModule.parse(text, t).to_rep(alg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _thin(text: str, t: int) -> ThinModule:
    try:
        return ThinModule.parse(text, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _perm(text: str, t: int):
    try:
        return parse_permutation(text, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("t must be at least 1")
    return n


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


# -- handlers -----------------------------------------------------------------

def cmd_classify(args) -> int:
    t = args.t
    mods = enumerate_thin(t)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["module", "start", "end", "word", "class"])
        for m in mods:
            cls = classify_homological(m.to_rep()) if args.homological else classify_module(m)
            w.writerow([str(m), m.start, m.end, m.word, cls.value if cls else "none"])
        sys.stdout.write(buf.getvalue())
        return 0
    out = counts(t, homological=args.homological).as_dict()
    if args.list:
        out["modules"] = [{"module": str(m), "class": classify_module(m).value} for m in mods]
    _emit(out)
    return 0


def cmd_enumerate(args) -> int:
    t = args.t
    if args.what == "thin":
        _emit([str(m) for m in enumerate_thin(t)])
    else:
        _emit([diagram_to_json(d) for d in enumerate_diagrams(t)])
    return 0


def cmd_ext(args) -> int:
    m = parse_module(args.source, args.t)
    n = parse_module(args.target, args.t)
    out = ext_dims(m, n)._asdict()
    if args.oracle:
        out["oracle"] = ext_dims_oracle(m, n)._asdict()
    _emit(out)
    return 0


def _diagram_action(args, act, kind) -> int:
    d = diagram_from_permutation(_perm(args.perm, args.t))
    if not 1 <= args.i <= args.t - 1:
        raise UsageError(f"--i must lie in 1..{args.t - 1}")
    e = act(d, args.i)
    out = {"gen": args.i, "kind": kind, "from": diagram_to_json(d), "to": diagram_to_json(e),
           "f": [f_count(d), f_count(e)]}
    if args.check:
        out["consistent"] = check_action_consistency(d, args.i, kind)
    _emit(out)
    return 0


def cmd_mutate(args) -> int:
    return _diagram_action(args, right_mutate, "mutation")


def cmd_twist(args) -> int:
    return _diagram_action(args, twist_diagram, "twist")


def cmd_reduce(args) -> int:
    d = diagram_from_permutation(_perm(args.perm, args.t))
    gens, path = reduction_path(d, args.kind)
    _emit({"kind": args.kind, "f": f_count(d), "gens": gens,
           "path": [format_permutation(sigma(x)) for x in path],
           "lambda_path": [format_permutation(lambda_perm(x)) for x in path]})
    return 0


def cmd_graph(args) -> int:
    g = build_cayley_graph(args.t, args.kind)
    if args.format == "dot":
        sys.stdout.write(g.to_dot(args.label))
    else:
        _emit(g.to_json(args.label))
    return 0


def cmd_strip(args) -> int:
    m = _thin(args.module, args.t)
    if m.end == m.t:
        raise UsageError(f"{m} has rank 1 and is not spherical")
    word, end = strip_spherical(m)
    _emit({"module": str(m), "word": list(word.gens), "word_text": str(word),
           "end": str(end.thin), "shift": end.shift})
    return 0


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.t_max)
    _emit([r.to_json() for r in reports])
    return 0 if all(r.passed for r in reports) else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="auslander",
                                description="Modules, worm diagrams and braid actions for the Auslander algebra of k[x]/(x^t).")
    sub = p.add_subparsers(dest="command", required=True)

    def with_t(sp):
        sp.add_argument("--t", type=_positive, required=True, help="number of vertices")
        return sp

    sp = with_t(sub.add_parser("classify", help="count and classify thin indecomposables"))
    sp.add_argument("--homological", action="store_true", help="classify from Ext triples")
    sp.add_argument("--list", action="store_true", help="include the module table in the JSON")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_classify)

    sp = with_t(sub.add_parser("enumerate", help="list worm diagrams or thin modules"))
    sp.add_argument("--what", choices=["diagrams", "thin"], default="diagrams")
    sp.set_defaults(func=cmd_enumerate)

    sp = with_t(sub.add_parser("ext", help="hom, ext1, ext2 between two modules"))
    sp.add_argument("--from", dest="source", required=True, help="worm string or S(i), P(i), I(i), Delta(i), Nabla(i)")
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("--oracle", action="store_true", help="also run the syzygy oracle")
    sp.set_defaults(func=cmd_ext)

    for name, func, what in [("mutate", cmd_mutate, "right mutation R_i"), ("twist", cmd_twist, "spherical twist T_i")]:
        sp = with_t(sub.add_parser(name, help=f"apply the {what} to a diagram"))
        sp.add_argument("--perm", required=True, help="start permutation, e.g. 213 or 2,1,3")
        sp.add_argument("--i", type=int, required=True, help="generator index")
        sp.add_argument("--check", action="store_true", help="compare with the module-level action")
        sp.set_defaults(func=func)

    sp = with_t(sub.add_parser("reduce", help="reduction path to the Delta diagram"))
    sp.add_argument("--perm", required=True)
    sp.add_argument("--kind", choices=["mutation", "twist"], default="mutation")
    sp.set_defaults(func=cmd_reduce)

    sp = with_t(sub.add_parser("graph", help="Cayley graph of an action"))
    sp.add_argument("--kind", choices=["mutation", "twist"], required=True)
    sp.add_argument("--format", choices=["dot", "json"], default="json")
    sp.add_argument("--label", choices=["sigma", "lambda"], default="sigma")
    sp.set_defaults(func=cmd_graph)

    sp = with_t(sub.add_parser("strip", help="twist word taking a spherical module to S(1)"))
    sp.add_argument("--module", required=True, help="rank-0 worm string such as 1-2:B")
    sp.set_defaults(func=cmd_strip)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", choices=["counts", "sequences", "actions", "oracle", "reductions",
                                        "spherical", "all"], default="all")
    sp.add_argument("--t-max", type=_positive, default=None,
                    help="override the default bounds (larger values print a warning)")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"auslander: error: {exc}", file=sys.stderr)
        return 2
    except (AuslanderError, ValueError) as exc:
        print(f"auslander: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
