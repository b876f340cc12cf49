"""Command-line front end: ``qgraph <subcommand>``.

Exit codes: 0 success, 2 parse error, 3 axiom failure, 4 hypotheses not met.
Reports go to stdout, structured errors to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import corpus
from .analysis import analyze, format_text, hom_report
from .errors import HypothesesNotMet, QGraphError
from .qalg import Tolerance, default_tolerance, make_quantum_set, tracial_form
from .qgraph import random_graph
from .serialization import (
    ParseError,
    dumps,
    graph_from_document,
    graph_to_document,
    hom_from_document,
    hom_to_document,
    load_json,
)

EXIT_OK, EXIT_PARSE, EXIT_AXIOM, EXIT_HYPOTHESES = 0, 2, 3, 4


def _tolerance(args) -> Tolerance:
    base = default_tolerance()
    return Tolerance(eq_tol=args.tol_eq if args.tol_eq is not None else base.eq_tol,
                     eig_tol=args.tol_eig if args.tol_eig is not None else base.eig_tol)


def _load_graph(path, tol):
    return graph_from_document(load_json(path), tol)


def cmd_validate(args) -> int:
    G = _load_graph(args.path, _tolerance(args))
    print(json.dumps({"valid": True, "name": G.name, "dim": G.dim}))
    return EXIT_OK


def cmd_analyze(args) -> int:
    rep = analyze(_load_graph(args.path, _tolerance(args)))
    print(format_text(rep) if args.text else dumps(rep))
    return EXIT_OK


def cmd_check_hom(args) -> int:
    tol = _tolerance(args)
    G0, G1 = _load_graph(args.src, tol), _load_graph(args.dst, tol)
    f = hom_from_document(load_json(args.hom), G1.qset, G0.qset, tol)
    print(dumps(hom_report(f, G0, G1)))
    return EXIT_OK


def cmd_color2(args) -> int:
    from .homs import two_colorable

    G = _load_graph(args.path, _tolerance(args))
    rep = two_colorable(G, "loc")
    out = {"colorable": rep.colorable, "symmetric_spectrum": rep.symmetric_spectrum,
           "five_way": rep.five_way, "five_way_agree": rep.five_way_agree}
    if rep.coloring is not None:
        out["coloring"] = hom_to_document(rep.coloring)
    print(dumps(out))
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.list:
        print("\n".join(corpus.names()))
        return EXIT_OK
    if args.name:
        try:
            G = corpus.get(args.name)
        except KeyError as exc:
            raise ParseError(str(exc)) from None
        print(dumps(graph_to_document(G, provenance="curated")))
    else:
        print(dumps([graph_to_document(G, provenance="curated") for G in corpus.all_graphs()]))
    return EXIT_OK


def _parse_blocks(text: str) -> list[int]:
    try:
        blocks = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"--qset expects comma-separated block sizes, got {text!r}") from None
    if not blocks:
        raise ParseError("--qset needs at least one block")
    return blocks


def cmd_random(args) -> int:
    blocks = _parse_blocks(args.qset)
    if args.density:
        try:
            q = make_quantum_set(blocks, json.loads(args.density))
        except json.JSONDecodeError as exc:
            raise ParseError(f"--density is not valid JSON: {exc}") from None
    else:
        q = tracial_form(blocks)
    rng = np.random.default_rng(args.seed)
    G = random_graph(q, rng, undirected=args.undirected, name=f"random(seed={args.seed})")
    print(dumps(graph_to_document(G, provenance=f"random seed={args.seed} undirected={args.undirected}")))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-eq", type=float, default=None, help="relative tolerance for operator equality")
    common.add_argument("--tol-eig", type=float, default=None, help="absolute eigenvalue clustering tolerance")
    p = argparse.ArgumentParser(prog="qgraph", description="Analyse finite quantum graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check a graph document against the axioms")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", parents=[common], help="full analysis report")
    s.add_argument("path")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", default=True)
    g.add_argument("--text", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("check-hom", parents=[common], help="verify a homomorphism certificate src -> dst")
    s.add_argument("src")
    s.add_argument("dst")
    s.add_argument("hom")
    s.set_defaults(func=cmd_check_hom)

    s = sub.add_parser("color2", parents=[common], help="2-coloring witness or verdict")
    s.add_argument("path")
    s.set_defaults(func=cmd_color2)

    s = sub.add_parser("examples", parents=[common], help="print curated example documents")
    s.add_argument("name", nargs="?")
    s.add_argument("--list", action="store_true", help="list example names only")
    s.set_defaults(func=cmd_examples)

    s = sub.add_parser("random", parents=[common], help="random real quantum graph document")
    s.add_argument("--qset", required=True, help="comma-separated block sizes, e.g. 1,2")
    s.add_argument("--density", help="JSON list of per-block density vectors (default: tracial)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--undirected", action="store_true")
    s.set_defaults(func=cmd_random)
    return p


def _error(kind: str, exc: Exception, code: int, **extra) -> int:
    payload = {"error": kind, "type": type(exc).__name__, "message": str(exc), **extra}
    print(json.dumps(payload), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        return _error("parse", exc, EXIT_PARSE)
    except HypothesesNotMet as exc:
        return _error("hypotheses", exc, EXIT_HYPOTHESES, failed=exc.failed)
    except QGraphError as exc:
        return _error("axiom", exc, EXIT_AXIOM)


if __name__ == "__main__":
    sys.exit(main())
