"""Command-line surface: generate graphs, run the block constructions,
verify labelings, compute bounds, and search for witness labelings.

Exit codes: 0 success, 1 condition violation / failed verification,
2 parameter or I/O error, 3 search budget exhausted.
"""

import argparse
import sys

from . import bounds, constructions, graphs, labelings
from .errors import (
    ConditionViolationError,
    ConstructionUnsoundError,
    InvalidParameterError,
    NoSuchObjectError,
    NotApplicableError,
    SizeLimitError,
)
from .magic import format_matrix


def _write(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path):
    with open(path) as fh:
        return fh.read()


def _emit_certificate(cert, args):
    text = cert.serialize()
    if getattr(args, "emit_matrix", False):
        mat = labelings.to_matrix(cert.labeling)
        rows = [[0 if x is None else x for x in row] for row in mat.entries]
        text += "".join("# " + ln + "\n"
                        for ln in format_matrix(rows).rstrip("\n").split("\n"))
    _write(text, args.out)


def _cmd_gen(args):
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.a is not None:
        params["a"] = args.a
    if args.b is not None:
        params["b"] = args.b
    g = graphs.generate(args.family, **params)
    _write(graphs.format_graph(g), args.out)
    return 0


def _cmd_label(args):
    lab = labelings.read_labeling(_read(args.input))
    if args.mode == "copies":
        if args.p is None:
            raise InvalidParameterError("label copies needs --p")
        cert = constructions.expand_copies(lab, args.p)
    else:
        if args.n is None:
            raise InvalidParameterError("label fiber needs --n")
        cert = constructions.expand_null_fiber(lab, args.n)
    _emit_certificate(cert, args)
    return 0


def _cmd_compose(args):
    g = labelings.read_labeling(_read(args.outer))
    h = labelings.read_labeling(_read(args.inner))
    cert = constructions.compose_lexi(g, h)
    _emit_certificate(cert, args)
    return 0


def _cmd_join_label(args):
    cert = constructions.label_join_cycle_null(args.m, args.n)
    _emit_certificate(cert, args)
    return 0


def _cmd_verify(args):
    lab = labelings.read_labeling(_read(args.input))
    report = labelings.verify(lab)
    _write(report.serialize(), args.out)
    return 0 if report.is_local_antimagic else 1


def _cmd_bounds(args):
    g = graphs.read_graph(_read(args.outer))
    h = graphs.read_graph(_read(args.inner))
    report = bounds.lexi_lower_bound(g, h)
    _write(report.serialize(), args.out)
    return 0


def _cmd_search(args):
    g = graphs.read_graph(_read(args.input))
    result = bounds.search_local_antimagic(
        g, args.max_colors,
        require_parity_balance=args.require_parity,
        node_limit=args.node_limit, seed=args.seed,
        progress=sys.stderr,
    )
    sys.stderr.write(f"result={result.status}\n")
    if result.status == "found":
        report = labelings.verify(result.labeling)
        _write(labelings.format_labeling(result.labeling, report), args.out)
        return 0
    sys.stdout.write(f"result={result.status}\n")
    return 3 if result.status == "budget" else 0


def _cmd_chila(args):
    g = graphs.read_graph(_read(args.input))
    value = bounds.chi_la_exact(g)
    _write(f"chi_la={value}\n", args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="antimagic",
        description="local antimagic labelings: constructions, verification, search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="output file (default stdout)")

    p = sub.add_parser("gen", help="write a generated graph file")
    p.add_argument("family",
                   choices=["cycle", "null", "complete_bipartite", "prism",
                            "octahedron"])
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("label", help="expand a labeling to copies or null fibers")
    p.add_argument("mode", choices=["copies", "fiber"])
    p.add_argument("input", help="labeling file")
    p.add_argument("--p", type=int, help="copy count (copies mode)")
    p.add_argument("--n", type=int, help="fiber order (fiber mode)")
    p.add_argument("--emit-matrix", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_label)

    p = sub.add_parser("compose", help="label a lexicographic product")
    p.add_argument("outer", help="labeling file of the outer graph")
    p.add_argument("inner", help="labeling file of the inner graph")
    p.add_argument("--emit-matrix", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("join-label",
                       help="3-color the join of an even cycle with a null graph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit-matrix", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_join_label)

    p = sub.add_parser("verify", help="verify a labeling file")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="lower bound for a lexicographic product")
    p.add_argument("outer", help="graph file of the outer factor")
    p.add_argument("inner", help="graph file of the inner factor")
    common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("search", help="search for a local antimagic labeling")
    p.add_argument("input", help="graph file")
    p.add_argument("--max-colors", type=int, required=True)
    p.add_argument("--require-parity", action="store_true")
    p.add_argument("--node-limit", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1,
                   help="accepted for compatibility; search runs single-process")
    common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("chila", help="exact local antimagic chromatic number")
    p.add_argument("input", help="graph file")
    common(p)
    p.set_defaults(func=_cmd_chila)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConditionViolationError, ConstructionUnsoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidParameterError, NoSuchObjectError, NotApplicableError,
            SizeLimitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
