"""Command line interface.

Subcommands: rho, bounds, classify, enumerate, verify (thm11-odd, thm11-even,
thm12, lemmas), certify-colsums.  Exit codes: 0 verified, 2 verified but with
numerical ties, 1 violation found, 64 usage error.

Graph arguments accept, in order of precedence: a path to an existing file
(.g6/.graph6 for graph6, .edges/.txt for the edge-list format), a family spec
such as W7 or K2,6, or a literal graph6 line.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import connectivity, families, verify
from .canonical import CapabilityError
from .enumeration import ClassFilter, enumerate_class, ingest_class
from .graph import Graph, parse_edge_list
from .graph6 import Graph6Error, parse_graph6, parse_graph6_lines, write_graph6
from .spectral import (
    DEFAULT_MAX_ITERS,
    DEFAULT_TOL,
    ConvergenceError,
    bound_lower_delta,
    bound_upper_degree,
    bound_upper_edge,
    column_sum_certificate,
    spectral_radius,
)
from .verify import UsageError

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(USAGE_EXIT)


def load_graph(token: str) -> Graph:
    if os.path.exists(token):
        with open(token, "r", encoding="ascii") as fh:
            text = fh.read()
        if token.endswith((".g6", ".graph6")):
            graphs = parse_graph6_lines(text)
            if len(graphs) != 1:
                raise UsageError(f"{token} holds {len(graphs)} graphs, expected one")
            return graphs[0]
        if token.endswith((".edges", ".txt")):
            return parse_edge_list(text)
        raise UsageError(f"unrecognized graph file extension on {token!r}")
    try:
        return families.parse_family_spec(token)
    except ValueError:
        pass
    try:
        return parse_graph6(token)
    except Graph6Error as exc:
        raise UsageError(
            f"{token!r} is neither a file, a family spec, nor graph6 ({exc})"
        )


def _parse_alphas(text: str) -> list[float]:
    try:
        alphas = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"bad alpha list {text!r}")
    if not alphas:
        raise UsageError("alpha list is empty")
    for a in alphas:
        if not 0.0 <= a <= 1.0:
            raise UsageError(f"alpha {a} outside [0, 1]")
    return alphas


def _read_class_file(path: str) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph6_lines(fh.read())


def _write_reports(reports, out: str | None) -> None:
    if out is None:
        sys.stdout.write(verify.reports_to_json(reports))
        return
    if out.endswith(".csv"):
        payload = verify.reports_to_csv(reports)
    elif out.endswith(".json"):
        payload = verify.reports_to_json(reports)
    else:
        raise UsageError(f"report path must end in .json or .csv, got {out!r}")
    with open(out, "w", encoding="ascii") as fh:
        fh.write(payload)


def _cmd_rho(args) -> int:
    g = load_graph(args.graph)
    for alpha in _parse_alphas(args.alphas):
        res = spectral_radius(g, alpha, tol=args.tol, max_iters=args.max_iters)
        print(f"alpha={alpha!r} rho={res.radius:.12g} "
              f"residual={res.residual:.3e} iterations={res.iterations}")
        if g.min_degree() >= 1:
            print(f"  upper(degree)={bound_upper_degree(g, alpha):.12g} "
                  f"upper(edge)={bound_upper_edge(g, alpha):.12g} "
                  f"lower(delta)={bound_lower_delta(g, alpha):.12g}")
        else:
            print(f"  lower(delta)={bound_lower_delta(g, alpha):.12g} "
                  "(upper bounds need minimum degree >= 1)")
    return 0


def _cmd_bounds(args) -> int:
    g = load_graph(args.graph)
    print(f"n={g.n} m={g.m} delta={g.min_degree()} Delta={g.max_degree()}")
    for alpha in _parse_alphas(args.alphas):
        if g.min_degree() >= 1:
            print(f"alpha={alpha!r} upper(degree)={bound_upper_degree(g, alpha):.12g} "
                  f"upper(edge)={bound_upper_edge(g, alpha):.12g} "
                  f"lower(delta)={bound_lower_delta(g, alpha):.12g}")
        else:
            print(f"alpha={alpha!r} lower(delta)={bound_lower_delta(g, alpha):.12g} "
                  "(upper bounds need minimum degree >= 1)")
    return 0


def _cmd_classify(args) -> int:
    g = load_graph(args.graph)
    info = connectivity.classify(g, args.k)
    for name in (
        "n", "m", "k", "vertex_connectivity", "edge_connectivity",
        "is_k_connected", "is_k_edge_connected",
        "is_minimally_k_connected", "is_minimally_k_edge_connected",
    ):
        print(f"{name}: {getattr(info, name)}")
    return 0


def _cmd_enumerate(args) -> int:
    flt = ClassFilter.parse(args.cls)
    if args.infile:
        members = ingest_class(_read_class_file(args.infile), args.n, flt)
    else:
        members = enumerate_class(args.n, flt)
    lines = "".join(write_graph6(g) + "\n" for g in members)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)
    print(f"{flt.describe()} n={args.n}: {len(members)} graphs", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    kw = dict(tol=args.tol, max_iters=args.max_iters, jobs=args.jobs)
    if args.target == "lemmas":
        checks = verify.verify_lemma_suite(args.n if args.n else 7)
        for c in checks:
            status = "ok" if not c.violations else f"VIOLATED by {', '.join(c.violations)}"
            print(f"{c.name} [{c.class_name} n={c.n} size={c.class_size}]: {status}")
        return verify.lemma_suite_exit_code(checks)
    if args.n is None:
        raise UsageError("--n is required for theorem checks")
    alphas = _parse_alphas(args.alphas)
    source = _read_class_file(args.infile) if args.infile else None
    runner = {
        "thm11-odd": verify.verify_thm11_odd,
        "thm11-even": verify.verify_thm11_even,
        "thm12": verify.verify_thm12,
    }[args.target]
    reports = runner(args.n, alphas, source_graphs=source, **kw)
    _write_reports(reports, args.out)
    for r in reports:
        verdict = "VIOLATION" if r.violation else (
            f"tie x{r.ties_within_tolerance}" if r.ties_within_tolerance else "ok"
        )
        print(
            f"{r.class_name} n={r.n} alpha={r.alpha!r}: size={r.class_size} "
            f"max={r.max_value:.9g} argmax={r.argmax_canonical} {verdict}",
            file=sys.stderr,
        )
    return verify.exit_code(reports)


def _cmd_certify_colsums(args) -> int:
    alphas = _parse_alphas(args.alphas)
    if args.graph:
        graphs = [load_graph(args.graph)]
    elif args.cls and args.n:
        flt = ClassFilter.parse(args.cls)
        if args.infile:
            graphs = ingest_class(_read_class_file(args.infile), args.n, flt)
        else:
            graphs = enumerate_class(args.n, flt)
        if args.max_degree is not None:
            graphs = [g for g in graphs if g.max_degree() <= args.max_degree]
    else:
        raise UsageError("give a GRAPH argument or both --class and --n")
    all_negative = True
    for g in graphs:
        for alpha in alphas:
            sums = column_sum_certificate(g, alpha, args.n_param)
            worst = max(sums)
            if worst >= 0:
                all_negative = False
            if args.graph:
                joined = " ".join(f"{s:.9g}" for s in sums)
                print(f"alpha={alpha!r} colsums: {joined}")
    if not args.graph:
        print(
            f"checked {len(graphs)} graphs x {len(alphas)} alphas: "
            + ("all column sums negative" if all_negative else "nonnegative column sum found")
        )
    return 0 if all_negative else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="alphax", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common_spectral(p):
        p.add_argument("--alphas", default="0.5,0.75",
                       help="comma-separated alpha values (default 0.5,0.75)")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)

    p_rho = sub.add_parser("rho", help="alpha-index with residual and bounds")
    p_rho.add_argument("graph")
    add_common_spectral(p_rho)
    p_rho.set_defaults(func=_cmd_rho)

    p_bounds = sub.add_parser("bounds", help="closed-form bounds only")
    p_bounds.add_argument("graph")
    add_common_spectral(p_bounds)
    p_bounds.set_defaults(func=_cmd_bounds)

    p_cls = sub.add_parser("classify", help="connectivity class membership")
    p_cls.add_argument("graph")
    p_cls.add_argument("--k", type=int, default=2)
    p_cls.set_defaults(func=_cmd_classify)

    p_enum = sub.add_parser("enumerate", help="isomorph-free class enumeration")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--class", dest="cls", required=True,
                        help="all-connected, min-K-edge-connected, or min-K-connected")
    p_enum.add_argument("--in", dest="infile",
                        help="graph6 file to filter instead of built-in generation")
    p_enum.add_argument("--out", help="output graph6 path (default stdout)")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_ver = sub.add_parser("verify", help="run an extremal or structural check")
    p_ver.add_argument("target",
                       choices=["thm11-odd", "thm11-even", "thm12", "lemmas"])
    p_ver.add_argument("--n", type=int)
    add_common_spectral(p_ver)
    p_ver.add_argument("--in", dest="infile", help="graph6 class file to ingest")
    p_ver.add_argument("--out", help="report path (.json or .csv)")
    p_ver.add_argument("--jobs", type=int, default=None,
                       help="worker processes (default ALPHAX_JOBS or 1)")
    p_ver.set_defaults(func=_cmd_verify)

    p_cert = sub.add_parser("certify-colsums",
                            help="column sums of the quadratic certificate matrix")
    p_cert.add_argument("graph", nargs="?")
    p_cert.add_argument("--class", dest="cls")
    p_cert.add_argument("--n", type=int)
    p_cert.add_argument("--in", dest="infile", help="graph6 class file to ingest")
    p_cert.add_argument("--alphas", default="0.5,0.75")
    p_cert.add_argument("--n-param", type=int, default=None,
                        help="override the n used in the certificate formula")
    p_cert.add_argument("--max-degree", type=int, default=None,
                        help="only check graphs with max degree at most this")
    p_cert.set_defaults(func=_cmd_certify_colsums)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, Graph6Error, CapabilityError) as exc:
        print(f"alphax: error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ValueError as exc:
        print(f"alphax: error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ConvergenceError as exc:
        print(f"alphax: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
