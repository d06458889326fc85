"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
bound.  Errors go to stderr as one JSON object ``{"error": kind, "detail": text}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import config
from .config import BoundExceeded, Limits, TermLimitExceeded
from .determinant import METHODS, det_division_free, det_leibniz
from .digraph import ColoredDigraph, GraphError, enumerate_colored_paths, graph_random, graph_to_json, graph_validate
from .lsd import LinearSubdigraph, classify, det_via_lsd, involution_step, lsd_signed_weight, verify_cancellation
from .pathgf import best_word_sum, path_generating_function
from .pathmatrix import build_colored_matrix, build_stanley_matrix
from .polyring import PolyParseError, Polynomial, poly_format, poly_parse, poly_to_json

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, kind: str, detail: str, code: int) -> None:
        super().__init__(detail)
        self.kind = kind
        self.detail = detail
        self.code = code


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError("io", str(exc), EXIT_INPUT) from exc


def load_graph(path: str) -> ColoredDigraph:
    text = _read_text(path)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError("parse", f"{path}: {exc}", EXIT_INPUT) from exc
    try:
        return graph_validate(raw)
    except GraphError as exc:
        raise CliError("validation", f"{path}: {exc}", EXIT_INPUT) from exc


def _limits(args: argparse.Namespace) -> Limits:
    return Limits(args.oracle_bound, args.lsd_bound, args.term_limit)


def _print_poly(p: Polynomial, fmt: str) -> None:
    print(json.dumps(poly_to_json(p)) if fmt == "json" else poly_format(p))


# -- subcommands -----------------------------------------------------------


def cmd_matrix(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    if args.stanley:
        if g.k != 1:
            raise CliError("validation", f"--stanley needs a single-color graph, got k = {g.k}", EXIT_INPUT)
        m = build_stanley_matrix(g)
    else:
        m = build_colored_matrix(g)
    print(json.dumps(m.to_json()) if args.format == "json" else m.to_text())
    return EXIT_OK


def compute_det(g: ColoredDigraph, algorithm: str, limits: Limits, method: str = "minors") -> Polynomial:
    m = build_colored_matrix(g)
    if algorithm == "leibniz":
        return det_leibniz(m, bound=limits.oracle_bound)
    if algorithm == "lsd":
        return det_via_lsd(m, bound=limits.lsd_bound)
    return det_division_free(m, term_limit=limits.term_limit, method=method)


def cmd_det(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    _print_poly(compute_det(g, args.algorithm, _limits(args), args.method), args.format)
    return EXIT_OK


def cmd_paths(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    if args.list:
        for p in enumerate_colored_paths(g):
            print(p)
    else:
        _print_poly(path_generating_function(g), args.format)
    return EXIT_OK


@dataclass
class GraphCheck:
    label: str
    graph: ColoredDigraph
    terms: int = 0
    complex_pairs: int = 0
    problems: list[str] | None = None

    @property
    def ok(self) -> bool:
        return not self.problems


def check_graph(label: str, g: ColoredDigraph, limits: Limits, expect: Polynomial | None = None) -> GraphCheck:
    """Every determinant route, both path models, and the cancellation audit."""
    for bound, what in ((limits.oracle_bound, "det_leibniz"), (limits.lsd_bound, "det_via_lsd")):
        if g.n > bound:
            raise BoundExceeded(what, g.n, bound)
    m = build_colored_matrix(g)
    values = {
        "division-free": det_division_free(m, term_limit=limits.term_limit),
        "leibniz": det_leibniz(m, bound=limits.oracle_bound),
        "lsd": det_via_lsd(m, bound=limits.lsd_bound),
        "path-gf": path_generating_function(g),
        "best-words": best_word_sum(g),
    }
    ref = values["division-free"]
    problems = [f"{name} differs from division-free: {_diff(ref, v)}" for name, v in values.items() if v != ref]
    if expect is not None and expect != ref:
        problems.append(f"determinant differs from expected: {_diff(expect, ref)}")
    audit = verify_cancellation(m, bound=limits.lsd_bound)
    problems += audit.failures
    return GraphCheck(label, g, len(ref), len(audit.pairs()), problems)


def _diff(expected: Polynomial, got: Polynomial) -> str:
    delta = got - expected
    if not delta:
        return "no difference"
    extra = Polynomial.from_terms((mono, c) for mono, c in delta.terms() if c > 0)
    missing = Polynomial.from_terms((mono, -c) for mono, c in delta.terms() if c < 0)
    return f"got - expected = {poly_format(delta)} (surplus: {poly_format(extra)}; deficit: {poly_format(missing)})"


def cmd_verify(args: argparse.Namespace) -> int:
    limits = _limits(args)
    graphs: list[tuple[str, ColoredDigraph]] = []
    if args.input:
        graphs.append((args.input, load_graph(args.input)))
    if args.random:
        n, k, density = int(args.random[0]), int(args.random[1]), float(args.random[2])
        if k < 1 or not 0 <= density <= 1 or n < 0:
            raise CliError("validation", "--random needs n >= 0, k >= 1, 0 <= density <= 1", EXIT_INPUT)
        for i in range(args.count):
            seed = args.seed + i
            graphs.append((f"random(n={n},k={k},p={density},seed={seed})", graph_random(n, k, density, seed)))
    if not graphs:
        raise CliError("usage", "give an input graph or --random N K DENSITY", EXIT_INPUT)
    expect = None
    if args.expect:
        try:
            expect = poly_parse(_read_text(args.expect))
        except PolyParseError as exc:
            raise CliError("parse", f"{args.expect}: {exc}", EXIT_INPUT) from exc

    print(f"{'graph':<40} {'n':>3} {'k':>2} {'edges':>5} {'terms':>6} {'pairs':>6}  result")
    first_bad: GraphCheck | None = None
    passed = 0
    for label, g in graphs:
        res = check_graph(label, g, limits, expect)
        print(
            f"{label:<40} {g.n:>3} {g.k:>2} {g.num_colored_edges():>5} {res.terms:>6} "
            f"{res.complex_pairs:>6}  {'pass' if res.ok else 'FAIL'}"
        )
        passed += res.ok
        if not res.ok and first_bad is None:
            first_bad = res
    print(f"{passed}/{len(graphs)} graphs pass")
    if first_bad is not None:
        for p in first_bad.problems or []:
            print(f"  {p}")
        print("counterexample: " + json.dumps(graph_to_json(first_bad.graph)))
        _emit_error("verification", f"{first_bad.label}: {(first_bad.problems or [''])[0]}")
        return EXIT_FAIL
    return EXIT_OK


def cmd_involution(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    m = build_colored_matrix(g)
    if args.subdigraph:
        try:
            gamma = LinearSubdigraph.parse(args.subdigraph, n=g.n)
        except ValueError as exc:
            raise CliError("parse", f"--subdigraph: {exc}", EXIT_INPUT) from exc
        if gamma.n != g.n:
            raise CliError("validation", f"--subdigraph covers {gamma.n} vertices, graph has {g.n}", EXIT_INPUT)
        if not classify(gamma).is_complex:
            print(f"{gamma} is not complex")
            return EXIT_OK
        step = involution_step(gamma)
        back = involution_step(step.image)
        print(step.describe())
        print(back.describe())
        problems = []
        if back.image != gamma:
            problems.append(f"f(f(gamma)) = {back.image}, expected {gamma}")
        s1, w1 = lsd_signed_weight(gamma, m)
        s2, w2 = lsd_signed_weight(step.image, m)
        if w1 != w2:
            problems.append(f"weights differ: {poly_format(w1)} vs {poly_format(w2)}")
        if s1 != -s2:
            problems.append("signs do not differ")
        return _report_problems(problems)

    rep = verify_cancellation(m, bound=args.lsd_bound)
    if not rep.steps and not rep.failures:
        print("no complex linear subdigraphs")
        return EXIT_OK
    print(f"{'subdigraph':<28} {'acting cycle':<18} {'point':>5} {'case':<6} partner")
    for s in rep.steps:
        print(f"{str(s.source):<28} {str(s.acting_cycle):<18} {s.point:>5} {s.case:<6} {s.image}")
    print(f"{rep.complex_count} complex linear subdigraphs in {len(rep.pairs())} pairs (of {rep.total})")
    print(f"complex signed-weight sum: {poly_format(rep.complex_sum)}")
    return _report_problems(rep.failures)


def _report_problems(problems: list[str]) -> int:
    if problems:
        for p in problems:
            print(f"  {p}")
        _emit_error("verification", problems[0])
        return EXIT_FAIL
    print("pairing verified")
    return EXIT_OK


def cmd_random(args: argparse.Namespace) -> int:
    if args.k < 1 or not 0 <= args.density <= 1 or args.n < 0:
        raise CliError("validation", "need n >= 0, k >= 1, 0 <= density <= 1", EXIT_INPUT)
    print(json.dumps(graph_to_json(graph_random(args.n, args.k, args.density, args.seed))))
    return EXIT_OK


# -- plumbing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathdet", description="Path-counting determinants of colored DAGs.")
    parser.add_argument("--oracle-bound", type=int, default=config.ORACLE_BOUND, help="largest n for det_leibniz")
    parser.add_argument("--lsd-bound", type=int, default=config.LSD_BOUND, help="largest n for subdigraph enumeration")
    parser.add_argument("--term-limit", type=int, default=config.TERM_LIMIT, help="intermediate term ceiling")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="print the path matrix of a graph")
    p.add_argument("input", help="graph JSON file, or - for stdin")
    p.add_argument("--stanley", action="store_true", help="single-color matrix (k must be 1)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("det", help="determinant of the path matrix")
    p.add_argument("input")
    p.add_argument("--algorithm", choices=("leibniz", "division-free", "lsd"), default="division-free")
    p.add_argument("--method", choices=METHODS, default="minors", help="division-free variant")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("paths", help="list colored paths or print their generating function")
    p.add_argument("input")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--gf", action="store_true")
    mode.add_argument("--list", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("verify", help="check det == path GF == best-word sum and the cancellation audit")
    p.add_argument("input", nargs="?")
    p.add_argument("--random", nargs=3, metavar=("N", "K", "DENSITY"))
    p.add_argument("--seed", type=int, default=0, help="seed of the first random graph")
    p.add_argument("--count", type=int, default=1, help="number of random graphs (seeds seed..seed+count-1)")
    p.add_argument("--expect", help="file with the expected determinant in polynomial text form")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("involution", help="show the sign-reversing pairing of complex subdigraphs")
    p.add_argument("input")
    p.add_argument("--subdigraph", help='check one subdigraph only, e.g. "(1 7 6 9 10 3 2)(4 5)(8 11)"')
    p.set_defaults(func=cmd_involution)

    p = sub.add_parser("random", help="print a random graph as JSON")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("density", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)
    return parser


def _emit_error(kind: str, detail: str) -> None:
    print(json.dumps({"error": kind, "detail": detail}), file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_INPUT
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except CliError as exc:
        _emit_error(exc.kind, exc.detail)
        return exc.code
    except (BoundExceeded, TermLimitExceeded) as exc:
        _emit_error("bound", str(exc))
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
