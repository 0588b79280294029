"""Command-line entry point.

JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 ok, 1 usage,
2 domain error, 3 search budget exceeded, 4 a verify suite failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .analysis import min_diag_cover, placement_report
from .board import Placement, covered_count, lines_of
from .constructions import STRATEGIES, construct_best
from .errors import BudgetExceeded, DomainError
from .formulas import BoundTable, m_star, m_star_csv
from .render import FORMATS, SHOW_FLAGS, RenderSpec, render
from .search import DEFAULT_BUDGET, exact_min_covered
from .verify import SUITES, run_suite

log = logging.getLogger("queenarmy")

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_BUDGET, EXIT_VIOLATION = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's copy from clobbering a value given before it
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomised suites (default 0)")
    p.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="search worker processes (default 1)")
    p.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="search node budget")
    p.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="queenarmy", description="Queens that attack as few squares as possible.", parents=[common])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    c = sub.add_parser("construct", parents=[common], help="build a placement of k queens")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--strategy", choices=STRATEGIES, default="auto")

    a = sub.add_parser("analyze", parents=[common], help="line counts and bounds for a placement file")
    a.add_argument("file", help="placement JSON, or - for stdin")
    a.add_argument("--certificate", action="store_true", help="include the lower-bound certificate")
    a.add_argument("--rings", action="store_true", help="include the ring decomposition")

    s = sub.add_parser("search", parents=[common], help="exact minimum covered count")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--all-witnesses", action="store_true")
    s.add_argument("--no-symmetry", action="store_true", help="disable dihedral reduction")

    t = sub.add_parser("tables", parents=[common], help="CSV of bound values")
    t.add_argument("--max-m", type=int, required=True)
    t.add_argument("--kind", choices=("bounds", "mstar"), default="bounds")
    t.add_argument("--source", choices=("maximized", "closed-form"), default="maximized")

    r = sub.add_parser("render", parents=[common], help="draw a placement")
    r.add_argument("file", help="placement JSON, or - for stdin")
    r.add_argument("--format", choices=FORMATS, default="ascii")
    r.add_argument("--show", nargs="+", choices=SHOW_FLAGS, default=["queens", "covered"])
    r.add_argument("--cell-size", type=int, default=24)
    r.add_argument("--output", "-o", help="write here instead of stdout")

    v = sub.add_parser("verify", parents=[common], help="run a property suite")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    return parser


def _read_placement(path: str) -> Placement:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: not valid JSON ({exc})") from None
    return Placement.from_json(obj)


def _line_counts(p: Placement) -> dict:
    ls = lines_of(p)
    return {"rows": len(ls.rows), "cols": len(ls.cols), "pos_diags": len(ls.pos_diags), "neg_diags": len(ls.neg_diags)}


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_construct(args) -> int:
    p = construct_best(args.k, args.n, args.strategy)
    covered = covered_count(p)
    out = p.to_json()
    out["stats"] = {
        "k": p.k,
        "covered": covered,
        "attacked": covered - p.k,
        "A": len(lines_of(p).cols),
        "B": len(lines_of(p).rows),
        "C": min_diag_cover(p)[0],
        "m_star": m_star(args.k),
        "strategy": args.strategy,
        "lines": _line_counts(p),
    }
    _emit(out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    p = _read_placement(args.file)
    out = placement_report(p, certificate=args.certificate, rings=args.rings)
    out["lines"] = _line_counts(p)
    _emit(out)
    return EXIT_OK


def cmd_search(args) -> int:
    res = exact_min_covered(
        args.k,
        args.n,
        threads=args.threads,
        budget=args.budget,
        symmetry=not args.no_symmetry,
        all_witnesses=args.all_witnesses,
    )
    log.info("explored %d nodes in %.3fs", res.nodes_explored, res.wall_time)
    _emit(res.to_json())
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.kind == "mstar":
        if args.max_m < 1:
            raise DomainError("--max-m must be >= 1")
        sys.stdout.write(m_star_csv(args.max_m))
    else:
        if args.max_m < 2:
            raise DomainError("the bound table starts at m = 2")
        sys.stdout.write(BoundTable.build(args.max_m, args.source).to_csv())
    return EXIT_OK


def cmd_render(args) -> int:
    p = _read_placement(args.file)
    text = render(p, RenderSpec(args.format, frozenset(args.show), args.cell_size))
    if args.output:
        Path(args.output).write_text(text)
        log.info("wrote %s", args.output)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, seed=args.seed)
    for chk in checks:
        print(chk.line(), file=sys.stderr)
    ok = all(chk.passed for chk in checks)
    _emit(
        {
            "suite": args.suite,
            "seed": args.seed,
            "passed": ok,
            "checks": [{"suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
        }
    )
    return EXIT_OK if ok else EXIT_VIOLATION


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "search": cmd_search,
    "tables": cmd_tables,
    "render": cmd_render,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    for name, default in (("seed", 0), ("threads", 1), ("budget", DEFAULT_BUDGET), ("verbose", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
