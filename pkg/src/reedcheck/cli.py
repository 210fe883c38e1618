"""Command-line front end.

Subcommands: check, enumerate, search, sample, color, patterns.
Exit status: 0 success, 1 usage error, 2 a bound violation was found,
3 solver node budget exhausted.  JSON output is emitted one object per
line; plain output is human-oriented and not stability-guaranteed.
REEDCHECK_BUDGET overrides the solver node budget, REEDCHECK_JIT=0
disables the JIT kernels.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import IO, Optional

from .enumeration import counterexample_search, enumerate_graphs, sample_gnp
from .graph import Graph, Graph6Error, GraphError, from_graph6, max_degree, to_graph6
from .invariants import BudgetExhaustedError, chromatic_number, clique_number
from .kempe import reed_color
from .patterns import ClassSpec, catalog, class_by_name
from .reed import check_reed, reed_bound

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_BUDGET = 3

COMMANDS = ("check", "enumerate", "search", "sample", "color", "patterns")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    graphs: list[str] | None = None     # inline graph6 inputs
    input_path: Optional[str] = None    # file of graph6 lines, '-' = stdin
    class_spec: Optional[ClassSpec] = None
    n: Optional[int] = None
    n_max: Optional[int] = None
    p: Optional[float] = None
    seed: Optional[int] = None
    count: int = 1
    out: Optional[str] = None
    plain: bool = False
    json_mode: bool = False
    exact: bool = False

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1, not argparse's default 2
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="reedcheck", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="Reed-bound report per input graph")
    p_check.add_argument("graphs", nargs="*", help="inline graph6 strings")
    p_check.add_argument("--input", help="file of graph6 lines, '-' for stdin")
    p_check.add_argument("--out", help="output file (default stdout)")
    p_check.add_argument("--plain", action="store_true", help="human-readable output")

    p_enum = sub.add_parser("enumerate", help="graph6 lines, one per isomorphism class")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--class", dest="cls", help="restrict to a registered class")
    p_enum.add_argument("--out", help="output file (default stdout)")

    p_search = sub.add_parser("search", help="counterexample search over a class")
    p_search.add_argument("--class", dest="cls", required=True)
    p_search.add_argument("--max-n", type=int, required=True)
    p_search.add_argument("--out", help="output file (default stdout)")

    p_sample = sub.add_parser("sample", help="seeded G(n,p) samples as graph6 lines")
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--p", type=float, required=True)
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--count", type=int, default=1,
                          help="emit this many samples, seeds seed..seed+count-1")
    p_sample.add_argument("--out", help="output file (default stdout)")

    p_color = sub.add_parser("color", help="Kempe-engine coloring report per graph")
    p_color.add_argument("graphs", nargs="*", help="inline graph6 strings")
    p_color.add_argument("--input", help="file of graph6 lines, '-' for stdin")
    p_color.add_argument("--exact", action="store_true",
                         help="also run the exact chromatic-number solver")
    p_color.add_argument("--out", help="output file (default stdout)")

    p_pat = sub.add_parser("patterns", help="list the pattern catalog")
    p_pat.add_argument("--json", action="store_true", help="JSON lines instead of plain")
    return parser


def parse_config(argv: list[str]) -> RunConfig:
    args = _build_parser().parse_args(argv)
    cmd = args.command
    cfg = RunConfig(command=cmd)
    if cmd in ("check", "color"):
        cfg.graphs = list(args.graphs)
        cfg.input_path = args.input
        cfg.out = args.out
        if cmd == "check":
            cfg.plain = args.plain
        else:
            cfg.exact = args.exact
        if not cfg.graphs and cfg.input_path is None:
            raise UsageError(f"{cmd}: need inline graph6 arguments or --input")
    elif cmd == "enumerate":
        cfg.n = args.n
        cfg.out = args.out
        if args.cls is not None:
            cfg.class_spec = _resolve_class(args.cls)
    elif cmd == "search":
        cfg.n_max = args.max_n
        cfg.out = args.out
        cfg.class_spec = _resolve_class(args.cls)
    elif cmd == "sample":
        cfg.n, cfg.p, cfg.seed, cfg.count = args.n, args.p, args.seed, args.count
        cfg.out = args.out
        if cfg.count < 1:
            raise UsageError(f"sample: --count {cfg.count} must be >= 1")
    elif cmd == "patterns":
        cfg.json_mode = args.json
    return cfg


def _resolve_class(name: str) -> ClassSpec:
    try:
        return class_by_name(name)
    except KeyError as exc:
        raise UsageError(str(exc)) from None


def _read_graphs(cfg: RunConfig) -> list[Graph]:
    texts: list[str] = list(cfg.graphs or [])
    if cfg.input_path is not None:
        if cfg.input_path == "-":
            lines = sys.stdin.read().splitlines()
        else:
            try:
                with open(cfg.input_path) as fh:
                    lines = fh.read().splitlines()
            except OSError as exc:
                raise UsageError(f"cannot read {cfg.input_path!r}: {exc}") from None
        texts.extend(line.strip() for line in lines if line.strip())
    graphs = []
    for text in texts:
        try:
            graphs.append(from_graph6(text))
        except Graph6Error as exc:
            raise UsageError(f"malformed graph6 {text!r}: {exc}") from None
    return graphs


def _open_out(cfg: RunConfig) -> IO[str]:
    if cfg.out is None:
        return sys.stdout
    return open(cfg.out, "w")


def exit_code_for_reports(holds_flags: list[bool]) -> int:
    """2 as soon as any report violates the bound, else 0."""
    return EXIT_COUNTEREXAMPLE if any(not h for h in holds_flags) else EXIT_OK


def _cmd_check(cfg: RunConfig, out: IO[str]) -> int:
    reports = [check_reed(g) for g in _read_graphs(cfg)]
    for rep in reports:
        if cfg.plain:
            verdict = "holds" + (" (tight)" if rep.tight else "")
            if not rep.holds:
                verdict = "VIOLATED"
            classes = ",".join(rep.classes) or "-"
            out.write(
                f"{rep.graph6}  n={rep.n} delta={rep.delta} omega={rep.omega} "
                f"chi={rep.chi} bound={rep.bound} {verdict} classes={classes}\n"
            )
        else:
            out.write(json.dumps(rep.to_json()) + "\n")
    return exit_code_for_reports([rep.holds for rep in reports])


def _cmd_enumerate(cfg: RunConfig, out: IO[str]) -> int:
    if cfg.n is None:
        raise UsageError("enumerate: --n required")
    try:
        for g in enumerate_graphs(cfg.n, cfg.class_spec):
            out.write(to_graph6(g) + "\n")
    except GraphError as exc:
        raise UsageError(f"enumerate: {exc}") from None
    return EXIT_OK


def _cmd_search(cfg: RunConfig, out: IO[str]) -> int:
    assert cfg.class_spec is not None and cfg.n_max is not None
    try:
        result = counterexample_search(cfg.class_spec, cfg.n_max)
    except GraphError as exc:
        raise UsageError(f"search: {exc}") from None
    out.write(json.dumps(result.to_json()) + "\n")
    if result.budget_failure is not None:
        return EXIT_BUDGET
    if result.counterexample is not None:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _cmd_sample(cfg: RunConfig, out: IO[str]) -> int:
    assert cfg.n is not None and cfg.p is not None and cfg.seed is not None
    try:
        for i in range(cfg.count):
            out.write(to_graph6(sample_gnp(cfg.n, cfg.p, cfg.seed + i)) + "\n")
    except (GraphError, ValueError) as exc:
        raise UsageError(f"sample: {exc}") from None
    return EXIT_OK


def _cmd_color(cfg: RunConfig, out: IO[str]) -> int:
    for g in _read_graphs(cfg):
        _, palette = reed_color(g)
        bound = reed_bound(max_degree(g), clique_number(g))
        report = {
            "graph6": to_graph6(g),
            "n": g.n,
            "palette": palette,
            "bound": bound,
        }
        if cfg.exact:
            report["chi"] = chromatic_number(g)
        report["within_bound"] = palette <= bound
        out.write(json.dumps(report) + "\n")
    # a heuristic palette overshooting the bound is not a bound violation
    return EXIT_OK


def _cmd_patterns(cfg: RunConfig, out: IO[str]) -> int:
    for p in catalog():
        edges = p.graph.edges()
        if cfg.json_mode:
            out.write(
                json.dumps(
                    {
                        "name": p.name,
                        "order": p.graph.n,
                        "graph6": to_graph6(p.graph),
                        "edges": [list(e) for e in edges],
                    }
                )
                + "\n"
            )
        else:
            edge_str = " ".join(f"{u}-{v}" for u, v in edges)
            out.write(f"{p.name} order={p.graph.n} graph6={to_graph6(p.graph)} edges: {edge_str}\n")
    return EXIT_OK


_DISPATCH = {
    "check": _cmd_check,
    "enumerate": _cmd_enumerate,
    "search": _cmd_search,
    "sample": _cmd_sample,
    "color": _cmd_color,
    "patterns": _cmd_patterns,
}


def run(cfg: RunConfig) -> int:
    """Execute a parsed configuration; returns the process exit status."""
    out = _open_out(cfg)
    try:
        return _DISPATCH[cfg.command](cfg, out)
    except BudgetExhaustedError as exc:
        print(f"reedcheck: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    finally:
        if out is not sys.stdout:
            out.close()


def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        return run(cfg)
    except UsageError as exc:
        print(f"reedcheck: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
