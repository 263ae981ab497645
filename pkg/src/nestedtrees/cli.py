"""Command line interface.

Exit codes: 0 success, 1 malformed input, 2 recognition failure,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .chain_model import ChainSpec, expand, format_edge_list, parse_edge_list, parse_spec
from .errors import ChainError, EmptyGraph, RecognitionError, ResourceLimit, SpecError
from .harness import FAMILIES, run_bench, sweep_specs, verify_sweep, write_csv
from .kirchhoff_oracle import count_oracle
from .recognizer import recognize_chain
from .tree_counter import run_counter

EXIT_OK, EXIT_INPUT, EXIT_RECOGNITION, EXIT_MISMATCH = 0, 1, 2, 3


@dataclass
class RunReport:
    command: str
    input: str
    status: str
    result: str | None = None
    wall_ns: int | None = None
    ops: int | None = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))


class InputError(Exception):
    pass


def _load_graph_input(args) -> tuple[ChainSpec, str]:
    if args.spec is not None:
        return _spec_arg(args.spec), args.spec
    text = _read(args.edges)
    try:
        edges = parse_edge_list(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if not edges:
        raise InputError(f"{args.edges}: no edges")
    return recognize_chain(edges), args.edges


def _spec_arg(text: str) -> ChainSpec:
    """Inline spec text, or the path of a JSON spec file."""
    try:
        is_file = Path(text).is_file()
    except OSError:
        is_file = False
    if is_file:
        text = _read(text)
    return parse_spec(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _emit(args, report: RunReport, plain: str | None) -> None:
    if args.json:
        print(report.to_json())
    elif plain is not None:
        print(plain)


def cmd_count(args) -> int:
    spec, source = _load_graph_input(args)
    t0 = time.perf_counter_ns()
    result = run_counter(spec)
    wall = time.perf_counter_ns() - t0
    report = RunReport("count", source, "success", str(result.tau), wall, result.ops,
                       {"spec": json.loads(spec.to_json()), "bits": result.bits})
    _emit(args, report, str(result.tau))
    return EXIT_OK


def cmd_oracle(args) -> int:
    spec, source = _load_graph_input(args)
    t0 = time.perf_counter_ns()
    tau = count_oracle(expand(spec))
    wall = time.perf_counter_ns() - t0
    report = RunReport("oracle", source, "success", str(tau), wall, None, {"spec": json.loads(spec.to_json())})
    _emit(args, report, str(tau))
    return EXIT_OK


def cmd_verify(args) -> int:
    specs = sweep_specs(args.max_h, args.max_cell, args.trials, args.seed)
    t0 = time.perf_counter_ns()
    outcome = verify_sweep(specs, jobs=args.jobs)
    wall = time.perf_counter_ns() - t0
    mismatches = [
        {"spec": json.loads(m.spec.to_json()), "counter": str(m.counter), "oracle": str(m.oracle),
         "closed_form": None if m.closed_form is None else str(m.closed_form)}
        for m in outcome.mismatches
    ]
    status = "success" if outcome.ok else "mismatch"
    source = f"max_h={args.max_h} max_cell={args.max_cell} trials={args.trials} seed={args.seed}"
    report = RunReport("verify", source, status, str(outcome.cases) if outcome.ok else None, wall, None,
                       {"cases": outcome.cases, "mismatches": mismatches})
    lines = [f"checked {outcome.cases} specs ({source}): {len(mismatches)} mismatches"]
    lines += [f"MISMATCH {m['spec']} counter={m['counter']} oracle={m['oracle']} closed_form={m['closed_form']}"
              for m in mismatches]
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if outcome.ok else EXIT_MISMATCH


def cmd_recognize(args) -> int:
    text = _read(args.edges)
    try:
        edges = parse_edge_list(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if not edges:
        raise InputError(f"{args.edges}: no edges")
    spec = recognize_chain(edges)
    report = RunReport("recognize", args.edges, "success", spec.to_json())
    _emit(args, report, spec.to_json())
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = _spec_arg(args.spec)
    graph = expand(spec)
    data = format_edge_list(graph.edge_list())
    if args.output == "-":
        sys.stdout.write(data)
        return EXIT_OK
    try:
        Path(args.output).write_text(data)
    except OSError as exc:
        raise InputError(str(exc)) from None
    report = RunReport("generate", args.spec, "success", str(len(graph.edges)), detail={"path": args.output})
    _emit(args, report, None)
    return EXIT_OK


def _size_list(text: str) -> list[int]:
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or any(s < 5 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be integers >= 5")
    return sizes


def cmd_bench(args) -> int:
    families = [f.strip() for f in args.families.split(",")]
    if any(f not in FAMILIES for f in families):
        raise InputError(f"families must be drawn from {', '.join(FAMILIES)}")
    t0 = time.perf_counter_ns()
    bench = run_bench(args.sizes, args.repetitions, families)
    wall = time.perf_counter_ns() - t0
    if args.csv:
        write_csv(bench.rows, args.csv)
    summary = [f"{family}: fitted op-count exponent {exp:.3f}" for family, exp in bench.exponents.items()]
    if bench.cross_checked:
        summary.append(f"oracle cross-checks: {bench.cross_checked} equal")
    report = RunReport("bench", ",".join(map(str, args.sizes)), "success", None, wall, None,
                       {"exponents": bench.exponents, "cross_checked": bench.cross_checked,
                        "rows": [asdict(r) for r in bench.rows]})
    _emit(args, report, "\n".join(summary))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON run report")

    parser = argparse.ArgumentParser(prog="nestedtrees", description="Spanning trees of double nested graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, helptext in (("count", cmd_count, "linear-time spanning tree count"),
                                 ("oracle", cmd_oracle, "Matrix Tree Theorem cofactor count")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--spec", help='JSON {"m":[..],"n":[..]}, inline "m=..;n=..", or a JSON file')
        src.add_argument("--edges", help="edge-list file")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="compare counter and oracle on a sweep")
    p.add_argument("--max-h", type=int, default=3)
    p.add_argument("--max-cell", type=int, default=3)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recognize", parents=[common], help="recover the spec of an edge list")
    p.add_argument("edges")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("generate", parents=[common], help="write the edge list of a spec")
    p.add_argument("--spec", required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", parents=[common], help="op-count and wall-time scaling")
    p.add_argument("--sizes", type=_size_list, default=[1000, 10000, 100000])
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--families", default=",".join(FAMILIES))
    p.add_argument("--csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except RecognitionError as exc:
        if isinstance(exc, EmptyGraph):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        print(f"rejected: {exc.reason}: {exc}", file=sys.stderr)
        if getattr(args, "json", False):
            print(RunReport(args.command, str(getattr(args, "edges", "")), exc.reason).to_json())
        return EXIT_RECOGNITION
    except (InputError, SpecError, ResourceLimit, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ChainError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
