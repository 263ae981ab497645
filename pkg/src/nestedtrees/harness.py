"""Oracle sweeps and the op-count benchmark used by the CLI."""

from __future__ import annotations

import csv
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .chain_model import ChainSpec, expand, iter_specs, max_edges, random_spec
from .errors import ResourceLimit
from .kirchhoff_oracle import count_oracle
from .tree_counter import run_counter, tau_complete_bipartite


@dataclass
class Mismatch:
    spec: ChainSpec
    counter: int
    oracle: int
    closed_form: int | None = None


@dataclass
class VerifyReport:
    cases: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def sweep_specs(max_h: int, max_cell: int, trials: int, seed: int, max_vertices: int = 60) -> list[ChainSpec]:
    specs = list(iter_specs(max_h, max_cell))
    rng = random.Random(seed)
    specs += [random_spec(rng, max_vertices) for _ in range(trials)]
    return specs


def check_spec(spec: ChainSpec) -> Mismatch | None:
    counted = run_counter(spec).tau
    oracle = count_oracle(expand(spec))
    closed = tau_complete_bipartite(spec.m[0], spec.n[0]) if spec.h == 1 else None
    if counted != oracle or (closed is not None and closed != counted):
        return Mismatch(spec, counted, oracle, closed)
    return None


def verify_sweep(specs: Sequence[ChainSpec], jobs: int = 1) -> VerifyReport:
    cap = max_edges()
    for spec in specs:
        if spec.edge_count > cap:
            raise ResourceLimit(f"{spec} exceeds the edge cap {cap}")
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = list(pool.map(check_spec, specs, chunksize=64))
    else:
        outcomes = [check_spec(s) for s in specs]
    return VerifyReport(len(specs), [m for m in outcomes if m is not None])


# --- benchmark ------------------------------------------------------------

ORACLE_LIMIT = 400
FAMILIES = ("unicyclic", "balanced")


def family_spec(family: str, n: int, cells: int = 8) -> ChainSpec:
    """A spec with exactly ``n`` vertices from a named family.

    ``unicyclic`` is ``(1,1;2,n-4)``; ``balanced`` spreads ``n`` evenly over
    ``2*cells`` cells (fewer cells for tiny ``n``).
    """
    if family == "unicyclic":
        if n < 5:
            raise ValueError("unicyclic family needs n >= 5")
        return ChainSpec((1, 1), (2, n - 4))
    if family == "balanced":
        if n < 2:
            raise ValueError("balanced family needs n >= 2")
        h = max(1, min(cells, n // 2))
        base, extra = divmod(n, 2 * h)
        sizes = [base + (1 if k < extra else 0) for k in range(2 * h)]
        return ChainSpec(tuple(sizes[0::2]), tuple(sizes[1::2]))
    raise ValueError(f"unknown family {family!r}")


@dataclass
class BenchRow:
    n: int
    algorithm: str
    wall_ns: int
    ops: int
    family: str
    bits: int
    tau: str = ""


@dataclass
class BenchReport:
    rows: list[BenchRow]
    exponents: dict[str, float]
    cross_checked: int


def fit_exponent(sizes: Sequence[int], ops: Sequence[int]) -> float:
    """Least-squares slope of log(ops) against log(n)."""
    slope, _ = np.polyfit(np.log(np.asarray(sizes, float)), np.log(np.asarray(ops, float)), 1)
    return float(slope)


def run_bench(sizes: Iterable[int], repetitions: int = 1, families: Sequence[str] = FAMILIES) -> BenchReport:
    sizes = list(sizes)
    rows: list[BenchRow] = []
    exponents = {}
    cross = 0
    for family in families:
        specs = [family_spec(family, n) for n in sizes]
        for n, spec in zip(sizes, specs):
            for _ in range(repetitions):
                t0 = time.perf_counter_ns()
                result = run_counter(spec)
                wall = time.perf_counter_ns() - t0
                small = n <= ORACLE_LIMIT
                rows.append(BenchRow(n, "counter", wall, result.ops, family, result.bits, str(result.tau) if small else ""))
                if small:
                    t0 = time.perf_counter_ns()
                    tau = count_oracle(expand(spec))
                    wall = time.perf_counter_ns() - t0
                    rows.append(BenchRow(n, "oracle", wall, _bareiss_ops(n - 1), family, tau.bit_length(), str(tau)))
                    if tau != result.tau:
                        raise AssertionError(f"counter and oracle disagree on {spec}")
                    cross += 1
        if len(set(sizes)) >= 2:
            ops_by_n = {r.n: r.ops for r in rows if r.family == family and r.algorithm == "counter"}
            exponents[family] = fit_exponent(list(ops_by_n), list(ops_by_n.values()))
    return BenchReport(rows, exponents, cross)


def _bareiss_ops(size: int) -> int:
    # one fraction-free update per inner-loop entry
    return sum((size - 1 - k) ** 2 for k in range(max(size - 1, 0)))


def write_csv(rows: Sequence[BenchRow], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "algorithm", "wall_ns", "ops", "family", "bits", "tau"])
        for r in rows:
            writer.writerow([r.n, r.algorithm, r.wall_ns, r.ops, r.family, r.bits, r.tau])
