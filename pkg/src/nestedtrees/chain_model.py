"""Double nested (bipartite chain) graph descriptions.

A double nested graph ``G(m_1..m_h; n_1..n_h)`` has colour classes split into
cells ``U_1..U_h`` and ``V_1..V_h`` with ``|U_i| = m_i`` and ``|V_j| = n_j``;
every vertex of ``U_i`` is adjacent to exactly ``V_1 ∪ ... ∪ V_{h+1-i}``.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EmptySpec, LengthMismatch, NonPositiveCell, ResourceLimit, SpecError

DEFAULT_MAX_EDGES = 10**7
MAX_EDGES_ENV = "NESTEDTREES_MAX_EDGES"


@dataclass(frozen=True)
class ChainSpec:
    m: tuple[int, ...]
    n: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.m)

    @property
    def u_count(self) -> int:
        return sum(self.m)

    @property
    def v_count(self) -> int:
        return sum(self.n)

    @property
    def order(self) -> int:
        """Total number of vertices."""
        return self.u_count + self.v_count

    @property
    def edge_count(self) -> int:
        total = 0
        prefix = list(itertools.accumulate(self.n))
        for i, mi in enumerate(self.m):
            total += mi * prefix[self.h - 1 - i]
        return total

    def to_json(self) -> str:
        return json.dumps({"m": list(self.m), "n": list(self.n)}, separators=(",", ":"))

    def __str__(self) -> str:
        return "({};{})".format(",".join(map(str, self.m)), ",".join(map(str, self.n)))


@dataclass(frozen=True)
class DegreeProfile:
    """Cell degrees and prefix sums of a :class:`ChainSpec`.

    ``dm[i]`` is the common degree of the vertices of ``U_{i+1}`` and ``dn[j]``
    that of ``V_{j+1}`` (zero-based storage).  ``nstar`` is the size of the
    last V cell once one of its vertices is deleted for the cofactor; it is
    ``None`` when ``n_h = 1`` because the whole cell disappears.
    """

    dm: tuple[int, ...]
    dn: tuple[int, ...]
    m_prefix: tuple[int, ...]
    n_prefix: tuple[int, ...]
    nstar: int | None


@dataclass(frozen=True)
class BipartiteGraph:
    """Explicit bipartite graph.

    ``edges`` holds ``(u, v)`` pairs of side-local indices.  Globally, U
    vertices are numbered ``0..u_count-1`` and V vertices follow them.
    """

    u_count: int
    v_count: int
    edges: frozenset[tuple[int, int]]

    @property
    def vertex_count(self) -> int:
        return self.u_count + self.v_count

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges in global numbering, sorted."""
        off = self.u_count
        return [(u, v + off) for u, v in sorted(self.edges)]

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[self.u_count + v] += 1
        return deg

    def swapped(self) -> "BipartiteGraph":
        """The same graph with the colour classes exchanged."""
        return BipartiteGraph(self.v_count, self.u_count, frozenset((v, u) for u, v in self.edges))


def validate_spec(m: Sequence[int], n: Sequence[int]) -> ChainSpec:
    m = tuple(m)
    n = tuple(n)
    if not m and not n:
        raise EmptySpec("a double nested graph needs at least one cell per side")
    if len(m) != len(n):
        raise LengthMismatch(f"|m| = {len(m)} but |n| = {len(n)}")
    for side, cells in (("m", m), ("n", n)):
        for k, size in enumerate(cells):
            if isinstance(size, bool) or not isinstance(size, int):
                raise SpecError(f"{side}[{k}] = {size!r} is not an integer")
            if size <= 0:
                raise NonPositiveCell(f"{side}[{k}] = {size} must be positive")
    return ChainSpec(m, n)


def degree_profile(spec: ChainSpec) -> DegreeProfile:
    h = spec.h
    m_prefix = tuple(itertools.accumulate(spec.m))
    n_prefix = tuple(itertools.accumulate(spec.n))
    dm = tuple(n_prefix[h - 1 - i] for i in range(h))
    dn = tuple(m_prefix[h - 1 - j] for j in range(h))
    nstar = spec.n[-1] - 1 if spec.n[-1] > 1 else None
    return DegreeProfile(dm, dn, m_prefix, n_prefix, nstar)


def max_edges() -> int:
    raw = os.environ.get(MAX_EDGES_ENV)
    return int(raw) if raw else DEFAULT_MAX_EDGES


def expand(spec: ChainSpec, *, edge_cap: int | None = None) -> BipartiteGraph:
    cap = max_edges() if edge_cap is None else edge_cap
    if spec.edge_count > cap:
        raise ResourceLimit(f"{spec} has {spec.edge_count} edges, cap is {cap}")
    h = spec.h
    u_start = [0, *itertools.accumulate(spec.m)]
    n_prefix = list(itertools.accumulate(spec.n))
    edges = set()
    for i in range(h):
        reach = n_prefix[h - 1 - i]
        for u in range(u_start[i], u_start[i + 1]):
            edges.update((u, v) for v in range(reach))
    return BipartiteGraph(spec.u_count, spec.v_count, frozenset(edges))


def swap_colors(spec: ChainSpec) -> ChainSpec:
    return ChainSpec(spec.n, spec.m)


def cell_of(spec: ChainSpec) -> list[tuple[str, int]]:
    """Cell label (``'U'``/``'V'``, zero-based index) of every vertex in canonical order."""
    labels = [("U", i) for i, size in enumerate(spec.m) for _ in range(size)]
    labels += [("V", j) for j, size in enumerate(spec.n) for _ in range(size)]
    return labels


# --- text formats ---------------------------------------------------------

_INLINE = re.compile(r"^\s*m\s*=\s*([\d,\s]*);\s*n\s*=\s*([\d,\s]*)$")


def parse_spec(text: str) -> ChainSpec:
    """Parse ``{"m":[..],"n":[..]}`` JSON or the inline ``m=1,1;n=2,2`` form."""
    text = text.strip()
    match = _INLINE.match(text)
    if match:
        try:
            m, n = ([int(x) for x in group.split(",") if x.strip()] for group in match.groups())
        except ValueError as exc:
            raise SpecError(str(exc)) from None
        return validate_spec(m, n)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"not a spec: {exc}") from None
    if not isinstance(data, dict) or set(data) != {"m", "n"}:
        raise SpecError('expected an object with keys "m" and "n"')
    if not isinstance(data["m"], list) or not isinstance(data["n"], list):
        raise SpecError('"m" and "n" must be lists')
    return validate_spec(data["m"], data["n"])


def parse_edge_list(text: str) -> list[tuple[int, int]]:
    """One ``u v`` pair of nonnegative integers per line; ``#`` lines are comments."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: vertex labels must be nonnegative")
        edges.append((u, v))
    return edges


def format_edge_list(edges: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{u} {v}\n" for u, v in edges)


# --- spec families used by sweeps and benchmarks --------------------------

def iter_specs(max_h: int, max_cell: int) -> Iterator[ChainSpec]:
    """Every spec with ``h <= max_h`` and all cell sizes in ``1..max_cell``."""
    sizes = range(1, max_cell + 1)
    for h in range(1, max_h + 1):
        for cells in itertools.product(sizes, repeat=2 * h):
            yield ChainSpec(cells[:h], cells[h:])


def random_spec(rng: random.Random, max_vertices: int = 60, max_h: int = 10) -> ChainSpec:
    """A random spec with at most ``max_vertices`` vertices."""
    h = rng.randint(1, min(max_h, max_vertices // 2))
    budget = max_vertices - 2 * h
    extra = [0] * (2 * h)
    # spread a random share of the spare vertices over random cells
    for _ in range(rng.randint(0, budget)):
        extra[rng.randrange(2 * h)] += 1
    cells = [1 + e for e in extra]
    return ChainSpec(tuple(cells[:h]), tuple(cells[h:]))
