"""Recognition of connected double nested graphs from an edge list."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Union

from .chain_model import BipartiteGraph, ChainSpec
from .errors import CellMismatch, Disconnected, EmptyGraph, NotNested, OddCycle

Vertex = Hashable


@dataclass(frozen=True)
class Bipartition:
    side: dict  # vertex -> 0 (U) or 1 (V)
    consistent: bool = True

    def part(self, k: int) -> list:
        return sorted(v for v, s in self.side.items() if s == k)


@dataclass(frozen=True)
class Recognition:
    """Accepted graph: the canonical spec and the vertices of every cell."""

    spec: ChainSpec
    u_cells: tuple[tuple, ...]
    v_cells: tuple[tuple, ...]


def _adjacency(g: Union[BipartiteGraph, Iterable[tuple[Vertex, Vertex]]]) -> dict:
    adj: dict = defaultdict(set)
    if isinstance(g, BipartiteGraph):
        for x in range(g.vertex_count):
            adj[x]
        edges = g.edge_list()
    else:
        edges = list(g)
    for u, v in edges:
        if u == v:
            raise OddCycle(f"loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    if not adj:
        raise EmptyGraph("graph has no vertices")
    return adj


def _two_colour(adj: dict) -> dict:
    start = next(iter(adj))
    side = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in side:
                side[y] = 1 - side[x]
                queue.append(y)
            elif side[y] == side[x]:
                raise OddCycle(f"edge {x}-{y} closes an odd cycle")
    if len(side) != len(adj):
        raise Disconnected(f"{len(adj) - len(side)} of {len(adj)} vertices unreachable")
    return side


def bipartition(g) -> Bipartition:
    return Bipartition(_two_colour(_adjacency(g)))


def _nested_groups(vertices: list, adj: dict) -> list[list]:
    """Group vertices by neighbourhood, sorted by degree descending, and check nesting."""
    groups: dict = defaultdict(list)
    for x in vertices:
        groups[tuple(sorted(adj[x], key=repr))].append(x)
    ordered = sorted(groups.items(), key=lambda kv: -len(kv[0]))
    for (big, _), (small, _) in zip(ordered, ordered[1:]):
        if len(big) == len(small):
            raise NotNested("two cells share a degree but not a neighbourhood")
        big_set = set(big)
        if any(y not in big_set for y in small):
            raise NotNested("neighbourhoods are not totally ordered by inclusion")
    return [sorted(members, key=repr) for _, members in ordered]


def recognize(g) -> Recognition:
    adj = _adjacency(g)
    side = _two_colour(adj)
    u_side = [x for x, s in side.items() if s == 0]
    v_side = [x for x, s in side.items() if s == 1]
    u_groups = _nested_groups(u_side, adj)
    v_groups = _nested_groups(v_side, adj)
    if len(u_groups) != len(v_groups):
        raise CellMismatch(f"{len(u_groups)} U cells but {len(v_groups)} V cells")
    h = len(u_groups)
    v_cell = {x: j for j, grp in enumerate(v_groups) for x in grp}
    reach = 0
    n_prefix = []
    for grp in v_groups:
        reach += len(grp)
        n_prefix.append(reach)
    for i, grp in enumerate(u_groups):
        nbrs = adj[grp[0]]
        if len(nbrs) != n_prefix[h - 1 - i] or any(v_cell[y] > h - 1 - i for y in nbrs):
            raise NotNested(f"U cell {i + 1} does not see exactly V_1..V_{h - i}")
    m = tuple(map(len, u_groups))
    n = tuple(map(len, v_groups))
    # U side is the one whose first cell has the larger degree (sum of n), then smaller m
    if (-sum(m), n) < (-sum(n), m):
        return Recognition(ChainSpec(n, m), tuple(map(tuple, v_groups)), tuple(map(tuple, u_groups)))
    return Recognition(ChainSpec(m, n), tuple(map(tuple, u_groups)), tuple(map(tuple, v_groups)))


def recognize_chain(g) -> ChainSpec:
    """Canonical spec of a connected double nested graph, or a RecognitionError."""
    return recognize(g).spec


def canonical_orientation(spec: ChainSpec) -> ChainSpec:
    """The orientation :func:`recognize_chain` reports for ``expand(spec)``."""
    m, n = spec.m, spec.n
    if (-sum(m), n) < (-sum(n), m):
        return ChainSpec(n, m)
    return spec
