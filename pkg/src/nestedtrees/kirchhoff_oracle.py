"""Matrix Tree Theorem oracle and a literal replay of the cofactor reduction.

The oracle works for any connected simple graph and shares no code with the
linear-time counter.  ``paper_reduction_trace`` performs the symmetric
row/column operations on a dense rational cofactor matrix, one pair at a
time, and is only meant for small instances.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .chain_model import BipartiteGraph, ChainSpec, expand
from .errors import Disconnected, SingularInput, TraceDivergence

EdgeList = Iterable[tuple[int, int]]
GraphLike = Union[BipartiteGraph, EdgeList]


def _normalize(g: GraphLike) -> tuple[int, list[tuple[int, int]]]:
    """Vertex count and 0-based edges.  Edge-list labels are ranked in sorted order."""
    if isinstance(g, BipartiteGraph):
        return g.vertex_count, g.edge_list()
    edges = [(int(u), int(v)) for u, v in g]
    labels = sorted({x for e in edges for x in e})
    rank = {x: i for i, x in enumerate(labels)}
    simple = {tuple(sorted((rank[u], rank[v]))) for u, v in edges if u != v}
    return len(labels), sorted(simple)


def kirchhoff_matrix(g: GraphLike) -> list[list[int]]:
    size, edges = _normalize(g)
    K = [[0] * size for _ in range(size)]
    for u, v in edges:
        K[u][v] -= 1
        K[v][u] -= 1
        K[u][u] += 1
        K[v][v] += 1
    return K


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    A = [list(row) for row in M]
    size = len(A)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if A[k][k] == 0:
            for r in range(k + 1, size):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        tail_k = A[k][k + 1:]
        for i in range(k + 1, size):
            row_i = A[i]
            aik = row_i[k]
            # exact by Sylvester's identity
            if aik:
                row_i[k + 1:] = [(pivot * x - aik * y) // prev for x, y in zip(row_i[k + 1:], tail_k)]
            elif pivot != prev:
                row_i[k + 1:] = [pivot * x // prev for x in row_i[k + 1:]]
            row_i[k] = 0
        prev = pivot
    return sign * A[-1][-1]


def rational_det(M: Sequence[Sequence]) -> Fraction:
    """Determinant over the rationals by Gaussian elimination (test helper)."""
    A = [[Fraction(x) for x in row] for row in M]
    size = len(A)
    det = Fraction(1)
    for k in range(size):
        pivot_row = next((r for r in range(k, size) if A[r][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            A[k], A[pivot_row] = A[pivot_row], A[k]
            det = -det
        pivot = A[k][k]
        det *= pivot
        for r in range(k + 1, size):
            if A[r][k] != 0:
                f = A[r][k] / pivot
                A[r] = [x - f * y for x, y in zip(A[r], A[k])]
    return det


def _minor(K: Sequence[Sequence[int]], index: int) -> list[list[int]]:
    return [[x for j, x in enumerate(row) if j != index] for i, row in enumerate(K) if i != index]


def cofactor(K: Sequence[Sequence[int]], index: int | None = None) -> int:
    """Principal cofactor of ``K`` at ``index`` (default: the last position)."""
    size = len(K)
    if index is None:
        index = size - 1
    if not 0 <= index < size:
        raise IndexError(f"index {index} outside 0..{size - 1}")
    value = bareiss_det(_minor(K, index))
    if value == 0:
        raise SingularInput("cofactor is zero: the graph is disconnected")
    return value


def is_connected(size: int, edges: Sequence[tuple[int, int]]) -> bool:
    if size == 0:
        return False
    adj: list[list[int]] = [[] for _ in range(size)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * size
    seen[0] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                queue.append(y)
    return all(seen)


def count_oracle(g: GraphLike) -> int:
    """Number of spanning trees of a connected graph, in O(n^3) big-integer steps."""
    size, edges = _normalize(g)
    if not is_connected(size, edges):
        raise Disconnected("graph is disconnected; it has 0 spanning trees")
    if size == 1:
        return 1
    return cofactor(kirchhoff_matrix(g))


# --- literal replay of the reduction --------------------------------------

@dataclass(frozen=True)
class ReductionTrace:
    """Final diagonal of the reduced cofactor matrix, split by origin."""

    cell_factors: tuple[Fraction, ...]
    representatives: tuple[Fraction, ...]
    pivots: tuple[Fraction, ...]
    steps: int

    @property
    def diagonal(self) -> Counter:
        return Counter(self.cell_factors + self.representatives + self.pivots)

    @property
    def product(self) -> Fraction:
        out = Fraction(1)
        for x in self.cell_factors + self.representatives + self.pivots:
            out *= x
        return out


StepHook = Callable[[str, list[list[Fraction]]], None]


def _congruence(A: list[list[Fraction]], target: int, source: int, t: Fraction) -> None:
    """``R_target += t R_source`` then ``C_target += t C_source``."""
    if t == 0:
        return
    row_t, row_s = A[target], A[source]
    for c, x in enumerate(row_s):
        if x:
            row_t[c] += t * x
    for row in A:
        x = row[source]
        if x:
            row[target] += t * x


def _collapse_cell(A: list[list[Fraction]], idx: Sequence[int], hook: StepHook | None) -> int:
    """Difference adjacent duplicate rows from the back, folding each difference out.

    Leaves ``idx[0]`` as the cell representative and every other row isolated.
    """
    steps = 0
    for k in range(len(idx) - 2, -1, -1):
        keep, drop = idx[k], idx[k + 1]
        _congruence(A, drop, keep, Fraction(-1))
        _congruence(A, keep, drop, -A[keep][drop] / A[drop][drop])
        steps += 2
        if hook:
            hook("collapse", A)
    return steps


def paper_reduction_trace(spec: ChainSpec, *, hook: StepHook | None = None, check: bool = True) -> ReductionTrace:
    """Reduce the last-vertex cofactor of ``K(expand(spec))`` to diagonal form.

    ``hook(stage, A)`` is called after every congruence pair.  With
    ``check`` the diagonal multiset is compared to the closed-form factors
    and pivots of :mod:`tree_counter`; a mismatch raises TraceDivergence.
    """
    if spec.order > 200:
        raise ValueError("reduction trace is limited to 200 vertices")
    graph = expand(spec)
    K = kirchhoff_matrix(graph)
    size = len(K) - 1
    A = [[Fraction(x) for x in row[:size]] for row in K[:size]]
    h = spec.h
    steps = 0

    u_cells, start = [], 0
    for mi in spec.m:
        u_cells.append(list(range(start, start + mi)))
        start += mi
    v_cells = []
    for nj in spec.n:
        v_cells.append([x for x in range(start, start + nj) if x < size])
        start += nj

    # steps 1 and 2: collapse every cell to its first vertex
    for cell in u_cells:
        steps += _collapse_cell(A, cell, hook)
    for cell in v_cells:
        steps += _collapse_cell(A, cell, hook)
    u_reps = [cell[0] for cell in u_cells]
    v_reps = [cell[0] for cell in v_cells if cell]

    # step 3: V_j <- V_j - V_{j+1}
    for j in range(len(v_reps) - 1):
        _congruence(A, v_reps[j], v_reps[j + 1], Fraction(-1))
        steps += 1
        if hook:
            hook("difference", A)

    # step 4: fold each U representative into the single V row touching it
    for u in u_reps:
        touching = [v for v in v_reps if A[v][u] != 0]
        if len(touching) > 1:
            raise TraceDivergence(f"U representative {u} meets {len(touching)} V rows")
        for v in touching:
            _congruence(A, v, u, -A[v][u] / A[u][u])
            steps += 1
            if hook:
                hook("arrow", A)

    # symmetric LU on the remaining tridiagonal block
    for i in range(len(v_reps) - 1):
        top, below = v_reps[i], v_reps[i + 1]
        if A[top][top] == 0:
            raise TraceDivergence("zero pivot in tridiagonal block")
        _congruence(A, below, top, -A[below][top] / A[top][top])
        steps += 1
        if hook:
            hook("pivot", A)

    for i in range(size):
        for j in range(size):
            if i != j and A[i][j] != 0:
                raise TraceDivergence(f"entry ({i},{j}) = {A[i][j]} survived the reduction")

    special = set(u_reps) | set(v_reps)
    trace = ReductionTrace(
        cell_factors=tuple(A[i][i] for i in range(size) if i not in special),
        representatives=tuple(A[u][u] for u in u_reps),
        pivots=tuple(A[v][v] for v in v_reps),
        steps=steps,
    )
    if check:
        _check_against_counter(spec, trace)
    return trace


def _check_against_counter(spec: ChainSpec, trace: ReductionTrace) -> None:
    from .tree_counter import run_counter

    result = run_counter(spec)
    expected = Counter(list(result.factors) + list(result.pivots.g))
    if trace.diagonal != expected:
        raise TraceDivergence(f"{spec}: trace {sorted(trace.diagonal.elements())} != closed form {sorted(expected.elements())}")
    if trace.product != result.tau:
        raise TraceDivergence(f"{spec}: trace product {trace.product} != tau {result.tau}")
