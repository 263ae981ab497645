"""Linear-time spanning tree count for double nested graphs.

The Kirchhoff cofactor (last vertex deleted, a member of ``V_h``) is reduced
by determinant-preserving congruences to

* telescoping diagonal entries ``k*d/(k-1)`` for ``k = size..2`` in every
  cell, whose product is ``size * d**(size-1)``;
* one representative ``d/size`` per cell;
* a symmetric tridiagonal matrix ``T`` obtained by eliminating the U
  representatives against the differenced V representatives.

``tau`` is the product of the cell factors, the U representatives and the
LU pivots of ``T``.  Everything is exact; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chain_model import ChainSpec, DegreeProfile, degree_profile
from .errors import ZeroPivot


class OpCounter:
    """Tally of exact rational operations (add, sub, mul, div)."""

    __slots__ = ("ops",)

    def __init__(self) -> None:
        self.ops = 0

    def add(self, k: int = 1) -> None:
        self.ops += k


@dataclass(frozen=True)
class FactorList:
    """Diagonal factors from collapsing the cells.

    ``u_cells[i]`` / ``v_cells[j]`` hold the telescoping factors of each cell,
    ``representatives`` the U representatives ``dm[i]/m_i``.
    """

    u_cells: tuple[tuple[Fraction, ...], ...]
    v_cells: tuple[tuple[Fraction, ...], ...]
    representatives: tuple[Fraction, ...]

    def __iter__(self):
        for cell in self.u_cells:
            yield from cell
        for cell in self.v_cells:
            yield from cell
        yield from self.representatives

    def __len__(self) -> int:
        return sum(map(len, self.u_cells)) + sum(map(len, self.v_cells)) + len(self.representatives)


@dataclass(frozen=True)
class Tridiagonal:
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.a)

    def dense(self) -> list[list[Fraction]]:
        k = self.order
        rows = [[Fraction(0)] * k for _ in range(k)]
        for i, ai in enumerate(self.a):
            rows[i][i] = ai
        for i, bi in enumerate(self.b):
            rows[i][i + 1] = rows[i + 1][i] = bi
        return rows


@dataclass(frozen=True)
class PivotSequence:
    """Diagonal ``g`` of ``U`` in ``T = LU``.

    The multipliers ``f_i = b_i / g_i`` of ``L`` and the superdiagonal of
    ``U`` (which is just ``b``) are derivable and exposed as helpers.
    """

    g: tuple[Fraction, ...]
    b: tuple[Fraction, ...] = ()

    @property
    def determinant(self) -> Fraction:
        return _product(list(self.g))

    def multipliers(self) -> tuple[Fraction, ...]:
        return tuple(bi / gi for bi, gi in zip(self.b, self.g))


@dataclass
class CountResult:
    tau: int
    factors: FactorList
    tridiagonal: Tridiagonal
    pivots: PivotSequence
    ops: int
    bits: int = field(init=False)

    def __post_init__(self) -> None:
        self.bits = self.tau.bit_length()


def _telescoping(size: int, degree: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(k * degree, k - 1) for k in range(size, 1, -1))


def cell_factors(spec: ChainSpec, prof: DegreeProfile | None = None, counter: OpCounter | None = None) -> FactorList:
    prof = prof or degree_profile(spec)
    h = spec.h
    u_cells = tuple(_telescoping(spec.m[i], prof.dm[i]) for i in range(h))
    v_sizes = list(spec.n[:-1]) + [prof.nstar or 0]
    v_cells = tuple(_telescoping(v_sizes[j], prof.dn[j]) for j in range(h))
    reps = tuple(Fraction(prof.dm[i], spec.m[i]) for i in range(h))
    result = FactorList(u_cells, v_cells, reps)
    if counter is not None:
        counter.add(len(result))
    return result


def build_tridiagonal(spec: ChainSpec, prof: DegreeProfile | None = None, counter: OpCounter | None = None) -> Tridiagonal:
    """The tridiagonal ``T`` left after eliminating the U representatives.

    With ``q_j = dn[j]/n_j`` (the last one over ``n*`` instead) and
    ``r_i = m_i/dm[i]``, row ``j`` of ``T`` couples the differenced V
    representatives ``j`` and ``j+1`` and has absorbed ``U_{h+1-j}``.

    When ``n_h = 1`` the deleted vertex was the whole of ``V_h``: only
    ``h-1`` V representatives remain and the last of them absorbs both
    ``U_1`` and ``U_2``.
    """
    prof = prof or degree_profile(spec)
    h = spec.h
    m, n = spec.m, spec.n
    r = [Fraction(m[i], prof.dm[i]) for i in range(h)]
    if prof.nstar is not None:
        q = [Fraction(prof.dn[j], n[j]) for j in range(h - 1)] + [Fraction(prof.dn[h - 1], prof.nstar)]
        k = h
    else:
        q = [Fraction(prof.dn[j], n[j]) for j in range(h - 1)]
        k = h - 1
    if k == 0:
        return Tridiagonal((), ())
    a = [q[j] + q[j + 1] - r[h - 1 - j] for j in range(k - 1)]
    b = [-q[j + 1] for j in range(k - 1)]
    last = q[k - 1] - r[0]
    if prof.nstar is None:
        last -= r[1]
    a.append(last)
    if counter is not None:
        counter.add(2 * h + 4 * k)
    return Tridiagonal(tuple(a), tuple(b))


def lu_pivots(T: Tridiagonal, counter: OpCounter | None = None) -> PivotSequence:
    g: list[Fraction] = []
    for i, ai in enumerate(T.a):
        gi = ai if i == 0 else ai - T.b[i - 1] * T.b[i - 1] / g[-1]
        if gi == 0:
            raise ZeroPivot(f"pivot g_{i + 1} vanished")
        g.append(gi)
    if counter is not None:
        counter.add(3 * max(len(g) - 1, 0))
    return PivotSequence(tuple(g), T.b)


def _product(values: list[Fraction]) -> Fraction:
    """Balanced product tree.

    Neighbouring telescoping factors cancel, so subtree denominators stay
    small and the gcd work inside ``Fraction`` stays cheap even when the
    result has millions of bits.
    """
    if not values:
        return Fraction(1)
    while len(values) > 1:
        paired = [values[i] * values[i + 1] for i in range(0, len(values) - 1, 2)]
        if len(values) % 2:
            paired.append(values[-1])
        values = paired
    return values[0]


def run_counter(spec: ChainSpec) -> CountResult:
    """Count spanning trees and keep every intermediate for inspection."""
    counter = OpCounter()
    prof = degree_profile(spec)
    factors = cell_factors(spec, prof, counter)
    T = build_tridiagonal(spec, prof, counter)
    pivots = lu_pivots(T, counter)
    values = list(factors) + list(pivots.g)
    counter.add(max(len(values) - 1, 0))
    total = _product(values)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral product {total} for {spec}")
    return CountResult(total.numerator, factors, T, pivots, counter.ops)


def count_spanning_trees(spec: ChainSpec) -> int:
    return run_counter(spec).tau


def tau_complete_bipartite(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise ValueError("both sides need at least one vertex")
    return m ** (n - 1) * n ** (m - 1)


def pivots_of(a: Sequence, b: Sequence) -> PivotSequence:
    """Convenience wrapper: pivots of the tridiagonal with diagonal ``a`` and off-diagonal ``b``."""
    return lu_pivots(Tridiagonal(tuple(map(Fraction, a)), tuple(map(Fraction, b))))
