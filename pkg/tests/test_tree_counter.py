from fractions import Fraction as F
from math import prod

import pytest
from hypothesis import given, settings

from conftest import chain_specs
from nestedtrees.chain_model import ChainSpec, degree_profile, expand, swap_colors
from nestedtrees.errors import ZeroPivot
from nestedtrees.kirchhoff_oracle import count_oracle
from nestedtrees.tree_counter import (
    Tridiagonal,
    build_tridiagonal,
    cell_factors,
    count_spanning_trees,
    lu_pivots,
    pivots_of,
    run_counter,
    tau_complete_bipartite,
)


def spec(m, n):
    return ChainSpec(tuple(m), tuple(n))


class TestCellFactors:
    def test_unicyclic(self):
        s = spec([1, 1], [2, 2])
        fl = cell_factors(s, degree_profile(s))
        assert fl.representatives == (4, 2)
        assert fl.u_cells == ((), ())
        assert fl.v_cells == ((F(4),), ())
        assert prod(fl) == 32

    def test_bicyclic(self):
        fl = cell_factors(spec([1, 2], [2, 2]))
        assert fl.representatives == (4, 1)
        assert fl.u_cells[1] == (F(4),)
        assert fl.v_cells[0] == (F(6),)

    def test_single_edge(self):
        fl = cell_factors(spec([1], [1]))
        assert list(fl) == [1]

    def test_telescoping_sequence(self):
        fl = cell_factors(spec([4], [2]))
        # d = 2, factors 4*2/3, 3*2/2, 2*2/1
        assert fl.u_cells[0] == (F(8, 3), F(3), F(4))

    @given(chain_specs(max_h=5, max_cell=7))
    def test_cell_products_and_length(self, s):
        prof = degree_profile(s)
        fl = cell_factors(s, prof)
        for i, cell in enumerate(fl.u_cells):
            assert len(cell) == s.m[i] - 1
            assert prod(cell) == s.m[i] * prof.dm[i] ** (s.m[i] - 1)
        for j, cell in enumerate(fl.v_cells):
            size = s.n[j] if j < s.h - 1 else (prof.nstar or 0)
            assert len(cell) == max(size - 1, 0)
            if size > 1:
                assert prod(cell) == size * prof.dn[j] ** (size - 1)
        assert all(x > 0 for x in fl)
        expected = sum(x - 1 for x in s.m) + sum(x - 1 for x in s.n[:-1]) + max((prof.nstar or 0) - 1, 0) + s.h
        assert len(fl) == expected


class TestTridiagonal:
    def test_tricyclic(self):
        T = build_tridiagonal(spec([1, 1, 1], [2, 1, 2]))
        assert T.a == (3, F(8, 3), F(4, 5))
        assert T.b == (-2, -1)

    def test_unicyclic(self):
        T = build_tridiagonal(spec([1, 1], [2, 2]))
        assert T.a == (F(3, 2), F(3, 4))
        assert T.b == (-1,)

    def test_last_cell_of_size_one(self, brute_force):
        s = spec([1, 1], [2, 1])
        T = build_tridiagonal(s)
        assert T.a == (F(1, 6),) and T.b == ()
        # independent: enumerate spanning trees of the 5-vertex unicyclic graph
        assert brute_force(expand(s).edge_list()) == 4
        assert 3 * 2 * 4 * F(1, 6) == 4

    def test_star_has_empty_tridiagonal(self):
        assert build_tridiagonal(spec([5], [1])).order == 0

    @given(chain_specs(max_h=5, max_cell=5))
    @settings(max_examples=200)
    def test_symmetric_positive_definite(self, s):
        T = build_tridiagonal(s)
        assert T.order == (s.h if s.n[-1] > 1 else s.h - 1)
        # leading principal minors via the continuant recurrence
        prev, cur = F(1), F(1)
        for i, ai in enumerate(T.a):
            nxt = ai * cur - (T.b[i - 1] ** 2 * prev if i else 0)
            prev, cur = cur, nxt
            assert cur > 0


class TestPivots:
    def test_tricyclic(self):
        piv = pivots_of([3, F(8, 3), F(4, 5)], [-2, -1])
        assert piv.g == (3, F(4, 3), F(1, 20))
        assert piv.determinant == F(1, 5)
        assert piv.multipliers() == (F(-2, 3), F(-3, 4))

    def test_unicyclic(self):
        piv = pivots_of([F(3, 2), F(3, 4)], [-1])
        assert piv.g == (F(3, 2), F(1, 12))
        assert piv.determinant == F(1, 8)

    def test_order_one(self):
        assert pivots_of([5], []).g == (5,)

    def test_zero_pivot(self):
        with pytest.raises(ZeroPivot):
            lu_pivots(Tridiagonal((F(1), F(1)), (F(1),)))

    def test_product_is_determinant(self):
        T = Tridiagonal((F(2), F(5, 2), F(7)), (F(1, 3), F(-4)))
        d = T.dense()
        det = (d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1])
               - d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]))
        assert lu_pivots(T).determinant == det


class TestCount:
    @pytest.mark.parametrize(
        "m, n, tau",
        [
            ([1, 1], [2, 2], 4),
            ([1, 2], [2, 2], 12),
            ([1, 1], [3, 3], 12),
            ([1, 1], [4, 4], 32),
            ([1, 1, 1], [2, 1, 2], 36),
            ([1, 3], [2, 2], 32),
            ([1], [1], 1),
        ],
    )
    def test_published_values(self, m, n, tau):
        assert count_spanning_trees(spec(m, n)) == tau

    @pytest.mark.parametrize("a", range(1, 9))
    @pytest.mark.parametrize("b", range(1, 9))
    def test_complete_bipartite(self, a, b):
        assert count_spanning_trees(spec([a], [b])) == tau_complete_bipartite(a, b) == a ** (b - 1) * b ** (a - 1)

    @pytest.mark.parametrize("d0", range(2, 9))
    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_quasi_tree(self, d0, k):
        assert count_spanning_trees(spec([1, 1], [d0, k])) == 2 ** (d0 - 1) * d0

    @pytest.mark.parametrize(
        "m, n_head, tau",
        [([1, 1], [2], 4), ([1, 1], [3], 12), ([1, 2], [2], 12),
         ([1, 1], [4], 32), ([1, 1, 1], [2, 1], 36), ([1, 3], [2], 32)],
    )
    def test_tail_invariance(self, m, n_head, tau):
        assert {count_spanning_trees(spec(m, n_head + [k])) for k in range(1, 51)} == {tau}

    def test_closed_form_helper(self):
        assert tau_complete_bipartite(2, 2) == 4
        assert tau_complete_bipartite(1, 7) == 1
        assert tau_complete_bipartite(3, 3) == 81
        with pytest.raises(ValueError):
            tau_complete_bipartite(0, 3)

    def test_brute_force_agreement(self, brute_force):
        for s in [spec([1, 1], [2, 2]), spec([2, 1], [1, 2]), spec([1, 1, 1], [1, 1, 1]), spec([2], [3])]:
            assert count_spanning_trees(s) == brute_force(expand(s).edge_list())

    @given(chain_specs(max_h=4, max_cell=4))
    @settings(max_examples=150, deadline=None)
    def test_matches_oracle(self, s):
        result = run_counter(s)
        assert result.tau == count_oracle(expand(s))
        assert all(g > 0 for g in result.pivots.g)

    @given(chain_specs(max_h=4, max_cell=4))
    @settings(max_examples=100, deadline=None)
    def test_colour_swap(self, s):
        assert count_spanning_trees(s) == count_spanning_trees(swap_colors(s)) == count_oracle(expand(swap_colors(s)))

    def test_swap_example(self):
        s = spec([1, 3], [2, 2])
        assert count_oracle(expand(s)) == count_oracle(expand(swap_colors(s))) == 32

    @given(chain_specs(max_h=8, max_cell=40))
    @settings(max_examples=100, deadline=None)
    def test_op_count_is_linear(self, s):
        assert run_counter(s).ops <= 7 * s.order

    def test_bit_length_reported(self):
        result = run_counter(spec([3], [3]))
        assert result.tau == 81 and result.bits == 7
