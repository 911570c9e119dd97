import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_circumference, brute_longest_path, graphs
from egstab.connectivity import is_two_connected
from egstab.cycles import (BudgetExceeded, SearchBudget, chvatal_index, circumference, circumference_dfs,
                           erdos_threshold, has_cycle_at_least, has_path_at_least, is_hamiltonian,
                           kopylov_path_bound_holds, longest_path_between, longest_path_witness)
from egstab.errors import PreconditionError, SearchLimitError
from egstab.extremal.constructions import build_H
from egstab.graph import Graph


class TestCircumference:
    @pytest.mark.parametrize("g, c", [
        (Graph.empty(5), 0),
        (Graph.path(6), 0),
        (Graph.cycle(7), 7),
        (Graph.complete(6), 6),
        (Graph.complete_bipartite(3, 5), 6),
        (Graph.petersen(), 9),
    ])
    def test_known(self, g, c):
        length, w = circumference(g)
        assert length == c
        assert circumference_dfs(g)[0] == c
        if c:
            assert w.length == c and w.is_valid_in(g)

    @given(graphs(max_n=7))
    @settings(max_examples=250, deadline=None)
    def test_brute_force_oracle(self, g):
        c = brute_circumference(g)
        length, w = circumference(g)
        assert length == c
        assert circumference_dfs(g)[0] == c
        if c:
            assert w.is_valid_in(g) and w.length == c

    @given(graphs(min_n=3, max_n=12, p=0.5))
    @settings(max_examples=80, deadline=None)
    def test_dp_and_dfs_agree(self, g):
        assert circumference(g)[0] == circumference_dfs(g)[0]

    @given(graphs(max_n=9), st.integers(0, 10))
    @settings(max_examples=150, deadline=None)
    def test_threshold_query(self, g, k):
        assert has_cycle_at_least(g, k) == (circumference(g)[0] >= k)

    def test_limit(self):
        with pytest.raises(SearchLimitError):
            circumference(Graph.cycle(10), limit=9)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            circumference_dfs(Graph.petersen(), budget=SearchBudget(5))

    def test_hamiltonian(self):
        assert not is_hamiltonian(Graph.petersen())
        assert is_hamiltonian(Graph.complete(5))
        assert not is_hamiltonian(Graph.complete_bipartite(3, 4))


class TestPaths:
    @given(graphs(min_n=2, max_n=7), st.data())
    @settings(max_examples=150, deadline=None)
    def test_longest_path_oracle(self, g, data):
        x = data.draw(st.integers(0, g.n - 1))
        y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
        best = brute_longest_path(g, x, y)
        assert longest_path_between(g, x, y) == max(best, 0)
        w = longest_path_witness(g, x, y)
        if best < 0:
            assert w is None
        else:
            assert w.is_valid_in(g) and w.order == best + 1 and (w.x, w.y) == (x, y)
        for edges in range(0, g.n + 1):
            assert has_path_at_least(g, x, y, edges) == (best >= edges)

    def test_same_endpoint(self):
        with pytest.raises(PreconditionError):
            longest_path_between(Graph.complete(3), 1, 1)


class TestKopylovPathLemma:
    @given(graphs(min_n=3, max_n=8, p=0.6), st.data())
    @settings(max_examples=100, deadline=None)
    def test_holds_on_longest_paths(self, g, data):
        if not is_two_connected(g):
            return
        x, y = data.draw(st.sampled_from([(u, v) for u in range(g.n) for v in range(u + 1, g.n)]))
        w = longest_path_witness(g, x, y)
        assert kopylov_path_bound_holds(g, w)


class TestDegreeConditions:
    def test_chvatal_index(self):
        # K_{2,3}: d_2 = 2 <= 2 and d_3 = 2 < 3
        assert chvatal_index(Graph.complete_bipartite(2, 3)) == 2
        assert chvatal_index(Graph.complete(5)) is None
        assert chvatal_index(Graph.path(4)) == 1
        with pytest.raises(PreconditionError):
            chvatal_index(Graph.complete(2))

    @pytest.mark.parametrize("n, d, ell", [(5, 1, 7), (5, 2, 7), (7, 3, 15), (9, 2, 26), (9, 4, 26)])
    def test_erdos_threshold(self, n, d, ell):
        assert erdos_threshold(n, d) == ell

    def test_erdos_threshold_precondition(self):
        with pytest.raises(PreconditionError):
            erdos_threshold(6, 3)

    @pytest.mark.parametrize("n, d", [(5, 1), (7, 2), (8, 3), (9, 2), (9, 4)])
    def test_threshold_is_attained(self, n, d):
        # H_{n,n,a}: K_a joined to a independent vertices and to K_{n-2a}
        best = max(build_H(n, n, a)[0].edge_count() for a in (d, (n - 1) // 2))
        assert best == erdos_threshold(n, d)
        for a in (d, (n - 1) // 2):
            g, _ = build_H(n, n, a)
            assert not is_hamiltonian(g) and g.min_degree() >= d
