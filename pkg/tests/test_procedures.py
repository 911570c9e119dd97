import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from egstab.connectivity import is_two_connected
from egstab.cycles import circumference, has_cycle_at_least
from egstab.errors import PreconditionError, ProcedureInvariantError
from egstab.extremal.bounds import h
from egstab.extremal.constructions import build_H
from egstab.graph import Graph, contract
from egstab.isomorphism import are_isomorphic
from egstab.procedures import (alpha_core, bp_step, core_mask, is_k_closed, k_closure, lemma9_holds,
                               mbp_step, run_procedure)


class TestCores:
    def test_examples(self):
        assert alpha_core(Graph.complete(5), 3).n == 5
        assert alpha_core(Graph.star(5), 1).n == 0
        core = alpha_core(build_H(14, 11, 3)[0], 3)
        assert core.n == 8 and core.edge_count() == 28

    def test_negative_alpha(self):
        with pytest.raises(PreconditionError):
            alpha_core(Graph.complete(3), -1)

    @given(graphs(max_n=12), st.integers(0, 6))
    @settings(max_examples=150, deadline=None)
    def test_matches_networkx_k_core(self, g, alpha):
        ours = {v for v in range(g.n) if core_mask(g, alpha) >> v & 1}
        assert ours == set(nx.k_core(to_nx(g), alpha + 1).nodes())

    @given(graphs(max_n=12), st.integers(0, 6), st.randoms(use_true_random=False))
    @settings(max_examples=100, deadline=None)
    def test_order_independent(self, g, alpha, rnd):
        order = list(range(g.n))
        rnd.shuffle(order)
        assert core_mask(g, alpha, order) == core_mask(g, alpha)


class TestClosure:
    def test_cycle_closes_to_clique(self):
        assert k_closure(Graph.cycle(5), 6) == Graph.complete(5)

    def test_extremal_graph_is_closed(self):
        g, _ = build_H(12, 9, 2)
        assert k_closure(g, 9) == g
        assert is_k_closed(g, 9)

    def test_rejects_long_cycle(self):
        with pytest.raises(PreconditionError):
            k_closure(Graph.cycle(6), 6)

    @given(graphs(min_n=3, max_n=8, p=0.4), st.integers(4, 8))
    @settings(max_examples=100, deadline=None)
    def test_safe_and_maximal(self, g, k):
        if has_cycle_at_least(g, k):
            return
        cl = k_closure(g, k)
        assert all(cl.adj[v] & g.adj[v] == g.adj[v] for v in range(g.n))
        assert circumference(cl)[0] < k
        # brute force: every missing pair would create a long cycle
        for x, y in cl.non_edges():
            assert has_cycle_at_least(cl.add_edges([(x, y)]), k)


class TestSteps:
    def test_bp1_at_k(self):
        assert bp_step(build_H(9, 9, 2)[0], 9).rule == "BP1"

    def test_bp2_contracts_low_triangle_edge(self):
        out = bp_step(build_H(10, 9, 2)[0], 9)
        assert out.rule == "BP2" and out.edge == (0, 2)
        assert are_isomorphic(out.graph, build_H(9, 9, 2)[0])

    def test_bp4_when_nothing_applies(self):
        assert bp_step(Graph.complete(6), 9).rule == "BP4"

    def test_bp3_removes_hanging_clique(self):
        # four triangles hanging on the edge 01; every edge sits in 3+ triangles
        edges = [(0, 1)]
        for i in range(4):
            b = [2 + 3 * i + j for j in range(3)]
            edges += [(b[0], b[1]), (b[0], b[2]), (b[1], b[2])] + [(u, v) for u in b for v in (0, 1)]
        g = Graph.from_edges(14, edges)
        assert circumference(g)[0] == 8
        out = bp_step(g, 9)
        assert out.rule == "BP3" and out.removed == (2, 3, 4)
        assert out.graph.n == 11 and is_two_connected(out.graph)

    def test_mbp2_min_degree_contraction(self):
        out = mbp_step(build_H(14, 11, 3)[0], 11)
        assert out.rule == "MBP2" and out.edge == (3, 0)

    def test_steps_need_two_connected(self):
        with pytest.raises(PreconditionError):
            bp_step(Graph.path(10), 9)


class TestRuns:
    def test_bp_stops_by_bp4(self):
        tr = run_procedure(build_H(12, 9, 4)[0], 9, "BP")
        assert tr.stop_rule == "BP4" and tr.m == 12

    def test_mbp_reaches_k(self):
        tr = run_procedure(build_H(13, 11, 3)[0], 11, "MBP", require_dense=False)
        assert [s.rule for s in tr.steps] == ["MBP2", "MBP2"]
        assert tr.stop_rule == "MBP1" and tr.m == 11

    def test_mbp_dense_delegates(self):
        g = build_H(13, 11, 5)[0].remove_edges([(0, 5)])
        assert g.edge_count() > h(13, 11, 4)
        tr = run_procedure(g, 11, "MBP")
        assert tr.steps[0].rule == "MBP2"
        assert tr.stop_rule.startswith("MBP0/")

    def test_trace_rendering(self):
        tr = run_procedure(build_H(10, 9, 2)[0], 9, "BP", require_dense=False)
        d = tr.as_dict()
        assert d["stop_rule"] == "BP1" and d["m"] == 9
        assert tr.lines()[-1].startswith("stop BP1")

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            run_procedure(build_H(13, 11, 3)[0], 11, "MBP")  # not dense
        with pytest.raises(PreconditionError):
            run_procedure(build_H(10, 9, 4)[0], 9, "XP")
        with pytest.raises(PreconditionError):
            run_procedure(Graph.complete(9), 9)

    def test_invariant_error_carries_trace(self):
        with pytest.raises(ProcedureInvariantError) as info:
            run_procedure(build_H(13, 11, 3)[0], 11, "MBP", require_dense=False, budget=1)
        assert len(info.value.trace.steps) == 1

    @given(st.integers(0, 10_000))
    @settings(max_examples=25, deadline=None)
    def test_random_dense_runs_keep_invariants(self, seed):
        rng = random.Random(seed)
        k = rng.choice((9, 10, 11))
        n = rng.randint(k, k + 3)
        g, _ = build_H(n, k, (k - 1) // 2)
        drop = [e for e in g.edges() if rng.random() < 0.05]
        g = g.remove_edges(drop)
        if not is_two_connected(g) or g.edge_count() <= h(n, k, (k - 1) // 2 - 1):
            return
        tr = run_procedure(g, k, rng.choice(("BP", "MBP")))
        assert all(is_two_connected(x) and x.n >= k for x in tr.graphs)


class TestLemma9:
    def test_complete_graph_case(self):
        k5 = Graph.complete(5)
        assert lemma9_holds(k5, contract(k5, (0, 1)), 3)

    def test_vacuous(self):
        assert lemma9_holds(Graph.cycle(6), Graph.cycle(5), 3)
