import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from egstab.connectivity import (components_mask, contraction_partner, cut_vertices, is_connected,
                                 is_three_connected, is_two_connected, safe_contraction_partner,
                                 separating_pairs)
from egstab.errors import PreconditionError
from egstab.graph import Graph, contract


class TestBasics:
    def test_small_cases(self):
        assert not is_two_connected(Graph.complete(2))
        assert is_two_connected(Graph.cycle(3))
        assert not is_three_connected(Graph.cycle(5))
        assert is_three_connected(Graph.complete(4))
        assert is_three_connected(Graph.petersen())
        assert cut_vertices(Graph.path(4)) == {1, 2}

    def test_cut_vertices_needs_connected(self):
        with pytest.raises(PreconditionError):
            cut_vertices(Graph.empty(2))

    def test_components(self):
        g = Graph.from_edges(5, [(0, 1), (2, 3)])
        assert sorted(components_mask(g)) == [0b00011, 0b01100, 0b10000]

    def test_separating_pairs_of_cycle(self):
        pairs = {(u, v) for u, v, _ in separating_pairs(Graph.cycle(5))}
        assert pairs == {(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)}


class TestAgainstNetworkx:
    @given(graphs(max_n=10))
    @settings(max_examples=200, deadline=None)
    def test_connectivity_levels(self, g):
        h = to_nx(g)
        if g.n == 0:
            return
        assert is_connected(g) == nx.is_connected(h)
        if nx.is_connected(h):
            assert cut_vertices(g) == set(nx.articulation_points(h))
        k = nx.node_connectivity(h) if g.n > 1 else 0
        assert is_two_connected(g) == (g.n >= 3 and k >= 2)
        assert is_three_connected(g) == (g.n >= 4 and k >= 3)


class TestContractionPartner:
    def test_precondition(self):
        with pytest.raises(PreconditionError):
            contraction_partner(Graph.path(4), 0)

    @given(graphs(min_n=4, max_n=9, p=0.6))
    @settings(max_examples=150, deadline=None)
    def test_partner_keeps_two_connectivity(self, g):
        if not is_two_connected(g):
            return
        for v in range(g.n):
            u = safe_contraction_partner(g, v)
            assert u is not None
            assert is_two_connected(contract(g, (v, u)))
