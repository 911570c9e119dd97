import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from egstab.errors import EdgeNotFoundError, PreconditionError, VertexIndexError
from egstab.graph import (DegreeProfile, Graph, bits, contract, delete_vertices, disjoint_union,
                          induced_subgraph, mask_of, min_edge_triangle, triangle_count_edge)


class TestConstruction:
    def test_named_graphs(self):
        assert Graph.complete(5).edge_count() == 10
        assert Graph.cycle(7).degrees() == [2] * 7
        assert Graph.path(4).edge_count() == 3
        assert Graph.complete_bipartite(3, 4).edge_count() == 12
        assert Graph.star(5).degree(0) == 5
        p = Graph.petersen()
        assert p.edge_count() == 15 and set(p.degrees()) == {3}

    def test_rejects_loops_and_bad_indices(self):
        with pytest.raises(PreconditionError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(VertexIndexError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(PreconditionError):
            Graph(2, [0b10, 0])  # asymmetric
        with pytest.raises(PreconditionError):
            Graph.from_edges(65, [])

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1

    def test_edges_are_ordered_pairs(self):
        g = Graph.from_edges(4, [(3, 0), (2, 1)])
        assert list(g.edges()) == [(0, 3), (1, 2)]
        assert len(list(g.non_edges())) == 4

    def test_bits_round_trip(self):
        assert list(bits(mask_of([5, 0, 3]))) == [0, 3, 5]


class TestDegreeProfile:
    def test_one_based(self):
        d = DegreeProfile(Graph.star(3))
        assert [d.d(i) for i in range(1, 5)] == [1, 1, 1, 3]

    def test_out_of_range(self):
        with pytest.raises(PreconditionError):
            DegreeProfile(Graph.complete(3)).d(4)


class TestContraction:
    def test_triangle_to_edge(self):
        c = contract(Graph.complete(3), (0, 1))
        assert c.n == 2 and c.edge_count() == 1

    def test_missing_edge(self):
        with pytest.raises(EdgeNotFoundError):
            contract(Graph.path(3), (0, 2))

    @given(graphs(min_n=2, max_n=9), st.data())
    @settings(max_examples=150, deadline=None)
    def test_matches_networkx(self, g, data):
        edges = list(g.edges())
        if not edges:
            return
        u, v = data.draw(st.sampled_from(edges))
        ours = contract(g, (u, v))
        theirs = nx.contracted_nodes(to_nx(g), u, v, self_loops=False)
        assert nx.is_isomorphic(to_nx(ours), nx.Graph(theirs))

    def test_relabel_convention(self):
        # C5 contract (1, 2): vertex 4 moves into slot 2
        c = contract(Graph.cycle(5), (1, 2))
        assert c.n == 4
        assert c.has_edge(0, 1) and c.has_edge(1, 3) and c.has_edge(3, 2) and c.has_edge(2, 0)


class TestTriangles:
    def test_counts(self):
        k4 = Graph.complete(4)
        assert triangle_count_edge(k4, (0, 1)) == 2
        assert min_edge_triangle(Graph.cycle(5)) == 0
        with pytest.raises(PreconditionError):
            min_edge_triangle(Graph.empty(3))

    @given(graphs(min_n=2, max_n=9))
    @settings(max_examples=100, deadline=None)
    def test_total_matches_networkx(self, g):
        total = sum(triangle_count_edge(g, e) for e in g.edges())
        # each triangle is counted once per edge and once per vertex
        assert total == sum(nx.triangles(to_nx(g)).values())


class TestSubgraphs:
    def test_induced_and_delete(self):
        g = Graph.cycle(6)
        h = induced_subgraph(g, [0, 1, 2])
        assert h.n == 3 and h.edge_count() == 2
        assert delete_vertices(g, [0]).edge_count() == 4
        with pytest.raises(VertexIndexError):
            induced_subgraph(g, [6])

    def test_disjoint_union(self):
        u = disjoint_union(Graph.complete(3), Graph.path(2))
        assert u.n == 5 and u.edge_count() == 4 and not u.has_edge(2, 3)

    @given(graphs(max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_complement_involution(self, g):
        assert g.complement().complement() == g
        assert g.edge_count() + g.complement().edge_count() == g.n * (g.n - 1) // 2


class TestOnConstructions:
    def test_low_degree_vertices_are_B(self):
        from egstab.extremal.constructions import build_H
        from egstab.graph import vertices_of_degree_at_most
        g, parts = build_H(14, 11, 3)
        assert vertices_of_degree_at_most(g, 3) == parts.B

    def test_contracting_a_B_vertex(self):
        from egstab.extremal.constructions import build_H, h_graph_from_parts
        from egstab.isomorphism import are_isomorphic
        g, parts = build_H(9, 9, 2)
        b, a1 = min(parts.B), min(parts.A)
        # one fewer B vertex: the order-8 graph with parts 2, 1, 5
        assert are_isomorphic(contract(g, (a1, b)), h_graph_from_parts(2, 1, 5)[0])
        assert min_edge_triangle(g) == 1

    def test_prism_is_not_K33(self):
        from egstab.isomorphism import are_isomorphic
        prism = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
        assert not are_isomorphic(prism, Graph.complete_bipartite(3, 3))
