import numpy as np
import networkx as nx
from django.test import SimpleTestCase
from hypothesis import given, settings

from partitions.exceptions import GraphError
from partitions.graph import build_graph

from .strategies import graphs


class BuildGraphTests(SimpleTestCase):
    def test_normalizes_and_orders_edges(self):
        g = build_graph(4, [(3, 2), (1, 0), (2, 0)])
        self.assertEqual(g.edge_list(), [(0, 1), (0, 2), (2, 3)])
        self.assertEqual(g.m, 3)
        self.assertEqual(g.n, 4)

    def test_isolated_vertices_are_kept(self):
        g = build_graph(5, [(0, 1)])
        self.assertEqual(g.n, 5)
        self.assertEqual(g.degree(4), 0)
        self.assertEqual(g.neighbors(4), [])

    def test_self_loop_rejected(self):
        with self.assertRaisesMessage(GraphError, "self-loop at vertex 2"):
            build_graph(3, [(0, 1), (2, 2)])

    def test_duplicate_edge_rejected_in_either_orientation(self):
        with self.assertRaisesMessage(GraphError, "duplicate edge (0, 1)"):
            build_graph(3, [(0, 1), (1, 2), (1, 0)])

    def test_endpoint_out_of_range(self):
        with self.assertRaises(GraphError):
            build_graph(3, [(0, 3)])
        with self.assertRaises(GraphError):
            build_graph(3, [(-1, 0)])

    def test_negative_vertex_count(self):
        with self.assertRaises(GraphError):
            build_graph(-1, [])

    def test_empty_graph(self):
        g = build_graph(0, [])
        self.assertEqual((g.n, g.m), (0, 0))

    def test_edge_arrays_are_read_only(self):
        g = build_graph(3, [(0, 1)])
        with self.assertRaises(ValueError):
            g.edges[0, 0] = 2

    def test_edge_index(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(g.edge_index(2, 1), 1)
        self.assertEqual(g.edge_index(2, 3), 2)
        with self.assertRaises(GraphError):
            g.edge_index(0, 3)

    def test_equality(self):
        self.assertEqual(build_graph(3, [(1, 0)]), build_graph(3, [(0, 1)]))
        self.assertNotEqual(build_graph(3, [(0, 1)]), build_graph(4, [(0, 1)]))


class AdjacencyTests(SimpleTestCase):
    def test_star(self):
        g = build_graph(4, [(0, 3), (0, 1), (0, 2)])
        self.assertEqual(g.neighbors(0), [1, 2, 3])
        self.assertEqual(g.adjacency, ((1, 2, 3), (0,), (0,), (0,)))
        self.assertEqual(g.degree(0), 3)

    @settings(max_examples=100)
    @given(graphs(max_n=10))
    def test_adjacency_matches_networkx(self, g):
        reference = nx.Graph()
        reference.add_nodes_from(range(g.n))
        reference.add_edges_from(g.edge_list())
        for vertex in range(g.n):
            self.assertEqual(g.neighbors(vertex), sorted(reference.neighbors(vertex)))

    @settings(max_examples=100)
    @given(graphs(max_n=10))
    def test_incident_edges_point_back(self, g):
        for vertex in range(g.n):
            start, stop = g.indptr[vertex], g.indptr[vertex + 1]
            for neighbor, edge in zip(g.adjacent[start:stop], g.incident_edges[start:stop]):
                self.assertEqual(set(g.edges[edge].tolist()), {vertex, int(neighbor)})
        self.assertEqual(int(np.sum(np.diff(g.indptr))), 2 * g.m)
