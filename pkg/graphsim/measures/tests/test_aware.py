from itertools import combinations

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from measures import agnostic
from measures.aware import (
    adjusted_graph_pc,
    adjusted_graph_rand_index,
    adjusted_graph_rand_index_via_accuracy,
    classification_similarity,
    edge_counts,
    edge_counts_from_bits,
    expected_graph_pc,
    expected_graph_ri,
    graph_pc,
    graph_rand_index,
    rand_index_from_counts,
)
from measures.exceptions import DegenerateMeasureError
from measures.means import MeanKind
from partitions.classification import EdgeClassification
from partitions.exceptions import PartitionError
from partitions.graph import build_graph
from partitions.partition import Partition
from partitions.tests.strategies import graph_and_partitions, partitions

PATH4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
TRIANGLE = build_graph(3, [(0, 1), (1, 2), (0, 2)])
A = Partition.from_parts([[0, 1], [2, 3]])
B = Partition.from_parts([[0, 1, 2], [3]])


def complete_graph(n):
    return build_graph(n, combinations(range(n), 2))


def same_or_both_degenerate(test, first, second, places=12):
    try:
        expected = first()
    except DegenerateMeasureError:
        with test.assertRaises(DegenerateMeasureError):
            second()
        return
    test.assertAlmostEqual(second(), expected, places=places)


class EdgeCountTests(SimpleTestCase):
    def test_path_fixture(self):
        counts = edge_counts(PATH4, A, B)
        self.assertEqual((counts.a11, counts.a10, counts.a01, counts.a00), (1, 1, 1, 0))
        self.assertEqual((counts.norm_a, counts.norm_b, counts.m), (2, 2, 3))

    def test_from_bits_length_mismatch(self):
        with self.assertRaises(PartitionError):
            edge_counts_from_bits(EdgeClassification.from_bits("01"), EdgeClassification.from_bits("011"))

    @settings(max_examples=100)
    @given(graph_and_partitions(max_n=10))
    def test_counts_match_enumeration(self, case):
        g, a, b = case
        counts = edge_counts(g, a, b)
        expected = {(1, 1): 0, (1, 0): 0, (0, 1): 0, (0, 0): 0}
        for u, v in g.edge_list():
            expected[(int(a.labels[u] == a.labels[v]), int(b.labels[u] == b.labels[v]))] += 1
        self.assertEqual(
            (counts.a11, counts.a10, counts.a01, counts.a00),
            (expected[(1, 1)], expected[(1, 0)], expected[(0, 1)], expected[(0, 0)]),
        )


class GraphAwareMeasureTests(SimpleTestCase):
    def test_path_fixture(self):
        self.assertAlmostEqual(graph_rand_index(PATH4, A, B), 1 / 3, places=15)
        self.assertEqual(graph_pc(PATH4, A, B, "mn"), 0.5)
        self.assertEqual(adjusted_graph_rand_index(PATH4, A, B), -0.5)
        self.assertEqual(adjusted_graph_rand_index_via_accuracy(PATH4, A, B), -0.5)
        self.assertEqual(adjusted_graph_pc(PATH4, A, B, MeanKind.ARITHMETIC), -0.5)

    def test_expectations(self):
        self.assertAlmostEqual(expected_graph_ri(2, 2, 3), 5 / 9)
        self.assertAlmostEqual(expected_graph_pc(2, 2, 3, "mn"), 2 / 3)
        self.assertAlmostEqual(expected_graph_pc(2, 8, 10, "min"), 0.8)
        with self.assertRaises(DegenerateMeasureError):
            expected_graph_ri(0, 0, 0)
        with self.assertRaises(DegenerateMeasureError):
            expected_graph_pc(0, 3, 5, "min")

    def test_no_edges_is_degenerate(self):
        g = build_graph(3, [])
        whole = Partition.whole(3)
        with self.assertRaisesMessage(DegenerateMeasureError, "RI(G) is undefined"):
            graph_rand_index(g, whole, whole)
        with self.assertRaises(DegenerateMeasureError):
            adjusted_graph_rand_index(g, whole, whole)

    def test_empty_classifications_are_degenerate(self):
        singletons = Partition.singletons(4)
        with self.assertRaises(DegenerateMeasureError):
            graph_pc(PATH4, singletons, singletons, "gmn")
        with self.assertRaises(DegenerateMeasureError):
            adjusted_graph_rand_index(PATH4, singletons, singletons)

    def test_identical_partitions(self):
        self.assertEqual(graph_rand_index(PATH4, A, A), 1.0)
        self.assertEqual(adjusted_graph_rand_index(PATH4, A, A), 1.0)
        for kind in MeanKind:
            self.assertEqual(graph_pc(PATH4, A, A, kind), 1.0)

    @settings(max_examples=150)
    @given(graph_and_partitions(min_n=2, max_n=12))
    def test_symmetry_and_range(self, case):
        g, a, b = case
        same_or_both_degenerate(self, lambda: graph_rand_index(g, a, b), lambda: graph_rand_index(g, b, a))
        for kind in MeanKind:
            same_or_both_degenerate(
                self, lambda: adjusted_graph_pc(g, a, b, kind), lambda: adjusted_graph_pc(g, b, a, kind)
            )
            try:
                value = graph_pc(g, a, b, kind)
            except DegenerateMeasureError:
                continue
            self.assertTrue(0.0 <= value <= 1.0 + 1e-12)

    @settings(max_examples=100)
    @given(st.integers(min_value=4, max_value=12).flatmap(
        lambda n: st.tuples(st.just(n), partitions(n), partitions(n))
    ))
    def test_complete_graph_collapses_to_agnostic(self, case):
        n, a, b = case
        g = complete_graph(n)
        same_or_both_degenerate(self, lambda: agnostic.rand_index(a, b), lambda: graph_rand_index(g, a, b))
        same_or_both_degenerate(
            self, lambda: agnostic.adjusted_rand_index(a, b), lambda: adjusted_graph_rand_index(g, a, b)
        )
        for kind in MeanKind:
            same_or_both_degenerate(self, lambda: agnostic.pc(a, b, kind), lambda: graph_pc(g, a, b, kind))
            same_or_both_degenerate(
                self, lambda: agnostic.adjusted_pc(a, b, kind), lambda: adjusted_graph_pc(g, a, b, kind)
            )

    @settings(max_examples=300)
    @given(graph_and_partitions(min_n=2, max_n=30))
    def test_accuracy_expansion_and_adjustment_identity(self, case):
        g, a, b = case
        counts = edge_counts(g, a, b)
        if counts.m:
            expansion = 1 - (counts.norm_a + counts.norm_b) / counts.m + 2 * counts.a11 / counts.m
            self.assertAlmostEqual(graph_rand_index(g, a, b), expansion, places=12)
        same_or_both_degenerate(
            self,
            lambda: adjusted_graph_rand_index(g, a, b),
            lambda: adjusted_graph_rand_index_via_accuracy(g, a, b),
        )

    def test_fix_intra_edges_expectation(self):
        rng = np.random.default_rng(3)
        m, norm_a, norm_b = 40, 12, 9
        first = EdgeClassification.from_bits(np.arange(m) < norm_a)
        base = np.arange(m) < norm_b
        accuracies = []
        matches = []
        for _ in range(5000):
            counts = edge_counts_from_bits(first, EdgeClassification.from_bits(rng.permutation(base)))
            accuracies.append(rand_index_from_counts(counts))
            matches.append(counts.a11)
        self.assertAlmostEqual(np.mean(accuracies), expected_graph_ri(norm_a, norm_b, m), delta=0.005)
        self.assertAlmostEqual(np.mean(matches), norm_a * norm_b / m, delta=0.1)


class ClassificationSimilarityTests(SimpleTestCase):
    def test_equivalent_classifications_score_identically(self):
        closed = EdgeClassification.from_bits("111")
        open_path = EdgeClassification.from_bits("110")
        self.assertEqual(classification_similarity(TRIANGLE, open_path, closed, rand_index_from_counts), 1.0)

    def test_distinct_classes(self):
        first = EdgeClassification.from_bits("100")
        second = EdgeClassification.from_bits("001")
        self.assertAlmostEqual(
            classification_similarity(TRIANGLE, first, second, rand_index_from_counts), 1 / 3
        )

    def test_connected_partitions_match_partition_form(self):
        b_a = EdgeClassification.from_bits("101")
        b_b = EdgeClassification.from_bits("110")
        self.assertEqual(
            classification_similarity(PATH4, b_a, b_b, rand_index_from_counts),
            graph_rand_index(PATH4, A, B),
        )
