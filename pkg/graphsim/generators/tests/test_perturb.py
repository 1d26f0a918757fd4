from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from generators.models import balanced_partition
from generators.perturb import random_coarsening, random_refinement
from generators.seeds import Seed
from partitions.exceptions import PartitionError
from partitions.partition import Partition, is_refinement
from partitions.tests.strategies import partitions

SIX_PARTS = balanced_partition([10] * 6)


class CoarseningTests(SimpleTestCase):
    def test_to_one_part(self):
        self.assertEqual(random_coarsening(SIX_PARTS, 1, Seed(0)), Partition.whole(60))

    def test_same_count_is_identity(self):
        self.assertEqual(random_coarsening(SIX_PARTS, 6, Seed(0)), SIX_PARTS)

    def test_infeasible(self):
        with self.assertRaises(PartitionError):
            random_coarsening(SIX_PARTS, 7, Seed(0))
        with self.assertRaises(PartitionError):
            random_coarsening(SIX_PARTS, 0, Seed(0))

    def test_merges_whole_parts(self):
        b1 = random_coarsening(SIX_PARTS, 3, Seed(1))
        self.assertEqual(b1.k, 3)
        self.assertTrue(is_refinement(SIX_PARTS, b1))
        self.assertTrue(all(size % 10 == 0 for size in b1.sizes().tolist()))

    @settings(max_examples=100)
    @given(
        st.integers(min_value=1, max_value=20)
        .flatmap(partitions)
        .flatmap(lambda a: st.tuples(st.just(a), st.integers(1, a.k), st.integers(0, 2**32)))
    )
    def test_always_a_coarsening(self, case):
        a, target_k, seed = case
        b = random_coarsening(a, target_k, Seed(seed))
        self.assertEqual(b.k, target_k)
        self.assertTrue(is_refinement(a, b))


class RefinementTests(SimpleTestCase):
    def test_to_singletons(self):
        self.assertEqual(random_refinement(SIX_PARTS, 60, Seed(0)), Partition.singletons(60))

    def test_balanced_split(self):
        b = random_refinement(Partition.whole(7), 2, Seed(3))
        self.assertEqual(sorted(b.sizes().tolist()), [3, 4])

    def test_infeasible(self):
        with self.assertRaises(PartitionError):
            random_refinement(SIX_PARTS, 5, Seed(0))
        with self.assertRaises(PartitionError):
            random_refinement(SIX_PARTS, 61, Seed(0))

    def test_twelve_parts(self):
        b2 = random_refinement(SIX_PARTS, 12, Seed(2))
        self.assertEqual(b2.k, 12)
        self.assertTrue(is_refinement(b2, SIX_PARTS))

    @settings(max_examples=100)
    @given(
        st.integers(min_value=1, max_value=20)
        .flatmap(partitions)
        .flatmap(lambda a: st.tuples(st.just(a), st.integers(a.k, a.n), st.integers(0, 2**32)))
    )
    def test_always_a_refinement(self, case):
        a, target_k, seed = case
        b = random_refinement(a, target_k, Seed(seed))
        self.assertEqual(b.k, target_k)
        self.assertTrue(is_refinement(b, a))

    def test_deterministic(self):
        self.assertEqual(random_refinement(SIX_PARTS, 9, Seed(4)), random_refinement(SIX_PARTS, 9, Seed(4)))
