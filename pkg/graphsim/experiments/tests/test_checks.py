import math
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase, tag

from experiments.checks import (
    CHECK_COLUMNS,
    CheckConfig,
    check_theorem_hypotheses,
    lemma1_check,
    lower_bound_coarsening,
    nested_pc_mn,
    random_theorem_config,
    theorem1_check,
    theorem1_part_one,
    upper_bound_refinement,
)
from experiments.exceptions import HypothesisViolation
from generators.models import PlantedSpec, balanced_partition
from generators.seeds import Seed
from measures.agnostic import pc
from partitions.partition import Partition, intra_pair_count

SIX_TENS = balanced_partition([10] * 6)


def desk_config(coarse_k=3, fine_k=12, p=0.8, q=0.1, seed=0):
    return CheckConfig.draw(SIX_TENS, p, q, coarse_k, fine_k, Seed(seed))


class ConfigTests(SimpleTestCase):
    def test_draw_nests_partitions(self):
        config = desk_config()
        self.assertEqual((config.b1.k, config.b2.k), (3, 12))
        self.assertEqual(config.pairs_a, 270)
        self.assertEqual(config.x1, config.pairs_b1 - 270)
        self.assertEqual(config.x2, 270 - config.pairs_b2)
        self.assertEqual(config.spec.k1, 216)

    def test_same_seed_same_config(self):
        first, second = desk_config(seed=5), desk_config(seed=5)
        self.assertEqual((first.b1, first.b2), (second.b1, second.b2))

    def test_rejects_non_nested_candidates(self):
        a = Partition.from_parts([[0, 1], [2, 3]])
        crossing = Partition.from_parts([[0, 2], [1, 3]])
        spec = PlantedSpec.from_densities(a, 0.5, 0.5)
        with self.assertRaisesMessage(HypothesisViolation, "A <= B1"):
            CheckConfig(a=a, b1=crossing, b2=a, spec=spec)
        with self.assertRaisesMessage(HypothesisViolation, "B2 <= A"):
            CheckConfig(a=a, b1=a, b2=crossing, spec=spec)


class BoundTests(SimpleTestCase):
    def test_nested_pc_matches_agnostic_pc(self):
        config = desk_config()
        for b in (config.b1, config.b2):
            expected = pc(config.a, b, "mn")
            self.assertAlmostEqual(float(nested_pc_mn(config.pairs_a, intra_pair_count(b))), expected)

    def test_nested_pc_values(self):
        self.assertEqual(nested_pc_mn(10, 20), Fraction(2, 3))
        self.assertEqual(nested_pc_mn(10, 10), 1)

    def test_bounds(self):
        config = desk_config()
        self.assertAlmostEqual(
            lower_bound_coarsening(config),
            config.p * 270 / (config.p * 270 + 0.5 * config.q * config.x1),
        )
        self.assertAlmostEqual(upper_bound_refinement(config), (270 - config.x2) / (270 - config.x2 / 2))
        self.assertLess(upper_bound_refinement(config), 1.0)


class LemmaTests(SimpleTestCase):
    def test_identical_coarsening_is_consistent(self):
        report = lemma1_check(desk_config(coarse_k=6), 30, Seed(1))
        row = report.rows[0]
        self.assertEqual((row.left, row.right, row.std), (1.0, 1.0, 0.0))
        self.assertTrue(row.passed)

    def test_desk_configuration(self):
        report = lemma1_check(desk_config(), 300, Seed(2))
        coarse, fine = report.rows
        self.assertTrue(coarse.applicable and fine.applicable)
        self.assertTrue(coarse.passed)
        self.assertGreaterEqual(coarse.left, coarse.right)
        # the refinement side is tight in expectation, so allow a wider band
        self.assertLessEqual(fine.left, fine.right + 4 * fine.se)
        self.assertEqual((coarse.trials, coarse.degenerate), (300, 0))
        self.assertEqual(list(report.frame().columns), CHECK_COLUMNS)

    def test_part_one_needs_p_at_least_q(self):
        report = lemma1_check(desk_config(p=0.1, q=0.3), 20, Seed(3))
        coarse, fine = report.rows
        self.assertFalse(coarse.applicable)
        self.assertIsNone(coarse.passed)
        self.assertTrue(fine.applicable)

    def test_refinement_side_holds_when_q_exceeds_p(self):
        report = lemma1_check(desk_config(p=0.3, q=0.6), 300, Seed(9))
        coarse, fine = report.rows
        self.assertFalse(coarse.applicable)
        self.assertTrue(fine.applicable)
        self.assertLessEqual(fine.left, fine.right + 4 * fine.se)

    @tag("slow")
    def test_refinement_side_holds_when_q_exceeds_p_full(self):
        report = lemma1_check(desk_config(p=0.3, q=0.6), 2000, Seed(10))
        self.assertTrue(report.rows[1].passed)
        self.assertTrue(report.passed)

    def test_same_report_for_any_worker_count(self):
        config = desk_config()
        first = lemma1_check(config, 40, Seed(4), workers=1)
        second = lemma1_check(config, 40, Seed(4), workers=6)
        self.assertEqual(first.rows, second.rows)

    @tag("slow")
    def test_desk_configuration_full(self):
        report = lemma1_check(desk_config(), 2000, Seed(5))
        self.assertTrue(report.passed)


class TheoremTests(SimpleTestCase):
    def test_size_condition_gate(self):
        a = balanced_partition([5, 5])
        config = CheckConfig(
            a=a, b1=Partition.whole(10), b2=Partition.singletons(10),
            spec=PlantedSpec.from_densities(a, 0.9, 0.1),
        )
        with self.assertRaises(HypothesisViolation) as caught:
            theorem1_check(config, 10, Seed(0))
        self.assertEqual(caught.exception.inequality, "|P_A|^2 >= |P_B1|*|P_B2|")

    def test_density_condition_gate(self):
        config = desk_config(coarse_k=2, fine_k=12, p=0.1, q=0.9)
        with self.assertRaisesMessage(HypothesisViolation, "p <= q*|P_B1 \\ P_A|/|P_A \\ P_B2|"):
            check_theorem_hypotheses(config)

    def test_part_one_on_random_valid_configs(self):
        rng = np.random.default_rng(2024)
        checked = 0
        while checked < 1000:
            config = random_theorem_config(rng)
            if config is None:
                continue
            self.assertTrue(theorem1_part_one(config), msg=(config.pairs_a, config.pairs_b1, config.pairs_b2))
            checked += 1

    def test_strong_structure_ordering(self):
        report = theorem1_check(desk_config(coarse_k=2, fine_k=12, p=0.8, q=0.02), 200, Seed(6))
        exact, sampled = report.rows
        self.assertTrue(exact.passed)
        self.assertLess(exact.left, exact.right)
        self.assertTrue(sampled.passed)
        self.assertGreater(sampled.left - sampled.right, 3 * sampled.se)
        self.assertTrue(report.passed)

    @tag("slow")
    def test_strong_structure_ordering_full(self):
        report = theorem1_check(desk_config(coarse_k=2, fine_k=12, p=0.8, q=0.02, seed=7), 2000, Seed(8))
        self.assertTrue(report.passed)
        self.assertFalse(math.isnan(report.rows[1].bound))

    @tag("slow")
    def test_sampled_ordering_on_random_valid_configs_full(self):
        rng = np.random.default_rng(2025)
        configs = []
        while len(configs) < 20:
            config = random_theorem_config(rng)
            if config is None:
                continue
            try:
                check_theorem_hypotheses(config)
            except HypothesisViolation:
                continue
            configs.append(config)
        passed = [
            theorem1_check(config, 2000, Seed(100 + index)).rows[1].passed
            for index, config in enumerate(configs)
        ]
        self.assertGreaterEqual(sum(passed), 19, msg=passed)
