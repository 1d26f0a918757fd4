import math

from django.test import SimpleTestCase

from experiments.records import CurvePoint, aggregate, curve, points_frame, trial_records


class TrialRecordTests(SimpleTestCase):
    def test_degenerate_values_become_nan(self):
        records = trial_records(2, 7, {"ARI": 0.5, "ARI(G)": None}, prefix="finer:")
        self.assertEqual([r["measure"] for r in records], ["finer:ARI", "finer:ARI(G)"])
        self.assertEqual(records[0]["value"], 0.5)
        self.assertTrue(math.isnan(records[1]["value"]))
        self.assertTrue(all(r["x"] == 2 and r["trial"] == 7 for r in records))


class AggregateTests(SimpleTestCase):
    def test_mean_and_unbiased_std(self):
        records = trial_records(1, 0, {"RI": 1.0}) + trial_records(1, 1, {"RI": 3.0})
        point, = aggregate(records)
        self.assertEqual((point.x, point.measure, point.mean, point.trials, point.degenerate), (1.0, "RI", 2.0, 2, 0))
        self.assertAlmostEqual(point.std, math.sqrt(2))
        self.assertAlmostEqual(point.se, 1.0)

    def test_degenerate_trials_counted_not_dropped(self):
        records = []
        for trial, value in enumerate([0.2, None, 0.4, None]):
            records += trial_records(5, trial, {"ARI(G)": value})
        point, = aggregate(records)
        self.assertEqual((point.trials, point.degenerate, point.valid), (4, 2, 2))
        self.assertAlmostEqual(point.mean, 0.3)

    def test_single_and_no_valid_trial(self):
        single, = aggregate(trial_records(0, 0, {"RI": 0.7}))
        self.assertEqual((single.mean, single.std), (0.7, 0.0))
        empty, = aggregate(trial_records(0, 0, {"RI": None}) + trial_records(0, 1, {"RI": None}))
        self.assertTrue(math.isnan(empty.mean))
        self.assertTrue(math.isnan(empty.std))
        self.assertTrue(math.isnan(empty.se))
        self.assertEqual(empty.degenerate, 2)

    def test_independent_of_record_order(self):
        records = []
        for x in (3, 1, 2):
            for trial in range(4):
                records += trial_records(x, trial, {"B": x * 0.1 + trial, "A": x - trial * 0.01})
        forward = aggregate(records)
        self.assertEqual(forward, aggregate(list(reversed(records))))
        self.assertEqual([(p.measure, p.x) for p in forward], sorted((p.measure, p.x) for p in forward))

    def test_no_records(self):
        self.assertEqual(aggregate([]), [])


class FrameTests(SimpleTestCase):
    def test_rows_sorted_by_measure_then_x(self):
        points = [
            CurvePoint(x=x, measure=measure, mean=0.0, std=0.0, trials=1)
            for x in (2.0, 1.0) for measure in ("RI", "ARI")
        ]
        frame = points_frame(points)
        self.assertEqual(list(frame.columns), ["x", "measure", "mean", "std", "trials", "degenerate"])
        self.assertEqual(list(zip(frame["measure"], frame["x"])), [("ARI", 1.0), ("ARI", 2.0), ("RI", 1.0), ("RI", 2.0)])
        self.assertEqual([p.x for p in curve(points, "RI")], [1.0, 2.0])
