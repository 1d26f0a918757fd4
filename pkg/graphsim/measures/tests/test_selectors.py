from django.test import SimpleTestCase

from measures.means import MeanKind
from measures.selectors import Comparison, Family, MeasureSelector, all_selectors
from partitions.graph import build_graph
from partitions.partition import Partition

PATH4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
A = Partition.from_parts([[0, 1], [2, 3]])
B = Partition.from_parts([[0, 1, 2], [3]])


class MeasureSelectorParseTests(SimpleTestCase):
    def test_agnostic_ids(self):
        selector = MeasureSelector.parse("ARI")
        self.assertEqual(selector, MeasureSelector(Family.AGNOSTIC, "ARI"))
        self.assertFalse(selector.is_aware)
        self.assertEqual(MeasureSelector.parse("ami").label, "AMI")

    def test_aware_ids(self):
        selector = MeasureSelector.parse("ARI(G)")
        self.assertTrue(selector.is_aware)
        self.assertEqual(selector.label, "ARI(G)")
        self.assertEqual(MeasureSelector.parse("ARI(·;G)"), selector)
        self.assertEqual(MeasureSelector.parse("A11(G)").label, "A11(G)")

    def test_mean_aliases_are_normalized(self):
        self.assertEqual(MeasureSelector.parse("PC_cosine(G)").label, "PC_gmn(G)")
        self.assertEqual(MeasureSelector.parse("APC_braun_banquet").label, "APC_max")
        self.assertEqual(MeasureSelector.parse("PC_fscore").kind, MeanKind.ARITHMETIC)

    def test_invalid_ids(self):
        for text in ("PC", "AMI(G)", "A11", "RI_mn", "XYZ", "PC_median", "K(G)", "ARI G", ""):
            with self.subTest(text=text):
                with self.assertRaises(ValueError):
                    MeasureSelector.parse(text)

    def test_parse_list(self):
        selectors = MeasureSelector.parse_list("RI, ARI(G),RI,,PC_mn")
        self.assertEqual([s.label for s in selectors], ["RI", "ARI(G)", "PC_mn"])
        self.assertEqual(MeasureSelector.parse_list(["K"])[0].name, "K")
        with self.assertRaises(ValueError):
            MeasureSelector.parse_list(" , ")

    def test_all_selectors_round_trip(self):
        selectors = all_selectors()
        labels = [selector.label for selector in selectors]
        self.assertEqual(len(labels), len(set(labels)))
        for selector in selectors:
            self.assertEqual(MeasureSelector.parse(selector.label), selector)
        self.assertEqual(MeasureSelector.parse_list(" ALL "), selectors)
        self.assertIn("APC_min(G)", labels)
        self.assertNotIn("K", labels)


class ComparisonTests(SimpleTestCase):
    def test_path_fixture(self):
        values = Comparison(A, B, PATH4).values(
            MeasureSelector.parse_list("RI,ARI,RI(G),PC_mn(G),ARI(G),APC_mn(G),A11(G),K")
        )
        self.assertEqual(values["RI"], 0.5)
        self.assertEqual(values["ARI"], 0.0)
        self.assertAlmostEqual(values["RI(G)"], 1 / 3)
        self.assertEqual(values["PC_mn(G)"], 0.5)
        self.assertEqual(values["ARI(G)"], -0.5)
        self.assertEqual(values["APC_mn(G)"], -0.5)
        self.assertEqual(values["A11(G)"], 1.0)
        self.assertEqual(values["K"], 2.0)

    def test_degenerate_values_are_none(self):
        singletons = Partition.singletons(4)
        values = Comparison(singletons, singletons, PATH4).values(
            MeasureSelector.parse_list("RI,ARI,ARI(G)")
        )
        self.assertEqual(values, {"RI": 1.0, "ARI": None, "ARI(G)": None})

    def test_aware_measure_needs_graph(self):
        with self.assertRaises(ValueError):
            Comparison(A, B).value("RI(G)")
        self.assertEqual(Comparison(A, B).value("RI"), 0.5)

    def test_agreement_with_direct_functions(self):
        comparison = Comparison(A, B, PATH4)
        for selector in all_selectors():
            with self.subTest(selector=selector.label):
                try:
                    value = comparison.value(selector)
                except ArithmeticError:
                    continue
                self.assertEqual(value, Comparison(A, B, PATH4).value(selector.label))
