from unittest import TestCase
from fractions import Fraction
import math
from knotcomm.certified import CertifiedReal
from knotcomm.certified import DEFAULT_RADIUS
from knotcomm.covers import b1_of_cover
from knotcomm.knots import tau, rho, mirror
from knotcomm import obstructions
from knotcomm.obstructions import (
        PASS, FAIL, INCONCLUSIVE, B1Violation, ObstructionReport,
        interval_verdict, best_verdict, worst_verdict,
        static_compare, cover_pair_test, multiset_power_test, ratio_scan, orientation_test,
        rational_dependence_probe)
from . import utils as test_utils


class TestVerdicts(TestCase):
    def test_interval(self):
        self.assertEqual(interval_verdict(CertifiedReal(Fraction(1), Fraction(1, 10))), FAIL)
        self.assertEqual(interval_verdict(CertifiedReal(Fraction(0), Fraction(1, 10 ** 9))), PASS)
        self.assertEqual(interval_verdict(CertifiedReal(Fraction(1, 100), Fraction(1, 10))), INCONCLUSIVE)
        self.assertEqual(interval_verdict(CertifiedReal(Fraction(0), Fraction(1, 10)), Fraction(1)), PASS)

    def test_combine(self):
        self.assertEqual(best_verdict([FAIL, PASS]), PASS)
        self.assertEqual(best_verdict([FAIL, INCONCLUSIVE]), INCONCLUSIVE)
        self.assertEqual(worst_verdict([PASS, INCONCLUSIVE]), INCONCLUSIVE)
        self.assertEqual(worst_verdict([PASS, FAIL, INCONCLUSIVE]), FAIL)
        self.assertEqual(worst_verdict([]), PASS)

    def test_report(self):
        report = ObstructionReport(knots=("a", "b"))
        report.add(obstructions.TestEntry("tau", PASS))
        report.add(obstructions.TestEntry("rho", FAIL, epsilon=1))
        report.add(obstructions.TestEntry("rho", PASS, epsilon=-1))
        self.assertEqual(report.group_verdicts(), {"tau": PASS, "rho": PASS})
        self.assertEqual(report.verdict, PASS)
        self.assertEqual(report.entry("rho", 1).verdict, FAIL)
        self.assertIsNone(report.entry("multiset"))
        report.add(obstructions.TestEntry("degree", FAIL))
        self.assertEqual(report.verdict, FAIL)


class TestStatic(TestCase):
    def test_degree(self):
        report = static_compare(test_utils.knot("Ds"), test_utils.knot("Df"))
        self.assertEqual(report.verdict, FAIL)
        self.assertEqual(report.entry("degree").verdict, FAIL)
        self.assertEqual(report.entry("degree").witnesses["degrees"], (8, 10))
        self.assertEqual(report.entry("monic").verdict, FAIL)
        self.assertEqual(report.entry("genus").verdict, FAIL)
        self.assertEqual(report.entry("fibered").verdict, FAIL)

    def test_pass(self):
        report = static_compare(test_utils.knot("9_48"), test_utils.knot("12n_642"))
        self.assertEqual(report.verdict, PASS)
        self.assertEqual(report.entry("admissible").witnesses["admissible"], (True, True))
        self.assertEqual(report.caveats, [])

    def test_not_admissible(self):
        report = static_compare(test_utils.knot("trefoil"), test_utils.knot("trefoil"))
        self.assertEqual(report.verdict, PASS)
        self.assertEqual(len(report.caveats), 1)


class TestCoverPair(TestCase):
    def test_commensurable_covers(self):
        report = cover_pair_test(test_utils.knot("9_48"), 8, test_utils.knot("12n_642"), 6)
        self.assertEqual(report.entry("tau").verdict, PASS)
        diff = report.entry("tau").quantities["difference"]
        self.assertTrue(diff.contains(0))
        self.assertLess(diff.radius, Fraction(1, 10 ** 8))
        self.assertEqual(report.entry("rho", -1).verdict, PASS)
        self.assertEqual(report.entry("rho", 1).verdict, FAIL)
        self.assertEqual(report.entry("rho", -1).witnesses["signature sums"], (14, 10))
        self.assertEqual(report.verdict, PASS)
        self.assertIn("within", report.corollary)
        self.assertIn("of the integer 24", report.corollary)

    def test_first_ratio(self):
        report = cover_pair_test(test_utils.knot("9_48"), 4, test_utils.knot("12n_642"), 3)
        self.assertEqual(report.entry("tau").verdict, PASS)
        left = report.entry("rho", 1).quantities["n1·ρ(K1) - Σσ(K1)"]
        right = report.entry("rho", 1).quantities["n2·ρ(K2) - Σσ(K2)"]
        self.assertLess(abs(float(left) - 0.580492), 1e-5)
        self.assertLess(abs(float(right) - 1.419509), 1e-5)
        self.assertEqual(report.entry("rho", 1).verdict, FAIL)
        self.assertEqual(report.entry("rho", -1).verdict, FAIL)
        self.assertEqual(report.verdict, FAIL)
        self.assertIn("not an integer: excluded", report.corollary)

    def test_orientation_values(self):
        report = cover_pair_test(test_utils.knot("9_48"), 8, test_utils.knot("12n_642"), 6)
        left = report.entry("rho", 1).quantities["n1·ρ(K1) - Σσ(K1)"]
        right = report.entry("rho", 1).quantities["n2·ρ(K2) - Σσ(K2)"]
        self.assertLess(abs(float(left) + 0.839017), 1e-5)
        self.assertLess(abs(float(right) - 0.839017), 1e-5)

    def test_single_epsilon(self):
        report = cover_pair_test(test_utils.knot("9_48"), 8, test_utils.knot("12n_642"), 6, epsilon=1)
        self.assertEqual([e.epsilon for e in report.entries if e.test == "rho"], [1])
        self.assertEqual(report.verdict, FAIL)
        with self.assertRaises(ValueError):
            cover_pair_test(test_utils.knot("9_48"), 8, test_utils.knot("12n_642"), 6, epsilon=2)

    def test_b1(self):
        with self.assertRaises(B1Violation):
            cover_pair_test(test_utils.knot("trefoil"), 6, test_utils.knot("9_48"), 6)

    def test_figure8(self):
        # τ(figure8) > 0 = τ(trefoil), and ρ vanishes on both sides
        report = cover_pair_test(test_utils.knot("figure8"), 1, test_utils.knot("trefoil"), 1)
        self.assertEqual(report.entry("tau").verdict, FAIL)


class TestCoverPairProperties(TestCase):
    def verdicts(self, report):
        return [(e.test, e.epsilon, e.verdict) for e in report.entries]

    def test_mirror_both(self):
        k1, k2 = test_utils.knot("9_48"), test_utils.knot("12n_642")
        for n1, n2 in ((8, 6), (4, 3), (1, 1), (3, 5)):
            with self.subTest(n1=n1, n2=n2):
                report = cover_pair_test(k1, n1, k2, n2)
                mirrored = cover_pair_test(mirror(k1), n1, mirror(k2), n2)
                self.assertEqual(self.verdicts(mirrored), self.verdicts(report))
                self.assertEqual(mirrored.verdict, report.verdict)

    def test_knot_and_mirror(self):
        for record in test_utils.builtin_catalog():
            for n in range(1, 9):
                if b1_of_cover(record, n) != 1:
                    continue
                with self.subTest(name=record.name, n=n):
                    report = cover_pair_test(record, n, mirror(record), n, epsilon=-1)
                    self.assertEqual(report.entry("tau").verdict, PASS)
                    self.assertEqual(report.entry("rho", -1).verdict, PASS)

    def test_multiset_implies_tau(self):
        records = list(test_utils.builtin_catalog())
        taus = {record.name: tau(record) for record in records}
        passed = 0
        for k1 in records:
            for k2 in records:
                for n1 in range(1, 13):
                    for n2 in range(1, 13):
                        if multiset_power_test(k1, n1, k2, n2).verdict != PASS:
                            continue
                        passed += 1
                        with self.subTest(k1=k1.name, n1=n1, k2=k2.name, n2=n2):
                            self.assertTrue((taus[k1.name] * n1 - taus[k2.name] * n2).contains(0))
        # Every knot against itself at (n, n)
        self.assertGreaterEqual(passed, 6 * 12)

    def test_fail_at_finer_radius(self):
        k1, k2 = test_utils.knot("9_48"), test_utils.knot("12n_642")
        cases = ((k1, 4, k2, 3), (test_utils.knot("figure8"), 1, test_utils.knot("trefoil"), 1))
        for a, n1, b, n2 in cases:
            with self.subTest(k1=a.name, n1=n1, k2=b.name, n2=n2):
                coarse = cover_pair_test(a, n1, b, n2)
                fine = cover_pair_test(a, n1, b, n2, radius=DEFAULT_RADIUS / 2)
                for entry in coarse.entries:
                    if entry.verdict == FAIL:
                        self.assertEqual(fine.entry(entry.test, entry.epsilon).verdict, FAIL)
                self.assertEqual(fine.verdict, FAIL)


class TestMultiset(TestCase):
    def test_pass(self):
        k1, k2 = test_utils.knot("9_48"), test_utils.knot("12n_642")
        report = multiset_power_test(k1, 8, k2, 6)
        self.assertEqual(report.verdict, PASS)
        self.assertEqual(report.entry("multiset").witnesses["common"].degree, 4)
        self.assertEqual(multiset_power_test(k2, 6, k1, 8).verdict, PASS)

    def test_fail(self):
        k1, k2 = test_utils.knot("9_48"), test_utils.knot("12n_642")
        self.assertEqual(multiset_power_test(k1, 4, k2, 3).verdict, FAIL)
        self.assertEqual(multiset_power_test(k1, 1, k2, 1).verdict, FAIL)
        report = multiset_power_test(test_utils.knot("trefoil"), 1, test_utils.knot("figure8"), 1)
        self.assertEqual(report.entry("leading").verdict, PASS)
        self.assertEqual(report.entry("multiset").verdict, FAIL)

    def test_degree(self):
        report = multiset_power_test(test_utils.knot("Ds"), 1, test_utils.knot("Df"), 1)
        self.assertEqual(report.verdict, FAIL)
        self.assertEqual(report.entry("multiset").witnesses["degrees"], (8, 10))

    def test_self(self):
        k = test_utils.knot("figure8")
        self.assertEqual(multiset_power_test(k, 5, k, 5).verdict, PASS)


class TestRatioScan(TestCase):
    def test_scan(self):
        scan = ratio_scan(test_utils.knot("9_48"), test_utils.knot("12n_642"), 24)
        self.assertEqual(scan.ratios, [(4, 3)])
        self.assertEqual(scan.caveats, [])
        match = scan.matches[0]
        self.assertEqual(match.k, 2)
        self.assertEqual(match.cover.verdict, PASS)

    def test_short_scan(self):
        # The first passing covers are (8, 6)
        scan = ratio_scan(test_utils.knot("9_48"), test_utils.knot("12n_642"), 6)
        self.assertEqual(scan.ratios, [])

    def test_self(self):
        k = test_utils.knot("9_48")
        self.assertIn((1, 1), ratio_scan(k, k, 6).ratios)

    def test_not_admissible(self):
        k = test_utils.knot("trefoil")
        scan = ratio_scan(k, k, 6)
        self.assertEqual(len(scan.caveats), 2)
        self.assertIn((1, 1), scan.ratios)

    def test_degrees(self):
        self.assertEqual(ratio_scan(test_utils.knot("Ds"), test_utils.knot("Df"), 6).ratios, [])


class TestOrientation(TestCase):
    def test_orientation(self):
        report = orientation_test(test_utils.knot("9_48"), test_utils.knot("12n_642"), 480, ratio=(4, 3))
        preserving = report.entry("orientation", 1)
        self.assertEqual(preserving.verdict, FAIL)
        self.assertEqual(preserving.witnesses["checked"], 160)
        self.assertEqual(preserving.witnesses["certified non-integer"], 160)
        self.assertEqual(preserving.witnesses["passing k"], [])
        self.assertIn("excluded for all covers up to n_max=480", preserving.note)

        reversing = report.entry("orientation", -1)
        self.assertEqual(reversing.verdict, PASS)
        self.assertIn(2, reversing.witnesses["passing k"])
        self.assertNotIn(1, reversing.witnesses["passing k"])
        self.assertEqual(report.verdict, PASS)

    def test_scanned_ratio(self):
        report = orientation_test(test_utils.knot("9_48"), test_utils.knot("12n_642"), 24)
        self.assertEqual((report.n1, report.n2), (4, 3))
        self.assertEqual(report.entry("orientation", 1).verdict, FAIL)

    def test_mirror(self):
        k = test_utils.knot("9_48")
        report = orientation_test(k, mirror(k), 48, ratio=(1, 1))
        preserving = report.entry("orientation", 1)
        self.assertEqual(preserving.verdict, FAIL)
        self.assertEqual(preserving.witnesses["checked"], 48)
        self.assertEqual(preserving.witnesses["passing k"], [])
        reversing = report.entry("orientation", -1)
        self.assertEqual(reversing.verdict, PASS)
        self.assertEqual(reversing.witnesses["passing k"], list(range(1, 49)))

    def test_no_ratio(self):
        report = orientation_test(test_utils.knot("Ds"), test_utils.knot("Df"), 24)
        self.assertEqual(report.verdict, INCONCLUSIVE)


class TestProbe(TestCase):
    def test_tau_relation(self):
        values = [tau(test_utils.knot("9_48")), tau(test_utils.knot("12n_642"))]
        self.assertEqual(rational_dependence_probe(values), [(4, -3)])

    def test_zero(self):
        self.assertEqual(rational_dependence_probe([rho(test_utils.knot("figure8"))]), [(1,)])
        self.assertEqual(rational_dependence_probe([]), [])

    def test_independent(self):
        values = [
            CertifiedReal.exact(1),
            CertifiedReal(Fraction(math.sqrt(2)), Fraction(1, 10 ** 15)),
        ]
        self.assertEqual(rational_dependence_probe(values), [])

    def test_limit(self):
        with self.assertRaises(ValueError):
            rational_dependence_probe([CertifiedReal.exact(1)], max_coeff=10 ** 5)
        values = [CertifiedReal.exact(1), CertifiedReal.exact(2), CertifiedReal.exact(3)]
        with self.assertRaises(ValueError):
            rational_dependence_probe(values, max_coeff=1000)
        self.assertIn((1, 1, -1), rational_dependence_probe(values, max_coeff=2))
