from unittest import TestCase
import os
from knotcomm.cmd import make_parser
from knotcomm.cmd.covers import parse_range
from knotcomm.cmd.compare import Compare
from knotcomm.obstructions import RatioScan, FAIL, INCONCLUSIVE
from . import utils as test_utils


extra_catalog = {
    "version": 1,
    "knots": [
        {"name": "myknot", "seifert": [[-1, 1], [0, -2]], "genus": 1},
    ],
}


class TestInvariants(TestCase):
    def test_9_48(self):
        code, out = test_utils.run_cli(["invariants", "9_48"])
        self.assertEqual(code, 0)
        self.assertIn("Δ(t) = -t^4 + 7t^3 - 11t^2 + 7t - 1", out)
        self.assertIn("τ: 1.6306", out)
        self.assertIn("ρ: 1.64512", out)
        self.assertIn("Mahler measure: 5.10696", out)
        self.assertIn("σ at -1: 2", out)
        self.assertIn("admissible: yes", out)

    def test_trefoil(self):
        code, out = test_utils.run_cli(["invariants", "trefoil"])
        self.assertEqual(code, 0)
        self.assertIn("τ: 0\n", out)
        self.assertIn("admissible: no", out)
        self.assertIn("σ at -1: -2", out)

    def test_options_before_command(self):
        code, out = test_utils.run_cli(["--radius", "1e-10", "invariants", "9_48"])
        self.assertEqual(code, 0)
        self.assertIn("τ: 1.6306", out)

    def test_unknown(self):
        code, out = test_utils.run_cli(["invariants", "nonexistent"])
        self.assertEqual(code, 2)
        self.assertEqual(out, "")


class TestCompare(TestCase):
    def test_commensurable_covers(self):
        code, out = test_utils.run_cli(["compare", "9_48", "12n_642", "--n1", "8", "--n2", "6"])
        self.assertEqual(code, 0)
        self.assertIn("9_48 (8) vs 12n_642 (6): pass", out)
        self.assertIn("c1·τ(K1) + c2·τ(K2) = 0: (4, -3)", out)
        self.assertIn("Result: pass", out)

    def test_obstructed_covers(self):
        code, out = test_utils.run_cli(["compare", "9_48", "12n_642", "--n1", "4", "--n2", "3"])
        self.assertEqual(code, 1)
        self.assertIn("Result: fail", out)
        self.assertIn("not an integer: excluded", out)

    def test_static(self):
        code, out = test_utils.run_cli(["compare", "Ds", "Df"])
        self.assertEqual(code, 1)
        self.assertIn("[fail] degree", out)

    def test_scan(self):
        code, out = test_utils.run_cli(["compare", "9_48", "12n_642", "--nmax", "48"])
        self.assertEqual(code, 0)
        self.assertIn("4:3 (first at 8, 6)", out)
        self.assertIn("excluded for all covers up to n_max=48", out)

    def test_b1(self):
        code, out = test_utils.run_cli(["compare", "trefoil", "9_48", "--n1", "6", "--n2", "6"])
        self.assertEqual(code, 5)

    def test_options(self):
        code, out = test_utils.run_cli(["compare", "9_48", "12n_642", "--n1", "8"])
        self.assertEqual(code, 6)
        with self.assertRaises(SystemExit) as e:
            test_utils.run_cli(["compare", "9_48", "12n_642", "--epsilon", "2"])
        self.assertEqual(e.exception.code, 6)

    def test_relation_limit(self):
        with test_utils.workdir({"settings.py": "PROBE_MAX_COEFF = 1000\n"}) as root:
            code, out = test_utils.run_cli(
                ["compare", "9_48", "12n_642", "--n1", "8", "--n2", "6",
                 "--settings", os.path.join(root, "settings.py")])
        self.assertEqual(code, 6)

    def test_scan_verdict(self):
        scan = RatioScan(knots=("a", "b"), n_max=6)
        self.assertEqual(Compare.scan_verdict(scan), FAIL)
        scan.caveats.append("τ vanishes")
        self.assertEqual(Compare.scan_verdict(scan), INCONCLUSIVE)


class TestSignature(TestCase):
    def test_9_48(self):
        code, out = test_utils.run_cli(["signature", "9_48", "-s", "8"])
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "turn,sigma,kind")
        self.assertEqual(lines[1], "0,0,sample")
        self.assertEqual(lines[-1], "1,0,sample")
        jumps = [line for line in lines if line.endswith(",jump")]
        self.assertEqual(len(jumps), 2)
        self.assertTrue(jumps[0].startswith("0.08871"))
        self.assertTrue(jumps[0].endswith(",2,jump"))
        self.assertEqual(len(lines), 1 + 8 + 2)

    def test_figure8(self):
        code, out = test_utils.run_cli(["signature", "figure8", "-s", "5"])
        self.assertEqual(code, 0)
        rows = [line.split(",") for line in out.splitlines()[1:]]
        self.assertEqual(len(rows), 5)
        self.assertEqual({row[1] for row in rows}, {"0"})

    def test_trefoil(self):
        code, out = test_utils.run_cli(["signature", "trefoil", "-s", "7"])
        self.assertEqual(code, 0)
        self.assertIn("0.166666666666667,,jump", out)
        self.assertIn("0.5,-2,sample", out)

    def test_output(self):
        with test_utils.workdir() as root:
            path = os.path.join(root, "sig.csv")
            code, out = test_utils.run_cli(["signature", "12n_642", "-o", path])
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(path, "rt") as fd:
                self.assertEqual(len(fd.read().splitlines()), 1 + 101 + 2)


class TestCovers(TestCase):
    def test_range(self):
        self.assertEqual(parse_range("1-12"), (1, 12))
        self.assertEqual(parse_range("3..5"), (3, 5))
        self.assertEqual(parse_range("7"), (7, 7))
        with self.assertRaises(ValueError):
            parse_range("5-2")
        with self.assertRaises(ValueError):
            parse_range("0")

    def test_trefoil(self):
        code, out = test_utils.run_cli(["covers", "trefoil", "1-6"])
        self.assertEqual(code, 0)
        self.assertIn("Δ(t) = t^2 - t + 1", out)
        self.assertIn("∞", out)
        self.assertEqual(len(out.splitlines()), 3 + 6)

    def test_bad_range(self):
        code, out = test_utils.run_cli(["covers", "trefoil", "x"])
        self.assertEqual(code, 6)


class TestGrowth(TestCase):
    def test_figure8(self):
        code, out = test_utils.run_cli(["growth", "figure8", "--kmax", "3"])
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "k,value")
        self.assertEqual(lines[1], "1,0")
        self.assertTrue(lines[3].startswith("3,0.92419"))

    def test_not_admissible(self):
        code, out = test_utils.run_cli(["growth", "trefoil", "--kmax", "12"])
        self.assertEqual(code, 5)


class TestCatalog(TestCase):
    def test_list(self):
        code, out = test_utils.run_cli(["catalog", "list"])
        self.assertEqual(code, 0)
        self.assertIn("9_48 degree=4 alexander admissible [built-in]", out)
        self.assertIn("trefoil degree=2 seifert not admissible [built-in]", out)

    def test_check(self):
        code, out = test_utils.run_cli(["catalog", "check"])
        self.assertEqual(code, 0)
        self.assertIn("5 admissible knots", out)
        self.assertIn("1 not admissible knots", out)

    def test_check_incomplete(self):
        data = {"version": 1, "knots": [
            {"name": "product", "alexander": [1, 0, -53, 182, -261, 182, -53, 0, 1]},
        ]}
        with test_utils.workdir({"knots.json": data}) as root:
            code, out = test_utils.run_cli(["catalog", "check", os.path.join(root, "knots.json")])
            self.assertEqual(code, 3)

    def test_export(self):
        with test_utils.workdir() as root:
            path = os.path.join(root, "all.yaml")
            code, out = test_utils.run_cli(["catalog", "export", path])
            self.assertEqual(code, 0)
            self.assertTrue(os.path.exists(path))

    def test_extra_catalog(self):
        with test_utils.workdir({"extra.json": extra_catalog}) as root:
            path = os.path.join(root, "extra.json")
            code, out = test_utils.run_cli(["invariants", "--catalog", path, "myknot"])
            self.assertEqual(code, 0)
            self.assertIn("Δ(t) = 2t^2 - 3t + 2", out)

            code, out = test_utils.run_cli(["--catalog", path, "invariants", "myknot"])
            self.assertEqual(code, 0)

            code, out = test_utils.run_cli(["invariants", "myknot"], env={"KNOTCOMM_CATALOG": path})
            self.assertEqual(code, 0)

            code, out = test_utils.run_cli(["invariants", "myknot"])
            self.assertEqual(code, 2)

    def test_bad_catalog(self):
        with test_utils.workdir({"bad.json": {"version": 1, "knots": [{"name": "x", "alexander": [1, 1, 1]}]}}) as root:
            code, out = test_utils.run_cli(["invariants", "--catalog", os.path.join(root, "bad.json"), "9_48"])
            self.assertEqual(code, 6)


class TestParser(TestCase):
    def test_commands(self):
        parser = make_parser()
        args = parser.parse_args(["compare", "a", "b", "--n1", "2", "--n2", "3", "--epsilon", "-1"])
        self.assertEqual(args.command, "compare")
        self.assertEqual(args.n1, 2)
        self.assertEqual(args.epsilon, "-1")
        args = parser.parse_args(["catalog", "list"])
        self.assertEqual(args.handler.get_name(), "catalog")

    def test_settings_options(self):
        parser = make_parser()
        args = parser.parse_args(["--radius", "1e-10", "invariants", "9_48"])
        self.assertEqual(args.radius, 1e-10)
        args = parser.parse_args(["invariants", "--radius", "1e-10", "9_48"])
        self.assertEqual(args.radius, 1e-10)
        # After the command name wins
        args = parser.parse_args(["--nmax", "10", "compare", "a", "b", "--nmax", "20"])
        self.assertEqual(args.nmax, 20)
        args = parser.parse_args(["--catalog", "knots.json", "catalog", "list"])
        self.assertEqual(args.catalog, "knots.json")
        args = parser.parse_args(["invariants", "9_48"])
        self.assertIsNone(args.radius)
        self.assertIsNone(args.nmax)
        self.assertIsNone(args.catalog)

    def test_no_command(self):
        code, out = test_utils.run_cli([])
        self.assertEqual(code, 6)
