from unittest import TestCase
import os
from knotcomm.polynomial import IntPoly
from knotcomm.catalog import Catalog, CatalogError, UnknownKnot, export_catalog, file_format
from . import utils as test_utils


yaml_catalog = """---
version: 1
knots:
- name: "9_48"
  alexander: [1, -7, 11, -7, 1]
  signature: 2
- name: broken
  alexander: [1, 2.5, 1]
"""

signature_conflicts = {
    # σ must vanish when Δ has no zeros on the unit circle
    "signature": """---
version: 1
knots:
- name: ok
  alexander: [-1, 3, -1]
- name: bad
  alexander: [-1, 3, -1]
  signature: 2
""",
    # Δ of 9_48 has a single zero on the upper unit circle
    "count": """---
version: 1
knots:
- name: ok
  alexander: [-1, 3, -1]
- name: badjumps
  alexander: [1, -7, 11, -7, 1]
  signature_jumps:
  - {turn: "1/10", value: 2}
  - {turn: "1/5", value: 0}
""",
    "end": """---
version: 1
knots:
- name: ok
  alexander: [-1, 3, -1]
- name: badend
  alexander: [1, -7, 11, -7, 1]
  signature: 2
  signature_jumps:
  - {turn: "0.0887193", value: 4}
""",
}

toml_catalog = """
version = 1

[[knots]]
name = "knot5_2"
seifert = [[-1, 1], [0, -2]]
genus = 1

[[knots]]
name = "12n_642"
alexander = [1, 7, -15, 7, 1]
signature = 2
signature_jumps = [{turn = "0.048374", value = 2}]
comment = "from toml"
"""


class TestBuiltin(TestCase):
    def test_builtin(self):
        catalog = test_utils.builtin_catalog()
        names = [k.name for k in catalog]
        for name in ("trefoil", "figure8", "9_48", "12n_642", "Ds", "Df"):
            self.assertIn(name, names)
        self.assertEqual(catalog.sources["9_48"][0], None)
        self.assertEqual(catalog.resolve("Ds").alexander.lead, 25)
        self.assertTrue(catalog.resolve("Df").fibered)

    def test_resolve(self):
        catalog = test_utils.builtin_catalog()
        m = catalog.resolve("mirror:9_48")
        self.assertTrue(m.mirror)
        self.assertEqual(m.name, "mirror:9_48")
        self.assertFalse(catalog.resolve("mirror:mirror:9_48").mirror)
        self.assertEqual(catalog.resolve("twist3").alexander, IntPoly((3, -5, 3)))
        self.assertEqual(catalog.resolve("twist-2").alexander, IntPoly((-2, 5, -2)))
        self.assertIn("twist4", catalog)
        self.assertNotIn("5_2", catalog)
        with self.assertRaises(UnknownKnot):
            catalog.resolve("nonexistent")
        with self.assertRaises(UnknownKnot):
            catalog.resolve("mirror:nonexistent")


class TestLoad(TestCase):
    def test_formats(self):
        self.assertEqual(file_format("a.yml"), "yaml")
        self.assertEqual(file_format("a.json"), "json")
        with self.assertRaises(CatalogError):
            file_format("catalog.txt")

    def test_yaml_error_line(self):
        with test_utils.workdir({"knots.yaml": yaml_catalog}) as root:
            path = os.path.join(root, "knots.yaml")
            catalog = Catalog()
            with self.assertRaises(CatalogError) as e:
                catalog.load_file(path)
            self.assertEqual(e.exception.line, 7)
            self.assertEqual(str(e.exception).split(": ")[0], path + ":7")
            # Nothing is loaded from a broken file
            self.assertEqual(len(catalog), 0)

    def test_signature_conflicts(self):
        for kind, text in signature_conflicts.items():
            with self.subTest(kind=kind):
                with test_utils.workdir({"knots.yaml": text}) as root:
                    path = os.path.join(root, "knots.yaml")
                    catalog = Catalog()
                    with self.assertRaises(CatalogError) as e:
                        catalog.load_file(path)
                    self.assertEqual(e.exception.line, 6)
                    self.assertTrue(str(e.exception).startswith(path + ":6: "))
                    self.assertEqual(len(catalog), 0)

    def test_missing_signature_data(self):
        # Entries without enough signature data load, and fail only when ρ is needed
        data = {"version": 1, "knots": [
            {"name": "product", "alexander": [1, 0, -53, 182, -261, 182, -53, 0, 1]},
        ]}
        with test_utils.workdir({"knots.json": data}) as root:
            catalog = Catalog()
            catalog.load_file(os.path.join(root, "knots.json"))
            self.assertIn("product", catalog)

    def test_json_error(self):
        data = {"version": 1, "knots": [
            {"name": "ok", "alexander": [-1, 3, -1]},
            {"name": "bad", "alexander": [1, 1, 1]},
        ]}
        with test_utils.workdir({"knots.json": data}) as root:
            path = os.path.join(root, "knots.json")
            with self.assertRaises(CatalogError) as e:
                Catalog().load_file(path)
            self.assertEqual(e.exception.path, path)
            self.assertIsNotNone(e.exception.line)
            self.assertIn("not ±1", str(e.exception))

    def test_version(self):
        with test_utils.workdir({"knots.json": {"version": 2, "knots": []}}) as root:
            with self.assertRaises(CatalogError) as e:
                Catalog().load_file(os.path.join(root, "knots.json"))
            self.assertIn("version", str(e.exception))

    def test_duplicates(self):
        data = {"version": 1, "knots": [
            {"name": "a", "alexander": [-1, 3, -1]},
            {"name": "a", "alexander": [1, -1, 1]},
        ]}
        with test_utils.workdir({"knots.json": data}) as root:
            with self.assertRaises(CatalogError) as e:
                Catalog().load_file(os.path.join(root, "knots.json"))
            self.assertIn("defined twice", str(e.exception))

    def test_mirror_name(self):
        data = {"version": 1, "knots": [{"name": "mirror:a", "alexander": [-1, 3, -1]}]}
        with test_utils.workdir({"knots.json": data}) as root:
            with self.assertRaises(CatalogError):
                Catalog().load_file(os.path.join(root, "knots.json"))

    def test_syntax_error(self):
        with test_utils.workdir({"knots.yaml": "---\nversion: 1\nknots: [\n"}) as root:
            with self.assertRaises(CatalogError):
                Catalog().load_file(os.path.join(root, "knots.yaml"))

    def test_override(self):
        data = {"version": 1, "knots": [{"name": "9_48", "alexander": [-1, 3, -1], "genus": 1}]}
        with test_utils.workdir({"knots.json": data}) as root:
            path = os.path.join(root, "knots.json")
            catalog = Catalog.load(path)
            self.assertEqual(catalog.resolve("9_48").genus, 1)
            self.assertEqual(catalog.sources["9_48"][0], path)
            self.assertIn("trefoil", catalog)

    def test_toml(self):
        with test_utils.workdir({"knots.toml": toml_catalog}) as root:
            catalog = Catalog()
            catalog.load_file(os.path.join(root, "knots.toml"))
            self.assertEqual(len(catalog), 2)
            k = catalog.resolve("knot5_2")
            self.assertEqual(k.alexander, IntPoly((2, -3, 2)))
            k = catalog.resolve("12n_642")
            self.assertEqual(k.comment, "from toml")
            self.assertEqual(len(k.signature_jumps), 1)

    def test_unknown_field(self):
        data = {"version": 1, "knots": [{"name": "a", "alexander": [-1, 3, -1], "colour": "red"}]}
        with test_utils.workdir({"knots.json": data}) as root:
            with self.assertLogs("catalog", level="WARNING"):
                Catalog().load_file(os.path.join(root, "knots.json"))


class TestExport(TestCase):
    def test_export(self):
        catalog = test_utils.builtin_catalog()
        for ext in ("json", "yaml", "toml"):
            with self.subTest(ext=ext):
                with test_utils.workdir() as root:
                    path = os.path.join(root, "out." + ext)
                    export_catalog(catalog, path)
                    loaded = Catalog()
                    with test_utils.assert_no_logs():
                        loaded.load_file(path)
                    self.assertEqual(list(loaded.records.keys()), list(catalog.records.keys()))
                    for record in catalog:
                        self.assertEqual(loaded.resolve(record.name), record)
