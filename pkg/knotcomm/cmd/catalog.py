from __future__ import annotations
from collections import Counter
from knotcomm.catalog import Catalog, CatalogError, export_catalog
from knotcomm.covers import admissible
from knotcomm.knots import InsufficientData, InvalidKnotRecord, InvalidSeifert
from knotcomm.utils import timings
from .command import Command, Fail, EXIT_INSUFFICIENT_DATA, EXIT_INVALID
import logging

log = logging.getLogger("catalog")


class CatalogCommand(Command):
    "list, export or check the knot catalog"

    NAME = "catalog"

    @classmethod
    def make_subparser(cls, subparsers):
        parser = super().make_subparser(subparsers)
        parser.add_argument("action", choices=("list", "export", "check"), help="what to do")
        parser.add_argument("path", nargs="?",
                            help="export: file to write (.json, .yaml, .toml);"
                                 " check: catalog file to check instead of the configured one")
        return parser

    def run(self):
        action = self.args.action
        if action == "list":
            return self.do_list()
        elif action == "export":
            return self.do_export()
        elif action == "check":
            return self.do_check()
        else:
            raise Fail("unknown catalog action {!r}".format(action), EXIT_INVALID)

    def do_list(self):
        catalog = self.load_catalog()
        for record in catalog:
            path, line = catalog.sources[record.name]
            source = "built-in" if path is None else "{}:{}".format(path, line)
            kind = "seifert" if record.seifert is not None else "alexander"
            print("{} degree={} {} {} [{}]".format(
                record.name, record.alexander.degree, kind,
                "admissible" if admissible(record) else "not admissible", source))

    def do_export(self):
        if not self.args.path:
            raise Fail("catalog export needs an output path", EXIT_INVALID)
        catalog = self.load_catalog()
        try:
            export_catalog(catalog, self.args.path)
        except CatalogError as e:
            raise Fail(str(e), EXIT_INVALID)
        log.info("%s: exported %d knots", self.args.path, len(catalog))

    def do_check(self):
        if self.args.path:
            try:
                catalog = Catalog()
                catalog.load_file(self.args.path)
            except CatalogError as e:
                raise Fail(str(e), EXIT_INVALID)
            except OSError as e:
                raise Fail("{}: cannot read catalog: {}".format(self.args.path, e), EXIT_INVALID)
        else:
            catalog = self.load_catalog()

        counts: Counter = Counter()
        incomplete = []
        with timings("Checked catalog in %fs"):
            for record in catalog:
                try:
                    record.profile
                except InsufficientData as e:
                    log.warning("%s", e)
                    incomplete.append(record.name)
                    counts["incomplete"] += 1
                    continue
                except (InvalidKnotRecord, InvalidSeifert) as e:
                    raise Fail(str(e), EXIT_INVALID)
                counts["admissible" if admissible(record) else "not admissible"] += 1

        for kind, count in sorted(counts.items()):
            print("{} {} knots".format(count, kind))
        if incomplete:
            raise Fail("missing signature data for: {}".format(", ".join(incomplete)), EXIT_INSUFFICIENT_DATA)
