from __future__ import annotations
import contextlib
import csv
import sys
from knotcomm.covers import NotAdmissible, growth_sequence
from knotcomm.utils import format_decimal
from .command import Command, Fail, EXIT_B1_VIOLATION, EXIT_INVALID
import logging

log = logging.getLogger("growth")


class Growth(Command):
    "write the homology growth sequence (1/k)·ln|H_1 torsion| of a knot as CSV"

    @classmethod
    def make_subparser(cls, subparsers):
        parser = super().make_subparser(subparsers)
        parser.add_argument("knot", help="knot name, as found in the catalog")
        parser.add_argument("--kmax", type=int, help="last cover degree. Overrides settings.GROWTH_K_MAX")
        parser.add_argument("--kmin", type=int, default=1, help="first cover degree (default: 1)")
        parser.add_argument("-o", "--output", metavar="PATH", help="output file (default: standard output)")
        return parser

    def run(self):
        knot = self.resolve(self.args.knot)
        k_max = self.args.kmax if self.args.kmax is not None else self.settings.GROWTH_K_MAX
        k_min = self.args.kmin if self.args.kmin is not None else 1
        if k_min < 1 or k_max < k_min:
            raise Fail("cover degrees must satisfy 1 ≤ kmin ≤ kmax", EXIT_INVALID)
        try:
            sequence = growth_sequence(knot, k_max, radius=self.radius, k_min=k_min)
        except NotAdmissible as e:
            raise Fail(str(e), EXIT_B1_VIOLATION)

        digits = self.settings.CSV_DIGITS
        with contextlib.ExitStack() as stack:
            if self.args.output:
                out = stack.enter_context(open(self.args.output, "wt", encoding="utf-8", newline=""))
            else:
                out = sys.stdout
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(("k", "value"))
            for k, value in sequence:
                writer.writerow((k, format_decimal(value.midpoint, digits)))
