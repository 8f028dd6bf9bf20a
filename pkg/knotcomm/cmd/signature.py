from __future__ import annotations
from typing import List, Optional, Tuple
from fractions import Fraction
import contextlib
import csv
import sys
from knotcomm.knots import KnotRecord, InsufficientData, SingularAtZ, signature_at
from knotcomm.utils import format_decimal
from .command import Command, Fail, EXIT_INSUFFICIENT_DATA, EXIT_INVALID
import logging

log = logging.getLogger("signature")

# (turn, sigma or None, kind)
Row = Tuple[Fraction, Optional[int], str]


def signature_rows(knot: KnotRecord, samples: int, radius: Fraction) -> List[Row]:
    """
    Samples of the signature function at the turns k/(samples-1), plus one
    row per jump. The sigma of a jump row is the value on the arc that starts
    there.
    """
    profile = knot.profile
    rows: List[Row] = []
    for k in range(samples):
        turn = Fraction(k, samples - 1)
        try:
            rows.append((turn, signature_at(knot, turn), "sample"))
        except SingularAtZ:
            rows.append((turn, None, "jump"))

    for j, root in enumerate(profile.roots):
        turn = root.turn(radius).midpoint
        rows.append((turn, profile.values[j + 1], "jump"))
        rows.append((1 - turn, profile.values[j], "jump"))
    if profile.singular_at_minus_one:
        rows.append((Fraction(1, 2), None, "jump"))

    rows.sort(key=lambda row: (row[0], row[2] != "sample"))
    return rows


class Signature(Command):
    "write the signature function of a knot as CSV"

    @classmethod
    def make_subparser(cls, subparsers):
        parser = super().make_subparser(subparsers)
        parser.add_argument("knot", help="knot name, as found in the catalog")
        parser.add_argument("-s", "--samples", type=int, default=101,
                            help="number of uniform samples on the circle, ends included (default: 101)")
        parser.add_argument("-o", "--output", metavar="PATH", help="output file (default: standard output)")
        return parser

    def run(self):
        knot = self.resolve(self.args.knot)
        samples = self.args.samples if self.args.samples is not None else 101
        if samples < 2:
            raise Fail("at least 2 samples are needed", EXIT_INVALID)
        try:
            rows = signature_rows(knot, samples, self.radius)
        except InsufficientData as e:
            raise Fail(str(e), EXIT_INSUFFICIENT_DATA)

        digits = self.settings.CSV_DIGITS
        with contextlib.ExitStack() as stack:
            if self.args.output:
                out = stack.enter_context(open(self.args.output, "wt", encoding="utf-8", newline=""))
            else:
                out = sys.stdout
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(("turn", "sigma", "kind"))
            for turn, sigma, kind in rows:
                writer.writerow((format_decimal(turn, digits), "" if sigma is None else sigma, kind))
