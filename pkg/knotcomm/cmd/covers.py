from __future__ import annotations
from typing import Tuple
import re
from knotcomm.covers import cover_summary
from .command import Command, Fail, EXIT_INVALID
import logging

log = logging.getLogger("covers")

re_range = re.compile(r"^\s*(\d+)\s*(?:(?:-|\.\.)\s*(\d+))?\s*$")


def parse_range(text: str) -> Tuple[int, int]:
    """
    Parse "N", "A-B" or "A..B" into an inclusive range
    """
    mo = re_range.match(text)
    if not mo:
        raise ValueError("{!r} is not a range like 1-12".format(text))
    lo = int(mo.group(1))
    hi = int(mo.group(2)) if mo.group(2) is not None else lo
    if lo < 1 or hi < lo:
        raise ValueError("{!r} is not a range of positive cover degrees".format(text))
    return lo, hi


class Covers(Command):
    "show b1 and torsion order of the finite cyclic covers of a knot"

    @classmethod
    def make_subparser(cls, subparsers):
        parser = super().make_subparser(subparsers)
        parser.add_argument("knot", help="knot name, as found in the catalog")
        parser.add_argument("range", nargs="?", default="1-12",
                            help="cover degrees, as N or A-B (default: 1-12)")
        return parser

    def run(self):
        knot = self.resolve(self.args.knot)
        try:
            lo, hi = parse_range(self.args.range or "1-12")
        except ValueError as e:
            raise Fail(str(e), EXIT_INVALID)
        summaries = [cover_summary(knot, n) for n in range(lo, hi + 1)]
        self.write(self.renderer.render("covers.txt", knot=knot, summaries=summaries))
