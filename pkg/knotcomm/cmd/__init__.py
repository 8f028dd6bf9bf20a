from __future__ import annotations
from typing import List, Optional
import argparse
import sys
import logging
from knotcomm.catalog import CatalogError, UnknownKnot
from knotcomm.knots import InsufficientData, InvalidKnotRecord, InvalidSeifert
from knotcomm.obstructions import B1Violation
from .command import (Fail, Success, add_settings_options, EXIT_OK, EXIT_UNKNOWN_KNOT, EXIT_INSUFFICIENT_DATA,
                      EXIT_B1_VIOLATION, EXIT_INVALID)
from .invariants import Invariants
from .compare import Compare
from .signature import Signature
from .covers import Covers
from .growth import Growth
from .catalog import CatalogCommand

log = logging.getLogger("kcomm")

COMMANDS = (Invariants, Compare, Signature, Covers, Growth, CatalogCommand)

# Exit codes for domain errors that reach the command line unhandled
ERROR_EXIT_CODES = (
    (UnknownKnot, EXIT_UNKNOWN_KNOT),
    (InsufficientData, EXIT_INSUFFICIENT_DATA),
    (B1Violation, EXIT_B1_VIOLATION),
    (CatalogError, EXIT_INVALID),
    (InvalidKnotRecord, EXIT_INVALID),
    (InvalidSeifert, EXIT_INVALID),
)


class ArgumentParser(argparse.ArgumentParser):
    """
    Exit with the invalid arguments code on usage errors
    """
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, "{}: error: {}\n".format(self.prog, message))


def make_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
            prog="kcomm",
            description="Certified knot invariants and cyclic commensurability obstructions.")
    add_settings_options(parser)
    subparsers = parser.add_subparsers(help="sub-command help", dest="command")
    for cmd in COMMANDS:
        cmd.make_subparser(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)

    if not getattr(args, "handler", None):
        parser.print_help()
        return EXIT_INVALID

    try:
        handler = args.handler(args)
        res = handler.run()
    except Success:
        res = EXIT_OK
    except Fail as e:
        log.error("%s", e)
        return e.exit_code
    except tuple(cls for cls, code in ERROR_EXIT_CODES) as e:
        log.error("%s", e)
        for cls, code in ERROR_EXIT_CODES:
            if isinstance(e, cls):
                return code
        raise

    if res is None:
        res = EXIT_OK
    return res
