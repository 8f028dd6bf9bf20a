from __future__ import annotations
from typing import Optional
from fractions import Fraction
import argparse
import sys
import os
import logging
from knotcomm.settings import Settings
from knotcomm.catalog import Catalog, CatalogError, UnknownKnot
from knotcomm.knots import KnotRecord
from knotcomm.render import Renderer
from knotcomm.obstructions import PASS, FAIL, INCONCLUSIVE

log = logging.getLogger("command")

# Environment variable with the default catalog path
CATALOG_ENV = "KNOTCOMM_CATALOG"

# Exit codes
EXIT_OK = 0
EXIT_OBSTRUCTED = 1
EXIT_UNKNOWN_KNOT = 2
EXIT_INSUFFICIENT_DATA = 3
EXIT_INCONCLUSIVE = 4
EXIT_B1_VIOLATION = 5
EXIT_INVALID = 6

VERDICT_EXIT_CODES = {
    PASS: EXIT_OK,
    FAIL: EXIT_OBSTRUCTED,
    INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class Fail(RuntimeError):
    """
    Exception raised when the program should exit with an error but without a
    backtrace
    """
    def __init__(self, msg: str, exit_code: int = EXIT_INVALID):
        super().__init__(msg)
        self.exit_code = exit_code


class Success(Exception):
    """
    Exception raised when a command has been successfully handled, and no
    further processing should happen
    """
    pass


def add_settings_options(parser: argparse.ArgumentParser, default=None):
    """
    Options overriding settings, accepted before and after the command name.
    Subcommands register them with argparse.SUPPRESS as default.
    """
    parser.add_argument("--catalog", metavar="PATH", default=default,
                        help="catalog file with extra knots. Overrides settings.CATALOG and $" + CATALOG_ENV)
    parser.add_argument("--radius", metavar="R", type=float, default=default,
                        help="target radius of certified values. Overrides settings.RADIUS")
    parser.add_argument("--nmax", metavar="N", type=int, default=default,
                        help="largest cover degree for the orientation analysis. Overrides settings.N_MAX")


def verdict_exit_code(verdict: str) -> int:
    return VERDICT_EXIT_CODES[verdict]


class Command:
    # Command name (as used in command line)
    # Defaults to the lowercased class name
    NAME: Optional[str] = None

    # Command description (as used in command line help)
    # Defaults to the strip()ped class docstring.
    DESC: Optional[str] = None

    def __init__(self, args):
        self.args = args
        self.setup_logging()
        self.settings = Settings()

        # Look for extra settings
        if self.args.settings:
            if not os.path.isfile(self.args.settings):
                raise Fail("{}: settings file not found".format(self.args.settings))
            log.info("%s: loading settings", self.args.settings)
            self.settings.load(self.args.settings)
        else:
            self.settings.load_default_files()

        # Command line overrides for settings
        if self.args.catalog:
            self.settings.CATALOG = os.path.abspath(self.args.catalog)
        elif self.settings.CATALOG is None and os.environ.get(CATALOG_ENV):
            self.settings.CATALOG = os.environ[CATALOG_ENV]
        if self.args.radius is not None:
            self.settings.RADIUS = self.args.radius
        if self.args.nmax is not None:
            self.settings.N_MAX = self.args.nmax

        self.radius = self.parse_positive(self.settings.RADIUS, "radius")
        self.tolerance = self.parse_positive(self.settings.PASS_TOLERANCE, "pass tolerance")
        self.renderer = Renderer(self.settings)
        self.catalog: Optional[Catalog] = None

    @staticmethod
    def parse_positive(value, what: str) -> Fraction:
        try:
            res = Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            raise Fail("{} {!r} is not a number".format(what, value))
        if res <= 0:
            raise Fail("{} must be positive, got {}".format(what, value))
        return res

    def setup_logging(self):
        FORMAT = "%(asctime)-15s %(levelname)s %(message)s"
        if self.args.debug:
            logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format=FORMAT)
        elif self.args.verbose:
            logging.basicConfig(level=logging.INFO, stream=sys.stderr, format=FORMAT)
        else:
            logging.basicConfig(level=logging.WARN, stream=sys.stderr, format=FORMAT)

    def load_catalog(self) -> Catalog:
        if self.catalog is None:
            try:
                self.catalog = Catalog.load(self.settings.CATALOG)
            except CatalogError as e:
                raise Fail(str(e), EXIT_INVALID)
            except OSError as e:
                raise Fail("{}: cannot read catalog: {}".format(self.settings.CATALOG, e), EXIT_INVALID)
        return self.catalog

    def resolve(self, name: str) -> KnotRecord:
        catalog = self.load_catalog()
        try:
            return catalog.resolve(name)
        except UnknownKnot as e:
            raise Fail(str(e.args[0]) if e.args else name, EXIT_UNKNOWN_KNOT)

    def write(self, text: str):
        sys.stdout.write(text)

    @classmethod
    def get_name(cls):
        if cls.NAME is not None:
            return cls.NAME
        return cls.__name__.lower()

    @classmethod
    def make_subparser(cls, subparsers):
        desc = cls.DESC
        if desc is None:
            desc = cls.__doc__.strip()

        parser = subparsers.add_parser(cls.get_name(), help=desc)
        parser.set_defaults(handler=cls)
        parser.add_argument("-v", "--verbose", action="store_true", help="verbose output")
        parser.add_argument("--debug", action="store_true", help="debugging output")
        parser.add_argument("--settings", metavar="PATH", help="settings file to load (default: "
                            "knotcomm_settings.py or .knotcomm.py in the current directory)")
        add_settings_options(parser, default=argparse.SUPPRESS)
        return parser
