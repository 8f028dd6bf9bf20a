"""
Knot catalogs: named KnotRecord collections read from JSON, YAML or TOML.

A catalog document looks like::

    {"version": 1, "knots": [
        {"name": "9_48", "alexander": [1, -7, 11, -7, 1], "signature": 2},
        ...
    ]}
"""
from __future__ import annotations
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple
from fractions import Fraction
import json
import os
import re
import logging
import toml
from .polynomial import parse_coefficients
from .knots import (KnotRecord, SeifertMatrix, InvalidKnotRecord, InvalidSeifert, InsufficientData,
                    MIRROR_PREFIX, mirror, twist_knot)
from .utils import timings, parse_turn
from .utils import yaml_codec

log = logging.getLogger("catalog")

CATALOG_VERSION = 1

BUILTIN_PATH = os.path.join(os.path.dirname(__file__), "data", "builtin.json")

ENTRY_FIELDS = ("name", "seifert", "alexander", "signature", "signature_jumps",
                "mirror", "genus", "fibered", "comment")

re_ext = re.compile(r"\.(json|toml|yaml|yml)$")
re_twist = re.compile(r"^twist(-?\d+)$")


class CatalogError(ValueError):
    """
    Invalid catalog file. ``line`` is the 1-based line of the offending
    entry, when known.
    """
    def __init__(self, msg: str, path: Optional[str] = None, line: Optional[int] = None):
        self.msg = msg
        self.path = path
        self.line = line
        if path is not None and line is not None:
            super().__init__("{}:{}: {}".format(path, line, msg))
        elif path is not None:
            super().__init__("{}: {}".format(path, msg))
        else:
            super().__init__(msg)


class UnknownKnot(LookupError):
    """
    A knot name is neither in the catalog nor a generated family name
    """


def file_format(path: str) -> str:
    mo = re_ext.search(path)
    if not mo:
        raise CatalogError("file extension should be one of .json, .yaml, .yml, .toml", path=path)
    fmt = mo.group(1)
    return "yaml" if fmt == "yml" else fmt


def parse_data(fd, fmt: str) -> Any:
    if fmt in ("json", "yaml"):
        return yaml_codec.load(fd)
    elif fmt == "toml":
        return toml.load(fd)
    else:
        raise NotImplementedError("data format {} is not supported".format(fmt))


def write_data(fd, data: Any, fmt: str):
    if fmt == "json":
        json.dump(data, fd, indent=2, ensure_ascii=False)
        fd.write("\n")
    elif fmt == "toml":
        toml.dump(data, fd)
    elif fmt == "yaml":
        yaml_codec.dump(data, fd)
    else:
        raise NotImplementedError("data format {} is not supported".format(fmt))


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError("{} must be an integer, got {!r}".format(what, value))
    return int(value)


def record_from_entry(entry: Dict[str, Any]) -> KnotRecord:
    """
    Build a KnotRecord from one catalog entry
    """
    if not isinstance(entry, dict):
        raise ValueError("knot entry is not a mapping")
    name = entry.get("name")
    if not isinstance(name, str) or not name:
        raise ValueError("knot entry has no name")
    for key in entry:
        if key not in ENTRY_FIELDS:
            log.warning("%s: ignoring unknown field %r", name, key)

    kw: Dict[str, Any] = {"name": str(name)}

    seifert = entry.get("seifert")
    if seifert is not None:
        if not isinstance(seifert, list) or not all(isinstance(row, list) for row in seifert):
            raise ValueError("seifert must be a list of rows")
        kw["seifert"] = SeifertMatrix(tuple(
            tuple(_int(c, "Seifert matrix entry") for c in row) for row in seifert))

    alexander = entry.get("alexander")
    if alexander is not None:
        if not isinstance(alexander, list):
            raise ValueError("alexander must be a list of coefficients")
        kw["declared_alexander"] = parse_coefficients(alexander)

    if entry.get("signature") is not None:
        kw["signature"] = _int(entry["signature"], "signature")

    jumps = entry.get("signature_jumps")
    if jumps:
        parsed: List[Tuple[Fraction, int]] = []
        for jump in jumps:
            if not isinstance(jump, dict) or "turn" not in jump or "value" not in jump:
                raise ValueError("signature_jumps items need a turn and a value")
            parsed.append((parse_turn(jump["turn"]), _int(jump["value"], "signature value")))
        kw["signature_jumps"] = tuple(sorted(parsed))

    if entry.get("mirror") is not None:
        if not isinstance(entry["mirror"], bool):
            raise ValueError("mirror must be true or false")
        kw["mirror"] = entry["mirror"]
    if entry.get("genus") is not None:
        kw["genus"] = _int(entry["genus"], "genus")
    if entry.get("fibered") is not None:
        if not isinstance(entry["fibered"], bool):
            raise ValueError("fibered must be true or false")
        kw["fibered"] = entry["fibered"]
    if entry.get("comment") is not None:
        kw["comment"] = str(entry["comment"])

    return KnotRecord(**kw)


def entry_from_record(record: KnotRecord) -> Dict[str, Any]:
    """
    Catalog entry for a record, in the same schema record_from_entry reads
    """
    res: Dict[str, Any] = {"name": record.name}
    if record.seifert is not None:
        res["seifert"] = [list(row) for row in record.seifert.entries]
    if record.declared_alexander is not None:
        res["alexander"] = list(record.declared_alexander.coeffs)
    if record.signature is not None:
        res["signature"] = record.signature
    if record.signature_jumps:
        res["signature_jumps"] = [
            {"turn": str(turn), "value": value} for turn, value in record.signature_jumps]
    if record.mirror:
        res["mirror"] = True
    if record.genus is not None:
        res["genus"] = record.genus
    if record.fibered is not None:
        res["fibered"] = record.fibered
    if record.comment:
        res["comment"] = record.comment
    return res


class Catalog:
    """
    Ordered collection of knot records, looked up by name.

    Besides the stored names, ``mirror:<name>`` resolves to the mirror image
    of ``<name>``, and ``twist<a>`` to the twist knot with parameter a.
    """
    def __init__(self, records: Iterable[KnotRecord] = ()):
        self.records: Dict[str, KnotRecord] = {}
        # Where each record was loaded from, as (path, line)
        self.sources: Dict[str, Tuple[Optional[str], Optional[int]]] = {}
        for record in records:
            self.add(record)

    def add(self, record: KnotRecord, path: Optional[str] = None, line: Optional[int] = None):
        if record.name.startswith(MIRROR_PREFIX):
            raise CatalogError("knot names cannot start with {!r}".format(MIRROR_PREFIX), path, line)
        old = self.sources.get(record.name)
        if old is not None and old[0] == path:
            raise CatalogError("knot {} is defined twice".format(record.name), path, line)
        if old is not None:
            log.info("%s: %s overrides the definition from %s", path, record.name, old[0] or "built-ins")
        self.records[record.name] = record
        self.sources[record.name] = (path, line)

    def __iter__(self) -> Iterator[KnotRecord]:
        return iter(self.records.values())

    def __len__(self) -> int:
        return len(self.records)

    def __contains__(self, name: str) -> bool:
        try:
            self.resolve(name)
        except UnknownKnot:
            return False
        return True

    def resolve(self, name: str) -> KnotRecord:
        if name.startswith(MIRROR_PREFIX):
            return mirror(self.resolve(name[len(MIRROR_PREFIX):]))
        record = self.records.get(name)
        if record is not None:
            return record
        mo = re_twist.match(name)
        if mo:
            try:
                return twist_knot(int(mo.group(1)))
            except (InvalidKnotRecord, InvalidSeifert) as e:
                raise UnknownKnot("{}: {}".format(name, e))
        raise UnknownKnot("unknown knot {!r}".format(name))

    def load_data(self, data: Any, path: Optional[str] = None):
        """
        Add the knots of a parsed catalog document. Nothing is added if any
        entry is invalid.
        """
        if not isinstance(data, dict):
            raise CatalogError("catalog did not parse into a mapping", path, yaml_codec.line_of(data))
        version = data.get("version")
        if version != CATALOG_VERSION:
            raise CatalogError("unsupported catalog version {!r}".format(version),
                               path, yaml_codec.line_of(data, "version"))
        knots = data.get("knots", [])
        if not isinstance(knots, list):
            raise CatalogError("knots must be a list", path, yaml_codec.line_of(data, "knots"))

        loaded = []
        for idx, entry in enumerate(knots):
            line = yaml_codec.line_of(knots, idx)
            try:
                record = record_from_entry(entry)
            except (ValueError, TypeError) as e:
                raise CatalogError(str(e), path, line)
            try:
                record.profile
            except InsufficientData as e:
                log.info("%s", e)
            except (InvalidKnotRecord, InvalidSeifert) as e:
                raise CatalogError(str(e), path, line)
            loaded.append((record, line))

        names = set()
        for record, line in loaded:
            if record.name in names:
                raise CatalogError("knot {} is defined twice".format(record.name), path, line)
            names.add(record.name)
        for record, line in loaded:
            self.add(record, path, line)

    def load_file(self, path: str):
        fmt = file_format(path)
        with timings("Loaded catalog in %fs: %s", path):
            with open(path, "rt", encoding="utf-8") as fd:
                try:
                    data = parse_data(fd, fmt)
                except CatalogError:
                    raise
                except Exception as e:
                    line = None
                    mark = getattr(e, "problem_mark", None)
                    if mark is not None:
                        line = mark.line + 1
                    raise CatalogError("cannot parse {}: {}".format(fmt, e), path, line)
            self.load_data(data, path)

    @classmethod
    def builtin(cls) -> "Catalog":
        res = cls()
        res.load_file(BUILTIN_PATH)
        # Built-ins are reported as such, not by installation path
        res.sources = {name: (None, line) for name, (path, line) in res.sources.items()}
        return res

    @classmethod
    def load(cls, path: Optional[str] = None) -> "Catalog":
        """
        Built-in knots, plus the ones in the given catalog file
        """
        res = cls.builtin()
        if path is not None:
            res.load_file(path)
        return res


def export_catalog(records: Iterable[KnotRecord], path: str):
    """
    Write records as a catalog file, in the format given by the extension
    """
    fmt = file_format(path)
    data = {"version": CATALOG_VERSION, "knots": [entry_from_record(r) for r in records]}
    with open(path, "wt", encoding="utf-8") as fd:
        write_data(fd, data, fmt)
