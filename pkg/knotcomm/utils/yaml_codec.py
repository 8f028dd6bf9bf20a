from __future__ import annotations
from typing import TextIO, Any, Optional
import io

#
# Catalogs are read with ruamel.yaml's round-trip loader: it is slower than
# the safe loader, but the mappings and sequences it builds remember the line
# they came from, and error messages can point at the offending entry.
#
# JSON documents are valid YAML flow documents, so the same loader reads both.
#

import ruamel.yaml

yaml_loader = ruamel.yaml.YAML(typ="rt", pure=True)

# Unsorted dumping, so exported entries keep the order name, seifert, ...
yaml_dumper = ruamel.yaml.YAML(typ="rt", pure=True)
yaml_dumper.allow_unicode = True
yaml_dumper.default_flow_style = None
yaml_dumper.explicit_start = True


def load(file: TextIO) -> Any:
    return yaml_loader.load(file)


def loads(string: str) -> Any:
    return yaml_loader.load(string)


def dump(data: Any, file: TextIO):
    yaml_dumper.dump(data, file)


def dumps(data: Any) -> str:
    with io.StringIO() as fd:
        yaml_dumper.dump(data, fd)
        return fd.getvalue()


def line_of(node: Any, key: Any = None) -> Optional[int]:
    """
    1-based source line of a loaded mapping or sequence, or of one of its
    keys or items. Returns None for data that did not come from the
    round-trip loader.
    """
    lc = getattr(node, "lc", None)
    if lc is None:
        return None
    try:
        if key is None:
            line = lc.line
        elif isinstance(key, int) and not isinstance(node, dict):
            line = lc.item(key)[0]
        else:
            line = lc.key(key)[0]
    except (KeyError, IndexError, TypeError, AttributeError):
        return None
    if line is None:
        return None
    return line + 1
