from __future__ import annotations
from typing import Any, Optional, Sequence
import math
import os
import jinja2
from .certified import CertifiedReal
from .utils import format_decimal

TEMPLATE_DIR = os.path.join(os.path.dirname(__file__), "templates")


def jinja2_certified(value: Any, digits: int = 12) -> str:
    if isinstance(value, CertifiedReal):
        return value.format(digits)
    if value is None:
        return "-"
    return format_decimal(value, digits)


def jinja2_radians(turn: CertifiedReal, digits: int = 9) -> str:
    """
    Human-readable angle of a turn, in radians
    """
    return format_decimal(float(turn) * 2 * math.pi, digits)


def jinja2_yesno(value: Optional[bool]) -> str:
    if value is None:
        return "unknown"
    return "yes" if value else "no"


class Renderer:
    """
    Render text reports from the templates in knotcomm/templates
    """
    def __init__(self, settings=None, template_paths: Sequence[str] = (TEMPLATE_DIR,)):
        self.jinja2 = jinja2.Environment(
            loader=jinja2.FileSystemLoader(list(template_paths)),
            autoescape=False,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
            undefined=jinja2.StrictUndefined,
        )

        # Add settings to jinja2 globals
        if settings is not None:
            for x in dir(settings):
                if not x.isupper():
                    continue
                self.jinja2.globals[x] = getattr(settings, x)

        self.jinja2.filters["certified"] = jinja2_certified
        self.jinja2.filters["radians"] = jinja2_radians
        self.jinja2.filters["yesno"] = jinja2_yesno

    def render(self, name: str, **kw) -> str:
        template = self.jinja2.get_template(name)
        return template.render(**kw)
