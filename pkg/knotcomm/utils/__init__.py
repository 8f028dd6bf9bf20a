from __future__ import annotations
from typing import Union
from fractions import Fraction
import contextlib
import functools
import threading
import time
import logging

log = logging.getLogger("utils")


@contextlib.contextmanager
def timings(fmtstr, *args, **kw):
    """
    Times the running of a command, and writes a log entry afterwards.

    The log entry is passed an extra command at the beginning with the elapsed
    time in floating point seconds.
    """
    start = time.perf_counter()
    yield
    end = time.perf_counter()
    log.info(fmtstr, end - start, *args, extra=kw)


class lazy:
    """
    Mark a function as a lazy property.

    The first time the property is run, it is replaced by the value it
    computed, and turned into a normal member.

    Computation happens at most once per instance even when several threads
    ask for the value at the same time: the instances it is used on are
    frozen, so the value is stored with object.__setattr__.
    """

    def __init__(self, fget):
        self.fget = fget
        self.lock = threading.RLock()
        functools.update_wrapper(self, fget)

    def __get__(self, obj, cls=None):
        if obj is None:
            return self

        name = self.fget.__name__
        with self.lock:
            # Another thread may have filled it in while we waited
            value = obj.__dict__.get(name, self)
            if value is self:
                value = self.fget(obj)
                object.__setattr__(obj, name, value)
        return value


def format_decimal(value: Union[int, Fraction, float], digits: int = 15) -> str:
    """
    Render a number with a fixed count of significant digits, the same way
    every time
    """
    if isinstance(value, int):
        return str(value)
    if value == 0:
        return "0"
    return "{:.{}g}".format(float(value), digits)


def parse_turn(text: Union[str, int, float]) -> Fraction:
    """
    Parse a turn given as "p/q", as a decimal string, or as a number
    """
    if isinstance(text, float):
        return Fraction(repr(text))
    return Fraction(str(text).strip())
