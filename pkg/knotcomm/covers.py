"""
Homology of the finite cyclic covers of a knot exterior.

H_1 of the n-fold cyclic cover is Z^b1 ⊕ G; when b1 = 1 the order of G is
|∏ Δ(ζ)| over the n-th roots of unity ζ, which is |Res(Δ, t^n - 1)|.
"""
from __future__ import annotations
from typing import List, Tuple
from dataclasses import dataclass
from fractions import Fraction
import logging
from .polynomial import IntPoly, cyclotomic_zero_exists, resultant
from .certified import CertifiedReal, DEFAULT_RADIUS, certified_log_int
from .knots import KnotRecord
from .utils import timings

log = logging.getLogger("covers")

# Default largest k of growth sequences
GROWTH_K_MAX = 2000


class NotAdmissible(ValueError):
    """
    A root of unity is a zero of the Alexander polynomial
    """


@dataclass(frozen=True)
class CoverHomologySummary:
    """
    Homology of the n-fold cyclic cover. torsion_order is 0 when the product
    of Δ over the n-th roots of unity vanishes.
    """
    n: int
    b1: int
    torsion_order: int

    @property
    def infinite(self) -> bool:
        return self.torsion_order == 0


def _check_n(n: int):
    if n < 1:
        raise ValueError("cover degree must be positive, got {}".format(n))


def torsion_order(knot: KnotRecord, n: int) -> int:
    """
    |Res(Δ, t^n - 1)|, which is 0 exactly when some n-th root of unity is a
    zero of Δ
    """
    _check_n(n)
    return abs(resultant(knot.alexander, IntPoly.unit_root_poly(n)))


def b1_of_cover(knot: KnotRecord, n: int) -> int:
    """
    1 + the number of n-th roots of unity that are zeros of Δ
    """
    _check_n(n)
    return 1 + max(knot.alexander.gcd(IntPoly.unit_root_poly(n)).degree, 0)


def cover_summary(knot: KnotRecord, n: int) -> CoverHomologySummary:
    return CoverHomologySummary(n=n, b1=b1_of_cover(knot, n), torsion_order=torsion_order(knot, n))


def admissible(knot: KnotRecord) -> bool:
    """
    True if no root of unity is a zero of Δ
    """
    return not cyclotomic_zero_exists(knot.alexander)


def growth_sequence(
        knot: KnotRecord,
        k_max: int = GROWTH_K_MAX,
        radius: Fraction = DEFAULT_RADIUS,
        k_min: int = 1) -> List[Tuple[int, CertifiedReal]]:
    """
    The homology growth sequence (k, (1/k)·ln torsion_order(K, k)), which
    converges to τ(K) for admissible knots
    """
    res = []
    with timings("Computed growth sequence in %fs for %s up to k=%d", knot.name, k_max):
        for k in range(k_min, k_max + 1):
            order = torsion_order(knot, k)
            if order == 0:
                raise NotAdmissible("{}: the {}-fold cover has b1 > 1".format(
                    knot.name, k))
            res.append((k, certified_log_int(order, Fraction(radius) * k) / k))
    return res
