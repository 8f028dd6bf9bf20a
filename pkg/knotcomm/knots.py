"""
Knot-level invariants: Alexander polynomial, Levine-Tristram signatures,
τ(K) = ln m(Δ_K) and ρ(K) = ∫ σ(K, z) dz over the unit circle.
"""
from __future__ import annotations
from typing import List, Optional, Sequence, Tuple, Union
from dataclasses import dataclass, field, replace
from fractions import Fraction
import functools
import math
import logging
import numpy
import sympy as sp
from .polynomial import IntPoly, T, descartes_sign_changes, normalize_alexander
from .certified import (
    CertifiedReal, UnitCircleRoot, DEFAULT_RADIUS, log_mahler, unit_circle_roots)
from .utils import lazy

log = logging.getLogger("knots")

MIRROR_PREFIX = "mirror:"

# Jump turns are refined down to this before giving up on separating them
SEPARATION_CAP = Fraction(1, 2 ** 1024)


class InvalidSeifert(ValueError):
    """
    A matrix is not the Seifert matrix of a knot
    """


class InvalidKnotRecord(ValueError):
    """
    A knot record is missing data, or its data are inconsistent
    """


class SingularAtZ(ValueError):
    """
    The signature was asked at a zero of the Alexander polynomial
    """


class SingularAtRootOfUnity(ValueError):
    """
    Some root of unity of the requested order is a zero of the Alexander
    polynomial
    """


class InsufficientData(ValueError):
    """
    The record does not carry enough data to determine the signature function
    """


@dataclass(frozen=True)
class SeifertMatrix:
    """
    Square integer matrix A with det(A - A^t) = 1
    """
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        try:
            entries = tuple(tuple(int(c) for c in row) for row in self.entries)
        except (TypeError, ValueError) as e:
            raise InvalidSeifert("Seifert matrix entries must be integers: {}".format(e))
        for row in entries:
            if len(row) != len(entries):
                raise InvalidSeifert("Seifert matrix is not square")
        object.__setattr__(self, "entries", entries)
        if entries:
            det = (self.matrix - self.matrix.T).det()
        else:
            det = 1
        if det != 1:
            raise InvalidSeifert("det(A - A^t) = {}, not 1".format(det))

    @lazy
    def matrix(self) -> sp.Matrix:
        return sp.Matrix(self.entries) if self.entries else sp.zeros(0, 0)

    @property
    def size(self) -> int:
        return len(self.entries)

    def negated(self) -> "SeifertMatrix":
        return SeifertMatrix(tuple(tuple(-c for c in row) for row in self.entries))

    def alexander_determinant(self) -> IntPoly:
        """
        det(At - A^t), before normalization
        """
        if not self.entries:
            return IntPoly((1,))
        det = (self.matrix * T - self.matrix.T).det(method="berkowitz")
        return IntPoly.from_sympy(sp.Poly(sp.expand(det), T, domain=sp.ZZ))


def _symmetric_signature(m: sp.Matrix) -> int:
    """
    Signature of a real symmetric integer matrix.

    All roots of the characteristic polynomial are real, so Descartes' rule
    counts positive and negative eigenvalues exactly.
    """
    if m.rows == 0:
        return 0
    lam = sp.Symbol("lam")
    coeffs = [int(c) for c in m.charpoly(lam).all_coeffs()]
    size = len(coeffs) - 1
    positive = descartes_sign_changes(coeffs)
    negative = descartes_sign_changes([c * (-1) ** (size - i) for i, c in enumerate(coeffs)])
    return positive - negative


def hermitian_signature(a: SeifertMatrix, u: Fraction) -> int:
    """
    Levine-Tristram signature of the Seifert form A at the point e^{iθ} with
    tan(θ/2) = u.

    The hermitian matrix A(1-z) + A^t(1-z̄) is a positive multiple of
    u(A + A^t) + i(A^t - A), whose signature is half the one of the real
    symmetric matrix [[uS, -B], [B, uS]].
    """
    u = Fraction(u)
    if u <= 0:
        raise ValueError("u must be positive, got {}".format(u))
    if not a.entries:
        return 0
    num, den = u.numerator, u.denominator
    s = a.matrix + a.matrix.T
    b = a.matrix.T - a.matrix
    top = (s * num).row_join(b * -den)
    bottom = (b * den).row_join(s * num)
    return _symmetric_signature(top.col_join(bottom)) // 2


def seifert_signature(a: SeifertMatrix) -> int:
    """
    σ(K) = σ(K, -1), the signature of A + A^t
    """
    if not a.entries:
        return 0
    return _symmetric_signature(a.matrix + a.matrix.T)


@functools.lru_cache(maxsize=4096)
def _root_turn(root: UnitCircleRoot, radius: Fraction) -> CertifiedReal:
    return root.turn(radius)


def _certified_floor(root: UnitCircleRoot, n: int) -> int:
    """
    floor(n·s) for the turn s of a jump, knowing that n·s is not an integer
    """
    radius = Fraction(1, 2 ** 40 * n)
    while radius > SEPARATION_CAP:
        res = (_root_turn(root, radius) * n).floor()
        if res is not None:
            return res
        radius /= 2 ** 32
    raise SingularAtRootOfUnity("cannot separate a jump from the {}-th roots of unity".format(n))


@dataclass(frozen=True)
class SignatureProfile:
    """
    Piecewise constant signature function on the upper half circle.

    ``roots`` are the jump points with angle in (0, π), by increasing angle;
    ``values[j]`` is the signature on the arc before ``roots[j]``, and
    ``values[-1]`` the one on the last arc, ending at -1. ``values[0]`` is
    always 0.
    """
    roots: Tuple[UnitCircleRoot, ...]
    values: Tuple[int, ...]
    # True if -1 is a zero of Δ
    singular_at_minus_one: bool = False

    def __post_init__(self):
        if len(self.values) != len(self.roots) + 1:
            raise ValueError("a profile with {} jumps needs {} values".format(len(self.roots), len(self.roots) + 1))
        if self.values[0] != 0:
            raise ValueError("the signature vanishes near 1")
        for v in self.values:
            if v % 2:
                raise ValueError("signature value {} is not even".format(v))

    def turns(self, radius: Fraction = DEFAULT_RADIUS) -> List[CertifiedReal]:
        return [_root_turn(root, Fraction(radius)) for root in self.roots]

    def negated(self) -> "SignatureProfile":
        return SignatureProfile(self.roots, tuple(-v for v in self.values), self.singular_at_minus_one)

    def value_at(self, turn: Fraction) -> int:
        """
        Signature at the exact turn ``turn`` in (0, 1/2], which must not be a
        jump
        """
        if turn == Fraction(1, 2) and self.singular_at_minus_one:
            raise SingularAtZ("-1 is a zero of the Alexander polynomial")
        arc = 0
        for root in self.roots:
            if self._is_below(root, turn):
                arc += 1
            else:
                break
        return self.values[arc]

    def value_in(self, turn: CertifiedReal) -> int:
        """
        Signature at a turn in [0, 1/2] known only to lie in an interval
        """
        if turn.is_exact:
            return self.value_at(turn.midpoint)
        lo = max(turn.lower, Fraction(0))
        hi = min(turn.upper, Fraction(1, 2))
        if hi == Fraction(1, 2) and self.singular_at_minus_one:
            raise SingularAtZ("turn {} is not separated from -1".format(turn))
        radius = min(DEFAULT_RADIUS, turn.radius / 4)
        arc = 0
        for s in self.turns(radius):
            if s.upper < lo:
                arc += 1
            elif s.lower <= hi:
                raise SingularAtZ("turn {} is not separated from a jump".format(turn))
        return self.values[arc]

    def _is_below(self, root: UnitCircleRoot, turn: Fraction) -> bool:
        radius = DEFAULT_RADIUS
        while radius > SEPARATION_CAP:
            s = _root_turn(root, radius)
            if s.upper < turn:
                return True
            if s.lower > turn:
                return False
            radius /= 2 ** 32
        raise SingularAtZ("turn {} coincides with a jump".format(turn))

    def rho(self, radius: Fraction = DEFAULT_RADIUS) -> CertifiedReal:
        """
        2 Σ (s_{j+1} - s_j) v_j over the arcs of [0, 1/2]
        """
        radius = Fraction(radius)
        if not self.roots:
            return CertifiedReal.exact(0)
        weight = 4 * len(self.roots) * (max(abs(v) for v in self.values) + 1)
        turn_radius = radius / weight
        while True:
            bounds = [CertifiedReal.exact(0)] + self.turns(turn_radius) + [CertifiedReal.exact(Fraction(1, 2))]
            res = CertifiedReal.exact(0)
            for j, value in enumerate(self.values):
                if value:
                    res = res + (bounds[j + 1] - bounds[j]) * (2 * value)
            if res.radius <= radius:
                return res
            turn_radius /= 2 ** 8

    def signature_sum(self, n: int) -> int:
        """
        Σ_{k=1..n} σ(e^{2πik/n}), assuming no n-th root of unity is a jump
        """
        floors = [_certified_floor(root, n) for root in self.roots]
        half = -(-n // 2)
        total = 0
        for j, value in enumerate(self.values):
            # k with n·s_j < k < n·s_{j+1}, where s_0 = 0 and the last arc ends at 1/2
            start = floors[j - 1] if j > 0 else 0
            end = floors[j] + 1 if j < len(self.roots) else half
            total += 2 * (end - start - 1) * value
        if n % 2 == 0:
            total += self.values[-1]
        return total


@dataclass(frozen=True)
class KnotRecord:
    """
    A named knot given by a Seifert matrix, or by its Alexander polynomial
    plus signature data.

    ``mirror`` means the record stands for the mirror image of the knot the
    stored data describe.
    """
    name: str
    seifert: Optional[SeifertMatrix] = None
    declared_alexander: Optional[IntPoly] = None
    signature: Optional[int] = None
    # (turn, value after the jump) pairs
    signature_jumps: Tuple[Tuple[Fraction, int], ...] = ()
    mirror: bool = False
    genus: Optional[int] = None
    fibered: Optional[bool] = None
    comment: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.seifert is None and self.declared_alexander is None:
            raise InvalidKnotRecord("{}: needs a Seifert matrix or an Alexander polynomial".format(self.name))
        if self.signature is not None and self.signature % 2:
            raise InvalidKnotRecord("{}: signature {} is not even".format(self.name, self.signature))
        for turn, value in self.signature_jumps:
            if not 0 < turn < Fraction(1, 2):
                raise InvalidKnotRecord("{}: jump turn {} is not in (0, 1/2)".format(self.name, turn))
            if value % 2:
                raise InvalidKnotRecord("{}: signature value {} is not even".format(self.name, value))
        if self.declared_alexander is not None:
            if self.declared_alexander.is_zero:
                raise InvalidKnotRecord("{}: Alexander polynomial is zero".format(self.name))
            delta = normalize_alexander(self.declared_alexander)
            if delta(1) != 1:
                raise InvalidKnotRecord("{}: Δ(1) = ±{}, not ±1".format(self.name, delta(1)))
            if not delta.is_reciprocal():
                raise InvalidKnotRecord("{}: Alexander polynomial {} is not reciprocal".format(self.name, delta))
            if self.seifert is not None:
                derived = normalize_alexander(self.seifert.alexander_determinant())
                if derived != delta:
                    raise InvalidKnotRecord("{}: Seifert matrix gives Δ = {}, declared {}".format(
                        self.name, derived, delta))
        if self.seifert is not None and self.signature is not None:
            derived = seifert_signature(self.seifert)
            if derived != self.signature:
                raise InvalidKnotRecord("{}: Seifert matrix gives σ = {}, declared {}".format(
                    self.name, derived, self.signature))

    @property
    def effective_seifert(self) -> Optional[SeifertMatrix]:
        """
        Seifert matrix of the knot this record stands for
        """
        if self.seifert is None:
            return None
        return self.seifert.negated() if self.mirror else self.seifert

    @lazy
    def alexander(self) -> IntPoly:
        if self.seifert is not None:
            return normalize_alexander(self.seifert.alexander_determinant())
        return normalize_alexander(self.declared_alexander)

    @lazy
    def circle_roots(self) -> Tuple[UnitCircleRoot, ...]:
        return tuple(unit_circle_roots(self.alexander))

    @lazy
    def profile(self) -> SignatureProfile:
        return signature_profile(self)

    def __str__(self):
        return self.name


def alexander(knot: KnotRecord) -> IntPoly:
    """
    Normalized Alexander polynomial: reciprocal, with Δ(1) = 1
    """
    return knot.alexander


def _arc_sample(lower: Fraction, upper: Fraction) -> Fraction:
    """
    Rational u > 0 with x(u) = 2(1 - u²)/(1 + u²) in the open interval
    (lower, upper) of (-2, 2)
    """
    mid = (lower + upper) / 2
    target = (2 - mid) / (2 + mid)
    bits = 8
    while True:
        scale = 2 ** bits
        u = Fraction(max(math.isqrt(math.floor(target * scale * scale)), 1), scale)
        x = 2 * (1 - u * u) / (1 + u * u)
        if lower < x < upper:
            return u
        bits *= 2


def _arc_bounds(roots: Sequence[UnitCircleRoot]) -> List[Tuple[Fraction, Fraction]]:
    """
    For each arc between consecutive jumps, an open x-interval strictly
    between them, arcs ordered by increasing angle
    """
    current = list(roots)
    res = []
    for j in range(len(current) + 1):
        width = Fraction(1, 2 ** 20)
        while True:
            upper = current[j - 1].x_lower if j > 0 else Fraction(2)
            lower = current[j].x_upper if j < len(current) else Fraction(-2)
            if lower < upper:
                break
            for i in (j - 1, j):
                if 0 <= i < len(current):
                    lo, hi = current[i].refine_x(width)
                    current[i] = replace(current[i], x_lower=lo, x_upper=hi)
            width /= 2 ** 8
        res.append((lower, upper))
    return res


def signature_profile(knot: KnotRecord) -> SignatureProfile:
    """
    Signature function of the knot, as jumps and per-arc values
    """
    all_roots = knot.circle_roots
    roots = tuple(r for r in all_roots if r.x_upper > -2)
    singular = len(roots) != len(all_roots)

    a = knot.effective_seifert
    if a is not None:
        values = tuple(hermitian_signature(a, _arc_sample(lower, upper)) for lower, upper in _arc_bounds(roots))
        if values[0] != 0:
            raise InvalidSeifert("{}: signature near 1 is {}, not 0".format(knot.name, values[0]))
        return SignatureProfile(roots, values, singular)

    sign = -1 if knot.mirror else 1
    if not roots:
        if knot.signature:
            raise InvalidKnotRecord("{}: Δ has no zeros on the unit circle, so σ must be 0, not {}".format(
                knot.name, knot.signature))
        return SignatureProfile((), (0,), singular)

    if knot.signature_jumps:
        values = _match_jumps(knot, roots)
    elif len(roots) == 1 and knot.signature is not None:
        values = (0, knot.signature)
    else:
        raise InsufficientData("{}: Δ has {} zeros on the upper unit circle, and the record gives no {}".format(
            knot.name, len(roots), "signature" if len(roots) == 1 else "signature_jumps"))

    if knot.signature is not None and values[-1] != knot.signature:
        raise InvalidKnotRecord("{}: jumps end at σ = {}, declared {}".format(knot.name, values[-1], knot.signature))
    return SignatureProfile(roots, tuple(sign * v for v in values), singular)


def _match_jumps(knot: KnotRecord, roots: Sequence[UnitCircleRoot]) -> Tuple[int, ...]:
    """
    Assign each declared jump to the nearest certified jump
    """
    if len(knot.signature_jumps) != len(roots):
        raise InvalidKnotRecord("{}: {} signature jumps declared, Δ has {} on the upper unit circle".format(
            knot.name, len(knot.signature_jumps), len(roots)))
    turns = [float(_root_turn(r, DEFAULT_RADIUS).midpoint) for r in roots]
    values = [None] * len(roots)
    for turn, value in knot.signature_jumps:
        nearest = min(range(len(turns)), key=lambda i: abs(turns[i] - float(turn)))
        if values[nearest] is not None:
            raise InvalidKnotRecord("{}: two declared jumps match the same zero at turn {:.6f}".format(
                knot.name, turns[nearest]))
        values[nearest] = value
    return (0,) + tuple(values)


def _reduce_turn(turn: Fraction) -> Fraction:
    turn = turn - math.floor(turn)
    if turn > Fraction(1, 2):
        turn = 1 - turn
    return turn


def signature_at(knot: KnotRecord, z: Union[Fraction, int, str, CertifiedReal]) -> int:
    """
    Levine-Tristram signature at the point of the unit circle ``z`` turns
    away from 1, given as an exact rational or as a certified real
    """
    profile = knot.profile
    if isinstance(z, CertifiedReal):
        shift = math.floor(z.midpoint)
        z = z - shift
        if z.midpoint > Fraction(1, 2):
            z = 1 - z
        return profile.value_in(z)

    turn = _reduce_turn(Fraction(z))
    if turn == 0:
        return 0
    if knot.alexander.gcd(IntPoly.cyclotomic(turn.denominator)).degree > 0:
        raise SingularAtZ("{}: Δ vanishes at e^(2πi·{})".format(knot.name, turn))
    return profile.value_at(turn)


@functools.lru_cache(maxsize=1024)
def tau(knot: KnotRecord, radius: Fraction = DEFAULT_RADIUS) -> CertifiedReal:
    """
    Logarithm of the Mahler measure of the Alexander polynomial
    """
    return log_mahler(knot.alexander, radius)


@functools.lru_cache(maxsize=1024)
def rho(knot: KnotRecord, radius: Fraction = DEFAULT_RADIUS) -> CertifiedReal:
    """
    Integral of the signature function over the unit circle of total length 1
    """
    return knot.profile.rho(Fraction(radius))


@functools.lru_cache(maxsize=16384)
def signature_sum(knot: KnotRecord, n: int) -> int:
    """
    Exact Σ_{k=1..n} σ(K, e^{2πik/n})
    """
    if n < 1:
        raise ValueError("n must be positive, got {}".format(n))
    if knot.alexander.gcd(IntPoly.unit_root_poly(n)).degree > 0:
        raise SingularAtRootOfUnity("{}: Δ vanishes at some {}-th root of unity".format(knot.name, n))
    return knot.profile.signature_sum(n)


def mirror(knot: KnotRecord) -> KnotRecord:
    """
    The mirror image: τ is unchanged, signatures and ρ change sign
    """
    if knot.name.startswith(MIRROR_PREFIX):
        name = knot.name[len(MIRROR_PREFIX):]
    else:
        name = MIRROR_PREFIX + knot.name
    return replace(knot, name=name, mirror=not knot.mirror)


def rho_riemann(knot: KnotRecord, k: int) -> float:
    """
    Midpoint Riemann sum of the signature function on 2^k samples
    """
    count = 2 ** k
    turns = (numpy.arange(count) + 0.5) / count
    a = knot.effective_seifert
    if a is not None:
        if a.size == 0:
            return 0.0
        mat = numpy.array(a.entries, dtype=float)
        z = numpy.exp(2j * numpy.pi * turns)[:, None, None]
        herm = mat * (1 - z) + mat.T * (1 - numpy.conj(z))
        eig = numpy.linalg.eigvalsh(herm)
        sig = numpy.sum(eig > 1e-9, axis=1) - numpy.sum(eig < -1e-9, axis=1)
        return float(numpy.mean(sig))

    profile = knot.profile
    jumps = [float(t.midpoint) for t in profile.turns()]
    folded = numpy.minimum(turns, 1 - turns)
    arcs = numpy.searchsorted(numpy.array(jumps), folded)
    return float(numpy.mean(numpy.array(profile.values)[arcs]))


def twist_knot(a: int) -> KnotRecord:
    """
    Knot with Seifert matrix [[a, 1], [0, 1]] and Δ = a t² + (1 - 2a) t + a
    """
    return KnotRecord(name="twist{}".format(a), seifert=SeifertMatrix(((a, 1), (0, 1))))
