"""
Certified numerics: values with rigorous error radii.

Real values are balls with an exact rational midpoint and radius. Elementary
functions are evaluated with mpmath at a working precision and then padded
outward by a bound on mpmath's rounding error, evaluating monotone functions
at both ends of the input interval. Complex roots are located with mpmath's
simultaneous iteration and then certified in exact Gaussian-rational
arithmetic with Weierstrass inclusion disks.
"""
from __future__ import annotations
from typing import Iterable, List, Optional, Sequence, Tuple, Union
from dataclasses import dataclass
from fractions import Fraction
import math
import numbers
import threading
import logging
import mpmath
import numpy
from .polynomial import IntPoly, NotReciprocal, ZeroPolynomial, reciprocal_decompose, sturm_chain
from .utils import format_decimal

log = logging.getLogger("certified")

Rational = Union[int, Fraction]

DEFAULT_RADIUS = Fraction(1, 10 ** 12)
START_PRECISION = 128
PRECISION_CAP = 4096


class PrecisionExhausted(ArithmeticError):
    """
    Certification did not succeed below the precision cap
    """


@dataclass(frozen=True)
class CertifiedReal:
    """
    A real number known to lie in [midpoint - radius, midpoint + radius]
    """
    midpoint: Fraction
    radius: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "midpoint", Fraction(self.midpoint))
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius < 0:
            raise ValueError("negative radius {}".format(self.radius))

    @classmethod
    def exact(cls, value: Rational) -> "CertifiedReal":
        return cls(Fraction(value), Fraction(0))

    @classmethod
    def from_interval(cls, lo: Rational, hi: Rational) -> "CertifiedReal":
        lo = Fraction(lo)
        hi = Fraction(hi)
        if hi < lo:
            raise ValueError("empty interval [{}, {}]".format(lo, hi))
        return cls((lo + hi) / 2, (hi - lo) / 2)

    @property
    def lower(self) -> Fraction:
        return self.midpoint - self.radius

    @property
    def upper(self) -> Fraction:
        return self.midpoint + self.radius

    @property
    def is_exact(self) -> bool:
        return self.radius == 0

    def contains(self, value: Rational) -> bool:
        return self.lower <= value <= self.upper

    def contains_zero(self) -> bool:
        return self.contains(0)

    def excludes_zero(self) -> bool:
        return not self.contains(0)

    def is_positive(self) -> bool:
        return self.lower > 0

    def is_negative(self) -> bool:
        return self.upper < 0

    def overlaps(self, other: "CertifiedReal") -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def floor(self) -> Optional[int]:
        """
        The floor of the value, or None if the interval straddles an integer
        """
        lo = math.floor(self.lower)
        if lo != math.floor(self.upper):
            return None
        return int(lo)

    def distance_to_integer_excludes_zero(self) -> bool:
        """
        True if the value is certainly not an integer
        """
        return math.floor(self.lower) == math.floor(self.upper) and math.floor(self.lower) != self.lower

    def rounded(self, bits: int) -> "CertifiedReal":
        """
        Round outward to the grid of multiples of 2^-bits, keeping midpoint
        and radius small
        """
        scale = 2 ** bits
        lo = Fraction(math.floor(self.lower * scale), scale)
        hi = Fraction(math.ceil(self.upper * scale), scale)
        return CertifiedReal.from_interval(lo, hi)

    def _coerce(self, other) -> "CertifiedReal":
        if isinstance(other, CertifiedReal):
            return other
        if isinstance(other, numbers.Rational):
            return CertifiedReal.exact(Fraction(int(other.numerator), int(other.denominator)))
        return NotImplemented

    def __neg__(self) -> "CertifiedReal":
        return CertifiedReal(-self.midpoint, self.radius)

    def __add__(self, other) -> "CertifiedReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CertifiedReal(self.midpoint + other.midpoint, self.radius + other.radius)

    __radd__ = __add__

    def __sub__(self, other) -> "CertifiedReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CertifiedReal(self.midpoint - other.midpoint, self.radius + other.radius)

    def __rsub__(self, other) -> "CertifiedReal":
        return (-self) + other

    def __mul__(self, other) -> "CertifiedReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CertifiedReal(
            self.midpoint * other.midpoint,
            abs(self.midpoint) * other.radius + abs(other.midpoint) * self.radius + self.radius * other.radius)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CertifiedReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.contains_zero():
            raise ZeroDivisionError("division by an interval containing 0: {}".format(other))
        if other.is_exact:
            return CertifiedReal(self.midpoint / other.midpoint, self.radius / abs(other.midpoint))
        ends = [a / b for a in (self.lower, self.upper) for b in (other.lower, other.upper)]
        return CertifiedReal.from_interval(min(ends), max(ends))

    def __float__(self) -> float:
        return float(self.midpoint)

    def format(self, digits: int = 12) -> str:
        if self.is_exact:
            return format_decimal(self.midpoint, digits)
        return "{} ± {:.1e}".format(format_decimal(self.midpoint, digits), float(self.radius))

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class CertifiedComplexBox:
    """
    A box in the complex plane containing exactly ``multiplicity`` roots of
    the polynomial it was isolated from, counted with multiplicity
    """
    real: CertifiedReal
    imag: CertifiedReal
    multiplicity: int = 1

    @property
    def radius(self) -> Fraction:
        return max(self.real.radius, self.imag.radius)

    def disjoint(self, other: "CertifiedComplexBox") -> bool:
        return not (self.real.overlaps(other.real) and self.imag.overlaps(other.imag))

    def modulus_squared(self) -> CertifiedReal:
        """
        Enclosure of |z|^2 over the box
        """
        hi = max(abs(self.real.lower), abs(self.real.upper)) ** 2 \
            + max(abs(self.imag.lower), abs(self.imag.upper)) ** 2
        lo = _min_abs(self.real) ** 2 + _min_abs(self.imag) ** 2
        return CertifiedReal.from_interval(lo, hi)

    def unit_side(self) -> int:
        """
        -1 if the box lies inside the open unit disk, 1 if it lies outside the
        closed unit disk, 0 if it touches the unit circle
        """
        mod2 = self.modulus_squared()
        if mod2.upper < 1:
            return -1
        if mod2.lower > 1:
            return 1
        return 0

    def __complex__(self) -> complex:
        return complex(float(self.real.midpoint), float(self.imag.midpoint))

    def __str__(self):
        imag = -self.imag if self.imag.midpoint < 0 else self.imag
        res = "{} {} {}i".format(self.real.format(), "-" if self.imag.midpoint < 0 else "+", imag.format())
        if self.multiplicity > 1:
            res += " (×{})".format(self.multiplicity)
        return res


def _min_abs(x: CertifiedReal) -> Fraction:
    if x.contains_zero():
        return Fraction(0)
    return min(abs(x.lower), abs(x.upper))


_contexts = threading.local()


def _context(prec: int) -> mpmath.MPContext:
    """
    Private mpmath context at the given binary precision.

    Contexts are per thread: mpmath's global context holds its precision as
    shared mutable state.
    """
    cache = getattr(_contexts, "by_prec", None)
    if cache is None:
        cache = _contexts.by_prec = {}
    ctx = cache.get(prec)
    if ctx is None:
        ctx = mpmath.MPContext()
        ctx.prec = prec
        cache[prec] = ctx
    return ctx


def _to_fraction(value) -> Fraction:
    """
    Exact value of an mpmath real
    """
    sign, man, exp, bc = value._mpf_
    # gmpy2 backends hand out mpz mantissas
    man = int(man)
    if not man:
        if exp:
            raise ArithmeticError("cannot convert {} to a rational".format(value))
        return Fraction(0)
    if sign:
        man = -man
    if exp >= 0:
        return Fraction(man << exp)
    return Fraction(man, 1 << -exp)


def _to_mpf(ctx, value: Fraction):
    return ctx.mpf(value.numerator) / ctx.mpf(value.denominator)


def _pad(prec: int, value: Fraction) -> Fraction:
    """
    Bound on the rounding error of an mpmath elementary function evaluated at
    ``prec`` bits
    """
    return Fraction(1 + math.ceil(abs(value)), 2 ** (prec - 4))


def precision_for(radius: Rational) -> int:
    """
    Smallest b with 2^-b <= radius
    """
    radius = Fraction(radius)
    if radius <= 0:
        raise ValueError("radius must be positive, got {}".format(radius))
    return max(0, radius.denominator.bit_length() - radius.numerator.bit_length() + 1)


def _monotone(fn_name: str, x: CertifiedReal, prec: int) -> CertifiedReal:
    ctx = _context(prec)
    fn = getattr(ctx, fn_name)
    values = [_to_fraction(fn(_to_mpf(ctx, end))) for end in (x.lower, x.upper)]
    pad = max(_pad(prec, v) for v in values)
    return CertifiedReal.from_interval(min(values) - pad, max(values) + pad)


def certified_log(x: CertifiedReal, prec: int = START_PRECISION) -> CertifiedReal:
    """
    Natural logarithm of a certainly positive value
    """
    if not x.is_positive():
        raise ValueError("logarithm of {} which is not certainly positive".format(x))
    if x.is_exact and x.midpoint == 1:
        return CertifiedReal.exact(0)
    return _monotone("log", x, prec)


def certified_sqrt(x: CertifiedReal, prec: int = START_PRECISION) -> CertifiedReal:
    if x.is_negative():
        raise ValueError("square root of negative value {}".format(x))
    if x.lower < 0:
        x = CertifiedReal.from_interval(0, x.upper)
    return _monotone("sqrt", x, prec)


def certified_acos(x: CertifiedReal, prec: int = START_PRECISION) -> CertifiedReal:
    """
    Arc cosine of a value known to lie in [-1, 1]. The interval is clamped to
    [-1, 1] and its ends are rounded outward so mpmath receives them exactly.
    """
    lo = max(x.lower, Fraction(-1))
    hi = min(x.upper, Fraction(1))
    if hi < lo:
        raise ValueError("arc cosine of {} outside [-1, 1]".format(x))
    clamped = CertifiedReal.from_interval(lo, hi).rounded(prec - 8)
    clamped = CertifiedReal.from_interval(max(clamped.lower, Fraction(-1)), min(clamped.upper, Fraction(1)))
    return _monotone("acos", clamped, prec)


def certified_cos(x: CertifiedReal, prec: int = START_PRECISION) -> CertifiedReal:
    ctx = _context(prec)
    value = _to_fraction(ctx.cos(_to_mpf(ctx, x.midpoint)))
    return CertifiedReal(value, x.radius + _pad(prec, value))


def certified_sin(x: CertifiedReal, prec: int = START_PRECISION) -> CertifiedReal:
    ctx = _context(prec)
    value = _to_fraction(ctx.sin(_to_mpf(ctx, x.midpoint)))
    return CertifiedReal(value, x.radius + _pad(prec, value))


def certified_pi(prec: int = START_PRECISION) -> CertifiedReal:
    value = _to_fraction(+_context(prec).pi)
    return CertifiedReal(value, _pad(prec, value))


def certified_log_int(n: int, radius: Rational = DEFAULT_RADIUS) -> CertifiedReal:
    """
    Natural logarithm of a positive integer of any size
    """
    if n < 1:
        raise ValueError("logarithm of non-positive integer {}".format(n))
    if n == 1:
        return CertifiedReal.exact(0)
    prec = max(START_PRECISION, precision_for(radius) + n.bit_length().bit_length() + 16)
    while True:
        res = certified_log(CertifiedReal.exact(n), prec)
        if res.radius <= radius:
            return res
        prec *= 2


# Root isolation

GaussianRational = Tuple[Fraction, Fraction]


def _cmul(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _sqrt_upper(value: Fraction, bits: int) -> Fraction:
    """
    Dyadic upper bound of sqrt(value)
    """
    scaled = math.floor(value * 4 ** bits)
    return Fraction(math.isqrt(scaled) + 1, 2 ** bits)


def _approximate_roots(f: IntPoly, prec: int) -> Optional[List[GaussianRational]]:
    ctx = _context(prec)
    try:
        approx = ctx.polyroots(list(reversed(f.coeffs)), maxsteps=50 + 10 * f.degree, extraprec=prec)
    except mpmath.libmp.NoConvergence:
        return None
    res = []
    for z in approx:
        z = ctx.mpc(z)
        res.append((_to_fraction(z.real), _to_fraction(z.imag)))
    return res


def _inclusion_disks(f: IntPoly, zs: List[GaussianRational], prec: int) -> Optional[List[Fraction]]:
    """
    Radii n·|W_i| of the Weierstrass inclusion disks around the
    approximations zs: every connected component made of k disks contains
    exactly k roots of f.
    """
    if len(set(zs)) != len(zs):
        return None
    lead = f.lead
    res = []
    for i, z in enumerate(zs):
        value = (Fraction(0), Fraction(0))
        for c in reversed(f.coeffs):
            value = _cmul(value, z)
            value = (value[0] + c, value[1])
        denom = (Fraction(lead), Fraction(0))
        for j, w in enumerate(zs):
            if j != i:
                denom = _cmul(denom, (z[0] - w[0], z[1] - w[1]))
        num2 = value[0] ** 2 + value[1] ** 2
        den2 = denom[0] ** 2 + denom[1] ** 2
        res.append(f.degree * _sqrt_upper(num2 / den2, prec + 16))
    return res


def _isolate_squarefree(f: IntPoly, multiplicity: int, prec: int) -> Optional[List[CertifiedComplexBox]]:
    if f.degree == 1:
        root = Fraction(-f.coeffs[0], f.coeffs[1])
        return [CertifiedComplexBox(CertifiedReal.exact(root), CertifiedReal.exact(0), multiplicity)]
    zs = _approximate_roots(f, prec)
    if zs is None:
        return None
    radii = _inclusion_disks(f, zs, prec)
    if radii is None:
        return None
    return [
        CertifiedComplexBox(CertifiedReal(re, r), CertifiedReal(im, r), multiplicity)
        for (re, im), r in zip(zs, radii)]


def isolate_roots(
        p: IntPoly,
        target_radius: Rational = DEFAULT_RADIUS,
        precision_cap: int = PRECISION_CAP,
        start_precision: int = START_PRECISION) -> List[CertifiedComplexBox]:
    """
    Pairwise disjoint boxes, each containing exactly ``multiplicity`` roots of
    p and of radius at most target_radius, ordered by real then imaginary
    part of their midpoints
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate the roots of the zero polynomial")
    if p.degree < 1:
        raise ValueError("{} has no roots".format(p))
    target = Fraction(target_radius)
    core, zeros = p.strip_zero_roots()
    factors = core.squarefree_factors() if core.degree > 0 else []

    prec = start_precision
    while prec <= precision_cap:
        boxes: List[CertifiedComplexBox] = []
        if zeros:
            boxes.append(CertifiedComplexBox(CertifiedReal.exact(0), CertifiedReal.exact(0), zeros))
        for f, e in factors:
            found = _isolate_squarefree(f, e, prec)
            if found is None:
                boxes = None
                break
            boxes.extend(found)

        if boxes is not None and all(b.radius <= target for b in boxes) and _pairwise_disjoint(boxes):
            boxes.sort(key=lambda b: (b.real.midpoint, b.imag.midpoint))
            return boxes

        prec *= 2
        log.debug("%s: raising root isolation precision to %d bits", p, prec)

    raise PrecisionExhausted("{}: roots not certified within {} bits of precision".format(p, precision_cap))


def _pairwise_disjoint(boxes: Sequence[CertifiedComplexBox]) -> bool:
    for i, a in enumerate(boxes):
        for b in boxes[i + 1:]:
            if not a.disjoint(b):
                return False
    return True


# Unit circle

def _strip_root(p: IntPoly, root: int) -> Tuple[IntPoly, int]:
    """
    Divide out (t - root) as many times as possible
    """
    linear = IntPoly((-root, 1))
    count = 0
    while p.degree > 0 and p(root) == 0:
        p = p.exquo(linear)
        count += 1
    return p, count


def unit_circle_count(p: IntPoly) -> int:
    """
    Exact number of roots of p on the unit circle, counted with multiplicity.

    Roots on the circle are the roots of gcd(p, p*) with p* the reversed
    polynomial; their multiplicity there is the same as in p. Once the roots
    ±1 are divided out, what is left is reciprocal of even degree and its
    unit-circle roots are the real roots of Q in (-2, 2), with p = t^g Q(t+1/t).
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    core, _ = p.strip_zero_roots()
    if core.degree < 1:
        return 0
    common = core.gcd(IntPoly(core.coeffs[::-1]))
    common, at_one = _strip_root(common, 1)
    common, at_minus_one = _strip_root(common, -1)
    count = at_one + at_minus_one
    if common.degree > 0:
        common = common.sign_normalized()
        for f, e in reciprocal_decompose(common).squarefree_factors():
            count += 2 * e * sturm_chain(f).count(Fraction(-2), Fraction(2))
    return count


@dataclass(frozen=True)
class UnitCircleRoot:
    """
    A root e^{iθ} of a reciprocal polynomial with θ in (0, π], reported once
    per conjugate pair.

    ``x_poly`` is the square-free polynomial in x = t + 1/t the root was
    isolated from, and (x_lower, x_upper] an isolating interval for
    x = 2 cos θ; x_lower == x_upper means x is exactly known.
    """
    angle: CertifiedReal
    multiplicity: int
    x_poly: Optional[IntPoly]
    x_lower: Fraction
    x_upper: Fraction

    def refine_x(self, width: Fraction) -> Tuple[Fraction, Fraction]:
        if self.x_poly is None or self.x_lower == self.x_upper:
            return self.x_lower, self.x_upper
        return sturm_chain(self.x_poly).refine(self.x_lower, self.x_upper, width)

    def refined(self, radius: Rational) -> "UnitCircleRoot":
        """
        Return the same root with its angle certified to the given radius
        """
        radius = Fraction(radius)
        if self.angle.radius <= radius:
            return self
        angle, lo, hi = _angle_from_x(self, radius)
        return UnitCircleRoot(angle, self.multiplicity, self.x_poly, lo, hi)

    def turn(self, radius: Rational = DEFAULT_RADIUS) -> CertifiedReal:
        """
        The angle as a fraction of a full turn, θ / 2π
        """
        radius = Fraction(radius)
        root = self.refined(radius)
        prec = max(START_PRECISION, precision_for(radius) + 16)
        res = root.angle / (certified_pi(prec) * 2)
        while res.radius > radius:
            radius /= 2 ** 16
            root = root.refined(radius)
            prec = max(START_PRECISION, precision_for(radius) + 16)
            res = root.angle / (certified_pi(prec) * 2)
        return res


def _angle_from_x(root: UnitCircleRoot, radius: Fraction) -> Tuple[CertifiedReal, Fraction, Fraction]:
    if root.x_lower == root.x_upper:
        prec = max(START_PRECISION, precision_for(radius) + 16)
        while True:
            angle = certified_acos(CertifiedReal.exact(root.x_lower / 2), prec)
            if angle.radius <= radius:
                return angle, root.x_lower, root.x_upper
            prec *= 2
    # Near x = ±2 the angle moves like the square root of x
    width = radius * radius / 4
    prec = max(START_PRECISION, 2 * precision_for(radius) + 16)
    lo, hi = root.x_lower, root.x_upper
    while True:
        lo, hi = sturm_chain(root.x_poly).refine(lo, hi, width)
        angle = certified_acos(CertifiedReal.from_interval(lo / 2, hi / 2), prec)
        if angle.radius <= radius:
            return angle, lo, hi
        width /= 2 ** 16
        prec += 32


def unit_circle_roots(p: IntPoly, radius: Rational = DEFAULT_RADIUS) -> List[UnitCircleRoot]:
    """
    Roots of a reciprocal polynomial on the unit circle, as angles in
    (0, π] sorted increasingly, with multiplicities.

    The count is exact; angles are certified to ``radius``. A root at t = 1
    has angle 0, outside the reported range, and is left out.
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    if not p.is_reciprocal():
        raise NotReciprocal("{} is not reciprocal".format(p))
    radius = Fraction(radius)
    core, at_one = _strip_root(p, 1)
    core, at_minus_one = _strip_root(core, -1)
    res: List[UnitCircleRoot] = []
    if core.degree > 0:
        q = reciprocal_decompose(core.sign_normalized())
        sqf = q.squarefree_part()
        factors = q.squarefree_factors()
        chain = sturm_chain(sqf)
        for lo, hi in chain.isolate(Fraction(-2), Fraction(2)):
            multiplicity = _multiplicity_in(factors, lo, hi)
            placeholder = UnitCircleRoot(CertifiedReal(Fraction(0), Fraction(4)), multiplicity, sqf, lo, hi)
            res.append(placeholder.refined(radius))
    if at_minus_one:
        prec = max(START_PRECISION, precision_for(radius) + 16)
        res.append(UnitCircleRoot(certified_pi(prec), at_minus_one, None, Fraction(-2), Fraction(-2)))
    # Increasing angle is decreasing x
    res.sort(key=lambda r: -r.x_upper)
    return res


def _multiplicity_in(factors: List[Tuple[IntPoly, int]], lo: Fraction, hi: Fraction) -> int:
    for f, e in factors:
        if lo == hi:
            if f(lo) == 0:
                return e
        elif sturm_chain(f.squarefree_part()).count(lo, hi) == 1:
            return e
    raise AssertionError("root in ({}, {}] not found in any square-free factor".format(lo, hi))


# Mahler measure

def log_mahler(
        p: IntPoly,
        target_radius: Rational = DEFAULT_RADIUS,
        precision_cap: int = PRECISION_CAP,
        start_precision: int = START_PRECISION) -> CertifiedReal:
    """
    Certified logarithm of the Mahler measure, ln|lead| + Σ max(ln|r|, 0).

    Roots on the unit circle are counted exactly; boxes are only trusted to
    be off the circle once the boxes touching it account for exactly that
    count.
    """
    if p.is_zero:
        raise ZeroPolynomial("the Mahler measure of the zero polynomial is undefined")
    target = Fraction(target_radius)
    lead = certified_log_int(abs(p.lead), target / 4)
    core, _ = p.strip_zero_roots()
    if core.degree < 1:
        return lead
    on_circle = unit_circle_count(core)
    if on_circle == core.degree:
        return lead

    box_radius = target / (8 * core.degree)
    prec = max(start_precision, precision_for(target) + 16)
    while True:
        boxes = isolate_roots(core, box_radius, precision_cap=precision_cap, start_precision=start_precision)
        touching = sum(b.multiplicity for b in boxes if b.unit_side() == 0)
        if touching == on_circle:
            res = lead
            for box in boxes:
                if box.unit_side() > 0:
                    res = res + certified_log(box.modulus_squared(), prec) * Fraction(box.multiplicity, 2)
            if res.radius <= target:
                return res
            prec *= 2
        if box_radius < Fraction(1, 2 ** precision_cap):
            raise PrecisionExhausted("{}: cannot separate roots from the unit circle".format(p))
        box_radius /= 2 ** 16
        log.debug("%s: shrinking root boxes to %s", p, float(box_radius))


def mahler_measure(p: IntPoly, target_radius: Rational = DEFAULT_RADIUS) -> CertifiedReal:
    """
    Certified Mahler measure m(p) = exp(log_mahler(p))
    """
    lm = log_mahler(p, Fraction(target_radius) / 64)
    if lm.is_exact and lm.midpoint == 0:
        return CertifiedReal.exact(1)
    prec = max(START_PRECISION, precision_for(target_radius) + 16)
    return _monotone("exp", lm, prec)


def jensen_estimate(p: IntPoly, k: int) -> float:
    """
    Trapezoidal estimate of ∫ ln|p(e^{2πis})| ds over 2^k equally spaced
    points. By Jensen's formula this converges to log_mahler(p) when p has
    no roots on the unit circle.
    """
    count = 2 ** k
    z = numpy.exp(2j * numpy.pi * numpy.arange(count) / count)
    values = numpy.polynomial.polynomial.polyval(z, numpy.array(p.coeffs, dtype=float))
    return float(numpy.mean(numpy.log(numpy.abs(values))))


def unit_root_product(p: IntPoly, n: int, radius: Rational = DEFAULT_RADIUS) -> CertifiedReal:
    """
    Certified |∏_{k=1..n} p(e^{2πik/n})|, evaluated numerically in complex
    interval arithmetic
    """
    if n < 1:
        raise ValueError("n must be positive, got {}".format(n))
    radius = Fraction(radius)
    prec = max(START_PRECISION, precision_for(radius) + 32)
    while True:
        pi2 = certified_pi(prec) * 2
        re, im = CertifiedReal.exact(1), CertifiedReal.exact(0)
        for k in range(1, n + 1):
            angle = pi2 * Fraction(k, n)
            zr, zi = certified_cos(angle, prec), certified_sin(angle, prec)
            vr, vi = CertifiedReal.exact(0), CertifiedReal.exact(0)
            for c in reversed(p.coeffs):
                vr, vi = vr * zr - vi * zi + c, vr * zi + vi * zr
            re, im = re * vr - im * vi, re * vi + im * vr
        res = certified_sqrt(re * re + im * im, prec)
        if res.radius <= radius:
            return res
        prec *= 2
        if prec > PRECISION_CAP:
            raise PrecisionExhausted("product of {} over {}-th roots of unity".format(p, n))


def sum_certified(values: Iterable[CertifiedReal]) -> CertifiedReal:
    res = CertifiedReal.exact(0)
    for v in values:
        res = res + v
    return res
