"""
Exact integer polynomial arithmetic.

Nothing in this module rounds: coefficients are Python integers, real roots
are located with rational Sturm bisection, and everything that needs heavier
machinery (resultants, gcds, square-free decomposition) is delegated to
sympy's dense polynomial arithmetic over ZZ.
"""
from __future__ import annotations
from typing import Iterable, List, NamedTuple, Sequence, Tuple, Union
from dataclasses import dataclass
from fractions import Fraction
import functools
import math
import logging
import sympy as sp
from .utils import lazy

log = logging.getLogger("polynomial")

T = sp.Symbol("t")
S = sp.Symbol("s")

Number = Union[int, Fraction]


class ZeroPolynomial(ValueError):
    """
    An operation that needs a nonzero polynomial was given the zero polynomial
    """


class NotReciprocal(ValueError):
    """
    A polynomial was expected to satisfy t^d p(1/t) = p(t)
    """


@dataclass(frozen=True)
class IntPoly:
    """
    Polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored constant term first. Trailing zeros are stripped
    on construction, so the zero polynomial has an empty coefficient tuple.
    """
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_sympy(cls, poly: sp.Poly) -> "IntPoly":
        """
        Build from a univariate sympy Poly with integer coefficients
        """
        if poly.is_zero:
            return cls(())
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def cyclotomic(cls, n: int) -> "IntPoly":
        """
        n-th cyclotomic polynomial
        """
        return cls.from_sympy(sp.Poly(sp.cyclotomic_poly(n, T), T))

    @classmethod
    def unit_root_poly(cls, n: int) -> "IntPoly":
        """
        t^n - 1
        """
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @lazy
    def as_poly(self) -> sp.Poly:
        """
        The same polynomial as a sympy Poly in t over ZZ
        """
        return sp.Poly(list(reversed(self.coeffs)) or [0], T, domain=sp.ZZ)

    @property
    def degree(self) -> int:
        """
        Degree, with -1 for the zero polynomial
        """
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        """
        True if the leading coefficient is a unit of Z
        """
        return abs(self.lead) == 1

    def is_reciprocal(self) -> bool:
        """
        Check t^d p(1/t) = p(t), with d the degree
        """
        return bool(self.coeffs) and self.coeffs == self.coeffs[::-1]

    def __call__(self, x: Number) -> Number:
        res: Number = 0
        for c in reversed(self.coeffs):
            res = res * x + c
        return res

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return IntPoly(())
        res = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                res[i + j] += a * b
        return IntPoly(tuple(res))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        res = IntPoly((1,))
        base = self
        while exponent:
            if exponent & 1:
                res = res * base
            base = base * base
            exponent >>= 1
        return res

    def exquo(self, other: "IntPoly") -> "IntPoly":
        """
        Exact division, raising sympy's ExactQuotientFailed if other does not
        divide self
        """
        return IntPoly.from_sympy(self.as_poly.exquo(other.as_poly))

    def gcd(self, other: "IntPoly") -> "IntPoly":
        """
        Greatest common divisor, with positive leading coefficient
        """
        return IntPoly.from_sympy(self.as_poly.gcd(other.as_poly))

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def primitive(self) -> "IntPoly":
        """
        Divide by the content, keeping the sign of the leading coefficient
        """
        if self.is_zero:
            return self
        content = functools.reduce(math.gcd, self.coeffs)
        return IntPoly(tuple(c // content for c in self.coeffs))

    def sign_normalized(self) -> "IntPoly":
        """
        Return ±self, chosen so that the leading coefficient is positive
        """
        return -self if self.lead < 0 else self

    def squarefree_part(self) -> "IntPoly":
        """
        Product of the distinct irreducible factors, primitive, positive
        leading coefficient
        """
        return IntPoly.from_sympy(self.as_poly.sqf_part()).primitive().sign_normalized()

    def squarefree_factors(self) -> List[Tuple["IntPoly", int]]:
        """
        Square-free decomposition: pairwise coprime square-free factors with
        their multiplicities, ordered by multiplicity. The integer content is
        dropped.
        """
        content, factors = self.as_poly.sqf_list()
        return [(IntPoly.from_sympy(f).sign_normalized(), int(e)) for f, e in factors]

    def strip_zero_roots(self) -> Tuple["IntPoly", int]:
        """
        Split off the t^k factor: return (p / t^k, k) with nonzero constant
        term
        """
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return IntPoly(self.coeffs[k:]), k

    def format(self, var: str = "t") -> str:
        if self.is_zero:
            return "0"
        terms = []
        for exp in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[exp]
            if c == 0:
                continue
            if exp == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = mag + (var if exp == 1 else "{}^{}".format(var, exp))
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class IntLaurentPoly:
    """
    Integer Laurent polynomial: coefficients constant-first starting at
    exponent ``low``
    """
    coeffs: Tuple[int, ...]
    low: int = 0

    @classmethod
    def from_terms(cls, terms: dict) -> "IntLaurentPoly":
        """
        Build from a mapping {exponent: coefficient}
        """
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls((), 0)
        low = min(terms)
        high = max(terms)
        return cls(tuple(terms.get(e, 0) for e in range(low, high + 1)), low)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)


def normalize_alexander(p: Union[IntLaurentPoly, IntPoly]) -> IntPoly:
    """
    Normalize a polynomial defined up to multiplication by ±t^k.

    The result has nonzero constant term, and a positive value at t=1 (which
    is +1 for the Alexander polynomial of a knot). If p(1) = 0 the leading
    coefficient is made positive instead.
    """
    coeffs = p.coeffs
    if not any(coeffs):
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    res, k = IntPoly(coeffs).strip_zero_roots()
    value = res(1)
    if value < 0 or (value == 0 and res.lead < 0):
        res = -res
    return res


def euler_bound_orders(degree: int) -> List[int]:
    """
    All n whose primitive n-th roots of unity have degree at most ``degree``,
    that is, all n with φ(n) ≤ degree.

    φ(n) ≥ sqrt(n/2), so n ≤ 2·degree² bounds the search.
    """
    if degree < 1:
        return []
    return [n for n in range(1, 2 * degree * degree + 3) if sp.totient(n) <= degree]


def cyclotomic_zero_exists(p: IntPoly) -> bool:
    """
    Check exactly whether some root of unity is a root of p
    """
    if p.is_zero:
        raise ZeroPolynomial("every number is a root of the zero polynomial")
    for n in euler_bound_orders(p.degree):
        if p.gcd(IntPoly.unit_root_poly(n)).degree > 0:
            log.debug("%s: vanishes at a root of unity of order dividing %d", p, n)
            return True
    return False


def resultant(p: IntPoly, q: IntPoly) -> int:
    """
    Exact resultant lead(p)^deg(q) · ∏ q(r) over the roots r of p, computed
    by sympy with a subresultant remainder sequence
    """
    if p.is_zero or q.is_zero:
        raise ZeroPolynomial("resultant with the zero polynomial")
    if p.degree == 0:
        return p.lead ** q.degree
    if q.degree == 0:
        return q.lead ** p.degree
    return int(p.as_poly.resultant(q.as_poly))


@functools.lru_cache(maxsize=1024)
def power_transform(p: IntPoly, n: int) -> IntPoly:
    """
    Integer polynomial whose roots are the n-th powers of the roots of p, with
    leading coefficient lead(p)^n.

    Computed as Res_t(p(t), s - t^n), which is exactly
    lead(p)^n · ∏ (s - r_i^n).
    """
    if p.is_zero:
        raise ZeroPolynomial("power transform of the zero polynomial")
    if n < 1:
        raise ValueError("power transform needs n >= 1, got {}".format(n))
    if p.degree == 0:
        return IntPoly((p.lead ** n,))
    if n == 1:
        return p
    bivariate = sp.Poly(p.as_poly.as_expr(), T, S)
    power = sp.Poly(S - T ** n, T, S)
    res = bivariate.resultant(power)
    res = IntPoly.from_sympy(sp.Poly(res, S))
    if res.lead != p.lead ** n:
        res = -res
    assert res.lead == p.lead ** n
    return res


def reciprocal_decompose(p: IntPoly) -> IntPoly:
    """
    Given p reciprocal of even degree 2g, return Q with p(t) = t^g Q(t + 1/t).

    With p(t)/t^g = a_0 + Σ a_j (t^j + t^-j), this uses t^j + t^-j = V_j(x),
    where V_0 = 2, V_1 = x, V_j = x V_{j-1} - V_{j-2}.
    """
    if p.is_zero or not p.is_reciprocal() or p.degree % 2:
        raise NotReciprocal("{} is not reciprocal of even degree".format(p))
    g = p.degree // 2
    res = IntPoly((p.coeffs[g],))
    v_prev, v_cur = IntPoly((2,)), IntPoly((0, 1))
    for j in range(1, g + 1):
        res = res + v_cur * p.coeffs[g + j]
        v_prev, v_cur = v_cur, v_cur * IntPoly((0, 1)) - v_prev
    return res


def _sign(x: Number) -> int:
    return (x > 0) - (x < 0)


class SturmChain:
    """
    Sturm sequence of a square-free polynomial, with rational coefficients
    """

    def __init__(self, poly: IntPoly):
        if poly.is_zero:
            raise ZeroPolynomial("Sturm sequence of the zero polynomial")
        self.poly = poly
        self.chain: List[List[Fraction]] = []
        if poly.degree == 0:
            self.chain.append([Fraction(poly.lead)])
        else:
            for f in poly.as_poly.sturm():
                self.chain.append([Fraction(int(c.p), int(c.q)) for c in f.all_coeffs()])

    def variations(self, x: Fraction) -> int:
        """
        Number of sign changes in the chain evaluated at x, skipping zeros
        """
        count = 0
        last = 0
        for coeffs in self.chain:
            value = Fraction(0)
            for c in coeffs:
                value = value * x + c
            s = _sign(value)
            if s == 0:
                continue
            if last and s != last:
                count += 1
            last = s
        return count

    def count(self, a: Fraction, b: Fraction) -> int:
        """
        Number of distinct real roots in (a, b]
        """
        return self.variations(a) - self.variations(b)

    def isolate(self, a: Fraction, b: Fraction) -> List[Tuple[Fraction, Fraction]]:
        """
        Isolating intervals (lo, hi] for all roots in (a, b], sorted.

        An interval with lo == hi is an exact rational root.
        """
        res: List[Tuple[Fraction, Fraction]] = []
        pending = [(a, b, self.count(a, b))]
        while pending:
            lo, hi, n = pending.pop()
            if n == 0:
                continue
            if n == 1:
                if self.poly(hi) == 0:
                    res.append((hi, hi))
                else:
                    res.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            left = self.count(lo, mid)
            pending.append((lo, mid, left))
            pending.append((mid, hi, n - left))
        res.sort()
        return res

    def refine(self, lo: Fraction, hi: Fraction, width: Fraction) -> Tuple[Fraction, Fraction]:
        """
        Shrink an isolating interval (lo, hi] until hi - lo <= width
        """
        while hi - lo > width:
            mid = (lo + hi) / 2
            if self.poly(mid) == 0:
                return mid, mid
            if self.count(lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        return lo, hi


@functools.lru_cache(maxsize=256)
def sturm_chain(poly: IntPoly) -> SturmChain:
    return SturmChain(poly)


class SturmCount(NamedTuple):
    """
    Number of real roots in an interval, and their isolating intervals
    """
    count: int
    intervals: List[Tuple[Fraction, Fraction]]
    # Square-free polynomial the intervals isolate roots of
    squarefree: IntPoly

    def refine(self, index: int, width: Fraction) -> Tuple[Fraction, Fraction]:
        lo, hi = self.intervals[index]
        return sturm_chain(self.squarefree).refine(lo, hi, width)


def sturm_count(q: IntPoly, a: Number, b: Number) -> SturmCount:
    """
    Exact count of the distinct real roots of q in (a, b], with isolating
    intervals.

    Square factors are removed first; use IntPoly.squarefree_factors to
    recover multiplicities.
    """
    a = Fraction(a)
    b = Fraction(b)
    if not a < b:
        raise ValueError("empty interval ({}, {}]".format(a, b))
    if q.is_zero:
        raise ZeroPolynomial("the zero polynomial has no isolated roots")
    sqf = q.squarefree_part()
    chain = sturm_chain(sqf)
    intervals = chain.isolate(a, b)
    return SturmCount(len(intervals), intervals, sqf)


def descartes_sign_changes(coeffs: Sequence[int]) -> int:
    """
    Sign changes in a coefficient sequence, skipping zeros. For polynomials
    with only real roots, this is the exact number of positive roots.
    """
    count = 0
    last = 0
    for c in coeffs:
        s = _sign(c)
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def parse_coefficients(coeffs: Iterable[int]) -> IntPoly:
    """
    Build an IntPoly from a constant-first coefficient list, as found in
    catalog files
    """
    res = []
    for c in coeffs:
        if isinstance(c, bool) or int(c) != c:
            raise ValueError("polynomial coefficient {!r} is not an integer".format(c))
        res.append(int(c))
    return IntPoly(tuple(res))
