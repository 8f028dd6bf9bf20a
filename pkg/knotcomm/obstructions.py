"""
Obstructions to two knot exteriors having diffeomorphic finite cyclic covers.

Verdicts follow certified-gap semantics: a test fails only when an interval
certainly excludes the value required by commensurability, or when an exact
integer computation disagrees; near ties are inconclusive.
"""
from __future__ import annotations
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union
from dataclasses import dataclass, field
from fractions import Fraction
import functools
import itertools
import math
import logging
from .polynomial import power_transform
from .certified import CertifiedReal, DEFAULT_RADIUS
from .knots import KnotRecord, rho, signature_sum, tau
from .covers import admissible, b1_of_cover
from .utils import timings

log = logging.getLogger("obstructions")

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

# A certified difference containing 0 passes only if its radius is below this
PASS_TOLERANCE = Fraction(1, 10 ** 4)

Epsilon = Union[int, str]


class B1Violation(ValueError):
    """
    A cover in a cover pair test has first Betti number greater than 1
    """


def interval_verdict(value: CertifiedReal, tolerance: Fraction = PASS_TOLERANCE) -> str:
    """
    Verdict on a certified quantity that commensurability requires to be 0
    """
    if value.excludes_zero():
        return FAIL
    if value.radius <= tolerance:
        return PASS
    return INCONCLUSIVE


def best_verdict(verdicts: Iterable[str]) -> str:
    verdicts = set(verdicts)
    for v in (PASS, INCONCLUSIVE, FAIL):
        if v in verdicts:
            return v
    return PASS


def worst_verdict(verdicts: Iterable[str]) -> str:
    verdicts = set(verdicts)
    for v in (FAIL, INCONCLUSIVE, PASS):
        if v in verdicts:
            return v
    return PASS


@dataclass
class TestEntry:
    """
    Outcome of one sub-test.

    Entries with the same ``test`` id are alternatives, like the two choices
    of orientation: the group passes if any of them passes.
    """
    test: str
    verdict: str
    quantities: Dict[str, CertifiedReal] = field(default_factory=dict)
    witnesses: Dict[str, Any] = field(default_factory=dict)
    epsilon: Optional[int] = None
    note: Optional[str] = None


@dataclass
class ObstructionReport:
    knots: Tuple[str, str]
    n1: Optional[int] = None
    n2: Optional[int] = None
    entries: List[TestEntry] = field(default_factory=list)
    caveats: List[str] = field(default_factory=list)
    # Integrality restatement of the ρ equations, for cover pair tests
    corollary: Optional[str] = None

    def add(self, entry: TestEntry) -> TestEntry:
        self.entries.append(entry)
        return entry

    def group_verdicts(self) -> Dict[str, str]:
        groups: Dict[str, List[str]] = {}
        for entry in self.entries:
            groups.setdefault(entry.test, []).append(entry.verdict)
        return {test: best_verdict(verdicts) for test, verdicts in groups.items()}

    @property
    def verdict(self) -> str:
        return worst_verdict(self.group_verdicts().values())

    def entry(self, test: str, epsilon: Optional[int] = None) -> Optional[TestEntry]:
        for e in self.entries:
            if e.test == test and (epsilon is None or e.epsilon == epsilon):
                return e
        return None


def static_compare(k1: KnotRecord, k2: KnotRecord) -> ObstructionReport:
    """
    Exact checks that cyclically commensurable admissible knots pass:
    equal Alexander degree, monic together, and equal declared genus and
    fiberedness
    """
    report = ObstructionReport(knots=(k1.name, k2.name))
    d1, d2 = k1.alexander, k2.alexander
    report.add(TestEntry(
        "degree", PASS if d1.degree == d2.degree else FAIL,
        witnesses={"degrees": (d1.degree, d2.degree)}))
    report.add(TestEntry(
        "monic", PASS if d1.is_monic == d2.is_monic else FAIL,
        witnesses={"monic": (d1.is_monic, d2.is_monic)}))
    if k1.genus is not None and k2.genus is not None:
        report.add(TestEntry(
            "genus", PASS if k1.genus == k2.genus else FAIL,
            witnesses={"genus": (k1.genus, k2.genus)}))
    if k1.fibered is not None and k2.fibered is not None:
        report.add(TestEntry(
            "fibered", PASS if k1.fibered == k2.fibered else FAIL,
            witnesses={"fibered": (k1.fibered, k2.fibered)}))
    adm = (admissible(k1), admissible(k2))
    report.add(TestEntry("admissible", PASS, witnesses={"admissible": adm}))
    if not any(adm):
        report.caveats.append("neither knot is admissible: verdicts are informational only")
    return report


def _epsilons(epsilon: Epsilon) -> Tuple[int, ...]:
    if epsilon in ("both", None):
        return (1, -1)
    if epsilon in (1, -1, "+1", "-1", "+", "-"):
        return (-1,) if str(epsilon).startswith("-") else (1,)
    raise ValueError("ε must be +1, -1 or 'both', got {!r}".format(epsilon))


def _rho_side(knot: KnotRecord, n: int, radius: Fraction) -> CertifiedReal:
    """
    n·ρ(K) - Σ_{k=1..n} σ(K, e^{2πik/n})
    """
    return rho(knot, radius) * n - signature_sum(knot, n)


def cover_pair_test(
        k1: KnotRecord, n1: int, k2: KnotRecord, n2: int,
        epsilon: Epsilon = "both",
        radius: Fraction = DEFAULT_RADIUS,
        tolerance: Fraction = PASS_TOLERANCE) -> ObstructionReport:
    """
    Equations a diffeomorphism between the n1-fold cover of X(K1) and the
    n2-fold cover of X(K2) forces, when both covers have b1 = 1:
    n1·τ(K1) = n2·τ(K2), and the ρ equation with ε = 1 for orientation
    preserving maps, ε = -1 for reversing ones
    """
    for knot, n in ((k1, n1), (k2, n2)):
        b1 = b1_of_cover(knot, n)
        if b1 != 1:
            raise B1Violation("{}: the {}-fold cyclic cover has b1 = {}".format(knot.name, n, b1))

    report = ObstructionReport(knots=(k1.name, k2.name), n1=n1, n2=n2)
    radius = Fraction(radius)
    t1, t2 = tau(k1, radius), tau(k2, radius)
    tau_diff = t1 * n1 - t2 * n2
    report.add(TestEntry(
        "tau", interval_verdict(tau_diff, tolerance),
        quantities={"n1·τ(K1)": t1 * n1, "n2·τ(K2)": t2 * n2, "difference": tau_diff}))

    left = _rho_side(k1, n1, radius)
    right = _rho_side(k2, n2, radius)
    r1, r2 = rho(k1, radius), rho(k2, radius)
    for eps in _epsilons(epsilon):
        value = left - right * eps
        report.add(TestEntry(
            "rho", interval_verdict(value, tolerance), epsilon=eps,
            quantities={
                "n1·ρ(K1) - Σσ(K1)": left,
                "n2·ρ(K2) - Σσ(K2)": right,
                "difference": value,
                "n1·ρ(K1) - ε·n2·ρ(K2)": r1 * n1 - r2 * (n2 * eps),
            },
            witnesses={
                "signature sums": (signature_sum(k1, n1), signature_sum(k2, n2)),
            }))
    report.corollary = corollary_line(report)
    return report


def corollary_line(report: ObstructionReport) -> str:
    """
    Restate the ρ equations of a cover pair test in the weaker form
    n1·ρ(K1) - ε·n2·ρ(K2) ∈ Z
    """
    lines = []
    for entry in report.entries:
        if entry.test != "rho":
            continue
        value = entry.quantities["n1·ρ(K1) - ε·n2·ρ(K2)"]
        if value.distance_to_integer_excludes_zero():
            status = "not an integer: excluded"
        else:
            status = "within {:.1e} of the integer {}".format(
                float(value.radius), round(value.midpoint))
        lines.append("ε={:+d}: {}·ρ({}) {} {}·ρ({}) = {} is {}".format(
            entry.epsilon, report.n1, report.knots[0], "-" if entry.epsilon > 0 else "+",
            report.n2, report.knots[1], value.format(9), status))
    return "\n".join(lines)


def multiset_power_test(k1: KnotRecord, n1: int, k2: KnotRecord, n2: int) -> ObstructionReport:
    """
    Exact test that the n1-th powers of the roots of Δ1 and the n2-th powers
    of the roots of Δ2 agree as multisets, and that C^n1 = D^n2 for the
    leading coefficients. Never inconclusive.
    """
    report = ObstructionReport(knots=(k1.name, k2.name), n1=n1, n2=n2)
    d1, d2 = k1.alexander, k2.alexander
    if d1.degree != d2.degree:
        report.add(TestEntry("multiset", FAIL, witnesses={"degrees": (d1.degree, d2.degree)},
                             note="Alexander polynomials have different degrees"))
        return report

    lead1, lead2 = abs(d1.lead) ** n1, abs(d2.lead) ** n2
    report.add(TestEntry(
        "leading", PASS if lead1 == lead2 else FAIL,
        witnesses={"|C|^n1": lead1, "|D|^n2": lead2}))

    p1 = power_transform(d1, n1).sign_normalized()
    p2 = power_transform(d2, n2).sign_normalized()
    if p1 == p2:
        report.add(TestEntry("multiset", PASS, witnesses={"common": p1}))
    else:
        report.add(TestEntry("multiset", FAIL, witnesses={"first": p1, "second": p2}))
    return report


@dataclass
class RatioMatch:
    """
    A coprime ratio a:b for which the n1 = ka, n2 = kb covers pass the exact
    multiset test
    """
    a: int
    b: int
    k: int
    multiset: ObstructionReport
    cover: Optional[ObstructionReport] = None
    note: Optional[str] = None

    @property
    def ratio(self) -> Tuple[int, int]:
        return (self.a, self.b)


@dataclass
class RatioScan:
    knots: Tuple[str, str]
    n_max: int
    matches: List[RatioMatch] = field(default_factory=list)
    caveats: List[str] = field(default_factory=list)

    @property
    def ratios(self) -> List[Tuple[int, int]]:
        return [m.ratio for m in self.matches]


def _ratio_candidates(k1: KnotRecord, k2: KnotRecord, n_max: int, radius: Fraction,
                      tolerance: Fraction) -> Optional[List[Tuple[int, int]]]:
    """
    Coprime a:b allowed by n1·τ(K1) = n2·τ(K2), or None if τ does not
    restrict the ratio
    """
    t1, t2 = tau(k1, radius), tau(k2, radius)
    if t1.contains_zero() or t2.contains_zero():
        return None
    ratio = t2 / t1
    lo, hi = ratio.lower - tolerance, ratio.upper + tolerance
    res = []
    for b in range(1, n_max + 1):
        for a in range(max(1, math.ceil(lo * b)), min(n_max, math.floor(hi * b)) + 1):
            if math.gcd(a, b) == 1:
                res.append((a, b))
    return res


def ratio_scan(
        k1: KnotRecord, k2: KnotRecord, n_max: int,
        radius: Fraction = DEFAULT_RADIUS,
        tolerance: Fraction = PASS_TOLERANCE) -> RatioScan:
    """
    Coprime ratios a:b, a, b ≤ n_max, such that the exact multiset test passes
    at (ka, kb) for some k with ka, kb ≤ n_max
    """
    scan = RatioScan(knots=(k1.name, k2.name), n_max=n_max)
    radius = Fraction(radius)
    if not (admissible(k1) and admissible(k2)):
        scan.caveats.append("not every knot is admissible: cover tests may not apply")
    with timings("Scanned ratios in %fs for %s and %s", k1.name, k2.name):
        candidates = _ratio_candidates(k1, k2, n_max, radius, tolerance)
        if candidates is None:
            scan.caveats.append("τ vanishes: every ratio passes the τ equation, scanning all of them")
            candidates = [(a, b) for b in range(1, n_max + 1) for a in range(1, n_max + 1) if math.gcd(a, b) == 1]
        if k1.alexander.degree != k2.alexander.degree:
            candidates = []
        for a, b in sorted(candidates):
            for k in range(1, n_max // max(a, b) + 1):
                multiset = multiset_power_test(k1, k * a, k2, k * b)
                if multiset.verdict != PASS:
                    continue
                match = RatioMatch(a, b, k, multiset)
                try:
                    match.cover = cover_pair_test(k1, k * a, k2, k * b, radius=radius, tolerance=tolerance)
                except B1Violation as e:
                    match.note = str(e)
                scan.matches.append(match)
                break
    return scan


@dataclass
class OrientationCheck:
    k: int
    n1: int
    n2: int
    epsilon: int
    value: CertifiedReal
    verdict: str
    # k·(a·ρ(K1) - ε·b·ρ(K2)) is certainly not an integer
    non_integer: bool


def orientation_test(
        k1: KnotRecord, k2: KnotRecord, n_max: int,
        ratio: Optional[Tuple[int, int]] = None,
        scan_n_max: int = 24,
        radius: Fraction = DEFAULT_RADIUS,
        tolerance: Fraction = PASS_TOLERANCE) -> ObstructionReport:
    """
    For the surviving ratio a:b and every k with kb ≤ n_max, evaluate the
    ρ equation of the (ka, kb) covers for both orientations
    """
    report = ObstructionReport(knots=(k1.name, k2.name))
    radius = Fraction(radius)
    if ratio is None:
        scan = ratio_scan(k1, k2, scan_n_max, radius=radius, tolerance=tolerance)
        report.caveats.extend(scan.caveats)
        if len(scan.ratios) != 1:
            report.add(TestEntry(
                "orientation", INCONCLUSIVE, witnesses={"ratios": scan.ratios},
                note="needs a unique surviving ratio, found {}".format(len(scan.ratios))))
            return report
        ratio = scan.ratios[0]
    a, b = ratio
    report.n1, report.n2 = a, b

    r1, r2 = rho(k1, radius), rho(k2, radius)
    checks: Dict[int, List[OrientationCheck]] = {1: [], -1: []}
    with timings("Checked orientations in %fs for %s and %s", k1.name, k2.name):
        for k in range(1, n_max // b + 1):
            n1, n2 = k * a, k * b
            if b1_of_cover(k1, n1) != 1 or b1_of_cover(k2, n2) != 1:
                report.caveats.append("k={}: a cover has b1 > 1, skipped".format(k))
                continue
            left = _rho_side(k1, n1, radius)
            right = _rho_side(k2, n2, radius)
            for eps in (1, -1):
                value = left - right * eps
                mod1 = (r1 * a - r2 * (b * eps)) * k
                checks[eps].append(OrientationCheck(
                    k, n1, n2, eps, value, interval_verdict(value, tolerance),
                    mod1.distance_to_integer_excludes_zero()))

    for eps in (1, -1):
        kind = "preserving" if eps == 1 else "reversing"
        found = checks[eps]
        passing = [c.k for c in found if c.verdict == PASS]
        verdict = best_verdict(c.verdict for c in found) if found else INCONCLUSIVE
        if verdict == FAIL:
            note = "orientation-{} diffeomorphism excluded for all covers up to n_max={}".format(kind, n_max)
        elif passing:
            note = "orientation-{} covers pass at k={} (covers {} and {})".format(
                kind, passing[0], passing[0] * a, passing[0] * b)
        else:
            note = "orientation-{} case not decided up to n_max={}".format(kind, n_max)
        report.add(TestEntry(
            "orientation", verdict, epsilon=eps,
            witnesses={
                "checked": len(found),
                "passing k": passing,
                "certified non-integer": sum(1 for c in found if c.non_integer),
                "checks": found,
            },
            note=note))
    return report


def rational_dependence_probe(values: Sequence[CertifiedReal], max_coeff: int = 10) -> List[Tuple[int, ...]]:
    """
    Primitive integer vectors c with |c_i| ≤ max_coeff such that the interval
    of Σ c_i v_i contains 0. These are candidates only: a relation that fits
    the intervals may still be false, and an empty result proves nothing
    about independence beyond the searched box.

    The search walks all (2·max_coeff + 1)^(len(values) - 1) prefixes, so
    the cap on max_coeff is lower for more than two values.
    """
    cap = 10 ** 4 if len(values) <= 2 else 100
    if max_coeff > cap:
        raise ValueError("max_coeff {} is above the supported {} for {} values".format(max_coeff, cap, len(values)))
    if not values:
        return []
    found = set()
    last = values[-1]
    m, r = last.midpoint, last.radius
    for prefix in itertools.product(range(-max_coeff, max_coeff + 1), repeat=len(values) - 1):
        partial = sum((c * v.midpoint for c, v in zip(prefix, values)), Fraction(0))
        slack = sum((abs(c) * v.radius for c, v in zip(prefix, values)), Fraction(0))
        if abs(m) <= r:
            lasts: Iterable[int] = range(-max_coeff, max_coeff + 1)
        else:
            centre = -partial / m
            delta = (slack + max_coeff * r) / abs(m)
            lasts = range(max(-max_coeff, math.ceil(centre - delta)), min(max_coeff, math.floor(centre + delta)) + 1)
        for c in lasts:
            coeffs = prefix + (c,)
            if not any(coeffs):
                continue
            if abs(partial + c * m) <= slack + abs(c) * r:
                found.add(_primitive(coeffs))
    return sorted(found, key=lambda c: (sum(abs(x) for x in c), c))


def _primitive(coeffs: Tuple[int, ...]) -> Tuple[int, ...]:
    g = functools.reduce(math.gcd, coeffs)
    res = tuple(c // g for c in coeffs)
    for c in res:
        if c:
            if c < 0:
                res = tuple(-x for x in res)
            break
    return res
