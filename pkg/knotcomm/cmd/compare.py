from __future__ import annotations
from typing import Dict, List, Optional, Tuple
from knotcomm.certified import CertifiedReal
from knotcomm.knots import KnotRecord, InsufficientData, SingularAtRootOfUnity, rho, tau
from knotcomm.obstructions import (
        ObstructionReport, RatioScan, B1Violation, PASS, FAIL, INCONCLUSIVE,
        static_compare, cover_pair_test, multiset_power_test, ratio_scan, orientation_test,
        rational_dependence_probe, best_verdict, worst_verdict)
from .command import Command, Fail, EXIT_B1_VIOLATION, EXIT_INVALID, verdict_exit_code
import logging

log = logging.getLogger("compare")


class Compare(Command):
    "look for obstructions to two knots having diffeomorphic finite cyclic covers"

    @classmethod
    def make_subparser(cls, subparsers):
        parser = super().make_subparser(subparsers)
        parser.add_argument("knot1", help="name of the first knot")
        parser.add_argument("knot2", help="name of the second knot")
        parser.add_argument("--n1", type=int, help="degree of the cover of the first knot")
        parser.add_argument("--n2", type=int, help="degree of the cover of the second knot")
        parser.add_argument("--epsilon", choices=("+1", "-1", "both"), default="both",
                            help="orientation behaviour to test: +1 preserving, -1 reversing (default: both)")
        return parser

    def run(self):
        k1 = self.resolve(self.args.knot1)
        k2 = self.resolve(self.args.knot2)
        if (self.args.n1 is None) != (self.args.n2 is None):
            raise Fail("--n1 and --n2 must be given together", EXIT_INVALID)

        reports: List[ObstructionReport] = []
        scan: Optional[RatioScan] = None

        static = static_compare(k1, k2)
        reports.append(static)
        verdicts = [static.verdict]

        try:
            if self.args.n1 is not None:
                if self.args.n1 < 1 or self.args.n2 < 1:
                    raise Fail("cover degrees must be positive", EXIT_INVALID)
                cover = cover_pair_test(
                        k1, self.args.n1, k2, self.args.n2, epsilon=self.args.epsilon,
                        radius=self.radius, tolerance=self.tolerance)
                multiset = multiset_power_test(k1, self.args.n1, k2, self.args.n2)
                reports += [cover, multiset]
                verdicts += [cover.verdict, multiset.verdict]
            elif static.verdict != FAIL:
                scan = ratio_scan(k1, k2, self.settings.SCAN_N_MAX, radius=self.radius, tolerance=self.tolerance)
                verdicts.append(self.scan_verdict(scan))
                for match in scan.matches:
                    if match.cover is not None:
                        reports.append(match.cover)
                if len(scan.matches) == 1:
                    orientation = orientation_test(
                            k1, k2, self.settings.N_MAX, ratio=scan.ratios[0],
                            radius=self.radius, tolerance=self.tolerance)
                    reports.append(orientation)
                    verdicts.append(orientation.verdict)
        except B1Violation as e:
            raise Fail(str(e), EXIT_B1_VIOLATION)
        except SingularAtRootOfUnity as e:
            raise Fail(str(e), EXIT_B1_VIOLATION)

        verdict = worst_verdict(verdicts)
        self.write(self.renderer.render(
            "compare.txt", reports=reports, scan=scan, relations=self.relations(k1, k2), verdict=verdict))
        return verdict_exit_code(verdict)

    def relations(self, k1: KnotRecord, k2: KnotRecord) -> Dict[str, List[Tuple[int, ...]]]:
        """
        Candidate integer relations between the invariants of the two knots
        """
        max_coeff = self.settings.PROBE_MAX_COEFF
        try:
            res = {
                "c1·τ(K1) + c2·τ(K2) = 0": rational_dependence_probe(
                    [tau(k1, self.radius), tau(k2, self.radius)], max_coeff),
            }
            try:
                values = [rho(k1, self.radius), rho(k2, self.radius), CertifiedReal.exact(1)]
            except InsufficientData as e:
                log.info("skipping ρ relations: %s", e)
            else:
                res["c1·ρ(K1) + c2·ρ(K2) + c3 = 0"] = rational_dependence_probe(values, max_coeff)
        except ValueError as e:
            raise Fail("PROBE_MAX_COEFF: {}".format(e), EXIT_INVALID)
        return res

    @staticmethod
    def scan_verdict(scan: RatioScan) -> str:
        """
        Fail if no cover pair within the scan bound survives the exact
        multiset test
        """
        if not scan.matches:
            return INCONCLUSIVE if scan.caveats else FAIL
        res = []
        for match in scan.matches:
            res.append(match.cover.verdict if match.cover is not None else INCONCLUSIVE)
        return best_verdict(res) if res else PASS
