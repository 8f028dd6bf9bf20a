from __future__ import annotations
from fractions import Fraction
from knotcomm.certified import mahler_measure
from knotcomm.covers import admissible
from knotcomm.knots import InsufficientData, SingularAtZ, rho, signature_at, tau
from .command import Command, Fail, EXIT_INSUFFICIENT_DATA
import logging

log = logging.getLogger("invariants")


class Invariants(Command):
    "show Alexander polynomial, τ, ρ and signature jumps of a knot"

    @classmethod
    def make_subparser(cls, subparsers):
        parser = super().make_subparser(subparsers)
        parser.add_argument("knot", help="knot name, as found in the catalog")
        return parser

    def run(self):
        knot = self.resolve(self.args.knot)
        delta = knot.alexander
        t = tau(knot, self.radius)
        mahler = mahler_measure(delta, self.radius)

        rho_value = None
        rho_error = None
        jumps = []
        signature = None
        singular = False
        try:
            profile = knot.profile
        except InsufficientData as e:
            profile = None
            rho_error = str(e)
            for root in knot.circle_roots:
                if root.x_upper > -2:
                    jumps.append({"turn": root.turn(self.radius), "value": None,
                                  "multiplicity": root.multiplicity})

        if profile is not None:
            rho_value = rho(knot, self.radius)
            singular = profile.singular_at_minus_one
            for root, value in zip(profile.roots, profile.values[1:]):
                jumps.append({"turn": root.turn(self.radius), "value": value,
                              "multiplicity": root.multiplicity})
            try:
                signature = signature_at(knot, Fraction(1, 2))
            except SingularAtZ:
                signature = None

        self.write(self.renderer.render(
            "invariants.txt",
            knot=knot,
            delta=delta,
            admissible=admissible(knot),
            tau=t,
            mahler=mahler,
            rho=rho_value,
            rho_error=rho_error,
            signature=signature,
            singular_at_minus_one=singular,
            jumps=jumps,
        ))

        if rho_error is not None:
            raise Fail(rho_error, EXIT_INSUFFICIENT_DATA)
