"""Hodge types and weights of boundary-cohomology summands, one-dimensional
pure Hodge structure algebra, and the type slots of extension certificates.

The (p, q) type of each Kostant summand comes from the exponent formula
e1 = (K1+K2)/4 + C/4 - R/2, e2 = (3K1-K2)/4 - C/4 - R/2 applied to the
lifted star image (K1, K2, C, R), with (p, q) = (-e1, -e2).  The sign
choice is the unique one reproducing the closed-form type table, and the
acceptance suite pins it.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import NonIntegralHodgeType, PreconditionError
from .weyl import (
    WEYL_ELEMENTS,
    LiftedChar,
    TorusCharGL,
    WeylElt,
    conj_lift,
    lift,
    star,
    star_lifted,
)


@dataclass(frozen=True)
class PureHS1:
    """One-dimensional pure Hodge structure: weight and (p, q) type."""

    weight: int
    p: int
    q: int
    label: str = ""

    def __post_init__(self):
        if self.p + self.q != self.weight:
            raise ValueError(f"weight {self.weight} != p+q = {self.p + self.q}")

    def type_pair(self) -> tuple[int, int]:
        return (self.p, self.q)


def tate_twist(h: PureHS1, n: int) -> PureHS1:
    return PureHS1(h.weight - 2 * n, h.p - n, h.q - n, h.label and f"{h.label}({n})")

def dual(h: PureHS1) -> PureHS1:
    return PureHS1(-h.weight, -h.p, -h.q, h.label and f"{h.label}^v")

def tensor(h1: PureHS1, h2: PureHS1) -> PureHS1:
    label = f"{h1.label}*{h2.label}" if h1.label and h2.label else ""
    return PureHS1(h1.weight + h2.weight, h1.p + h2.p, h1.q + h2.q, label)


def hodge_type_from_lifted(nu: LiftedChar) -> tuple[int, int]:
    """(p, q) of the summand indexed by a lifted character, exact rationals."""
    K1, K2, C, R = (Fraction(v) for v in nu)
    e1 = (K1 + K2) / 4 + C / 4 - R / 2
    e2 = (3 * K1 - K2) / 4 - C / 4 - R / 2
    if e1.denominator != 1 or e2.denominator != 1:
        raise NonIntegralHodgeType(f"non-integral exponents ({e1}, {e2}) for {nu}")
    return (int(-e1), int(-e2))


# Summand weights in terms of the lift's own coordinates and its Hodge
# weight r; the degree-1 and degree-2 pairings of weight to Weyl element
# are the ones fixed by weight = p + q.
_WEIGHT_TABLE = {
    "id": lambda k1, k2, r: r - k1,
    "(1 2)": lambda k1, k2, r: r + 1 - k2,
    "(2 3)": lambda k1, k2, r: r + 1 - (k1 - k2),
    "(1 2 3)": lambda k1, k2, r: r + 3 + k2,
    "(1 3 2)": lambda k1, k2, r: r + 3 + (k1 - k2),
    "(1 3)": lambda k1, k2, r: r + 4 + k1,
}


@dataclass(frozen=True)
class BoundaryRow:
    degree: int
    weyl: WeylElt
    character: TorusCharGL
    weight: int
    hodge_type: tuple[int, int]


@dataclass(frozen=True)
class BoundaryTable:
    lam: TorusCharGL
    side: str
    rows: tuple[BoundaryRow, ...] = dc_field(default_factory=tuple)

    def row(self, weyl_name: str) -> BoundaryRow:
        return next(r for r in self.rows if r.weyl.name == weyl_name)

    def to_json_dict(self) -> dict:
        return {
            "lambda": [self.lam.k1, self.lam.k2],
            "side": self.side,
            "rows": [
                {
                    "degree": r.degree,
                    "weyl": r.weyl.name,
                    "character": list(r.character),
                    "weight": r.weight,
                    "type": list(r.hodge_type),
                }
                for r in self.rows
            ],
        }


def boundary_table(lam: TorusCharGL, side: str = "plus") -> BoundaryTable:
    """Degree-by-degree boundary summands with weights and Hodge types.

    side 'plus' uses the standard lift; side 'minus' the conjugate lift,
    whose types are the coordinate swaps of the plus side.
    """
    lam = TorusCharGL(*lam)
    if not lam.dominant:
        raise PreconditionError(f"lambda = {tuple(lam)} is not dominant")
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    mu = lift(lam) if side == "plus" else conj_lift(lift(lam))
    rows = []
    for w in WEYL_ELEMENTS:
        ptype = hodge_type_from_lifted(star_lifted(w, mu))
        weight = _WEIGHT_TABLE[w.name](mu.k1, mu.k2, mu.r)
        if ptype[0] + ptype[1] != weight:
            raise NonIntegralHodgeType(
                f"type {ptype} inconsistent with weight {weight} at w = {w.name}"
            )
        rows.append(BoundaryRow(w.length, w, star(w, lam), weight, ptype))
    rows.sort(key=lambda r: (r.degree, r.weyl.name))
    return BoundaryTable(lam, side, tuple(rows))


@dataclass(frozen=True)
class CertificateTypes:
    """Type slots of the two extension certificates for the (k, 0) family."""

    h2_pi_plus: PureHS1
    h2_pi_minus: PureHS1
    i_phi: PureHS1
    i_theta_phi: PureHS1
    h_phi: PureHS1
    h_phi_twist: PureHS1
    ext_target: str

    def to_json_dict(self) -> dict:
        return {
            "H2pi": list(self.h2_pi_plus.type_pair()),
            "Iphi": list(self.i_phi.type_pair()),
            "Ithetaphi": list(self.i_theta_phi.type_pair()),
            "Hphi": list(self.h_phi.type_pair()),
            "HphiTwist": list(self.h_phi_twist.type_pair()),
        }


def extension_certificate_types(k: int) -> CertificateTypes:
    if k < 0:
        raise PreconditionError(f"k must be >= 0, got {k}")
    h_phi = PureHS1(-3, k, -(k + 3), "H_phi")
    return CertificateTypes(
        h2_pi_plus=PureHS1(k + 2, k + 2, 0, "H2(pi_f)+"),
        h2_pi_minus=PureHS1(k + 2, 0, k + 2, "H2(pi_f)-"),
        i_phi=PureHS1(k + 3, 1, k + 2, "I_phi"),
        i_theta_phi=PureHS1(k + 1, 0, k + 1, "I_thetaphi"),
        h_phi=h_phi,
        h_phi_twist=tate_twist(h_phi, -1),
        ext_target="Ext^1(1, H_phi(-1))",
    )
