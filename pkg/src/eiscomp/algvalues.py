"""Exact algebraic character values: root of unity times a Q(omega)-element.

A value is e^{2*pi*i*angle} * (x + y*omega) with a rational angle and
rational x, y.  Roots of unity lying in the field (the mu_w part) are
folded into the element, so equality of canonical forms is equality of
complex numbers: the only unit-modulus rational-angle phases in an
imaginary quadratic field are its own roots of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import FieldElement, QuadField


def _pair_mul(field: QuadField, x1, y1, x2, y2):
    # (x1 + y1 w)(x2 + y2 w), w^2 = d w - (d^2-d)/4
    d = field.disc
    nw = field.omega_norm
    return (x1 * x2 - y1 * y2 * nw, x1 * y2 + y1 * x2 + y1 * y2 * d)


def _pair_conj(field: QuadField, x, y):
    return (x + y * field.disc, -y)


def _pair_norm(field: QuadField, x, y):
    return x * x + x * y * field.disc + y * y * field.omega_norm


@dataclass(frozen=True)
class AlgValue:
    """Canonical exact value e^{2 pi i angle} (x + y omega), angle in [0, 1/w)."""

    angle: Fraction
    x: Fraction
    y: Fraction
    field: QuadField

    @staticmethod
    def make(field: QuadField, angle, x, y) -> AlgValue:
        angle = Fraction(angle) % 1
        x, y = Fraction(x), Fraction(y)
        if x == 0 and y == 0:
            return AlgValue(Fraction(0), x, y, field)
        w = field.unit_count
        # fold the mu_w part of the phase into the element
        j = int(angle * w)  # floor; angle >= 0
        if j:
            u = field.units[j % w]
            x, y = _pair_mul(field, x, y, Fraction(u.a), Fraction(u.b))
            angle -= Fraction(j, w)
        return AlgValue(angle, x, y, field)

    @staticmethod
    def one(field: QuadField) -> AlgValue:
        return AlgValue.make(field, 0, 1, 0)

    @staticmethod
    def zero(field: QuadField) -> AlgValue:
        return AlgValue.make(field, 0, 0, 0)

    @staticmethod
    def from_element(g: FieldElement) -> AlgValue:
        return AlgValue.make(g.field, 0, g.a, g.b)

    @staticmethod
    def root_of_unity(field: QuadField, angle) -> AlgValue:
        return AlgValue.make(field, angle, 1, 0)

    def __mul__(self, other: AlgValue) -> AlgValue:
        x, y = _pair_mul(self.field, self.x, self.y, other.x, other.y)
        return AlgValue.make(self.field, self.angle + other.angle, x, y)

    def __add__(self, other: AlgValue) -> AlgValue:
        a, b = self.fold(), other.fold()
        return AlgValue.make(self.field, 0, a[0] + b[0], a[1] + b[1])

    def __neg__(self) -> AlgValue:
        return AlgValue.make(self.field, self.angle, -self.x, -self.y)

    def __sub__(self, other: AlgValue) -> AlgValue:
        return self + (-other)

    def scale(self, c) -> AlgValue:
        c = Fraction(c)
        return AlgValue.make(self.field, self.angle, self.x * c, self.y * c)

    def conjugate(self) -> AlgValue:
        cx, cy = _pair_conj(self.field, self.x, self.y)
        return AlgValue.make(self.field, -self.angle, cx, cy)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_folded(self) -> bool:
        return self.angle == 0

    def fold(self):
        """Return (x, y) if the value lies in Q(omega), else raise."""
        if self.angle != 0 and not self.is_zero():
            raise ValueError(f"value with residual phase {self.angle} is not in Q(omega)")
        return (self.x, self.y)

    def abs2(self) -> Fraction:
        return _pair_norm(self.field, self.x, self.y)

    def to_mpc(self, ctx):
        """Convert to an mpmath complex at the precision of ctx."""
        d = self.field.disc
        re = ctx.mpf(self.x.numerator) / self.x.denominator + (
            ctx.mpf(self.y.numerator) / self.y.denominator
        ) * d / 2
        im = (ctx.mpf(self.y.numerator) / self.y.denominator) * ctx.sqrt(-d) / 2
        val = ctx.mpc(re, im)
        if self.angle:
            val *= ctx.expjpi(2 * ctx.mpf(self.angle.numerator) / self.angle.denominator)
        return val

    def __str__(self):
        phase = f"e(2pi i {self.angle})*" if self.angle else ""
        return f"{phase}({self.x}{'+' if self.y >= 0 else ''}{self.y}w)"
