"""A2 root data: Weyl group, twisted star action, lifts, Kostant bookkeeping,
Delorme dimension counts and Wigner D-functions.

The six Weyl elements act on torus characters (k1, k2) through the twisted
action w * (lambda + delta) - delta with delta = (2, 1).  Two independent
realizations are kept: a hard-coded table of closed forms, and the ambient
three-coordinate permutation action; tests require them to agree.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple


class TorusCharGL(NamedTuple):
    k1: int
    k2: int

    @property
    def dominant(self) -> bool:
        return self.k1 >= self.k2 >= 0


class LiftedChar(NamedTuple):
    k1: int
    k2: int
    c: int
    r: int

    @property
    def parity_ok(self) -> bool:
        return (self.c - self.k1 - self.k2) % 2 == 0

    @property
    def r_congruence_ok(self) -> bool:
        # recorded, not enforced: r = (c + k1 + k2)/2 (mod 2)
        return (2 * self.r - (self.c + self.k1 + self.k2)) % 4 == 0

    def project(self) -> TorusCharGL:
        return TorusCharGL(self.k1, self.k2)


@dataclass(frozen=True)
class WeylElt:
    name: str
    perm: tuple[int, int, int]  # sigma as images of (1,2,3), 0-indexed
    length: int

    def __str__(self):
        return self.name


W_ID = WeylElt("id", (0, 1, 2), 0)
W_12 = WeylElt("(1 2)", (1, 0, 2), 1)
W_23 = WeylElt("(2 3)", (0, 2, 1), 1)
W_123 = WeylElt("(1 2 3)", (1, 2, 0), 2)
W_132 = WeylElt("(1 3 2)", (2, 0, 1), 2)
W_13 = WeylElt("(1 3)", (2, 1, 0), 3)

WEYL_ELEMENTS = (W_ID, W_12, W_23, W_123, W_132, W_13)
_BY_NAME = {w.name: w for w in WEYL_ELEMENTS}

DELTA = TorusCharGL(2, 1)

# closed forms of the twisted action on (k1, k2)
_STAR_TABLE = {
    "id": lambda k1, k2: (k1, k2),
    "(1 2)": lambda k1, k2: (k2 - 1, k1 + 1),
    "(2 3)": lambda k1, k2: (k1 - k2 - 1, -k2 - 2),
    "(1 2 3)": lambda k1, k2: (-k2 - 3, k1 - k2),
    "(1 3 2)": lambda k1, k2: (k2 - k1 - 3, -k1 - 3),
    "(1 3)": lambda k1, k2: (-k1 - 4, k2 - k1 - 2),
}

# third coordinate of the lifted action; the fourth is always fixed
_GAMMA_TABLE = {
    "id": lambda k1, k2, g: g,
    "(1 2)": lambda k1, k2, g: g,
    "(2 3)": lambda k1, k2, g: g - k2 - 1,
    "(1 2 3)": lambda k1, k2, g: g - k2 - 1,
    "(1 3 2)": lambda k1, k2, g: g - k1 - 2,
    "(1 3)": lambda k1, k2, g: g - k1 - 2,
}


def weyl_element(name: str) -> WeylElt:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown Weyl element {name!r}; use one of {sorted(_BY_NAME)}")


def weyl_inverse(w: WeylElt) -> WeylElt:
    inv = tuple(w.perm.index(i) for i in range(3))
    return next(v for v in WEYL_ELEMENTS if v.perm == inv)


def star(w: WeylElt, lam: TorusCharGL) -> TorusCharGL:
    return TorusCharGL(*_STAR_TABLE[w.name](lam.k1, lam.k2))


def star_ambient(w: WeylElt, lam: TorusCharGL) -> TorusCharGL:
    """Independent derivation: permute (k1+2, k2+1, 0) and subtract delta."""
    e = (lam.k1 + DELTA.k1, lam.k2 + DELTA.k2, 0)
    permuted = tuple(e[w.perm.index(i)] for i in range(3))
    return TorusCharGL(
        permuted[0] - permuted[2] - DELTA.k1,
        permuted[1] - permuted[2] - DELTA.k2,
    )


def star_lifted(w: WeylElt, mu: LiftedChar) -> LiftedChar:
    k1, k2 = _STAR_TABLE[w.name](mu.k1, mu.k2)
    return LiftedChar(k1, k2, _GAMMA_TABLE[w.name](mu.k1, mu.k2, mu.c), mu.r)


def lift(lam: TorusCharGL) -> LiftedChar:
    """Standard lift (k1, k2, k1+k2, k1+k2)."""
    s = lam.k1 + lam.k2
    return LiftedChar(lam.k1, lam.k2, s, s)


def conj_lift(mu: LiftedChar) -> LiftedChar:
    """Highest weight of the conjugate factor: (k1, k1-k2, -k2, k1+k2).

    Defined on standard lifts only; for lambda = (k, 0) this is the lift
    with highest weight (k, k) of the dual.
    """
    if mu.c != mu.k1 + mu.k2 or mu.r != mu.k1 + mu.k2:
        raise ValueError(f"conj_lift is defined on standard lifts, got {mu}")
    return LiftedChar(mu.k1, mu.k1 - mu.k2, -mu.k2, mu.k1 + mu.k2)


def kostant_decomposition(lam: TorusCharGL, q: int) -> list[tuple[WeylElt, TorusCharGL]]:
    """Length-q Weyl elements with their star images (Borel case: all of W)."""
    if q < 0 or q > 3:
        return []
    return [(w, star(w, lam)) for w in WEYL_ELEMENTS if w.length == q]


def delorme_dims(phi_type: TorusCharGL, lam: TorusCharGL) -> dict[int, int]:
    """Cohomology dimensions {n: dim} from the torus-side exterior algebra.

    The split-torus quotient t/t^K is one-dimensional, so each Weyl element
    w with phi_type = w * lambda contributes once in degrees l(w) and
    l(w) + 1.
    """
    dims = {n: 0 for n in range(4)}
    for w in WEYL_ELEMENTS:
        if star(w, lam) == phi_type:
            for a in (0, 1):
                n = w.length + a
                if n in dims:
                    dims[n] += 1
    return dims


def _as_half_integer(x) -> Fraction:
    f = Fraction(x).limit_denominator(2) if isinstance(x, float) else Fraction(x)
    if f.denominator not in (1, 2) or (isinstance(x, float) and abs(float(f) - x) > 1e-9):
        raise IndexError(f"{x} is not a half-integer")
    return f


def wigner_little_d(j, m1, m2, beta: float) -> float:
    """Little-d matrix element via the standard binomial sum."""
    j, m1, m2 = _as_half_integer(j), _as_half_integer(m1), _as_half_integer(m2)
    jm1, jp1 = j - m1, j + m1
    jm2, jp2 = j - m2, j + m2
    for v in (jm1, jp1, jm2, jp2):
        if v.denominator != 1 or v < 0:
            raise IndexError(f"inadmissible indices j={j}, m1={m1}, m2={m2}")
    jm1, jp1, jm2, jp2 = int(jm1), int(jp1), int(jm2), int(jp2)
    pref = math.sqrt(
        math.factorial(jp1) * math.factorial(jm1) * math.factorial(jp2) * math.factorial(jm2)
    )
    c, s = math.cos(beta / 2.0), math.sin(beta / 2.0)
    total = 0.0
    for k in range(max(0, int(m1 - m2)), min(jp1, jm2) + 1):
        denom = (
            math.factorial(jp1 - k)
            * math.factorial(jm2 - k)
            * math.factorial(k)
            * math.factorial(k - int(m1 - m2))
        )
        total += (-1) ** k / denom * c ** (jm2 + jp1 - 2 * k) * s ** (2 * k - int(m1 - m2))
    return pref * total


def wigner_D(j, n, m1, m2, angles: tuple[float, float, float]) -> complex:
    """U(2)-type Wigner function: phases on the outer angles, little-d inside.

    Convention fixed by the conjugation identity
    conj W^{j,n}_{m1,m2} = (-1)^{m2-m1} W^{j,-n}_{-m1,-m2}.
    """
    alpha, beta, gamma = angles
    jf, nf = _as_half_integer(j), _as_half_integer(n)
    if (jf + nf).denominator != 1:
        raise IndexError(f"j + n must be integral, got j={j}, n={n}")
    d = wigner_little_d(j, m1, m2, beta)
    m1f, m2f = _as_half_integer(m1), _as_half_integer(m2)
    return cmath.exp(-1j * float(nf + m1f) * alpha) * d * cmath.exp(-1j * float(nf + m2f) * gamma)
