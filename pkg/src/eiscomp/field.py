"""Exact arithmetic in an imaginary quadratic field of class number one.

Elements are written a + b*omega with omega = (d + sqrt(d))/2, so that
Z[omega] is the maximal order for every admissible discriminant d.  All
ideals are principal (class number 1) and are identified by a canonical
generator: the associate whose argument lies in [0, 2*pi/w), w the number
of units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

CLASS_NUMBER_ONE_DISCS = (-3, -4, -7, -8, -11, -19, -43, -67, -163)


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a/n), fully general (n may be even or negative)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out 2s from n; (a/2) = 0, 1, -1 for a even, a = +-1 mod 8, a = +-3 mod 8
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    # quadratic reciprocity loop for odd n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class QuadField:
    """Imaginary quadratic field of class number one, given by its discriminant."""

    def __init__(self, disc: int):
        if disc not in CLASS_NUMBER_ONE_DISCS:
            raise ValueError(
                f"discriminant {disc} not admissible; class number one requires "
                f"one of {list(CLASS_NUMBER_ONE_DISCS)}"
            )
        self.disc = disc
        self.class_number = 1
        # omega = (d + sqrt(d))/2 satisfies x^2 - d*x + (d^2-d)/4 = 0
        self.omega_trace = disc
        self.omega_norm = (disc * disc - disc) // 4
        self.unit_count = 6 if disc == -3 else 4 if disc == -4 else 2

    def __repr__(self):
        return f"QuadField({self.disc})"

    def __eq__(self, other):
        return isinstance(other, QuadField) and other.disc == self.disc

    def __hash__(self):
        return hash(("QuadField", self.disc))

    def element(self, a: int, b: int = 0) -> FieldElement:
        return FieldElement(a, b, self)

    def one(self) -> FieldElement:
        return FieldElement(1, 0, self)

    @property
    def units(self) -> list[FieldElement]:
        return self._units()

    @lru_cache(maxsize=None)
    def _units(self):
        w = self.unit_count
        if w == 2:
            gen = FieldElement(-1, 0, self)
        elif w == 4:
            gen = FieldElement(2, 1, self)  # i = 2 + omega for d = -4
        else:
            gen = FieldElement(2, 1, self)  # zeta_6 = 2 + omega for d = -3
        us = [self.one()]
        for _ in range(w - 1):
            us.append(us[-1] * gen)
        assert (us[-1] * gen) == self.one()
        return us

    def splitting_type(self, p: int) -> str:
        return splitting_type(p, self)

    def ideals_of_norm(self, n: int) -> list[PrincipalIdeal]:
        return ideals_of_norm(n, self)


@dataclass(frozen=True)
class FieldElement:
    """a + b*omega in the maximal order (integers a, b)."""

    a: int
    b: int
    field: QuadField

    def __add__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.a + other.a, self.b + other.b, self.field)

    def __sub__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.a - other.a, self.b - other.b, self.field)

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.a, -self.b, self.field)

    def __mul__(self, other: FieldElement) -> FieldElement:
        # omega^2 = d*omega - (d^2-d)/4
        d = self.field.disc
        nw = self.field.omega_norm
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return FieldElement(
            a1 * a2 - b1 * b2 * nw,
            a1 * b2 + b1 * a2 + b1 * b2 * d,
            self.field,
        )

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            raise ValueError("negative powers only defined for units")
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> FieldElement:
        # conj(omega) = d - omega
        return FieldElement(self.a + self.b * self.field.disc, -self.b, self.field)

    def norm(self) -> int:
        d = self.field.disc
        return self.a * self.a + self.a * self.b * d + self.b * self.b * self.field.omega_norm

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    # Embedding a + b*omega = (a + b*d/2) + b*(sqrt(|d|)/2)i.  Exact sign data:
    # 2*Re = 2a + b*d, sign(Im) = sign(b).
    def real2(self) -> int:
        return 2 * self.a + self.b * self.field.disc

    def in_canonical_sector(self) -> bool:
        """Argument in [0, 2*pi/w)?  Exact integer tests, no floats."""
        x2, b = self.real2(), self.b
        w = self.field.unit_count
        if self.is_zero():
            return True
        if w == 2:
            # [0, pi): upper half plane, or positive real axis
            return b > 0 or (b == 0 and x2 > 0)
        if w == 4:
            # [0, pi/2): open first quadrant plus positive real axis
            return x2 > 0 and b >= 0
        # w == 6, d == -3: [0, pi/3): x > 0, y >= 0, y^2 < 3 x^2
        # y^2 = 3 b^2 / 4, x^2 = x2^2 / 4  =>  b^2 < x2^2
        return x2 > 0 and b >= 0 and b * b < x2 * x2

    def canonical_associate(self) -> FieldElement:
        if self.is_zero():
            return self
        hits = [self * u for u in self.field.units if (self * u).in_canonical_sector()]
        assert len(hits) == 1, f"canonical sector not unique for {self}"
        return hits[0]

    def divides(self, other: FieldElement) -> bool:
        """Exact divisibility self | other in the maximal order."""
        n = self.norm()
        if n == 0:
            return other.is_zero()
        prod = other * self.conjugate()
        return prod.a % n == 0 and prod.b % n == 0

    def exact_div(self, other: FieldElement) -> FieldElement:
        """self / other, assuming exact divisibility."""
        n = other.norm()
        prod = self * other.conjugate()
        if n == 0 or prod.a % n or prod.b % n:
            raise ValueError(f"{other} does not divide {self}")
        return FieldElement(prod.a // n, prod.b // n, self.field)

    def to_complex(self) -> complex:
        d = self.field.disc
        return complex(self.a + self.b * d / 2.0, self.b * math.sqrt(-d) / 2.0)

    def __str__(self):
        return f"({self.a}{self.b:+}w)"


class PrincipalIdeal:
    """Nonzero ideal of the maximal order, stored by canonical generator."""

    __slots__ = ("generator", "norm")

    def __init__(self, generator: FieldElement):
        if generator.is_zero():
            raise ValueError("zero is not a generator of a nonzero ideal")
        self.generator = generator.canonical_associate()
        self.norm = self.generator.norm()

    @property
    def field(self) -> QuadField:
        return self.generator.field

    def __eq__(self, other):
        return (
            isinstance(other, PrincipalIdeal)
            and self.generator.field == other.generator.field
            and self.generator.a == other.generator.a
            and self.generator.b == other.generator.b
        )

    def __hash__(self):
        return hash((self.generator.field.disc, self.generator.a, self.generator.b))

    def __mul__(self, other: PrincipalIdeal) -> PrincipalIdeal:
        return PrincipalIdeal(self.generator * other.generator)

    def conjugate(self) -> PrincipalIdeal:
        return PrincipalIdeal(self.generator.conjugate())

    def divides(self, g: FieldElement) -> bool:
        return self.generator.divides(g)

    def sort_key(self):
        return (self.norm, self.generator.a, self.generator.b)

    def __repr__(self):
        return f"PrincipalIdeal({self.generator.a}{self.generator.b:+}w, N={self.norm})"


def splitting_type(p: int, F: QuadField) -> str:
    """'Split', 'Inert' or 'Ramified' according to the Kronecker symbol (d/p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    sym = kronecker_symbol(F.disc, p)
    return {1: "Split", -1: "Inert", 0: "Ramified"}[sym]


def _norm_solutions(n: int, F: QuadField):
    """All (a, b) with N(a + b*omega) = n, via the norm form quadratic in a."""
    d = F.disc
    out = []
    # N = a^2 + a*b*d + b^2 (d^2-d)/4 = n; as quadratic in a the discriminant
    # is b^2 d + 4n, which must be a non-negative perfect square.
    bmax = math.isqrt(4 * n // (-d))
    for b in range(-bmax, bmax + 1):
        disc_a = b * b * d + 4 * n
        if disc_a < 0:
            continue
        r = math.isqrt(disc_a)
        if r * r != disc_a:
            continue
        for sgn in ((r, -r) if r else (r,)):
            num = -b * d + sgn
            if num % 2 == 0:
                out.append(FieldElement(num // 2, b, F))
    return out


def ideals_of_norm(n: int, F: QuadField) -> list[PrincipalIdeal]:
    """All ideals of norm exactly n, canonical generators, deterministic order."""
    if n < 1:
        raise ValueError("norm bound must be positive")
    seen = {}
    for g in _norm_solutions(n, F):
        ideal = PrincipalIdeal(g)
        seen[(ideal.generator.a, ideal.generator.b)] = ideal
    return sorted(seen.values(), key=PrincipalIdeal.sort_key)


def enumerate_ideals(X: int, F: QuadField) -> list[tuple[int, PrincipalIdeal]]:
    """All ideals of norm <= X as (norm, ideal), norm ascending then generator order.

    Single pass over the lattice points of norm <= X, bucketed by norm; each
    ideal appears w times among lattice points and once after canonical
    reduction.
    """
    if X < 1:
        raise ValueError("norm bound must be positive")
    d = F.disc
    buckets: dict[int, dict] = {}
    bmax = math.isqrt(4 * X // (-d))
    for b in range(-bmax, bmax + 1):
        # a^2 + (b d) a + (b^2 (d^2-d)/4 - X) <= 0
        disc_a = b * b * d + 4 * X
        r = math.isqrt(disc_a)
        lo = (-b * d - r + 1) // 2 - 1
        hi = (-b * d + r) // 2 + 1
        for a in range(lo, hi + 1):
            g = FieldElement(a, b, F)
            n = g.norm()
            if n == 0 or n > X:
                continue
            if g.in_canonical_sector():
                buckets.setdefault(n, {})[(a, b)] = PrincipalIdeal(g)
    out = []
    for n in sorted(buckets):
        out.extend((n, ideal) for ideal in sorted(buckets[n].values(), key=PrincipalIdeal.sort_key))
    return out


def prime_ideals_above(p: int, F: QuadField) -> list[PrincipalIdeal]:
    """Prime ideals over the rational prime p."""
    kind = splitting_type(p, F)
    if kind == "Inert":
        return [PrincipalIdeal(F.element(p))]
    return ideals_of_norm(p, F)


def ideal_coprime(g: FieldElement, f: FieldElement) -> bool:
    """(g) and (f) coprime?  No Euclid: divisibility tests at shared primes."""
    ng, nf = g.norm(), f.norm()
    common = math.gcd(ng, nf)
    if common == 1:
        return True
    p = 2
    while p * p <= common:
        if common % p == 0:
            for prime in prime_ideals_above(p, g.field):
                if prime.divides(g) and prime.divides(f):
                    return False
            while common % p == 0:
                common //= p
        p += 1
    if common > 1:
        for prime in prime_ideals_above(common, g.field):
            if prime.divides(g) and prime.divides(f):
                return False
    return True
