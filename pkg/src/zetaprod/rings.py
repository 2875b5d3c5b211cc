"""Exact arithmetic in the square- and triangular-lattice rings.

Elements are integer pairs (a, b) against the basis {1, i} for the square
lattice ('gauss', norm a^2 + b^2) or {1, w} with w = exp(2*pi*i/3) for the
triangular lattice ('eisenstein', norm a^2 - a*b + b^2).  Units act by
repeated multiplication with i (orbit length 4) or with 1 + w (orbit
length 6).  A rational prime p lands in exactly one of three classes:

  * inert:    p stays prime; its associates have norm p^2 (count = units)
  * split:    p = norm of a lattice prime; two non-associate conjugate
              factors (count = 2 * units, norm p)
  * ramified: the single prime above 2 resp. 3 (count = units, norm p)

Everything here is exact integer arithmetic; floats appear only in the
angle key used to order enumeration output deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import arith

_SQRT3_HALF = math.sqrt(3.0) / 2.0


@dataclass(frozen=True)
class QuadraticRing:
    """One of the two lattice rings, keyed by tag 'gauss' or 'eisenstein'."""

    tag: str
    unit_count: int
    ramified_prime: int

    @property
    def class_modulus(self) -> int:
        """Modulus that sorts rational primes into splitting classes."""
        return 4 if self.tag == "gauss" else 3

    @property
    def inert_residue(self) -> int:
        return 3 if self.tag == "gauss" else 2

    def norm_form(self, a: int, b: int) -> int:
        if self.tag == "gauss":
            return a * a + b * b
        return a * a - a * b + b * b


GAUSS = QuadraticRing("gauss", 4, 2)
EISENSTEIN = QuadraticRing("eisenstein", 6, 3)

_RINGS = {"gauss": GAUSS, "eisenstein": EISENSTEIN}


def ring_by_tag(tag: str) -> QuadraticRing:
    ring = _RINGS.get(tag)
    if ring is None:
        raise ValueError(f"ring must be 'gauss' or 'eisenstein', got {tag!r}")
    return ring


@dataclass(frozen=True)
class RingElement:
    """Lattice integer a + b*i or a + b*w, with exact norm and product."""

    ring: QuadraticRing
    a: int
    b: int

    def norm(self) -> int:
        return self.ring.norm_form(self.a, self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __mul__(self, other: "RingElement") -> "RingElement":
        if self.ring is not other.ring:
            raise ValueError("cannot multiply elements of different rings")
        a, b, c, d = self.a, self.b, other.a, other.b
        if self.ring.tag == "gauss":
            return RingElement(self.ring, a * c - b * d, a * d + b * c)
        # (a + b w)(c + d w) with w^2 = -1 - w
        return RingElement(self.ring, a * c - b * d, a * d + b * c - b * d)

    def conjugate(self) -> "RingElement":
        if self.ring.tag == "gauss":
            return RingElement(self.ring, self.a, -self.b)
        # conj(a + b w) = (a - b) - b w
        return RingElement(self.ring, self.a - self.b, -self.b)

    def times_unit_generator(self) -> "RingElement":
        """Multiply by i (gauss) or by 1 + w (eisenstein)."""
        if self.ring.tag == "gauss":
            return RingElement(self.ring, -self.b, self.a)
        return RingElement(self.ring, self.a - self.b, self.a)

    def embedding(self) -> tuple[float, float]:
        """Coordinates of the element in the complex plane."""
        if self.ring.tag == "gauss":
            return float(self.a), float(self.b)
        return self.a - 0.5 * self.b, _SQRT3_HALF * self.b

    def angle(self) -> float:
        xx, yy = self.embedding()
        return math.atan2(yy, xx)


@dataclass(frozen=True)
class PrimeClass:
    """Splitting data of a rational prime in one of the rings."""

    rational_prime: int
    kind: str  # 'inert' | 'split' | 'ramified'
    ring_prime_count: int
    ring_prime_norm: int


def norm(z: RingElement) -> int:
    """Exact integer norm (a^2 + b^2 or a^2 - a*b + b^2)."""
    return z.norm()


def unit_orbit(z: RingElement) -> list[RingElement]:
    """All associates of z, starting from z itself; length = unit count."""
    if z.is_zero():
        raise ValueError("zero has no unit orbit")
    orbit = [z]
    for _ in range(z.ring.unit_count - 1):
        orbit.append(orbit[-1].times_unit_generator())
    return orbit


def _is_natural_prime(n: int) -> bool:
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


def classify_prime(ring: QuadraticRing, p: int) -> PrimeClass:
    """Inert / split / ramified class of a rational prime, with multiplicities."""
    if not _is_natural_prime(p):
        raise ValueError(f"{p} is not a natural prime")
    u = ring.unit_count
    if p == ring.ramified_prime:
        return PrimeClass(p, "ramified", u, p)
    if p % ring.class_modulus == ring.inert_residue:
        return PrimeClass(p, "inert", u, p * p)
    return PrimeClass(p, "split", 2 * u, p)


def split_representation(ring: QuadraticRing, p: int) -> RingElement:
    """Canonical lattice factor of a split prime: a > 0 and minimal b > 0.

    Exhaustive search over the norm form; fine at desk scale.
    """
    cls = classify_prime(ring, p)
    if cls.kind != "split":
        raise ValueError(f"{p} is {cls.kind} in {ring.tag}, not split")
    if ring.tag == "gauss":
        for b in range(1, math.isqrt(p) + 1):
            rest = p - b * b
            a = math.isqrt(rest)
            if a * a == rest and a > 0:
                return RingElement(ring, a, b)
    else:
        for b in range(1, math.isqrt(4 * p // 3) + 1):
            disc = 4 * p - 3 * b * b
            d = math.isqrt(disc)
            if d * d == disc:
                return RingElement(ring, (b + d) // 2, b)
    raise AssertionError(f"no lattice representation found for split prime {p}")


def _ramified_generator(ring: QuadraticRing) -> RingElement:
    if ring.tag == "gauss":
        return RingElement(ring, 1, 1)   # 1 + i, norm 2
    return RingElement(ring, 1, -1)      # 1 - w, norm 3


def is_ring_prime(z: RingElement) -> bool:
    """Primality of a lattice integer via the norm criterion.

    True iff norm(z) is a natural prime outside the inert residue class, or
    norm(z) = p^2 with p inert and z an associate of p itself.
    """
    if z.is_zero():
        raise ValueError("zero is neither a unit nor a prime")
    ring = z.ring
    n = z.norm()
    if n == 1:
        return False
    if _is_natural_prime(n):
        return n % ring.class_modulus != ring.inert_residue
    p = math.isqrt(n)
    if p * p != n or not _is_natural_prime(p):
        return False
    if p % ring.class_modulus != ring.inert_residue:
        return False
    return z in unit_orbit(RingElement(ring, p, 0))


def classify_norm(ring: QuadraticRing, n: int) -> str:
    """Splitting class behind a ring-prime norm: p, p^2 or the ramified prime."""
    if n == ring.ramified_prime:
        return "ramified"
    if _is_natural_prime(n):
        return "split"
    p = math.isqrt(n)
    if p * p == n and _is_natural_prime(p):
        return "inert"
    raise ValueError(f"{n} is not the norm of a ring prime in {ring.tag}")


def enumerate_ring_primes(
    ring: QuadraticRing,
    max_norm: int,
    tables: arith.SieveTables | None = None,
) -> list[tuple[RingElement, int]]:
    """All ring primes with norm <= max_norm, ordered by (norm, plane angle).

    Associates are listed individually, so the per-prime counts are the
    4/8/4 (gauss) and 6/12/6 (eisenstein) class multiplicities.
    """
    if max_norm < 2:
        return []
    if tables is None or tables.limit < max_norm:
        tables = (
            arith.default_tables()
            if max_norm <= arith.DEFAULT_SIEVE_LIMIT
            else arith.build_sieve(max_norm)
        )
    found: list[tuple[RingElement, int]] = []

    if ring.ramified_prime <= max_norm:
        for z in unit_orbit(_ramified_generator(ring)):
            found.append((z, ring.ramified_prime))

    split_residue = 1
    for p in tables.primes[tables.primes <= max_norm]:
        p = int(p)
        if p % ring.class_modulus == split_residue:
            rep = split_representation(ring, p)
            for z in unit_orbit(rep):
                found.append((z, p))
            for z in unit_orbit(rep.conjugate()):
                found.append((z, p))

    inert_limit = math.isqrt(max_norm)
    for p in tables.primes[tables.primes <= inert_limit]:
        p = int(p)
        if p % ring.class_modulus == ring.inert_residue:
            for z in unit_orbit(RingElement(ring, p, 0)):
                found.append((z, p * p))

    found.sort(key=lambda pair: (pair[1], pair[0].angle()))
    return found
