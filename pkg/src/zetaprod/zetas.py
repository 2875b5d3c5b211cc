"""L-functions and zeta functions assembled from the Hurwitz continuation.

Two independent routes exist for almost everything here:

  * continuation route: L(s) from Hurwitz zeta values, Dedekind zetas from
    the unit-count factorization u * zeta(s) * L(s);
  * defining-domain route (s > 1 only): truncated lattice sums, truncated
    Euler products over rational or lattice primes, and the Mobius-weighted
    log-zeta sum for the prime zeta function.

Every truncated evaluation returns its truncation-error estimate, and the
pairs of routes are meant to be compared within the *sum* of the two
reported tails, never a fixed epsilon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import arith, rings
from .special import EvalResult, hurwitz_zeta, hurwitz_zeta_ds, riemann_zeta

LATTICE_MIN_S = 1.2

_UNIT_COUNT = {"gauss": 4, "eisenstein": 6}
_MODULUS = {"gauss": 4, "eisenstein": 3}
_RESIDUE_CLASSES = {4: (1, 3), 3: (1, 2)}
# lattice points per unit area in the plane embedding
_POINT_DENSITY = {"gauss": 1.0, "eisenstein": 2.0 / math.sqrt(3.0)}


@dataclass(frozen=True)
class ZetaId:
    """Typed identifier for one member of the zeta family.

    kind is one of 'riemann', 'dirichlet_L', 'dedekind', 'partial_prime',
    'prime_zeta', 'bold_Z'; ring_or_modulus is 'natural', 'gauss',
    'eisenstein', 3 or 4; residue_class is required exactly for
    kind = 'partial_prime'.
    """

    kind: str
    ring_or_modulus: str | int = "natural"
    residue_class: int | None = None

    def __post_init__(self):
        kinds = ("riemann", "dirichlet_L", "dedekind", "partial_prime",
                 "prime_zeta", "bold_Z")
        if self.kind not in kinds:
            raise ValueError(f"unknown zeta kind {self.kind!r}")
        if self.kind == "dirichlet_L" or self.kind == "partial_prime":
            if self.ring_or_modulus not in (3, 4):
                raise ValueError(f"{self.kind} needs modulus 3 or 4")
        if self.kind in ("dedekind", "bold_Z"):
            if self.ring_or_modulus not in ("gauss", "eisenstein"):
                raise ValueError(f"{self.kind} needs a lattice ring")
        if self.kind == "partial_prime":
            if self.residue_class not in _RESIDUE_CLASSES[self.ring_or_modulus]:
                raise ValueError(
                    f"residue class {self.residue_class} invalid for "
                    f"modulus {self.ring_or_modulus}"
                )
        elif self.residue_class is not None:
            raise ValueError(f"residue_class is only valid for partial_prime")


def _check_modulus(modulus: int) -> None:
    if modulus not in (3, 4):
        raise ValueError(f"modulus must be 3 or 4, got {modulus}")


def _check_ring(ring: str) -> str:
    if ring not in _UNIT_COUNT:
        raise ValueError(f"ring must be 'gauss' or 'eisenstein', got {ring!r}")
    return ring


def dirichlet_L(modulus: int, s: float, **options) -> EvalResult:
    """L(s, chi_modulus) = (zeta(s, 1/q) - zeta(s, (q-1)/q)) / q^s."""
    _check_modulus(modulus)
    za = hurwitz_zeta(s, 1.0 / modulus, **options)
    zb = hurwitz_zeta(s, (modulus - 1.0) / modulus, **options)
    scale = float(modulus) ** -s
    value = (za.value - zb.value) * scale
    tail = (za.tail_bound + zb.tail_bound) * scale
    return EvalResult(value, tail, {"modulus": modulus, **za.params})


def dirichlet_L_ds(modulus: int, s: float, **options) -> EvalResult:
    """d/ds of dirichlet_L by the product rule on the Hurwitz representation."""
    _check_modulus(modulus)
    za = hurwitz_zeta(s, 1.0 / modulus, **options)
    zb = hurwitz_zeta(s, (modulus - 1.0) / modulus, **options)
    da = hurwitz_zeta_ds(s, 1.0 / modulus, **options)
    db = hurwitz_zeta_ds(s, (modulus - 1.0) / modulus, **options)
    log_q = math.log(modulus)
    scale = float(modulus) ** -s
    value = ((da.value - db.value) - log_q * (za.value - zb.value)) * scale
    tail = (da.tail_bound + db.tail_bound
            + log_q * (za.tail_bound + zb.tail_bound)) * scale
    return EvalResult(value, tail, {"modulus": modulus, **da.params})


def dedekind_zeta(ring: str, s: float, **options) -> EvalResult:
    """Lattice-ring zeta via the factorization u * zeta(s) * L(s)."""
    u = _UNIT_COUNT[_check_ring(ring)]
    z = riemann_zeta(s, **options)
    ell = dirichlet_L(_MODULUS[ring], s, **options)
    value = u * z.value * ell.value
    tail = u * (abs(z.value) * ell.tail_bound + abs(ell.value) * z.tail_bound)
    return EvalResult(value, tail, {"ring": ring, **z.params})


def dedekind_zeta_ds(ring: str, s: float, **options) -> EvalResult:
    """d/ds of dedekind_zeta: u * (zeta' L + zeta L')."""
    u = _UNIT_COUNT[_check_ring(ring)]
    z = riemann_zeta(s, **options)
    dz = hurwitz_zeta_ds(s, 1.0, **options)
    ell = dirichlet_L(_MODULUS[ring], s, **options)
    dell = dirichlet_L_ds(_MODULUS[ring], s, **options)
    value = u * (dz.value * ell.value + z.value * dell.value)
    tail = u * (
        abs(ell.value) * dz.tail_bound + abs(dz.value) * ell.tail_bound
        + abs(z.value) * dell.tail_bound + abs(dell.value) * z.tail_bound
    )
    return EvalResult(value, tail, {"ring": ring, **z.params})


def dedekind_zeta_lattice(ring: str, s: float, radius: int) -> EvalResult:
    """Truncated lattice sum of norm^-s over 0 < norm <= radius^2.

    Defining-domain oracle for the factorization route.  The tail estimate
    is the integral comparison: lattice points have density d per unit area,
    i.e. pi*d per unit of norm, so the omitted mass is about
    pi * d * R^(2-2s) / (s-1).  The integral starts one lattice spacing
    inside the cutoff circle (radius R-1) to absorb the count fluctuations
    of the boundary annulus.
    """
    _check_ring(ring)
    if not s > LATTICE_MIN_S:
        raise ValueError(f"lattice sum needs s > {LATTICE_MIN_S}, got {s}")
    if radius < 10:
        raise ValueError(f"radius must be >= 10, got {radius}")
    norm_cap = radius * radius
    if ring == "gauss":
        half = radius
        a, b = np.meshgrid(
            np.arange(-half, half + 1, dtype=np.int64),
            np.arange(-half, half + 1, dtype=np.int64),
            indexing="ij",
        )
        norms = a * a + b * b
    else:
        half = math.ceil(2 * radius / math.sqrt(3.0))
        a, b = np.meshgrid(
            np.arange(-half, half + 1, dtype=np.int64),
            np.arange(-half, half + 1, dtype=np.int64),
            indexing="ij",
        )
        norms = a * a - a * b + b * b
    norms = norms.ravel()
    kept = norms[(norms > 0) & (norms <= norm_cap)].astype(np.float64)
    value = float(np.sum(kept ** -s))
    tail = (
        2.0 * math.pi * _POINT_DENSITY[ring]
        * float(radius - 1) ** (2.0 - 2.0 * s) / (2.0 * s - 2.0)
    )
    return EvalResult(value, tail, {"radius": radius})


def _prime_sum_tail(s: float, cutoff: int) -> float:
    # integral-test estimate of sum_{p > cutoff} p^-s with density 1/ln t:
    # E1((s-1) ln N) <= N^(1-s) / ((s-1) ln N)
    return cutoff ** (1.0 - s) / ((s - 1.0) * math.log(cutoff))


def _require_tables(
    cutoff: int, tables: arith.SieveTables | None
) -> arith.SieveTables:
    if tables is None:
        tables = arith.default_tables(max(cutoff, arith.DEFAULT_SIEVE_LIMIT))
    if cutoff > tables.limit:
        raise ValueError(f"cutoff {cutoff} exceeds sieve limit {tables.limit}")
    return tables


def partial_prime_zeta(
    modulus: int,
    residue_class: int,
    s: float,
    prime_cutoff: int,
    tables: arith.SieveTables | None = None,
) -> EvalResult:
    """Euler product of (1 - p^-s)^-1 over primes p = class mod modulus."""
    ZetaId("partial_prime", modulus, residue_class)  # validates the pair
    if not s > 1.0:
        raise ValueError(f"partial prime zeta diverges for s <= 1, got s = {s}")
    tables = _require_tables(prime_cutoff, tables)
    ps = tables.primes_in_class(modulus, residue_class)
    ps = ps[ps <= prime_cutoff].astype(np.float64)
    value = float(np.exp(-np.sum(np.log1p(-(ps ** -s)))))
    tail = value * math.expm1(_prime_sum_tail(s, prime_cutoff))
    return EvalResult(
        value,
        tail,
        {"modulus": modulus, "residue_class": residue_class,
         "prime_cutoff": prime_cutoff},
    )


def L_euler_product(
    modulus: int,
    s: float,
    prime_cutoff: int,
    tables: arith.SieveTables | None = None,
) -> EvalResult:
    """L(s, chi) from partial prime zetas: z_1(s) * z_other(2s) / z_other(s).

    Independent of the Hurwitz route; the two must meet within tails.
    """
    _check_modulus(modulus)
    if not s > 1.0:
        raise ValueError(f"Euler product diverges for s <= 1, got s = {s}")
    other = _RESIDUE_CLASSES[modulus][1]
    z1 = partial_prime_zeta(modulus, 1, s, prime_cutoff, tables)
    zo = partial_prime_zeta(modulus, other, s, prime_cutoff, tables)
    zo2 = partial_prime_zeta(modulus, other, 2.0 * s, prime_cutoff, tables)
    value = z1.value * zo2.value / zo.value
    rel = (z1.tail_bound / z1.value + zo2.tail_bound / zo2.value
           + zo.tail_bound / zo.value)
    return EvalResult(
        value, abs(value) * rel,
        {"modulus": modulus, "prime_cutoff": prime_cutoff},
    )


def prime_zeta_direct(
    s: float,
    prime_cutoff: int,
    tables: arith.SieveTables | None = None,
) -> EvalResult:
    """Prime zeta sum_p p^-s from sieved primes, completed by an integral tail.

    The sum runs over primes <= prime_cutoff; the remainder is estimated via
    the logarithmic prime density as E1((s-1) ln N) and added on, which
    leaves only the next-order density correction (about E1 / ln N) as the
    reported uncertainty.
    """
    if not s > 1.0:
        raise ValueError(f"prime zeta diverges for s <= 1, got s = {s}")
    tables = _require_tables(prime_cutoff, tables)
    ps = tables.primes[tables.primes <= prime_cutoff].astype(np.float64)
    partial = float(np.sum(ps ** -s))
    completion = _exp_integral_e1((s - 1.0) * math.log(prime_cutoff))
    return EvalResult(
        partial + completion,
        completion / math.log(prime_cutoff),
        {"prime_cutoff": prime_cutoff},
    )


def prime_zeta_mobius(
    s: float,
    n_max: int,
    tables: arith.SieveTables | None = None,
) -> EvalResult:
    """Prime zeta via Mobius inversion of log zeta: sum mu(n)/n * ln zeta(ns)."""
    if not s > 1.0:
        raise ValueError(f"prime zeta diverges for s <= 1, got s = {s}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    tables = _require_tables(n_max, tables)
    total = 0.0
    for n in range(1, n_max + 1):
        mu = int(tables.mobius[n])
        if mu == 0:
            continue
        total += mu / n * math.log(riemann_zeta(n * s).value)
    return EvalResult(total, 2.0 ** (-n_max * s), {"series_cutoff": n_max})


def ring_euler_closed(ring: str, s: float, **options) -> EvalResult:
    """Closed form of the ring-prime Euler product: (zeta_ring(s) / u)^u."""
    u = _UNIT_COUNT[_check_ring(ring)]
    zk = dedekind_zeta(ring, s, **options)
    base = zk.value / u
    value = base**u
    tail = abs(base ** (u - 1)) * zk.tail_bound
    return EvalResult(value, tail, {"ring": ring, **zk.params})


def ring_euler_product(
    ring: str,
    s: float,
    norm_cutoff: int,
    tables: arith.SieveTables | None = None,
) -> EvalResult:
    """Euler product of (1 - norm^-s)^-1 over enumerated ring primes.

    One factor per ring prime, associates included, exactly as the
    enumeration lists them.  Tail estimate: 2u split factors beyond the
    cutoff at exponent s plus u inert factors beyond sqrt(cutoff) at
    exponent 2s, both via the prime integral test.
    """
    u = _UNIT_COUNT[_check_ring(ring)]
    if not s > 1.0:
        raise ValueError(f"ring Euler product diverges for s <= 1, got s = {s}")
    ring_obj = rings.ring_by_tag(ring)
    pairs = rings.enumerate_ring_primes(ring_obj, norm_cutoff, tables)
    norms = np.array([n for _, n in pairs], dtype=np.float64)
    value = float(np.exp(-np.sum(np.log1p(-(norms ** -s)))))
    missing = 2 * u * _prime_sum_tail(s, norm_cutoff)
    inert_cut = max(2, math.isqrt(norm_cutoff))
    missing += u * _prime_sum_tail(2.0 * s, inert_cut)
    tail = value * math.expm1(missing)
    return EvalResult(value, tail, {"ring": ring, "norm_cutoff": norm_cutoff})


def zeta_euler_product(
    s: float,
    prime_cutoff: int,
    tables: arith.SieveTables | None = None,
) -> EvalResult:
    """Truncated Euler product of (1 - p^-s)^-1 over all primes <= cutoff."""
    if not s > 1.0:
        raise ValueError(f"Euler product diverges for s <= 1, got s = {s}")
    tables = _require_tables(prime_cutoff, tables)
    ps = tables.primes[tables.primes <= prime_cutoff].astype(np.float64)
    value = float(np.exp(-np.sum(np.log1p(-(ps ** -s)))))
    tail = value * math.expm1(_prime_sum_tail(s, prime_cutoff))
    return EvalResult(value, tail, {"prime_cutoff": prime_cutoff})


def _exp_integral_e1(a: float) -> float:
    """E1(a) for a >= ~3, by the standard continued fraction."""
    if not a > 0.0:
        raise ValueError(f"E1 argument must be positive, got {a}")
    tiny = 1e-300
    b = a + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 80):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return math.exp(-a) * h
