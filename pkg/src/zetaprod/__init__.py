"""Zeta-regularized products of lattice-ring integers and primes.

The library regularizes the divergent products of all natural, square-lattice
and triangular-lattice integers (and of the primes of each ring) by analytic
continuation of the matching zeta functions to s = 0, and verifies every
closed form against independent truncated sums and products.
"""

from .arith import (
    BernoulliTable,
    DirichletCharacter,
    RationalSeries,
    SieveTables,
    artin_hasse_series,
    bernoulli,
    build_sieve,
    character,
    default_tables,
)
from .special import (
    EvalResult,
    PoleError,
    hurwitz_zeta,
    hurwitz_zeta_ds,
    log_gamma,
    riemann_zeta,
    riemann_zeta_ds,
)
from .rings import (
    EISENSTEIN,
    GAUSS,
    PrimeClass,
    QuadraticRing,
    RingElement,
    classify_prime,
    enumerate_ring_primes,
    is_ring_prime,
    norm,
    ring_by_tag,
    split_representation,
    unit_orbit,
)
from .zetas import (
    L_euler_product,
    ZetaId,
    dedekind_zeta,
    dedekind_zeta_ds,
    dedekind_zeta_lattice,
    dirichlet_L,
    dirichlet_L_ds,
    partial_prime_zeta,
    prime_zeta_direct,
    prime_zeta_mobius,
    ring_euler_closed,
    ring_euler_product,
    zeta_euler_product,
)
from .products import (
    PowerIdentityCheck,
    RegularizedProduct,
    power_identity_check,
    regularized_integer_product,
    regularized_mobius_sum,
    regularized_prime_product,
)

__version__ = "0.1.0"
