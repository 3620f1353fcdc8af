"""Rational powers and rational symbolic powers of monomial ideals, in exact arithmetic."""

from .decomposition import (
    associated_primes,
    big_height,
    grade_is_zero,
    irreducible_decomposition,
    minimal_primes,
    primary_components_min,
)
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    Ring,
    colon,
    contract_to_prime,
    disjoint_block_sum,
    intersect,
    minimalize,
    power,
    product,
    radical,
    saturate,
)
from .parsing import parse_ideal, parse_rational
from .polyhedra import (
    HalfSpace,
    HalfSpacePolyhedron,
    contains_point,
    lp_minimize,
    minimal_lattice_generators,
    newton_polyhedron,
    scale,
    stability_denominator,
    symbolic_polyhedron,
)
from .powers import (
    Method,
    SkewValuation,
    differential_power_monomial,
    integral_closure,
    member_by_valuation,
    phi_splitting,
    rational_power,
    rational_symbolic_power,
    saturated_power,
    symbolic_via_saturation,
    waldschmidt,
)

__version__ = "0.1.0"
