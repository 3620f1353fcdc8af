"""Integral closures, rational powers and rational symbolic powers of monomial ideals.

Rational symbolic powers can be computed four ways; they agree wherever
their hypotheses overlap, which the test-suite exploits:

* ``localization-contraction``: intersect the contractions of the rational
  power to every associated prime (any monomial ideal).
* ``root-characterization``: x^a is in the u = p/q power iff x^{q a} lies in
  the ordinary symbolic power I^{(p)} (squarefree ideals).
* ``sp-scaling``: integer points of u times the symbolic polyhedron.
* ``prime-intersection``: intersect the rational powers of the associated primes.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .decomposition import associated_primes, grade_is_zero, minimal_primes
from .errors import PreconditionError
from .monomial import (
    Exponent,
    MonomialIdeal,
    MonomialPrime,
    contract_to_prime,
    ideal_to_dict,
    intersect_all,
    power,
    saturate,
)
from .parsing import format_rational
from .polyhedra import (
    lp_minimize,
    minimal_lattice_generators,
    newton_polyhedron,
    power_box,
    scale,
    stability_denominator,
    symbolic_polyhedron,
)

DEFAULT_BOX_MARGIN = 1


class Method(str, enum.Enum):
    NEWTON_SCALING = "newton-scaling"
    ROOT_CHARACTERIZATION = "root-characterization"
    SP_SCALING = "sp-scaling"
    PRIME_INTERSECTION = "prime-intersection"
    LOCALIZATION_CONTRACTION = "localization-contraction"
    SATURATION = "saturation"


SYMBOLIC_METHODS = (
    Method.LOCALIZATION_CONTRACTION,
    Method.ROOT_CHARACTERIZATION,
    Method.SP_SCALING,
    Method.PRIME_INTERSECTION,
)


@dataclass(frozen=True)
class RationalPowerResult:
    ideal: MonomialIdeal
    u: Fraction
    method: Method

    def to_dict(self) -> dict:
        d = ideal_to_dict(self.ideal)
        d["method"] = self.method.value
        d["u"] = format_rational(self.u)
        return d


def _positive(u) -> Fraction:
    u = Fraction(u)
    if u <= 0:
        raise ValueError(f"the exponent u must be positive, got {u}")
    return u


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def scan_box(I: MonomialIdeal, u, margin: int = DEFAULT_BOX_MARGIN) -> tuple[int, ...]:
    """Box prod [0, ceil(u M_i) + margin] used by the predicate scans."""
    u = Fraction(u)
    return tuple(_ceil(u * m) + margin for m in I.max_exponents())


def ideal_from_predicate(ring, box: Sequence[int], member: Callable[[Exponent], bool]) -> MonomialIdeal:
    """Minimal generators of {a in box : member(a)} for an upward-closed predicate."""
    inside = {a for a in itertools.product(*(range(b + 1) for b in box)) if member(a)}
    gens = []
    for a in inside:
        if not any(a[i] and a[:i] + (a[i] - 1,) + a[i + 1:] in inside for i in range(len(a))):
            gens.append(a)
    return MonomialIdeal(ring, tuple(gens))


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero():
        raise PreconditionError("integral closure of the zero ideal is not handled")
    if I.is_unit():
        return I
    return minimal_lattice_generators(newton_polyhedron(I), power_box(I, 1))


@lru_cache(maxsize=8192)
def _rational_power(I: MonomialIdeal, u: Fraction) -> MonomialIdeal:
    if I.is_unit():
        return I
    return minimal_lattice_generators(scale(newton_polyhedron(I), u), power_box(I, u))


def rational_power(I: MonomialIdeal, u) -> RationalPowerResult:
    """Ī^u: monomials whose exponent lies in u * NP(I)."""
    u = _positive(u)
    return RationalPowerResult(_rational_power(I, u), u, Method.NEWTON_SCALING)


def ordinary_symbolic_power(I: MonomialIdeal, p: int) -> MonomialIdeal:
    """I^{(p)} for a radical ideal: intersection of p'^p over minimal primes."""
    return intersect_all((power(q.ideal(), p) for q in minimal_primes(I)), I.ring)


@lru_cache(maxsize=1024)
def _prime_power_list(I: MonomialIdeal, p: int):
    return tuple(power(q.ideal(), p) for q in minimal_primes(I))


def _require_squarefree(I: MonomialIdeal, method: Method):
    if not I.is_squarefree():
        raise PreconditionError(f"method {method.value} needs a squarefree ideal")


@lru_cache(maxsize=8192)
def _symbolic(I: MonomialIdeal, u: Fraction, method: Method, margin: int) -> MonomialIdeal:
    if method is Method.LOCALIZATION_CONTRACTION:
        rp = _rational_power(I, u)
        return intersect_all((contract_to_prime(rp, p) for p in associated_primes(I)), I.ring)
    if method is Method.SP_SCALING:
        _require_squarefree(I, method)
        return minimal_lattice_generators(scale(symbolic_polyhedron(I), u))
    if method is Method.PRIME_INTERSECTION:
        _require_squarefree(I, method)
        return intersect_all((_rational_power(p.ideal(), u) for p in associated_primes(I)), I.ring)
    if method is Method.ROOT_CHARACTERIZATION:
        _require_squarefree(I, method)
        return root_characterization(I, u, margin)
    if method is Method.SATURATION:
        return symbolic_via_saturation(I, u)
    raise PreconditionError(f"{method} is not a rational symbolic power method")


def root_characterization(I: MonomialIdeal, u, margin: int = DEFAULT_BOX_MARGIN) -> MonomialIdeal:
    """{a : q a in I^{(p)}} for u = p/q, scanned over the standard box.

    Membership in I^{(p)} is tested against each p'^p separately, so no
    intersection is ever formed. Only meaningful as the rational symbolic
    power when I is radical; for other ideals it is a search harness.
    """
    u = _positive(u)
    p, q = u.numerator, u.denominator
    primes = _prime_power_list(I, p)

    def member(a):
        qa = tuple(q * x for x in a)
        return all(P.contains(qa) for P in primes)

    return ideal_from_predicate(I.ring, scan_box(I, u, margin), member)


def rational_symbolic_power(
    I: MonomialIdeal, u, method: Method | str = Method.LOCALIZATION_CONTRACTION, margin: int = DEFAULT_BOX_MARGIN
) -> RationalPowerResult:
    u = _positive(u)
    method = Method(method)
    if I.is_unit():
        return RationalPowerResult(I, u, method)
    if I.is_zero():
        raise PreconditionError("rational symbolic powers of the zero ideal are not handled")
    return RationalPowerResult(_symbolic(I, u, method, margin), u, method)


def differential_power_monomial(I: MonomialIdeal, u, margin: int = DEFAULT_BOX_MARGIN) -> MonomialIdeal:
    """u-th rational differential power, tested on monomials only.

    x^b belongs iff every derivative of x^{q b} of order at most p - 1 lies
    in I. In characteristic 0 the derivative by x^a is a nonzero multiple of
    x^{q b - a} when a <= q b and vanishes otherwise.
    """
    if I.ring.characteristic != 0:
        raise PreconditionError("differential powers are only computed in characteristic 0")
    u = _positive(u)
    p, q = u.numerator, u.denominator

    def orders(bound, total):
        # all a <= bound with |a| <= total
        if not bound:
            yield ()
            return
        for k in range(min(bound[0], total) + 1):
            for rest in orders(bound[1:], total - k):
                yield (k,) + rest

    def member(b):
        qb = tuple(q * x for x in b)
        for a in orders(qb, p - 1):
            if not I.contains(tuple(x - y for x, y in zip(qb, a))):
                return False
        return True

    return ideal_from_predicate(I.ring, scan_box(I, u, margin), member)


def saturated_power(I: MonomialIdeal, u, K: MonomialIdeal) -> MonomialIdeal:
    """Ī^u : K^infinity."""
    u = _positive(u)
    return saturate(_rational_power(I, u), K)


def saturation_ideal(I: MonomialIdeal, u) -> MonomialIdeal | None:
    """K_u: intersection of the associated primes of Ī^u that are not zero divisors' primes of I.

    Returns None when no such prime exists.
    """
    rp = _rational_power(I, _positive(u))
    primes = [p for p in associated_primes(rp) if not grade_is_zero(p, I)]
    if not primes:
        return None
    return intersect_all((p.ideal() for p in primes), I.ring)


def symbolic_via_saturation(I: MonomialIdeal, u) -> MonomialIdeal:
    u = _positive(u)
    K = saturation_ideal(I, u)
    if K is None:
        return _rational_power(I, u)
    return saturated_power(I, u, K)


def ass_star(I: MonomialIdeal, k_max: int | None = None, e: int | None = None) -> list[MonomialPrime]:
    """Union of Ass(Ī^{k/e}) for k <= k_max (default 3e)."""
    e = e or stability_denominator(I)
    k_max = k_max or 3 * e
    found = set()
    for k in range(1, k_max + 1):
        found.update(associated_primes(_rational_power(I, Fraction(k, e))))
    return sorted(found, key=MonomialPrime.sort_key)


def global_saturation_ideal(I: MonomialIdeal, k_max: int | None = None) -> MonomialIdeal | None:
    """The K of the saturation identity, with Ass* approximated by :func:`ass_star`."""
    primes = [p for p in ass_star(I, k_max) if not grade_is_zero(p, I)]
    if not primes:
        return None
    return intersect_all((p.ideal() for p in primes), I.ring)


class SkewValuation(tuple):
    """Nonnegative integer linear functional on exponent vectors."""

    def __new__(cls, coefficients: Sequence[int]):
        coeffs = tuple(int(c) for c in coefficients)
        if any(c < 0 for c in coeffs) or not any(coeffs):
            raise ValueError(f"skew valuation needs nonnegative, not all zero coefficients: {coeffs}")
        return super().__new__(cls, coeffs)

    def __call__(self, a: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self, a))

    def of_ideal(self, I: MonomialIdeal) -> int:
        """v(I) = min of v over the monomials of I."""
        return min(self(g) for g in I.gens)


def waldschmidt(I: MonomialIdeal, v: Sequence[int]) -> Fraction:
    """Skew Waldschmidt constant: min of v over the symbolic polyhedron."""
    v = SkewValuation(v)
    value, _ = lp_minimize(symbolic_polyhedron(I), v)
    return value


def waldschmidt_sequence(I: MonomialIdeal, v: Sequence[int], N: int) -> list[Fraction]:
    """The estimates v(I^{(k)}) / k for k = 1..N."""
    v = SkewValuation(v)
    return [Fraction(v.of_ideal(ordinary_symbolic_power(I, k)), k) for k in range(1, N + 1)]


def facet_valuations(I: MonomialIdeal) -> list[SkewValuation]:
    return [SkewValuation(h.normal) for h in symbolic_polyhedron(I).halfspaces]


@lru_cache(maxsize=4096)
def _facet_thresholds(I: MonomialIdeal) -> tuple[tuple[SkewValuation, Fraction], ...]:
    return tuple((v, waldschmidt(I, v)) for v in facet_valuations(I))


def member_by_valuation(I: MonomialIdeal, u, a: Sequence[int]) -> bool:
    """x^a in the u-th rational symbolic power iff v(a) >= u * v̂(I) for the facet valuations."""
    u = _positive(u)
    return all(v(a) >= u * w for v, w in _facet_thresholds(I))


def phi_splitting(m: int, a: Sequence[int]) -> Exponent | None:
    """Splitting R^{1/m} -> R on the monomial (x^a)^{1/m}; None stands for 0."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if all(x % m == 0 for x in a):
        return tuple(x // m for x in a)
    return None


def iota(m: int, b: Sequence[int]) -> Exponent:
    """Inclusion R -> R^{1/m}: x^b becomes (x^{m b})^{1/m}."""
    return tuple(m * x for x in b)

