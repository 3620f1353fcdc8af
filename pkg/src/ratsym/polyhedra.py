"""Exact polyhedra of Newton type: {a >= 0 : <w_j, a> >= c_j} with w_j >= 0.

Newton polyhedra are converted from generators to facets by the double
description method applied to their blocking cone. Integer points are handled
through their minimal generators, which is how a polyhedron becomes a
monomial ideal.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .decomposition import associated_primes
from .errors import DimensionError, InfeasibleError, PreconditionError, StabilityError
from .lp import INFEASIBLE, UNBOUNDED, solve_lp
from .monomial import MonomialIdeal, Ring
from .parsing import format_rational, parse_rational


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class HalfSpace:
    """The constraint <normal, a> >= rhs, normal stored as coprime integers."""

    normal: tuple[int, ...]
    rhs: Fraction

    @classmethod
    def make(cls, normal: Sequence, rhs) -> HalfSpace:
        normal = [Fraction(v) for v in normal]
        rhs = Fraction(rhs)
        if any(v < 0 for v in normal):
            raise ValueError(f"half-space normal {normal} has a negative entry")
        if not any(normal):
            if rhs > 0:
                raise InfeasibleError("0 >= positive constant")
            return cls(tuple(0 for _ in normal), Fraction(0))
        den = reduce(math.lcm, (v.denominator for v in normal), 1)
        ints = [int(v * den) for v in normal]
        g = reduce(math.gcd, ints)
        return cls(tuple(v // g for v in ints), rhs * den / g)

    def value(self, a: Sequence) -> Fraction:
        return sum((w * x for w, x in zip(self.normal, a)), Fraction(0))

    def holds(self, a: Sequence) -> bool:
        return self.value(a) >= self.rhs

    def scaled(self, u) -> HalfSpace:
        return HalfSpace(self.normal, self.rhs * Fraction(u))

    def __str__(self) -> str:
        terms = []
        for i, w in enumerate(self.normal, start=1):
            if w == 1:
                terms.append(f"a{i}")
            elif w:
                terms.append(f"{w}*a{i}")
        return f"{' + '.join(terms) or '0'} >= {format_rational(self.rhs)}"


def _sort_key(h: HalfSpace):
    return (-h.rhs, h.normal)


@dataclass(frozen=True)
class HalfSpacePolyhedron:
    """Half-space description; nonnegativity a_i >= 0 is always implied."""

    ring: Ring
    halfspaces: tuple[HalfSpace, ...]

    def __post_init__(self):
        for h in self.halfspaces:
            if len(h.normal) != self.ring.n:
                raise DimensionError(f"half-space {h} has wrong dimension for ring {self.ring.variables}")
        object.__setattr__(self, "halfspaces", tuple(sorted(set(self.halfspaces), key=_sort_key)))

    @property
    def n(self) -> int:
        return self.ring.n

    def __str__(self) -> str:
        return "\n".join(str(h) for h in self.halfspaces)

    def to_dict(self) -> dict:
        return {
            "halfspaces": [
                {"normal": [str(w) for w in h.normal], "rhs": format_rational(h.rhs)} for h in self.halfspaces
            ]
        }

    @classmethod
    def from_dict(cls, data: dict, ring: Ring) -> HalfSpacePolyhedron:
        return cls(
            ring,
            tuple(
                HalfSpace.make([parse_rational(w) for w in h["normal"]], parse_rational(h["rhs"]))
                for h in data["halfspaces"]
            ),
        )


def _primitive(v: list[int]) -> tuple[int, ...]:
    g = reduce(math.gcd, v, 0)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _newton_facets(gens: Sequence[Sequence[int]], n: int) -> set[HalfSpace]:
    """Facets with positive rhs of conv(gens) + nonnegative orthant.

    These are the extreme rays (w, t) with t > 0 of the cone
    {w >= 0, <w, g> >= t for every generator g}, found by the double
    description method in integer arithmetic. Constraint i < n is w_i >= 0,
    constraint n + j is the j-th generator.
    """
    d = n + 1
    first = gens[0]
    rays = [_primitive([int(i == k) for i in range(n)] + [first[k]]) for k in range(n)]
    rays.append(tuple([0] * n + [-1]))
    zeros = [frozenset(j for j in range(n + 1) if j != k) for k in range(n + 1)]
    for j, g in enumerate(gens[1:], start=n + 1):
        vals = [sum(w * x for w, x in zip(r[:n], g)) - r[n] for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        if not neg:
            zeros = [z | {j} if v == 0 else z for z, v in zip(zeros, vals)]
            continue
        new_rays, new_zeros = [], []
        for k, v in enumerate(vals):
            if v >= 0:
                new_rays.append(rays[k])
                new_zeros.append(zeros[k] | {j} if v == 0 else zeros[k])
        for p in pos:
            for q in neg:
                common = zeros[p] & zeros[q]
                if len(common) < d - 2:
                    continue
                if any(k != p and k != q and common <= zeros[k] for k in range(len(rays))):
                    continue
                vp, vq = vals[p], -vals[q]
                new_rays.append(_primitive([vp * x + vq * y for x, y in zip(rays[q], rays[p])]))
                new_zeros.append(common | {j})
        rays, zeros = new_rays, new_zeros
    return {HalfSpace.make(r[:n], r[n]) for r in rays if r[n] > 0}


@lru_cache(maxsize=4096)
def newton_polyhedron(I: MonomialIdeal) -> HalfSpacePolyhedron:
    """Half-spaces of conv(generators) + nonnegative orthant."""
    if I.is_zero():
        raise PreconditionError("the zero ideal has an empty Newton polyhedron")
    if I.is_unit():
        raise PreconditionError("the unit ideal has the whole orthant as Newton polyhedron")
    return HalfSpacePolyhedron(I.ring, tuple(_newton_facets(I.gens, I.ring.n)))


def remove_redundant(P: HalfSpacePolyhedron) -> HalfSpacePolyhedron:
    hs = [h for h in P.halfspaces if h.rhs > 0]
    kept = list(hs)
    for h in hs:
        others = [g for g in kept if g is not h]
        if others and lp_value(others, h.normal) >= h.rhs:
            kept = others
    return HalfSpacePolyhedron(P.ring, tuple(kept))


@lru_cache(maxsize=4096)
def symbolic_polyhedron(I: MonomialIdeal) -> HalfSpacePolyhedron:
    """Intersection of the Newton polyhedra of the associated primes."""
    if not I.is_squarefree():
        raise PreconditionError("the symbolic polyhedron is defined here for squarefree ideals only")
    hs = []
    for p in associated_primes(I):
        normal = [1 if i in p.indices else 0 for i in range(I.ring.n)]
        hs.append(HalfSpace.make(normal, 1))
    return remove_redundant(HalfSpacePolyhedron(I.ring, tuple(hs)))


def scale(P: HalfSpacePolyhedron, u) -> HalfSpacePolyhedron:
    u = Fraction(u)
    if u <= 0:
        raise ValueError(f"scaling factor must be positive, got {u}")
    return HalfSpacePolyhedron(P.ring, tuple(h.scaled(u) for h in P.halfspaces))


def contains_point(P: HalfSpacePolyhedron, a: Sequence) -> bool:
    if len(a) != P.n:
        raise DimensionError(f"point of length {len(a)} in a polyhedron of dimension {P.n}")
    a = [Fraction(x) for x in a]
    if any(x < 0 for x in a):
        return False
    return all(h.holds(a) for h in P.halfspaces)


def lp_value(halfspaces: Sequence[HalfSpace], objective: Sequence) -> Fraction:
    res = solve_lp(objective, [h.normal for h in halfspaces], [h.rhs for h in halfspaces])
    if res.status == INFEASIBLE:
        raise InfeasibleError("empty polyhedron")
    if res.status == UNBOUNDED:
        raise ValueError("objective is unbounded below")
    return res.value


def lp_minimize(P: HalfSpacePolyhedron, objective: Sequence) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exact minimum of <objective, a> over P and a vertex attaining it."""
    if len(objective) != P.n:
        raise DimensionError("objective has wrong length")
    if any(Fraction(c) < 0 for c in objective):
        raise ValueError("objective must be nonnegative")
    res = solve_lp(objective, [h.normal for h in P.halfspaces], [h.rhs for h in P.halfspaces])
    if res.status == INFEASIBLE:
        raise InfeasibleError("empty polyhedron")
    return res.value, res.x


def lattice_box(P: HalfSpacePolyhedron) -> tuple[int, ...]:
    """Per-coordinate upper bounds for minimal integer points of P.

    If a_i exceeds ceil(c_j / w_ji) for every constraint j involving
    coordinate i, then a - e_i still satisfies all constraints, so a is
    not minimal.
    """
    bounds = []
    for i in range(P.n):
        b = 0
        for h in P.halfspaces:
            if h.normal[i] > 0 and h.rhs > 0:
                b = max(b, _ceil(h.rhs / h.normal[i]))
        bounds.append(b)
    return tuple(bounds)


def power_box(I: MonomialIdeal, u) -> tuple[int, ...]:
    """Box prod [0, ceil(u M_i)] holding every minimal generator of Ī^u.

    If a is in u NP(I) then a >= u v for a point v of conv(generators), and
    v_i <= M_i. Should a_i exceed ceil(u M_i), a - e_i still dominates u v,
    so a is not minimal.
    """
    u = Fraction(u)
    return tuple(_ceil(u * m) for m in I.max_exponents())


def minimal_lattice_generators(P: HalfSpacePolyhedron, box: Sequence[int] | None = None) -> MonomialIdeal:
    """Minimal generators of the monomial ideal of integer points in P.

    ``box`` may tighten :func:`lattice_box`; it must contain every minimal
    generator.
    """
    n = P.n
    # integer points satisfy <w, a> >= c iff <w, a> >= ceil(c)
    cons = [(h.normal, _ceil(h.rhs)) for h in P.halfspaces if h.rhs > 0]
    if not cons:
        return MonomialIdeal.unit(P.ring)
    bounds = lattice_box(P)
    if box is not None:
        bounds = tuple(min(b, c) for b, c in zip(bounds, box))
    last = n - 1
    gens = []
    for prefix in itertools.product(*(range(b + 1) for b in bounds[:last])):
        partial = [sum(w[i] * prefix[i] for i in range(last)) for w, _ in cons]
        need = 0
        ok = True
        for (w, c), s in zip(cons, partial):
            if s >= c:
                continue
            if w[last] == 0:
                ok = False
                break
            need = max(need, -((s - c) // w[last]))
        if not ok:
            continue
        totals = [s + w[last] * need for (w, _), s in zip(cons, partial)]
        minimal = True
        for i in range(last):
            if prefix[i] and all(t - w[i] >= c for (w, c), t in zip(cons, totals)):
                minimal = False
                break
        if minimal:
            gens.append(prefix + (need,))
    return MonomialIdeal(P.ring, tuple(gens))


def stability_denominator(I: MonomialIdeal, verify: bool = False, max_u=2) -> int:
    """An e such that every rational power of I is a power k/e.

    With coprime integer facet normals the rhs values c_j of NP(I) are
    integers and Ī^u jumps exactly at the multiples of 1/c_j, so the lcm of
    the c_j works. ``verify`` re-checks this by a jump scan and raises
    :class:`StabilityError` on a counterexample.
    """
    NP = newton_polyhedron(I)
    e = reduce(math.lcm, (h.rhs.numerator for h in NP.halfspaces), 1)
    if verify:
        bad = jump_scan(I, e, max_denominator=2 * e, max_u=max_u)
        if bad is not None:
            raise StabilityError(f"rational power at u={bad} differs from the one at ceil(u*{e})/{e}")
    return e


def jump_scan(I: MonomialIdeal, e: int, max_denominator: int, max_u=2):
    """Return some u = k/d (d <= max_denominator, u <= max_u) with
    Ī^u != Ī^{ceil(u e)/e}, or None."""
    NP = newton_polyhedron(I)
    cache = {}

    def closure_at(u):
        if u not in cache:
            cache[u] = minimal_lattice_generators(scale(NP, u), power_box(I, u))
        return cache[u]

    for d in range(1, max_denominator + 1):
        for k in range(1, int(max_u * d) + 1):
            u = Fraction(k, d)
            if closure_at(u) != closure_at(Fraction(_ceil(u * e), e)):
                return u
    return None
