"""Irreducible and primary decomposition of monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    Ring,
    contract_to_prime,
    ideal_to_dict,
    intersect_all,
)


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal (x_i^{e_i} : i in entries)."""

    ring: Ring
    entries: tuple[tuple[int, int], ...]

    def ideal(self) -> MonomialIdeal:
        gens = []
        for i, e in self.entries:
            v = [0] * self.ring.n
            v[i] = e
            gens.append(tuple(v))
        return MonomialIdeal(self.ring, tuple(gens))

    def prime(self) -> MonomialPrime:
        return MonomialPrime(self.ring, tuple(i for i, _ in self.entries))


@dataclass(frozen=True)
class PrimaryDecomposition:
    components: tuple[tuple[MonomialPrime, MonomialIdeal], ...]

    def intersection(self, ring: Ring) -> MonomialIdeal:
        return intersect_all((Q for _, Q in self.components), ring)

    def to_list(self) -> list[dict]:
        return [dict(prime=p.names(), **ideal_to_dict(Q)) for p, Q in self.components]


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise PreconditionError("the zero ideal has no finite irreducible decomposition here")
    if I.is_unit():
        raise PreconditionError("the unit ideal has no associated primes")


# An irreducible component is kept as a tuple e: the ideal (x_i^{e_i} : e_i > 0).

def _holds(e, g) -> bool:
    """Is x^g in the irreducible ideal e?"""
    return any(0 < x <= y for x, y in zip(e, g))


def _inside(small, big) -> bool:
    """Containment of irreducible ideals."""
    return all(x == 0 or 0 < y <= x for x, y in zip(small, big))


def _components(gens) -> list[tuple[int, ...]]:
    """Irredundant irreducible components of the ideal generated by gens.

    Generators are added one at a time. For coprime monomials u, v and any
    monomial ideal J, J + (uv) = (J + u) cap (J + v), so a component Q not
    containing x^g splits into the Q + x_i^{g_i} over the support of g.
    """
    n = len(gens[0])
    comps = [tuple(g[i] if j == i else 0 for j in range(n)) for g in gens[:1] for i in range(n) if g[i]]
    for g in gens[1:]:
        kept = [e for e in comps if _holds(e, g)]
        fresh = set()
        for e in comps:
            if _holds(e, g):
                continue
            for i in range(n):
                if g[i]:
                    fresh.add(e[:i] + (g[i] if e[i] == 0 else min(e[i], g[i]),) + e[i + 1:])
        # kept components are mutually irredundant and none contains a fresh one
        fresh = [f for f in fresh if not any(_inside(e, f) for e in kept)]
        fresh = [f for f in fresh if not any(h != f and _inside(h, f) for h in fresh)]
        comps = kept + fresh
    return comps


def irreducible_decomposition(I: MonomialIdeal) -> list[IrreducibleComponent]:
    _require_proper(I)
    return list(_irreducible(I))


@lru_cache(maxsize=4096)
def _irreducible(I: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    comps = [
        IrreducibleComponent(I.ring, tuple((i, x) for i, x in enumerate(e) if x)) for e in _components(I.gens)
    ]
    comps.sort(key=lambda c: (len(c.entries), c.entries))
    return tuple(comps)


@lru_cache(maxsize=4096)
def _associated(I: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    primes = {c.prime() for c in irreducible_decomposition(I)}
    return tuple(sorted(primes, key=MonomialPrime.sort_key))


def associated_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    return list(_associated(I))


def minimal_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    ass = associated_primes(I)
    return [p for p in ass if not any(q != p and q.issubset(p) for q in ass)]


def big_height(I: MonomialIdeal) -> int:
    return max(p.height for p in associated_primes(I))


def height(I: MonomialIdeal) -> int:
    return min(p.height for p in minimal_primes(I))


def grade_is_zero(p: MonomialPrime, I: MonomialIdeal) -> bool:
    """True iff p consists of zero divisors on R/I, i.e. p lies in some associated prime."""
    return any(p.issubset(q) for q in associated_primes(I))


def primary_components_min(I: MonomialIdeal) -> PrimaryDecomposition:
    """Primary decomposition of an ideal without embedded primes.

    Each component is the contraction of I to its prime.
    """
    ass = associated_primes(I)
    mins = set(minimal_primes(I))
    embedded = [p for p in ass if p not in mins]
    if embedded:
        raise PreconditionError(f"ideal has embedded prime {embedded[0]}")
    return PrimaryDecomposition(tuple((p, contract_to_prime(I, p)) for p in ass))
