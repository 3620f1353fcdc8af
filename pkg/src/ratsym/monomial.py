"""Monomials, monomial ideals and monomial primes over k[x_1, ..., x_n].

Everything here is immutable. A monomial is its exponent vector, a tuple of
Python ints. A monomial ideal is stored by its unique minimal generating set,
sorted in descending lex order (x^2 before xy before y^2), so structural equality is ideal equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import DimensionError, PreconditionError, RingMismatchError, UndefinedColonError

Exponent = tuple[int, ...]

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Ring:
    variables: tuple[str, ...]
    characteristic: int = 0

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        for name in self.variables:
            if not _NAME.match(name):
                raise ValueError(f"bad variable name {name!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if self.characteristic < 0:
            raise ValueError("characteristic must be nonnegative")

    @classmethod
    def of(cls, names: str | Iterable[str], characteristic: int = 0) -> Ring:
        """``Ring.of("x,y,z")`` or ``Ring.of(["x", "y"])``."""
        if isinstance(names, str):
            names = [s.strip() for s in names.split(",") if s.strip()]
        return cls(tuple(names), characteristic)

    @property
    def n(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def zero(self) -> Exponent:
        return (0,) * self.n

    def unit_vector(self, i: int) -> Exponent:
        return tuple(1 if j == i else 0 for j in range(self.n))


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """x^a | x^b."""
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def minimal_elements(vectors: Iterable[Sequence[int]]) -> list[Exponent]:
    """Antichain of componentwise-minimal vectors, in descending lex order."""
    cands = sorted(set(tuple(v) for v in vectors), key=lambda v: (sum(v), v))
    kept: list[Exponent] = []
    for v in cands:
        # only smaller-degree vectors can divide v (duplicates are gone)
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    kept.sort(reverse=True)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    ring: Ring
    gens: tuple[Exponent, ...] = field(default=())

    def __post_init__(self):
        n = self.ring.n
        for g in self.gens:
            if len(g) != n:
                raise DimensionError(f"exponent {g} has length {len(g)}, ring has {n} variables")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        object.__setattr__(self, "gens", tuple(minimal_elements(self.gens)))

    # constructors
    @classmethod
    def zero(cls, ring: Ring) -> MonomialIdeal:
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: Ring) -> MonomialIdeal:
        return cls(ring, (ring.zero(),))

    @classmethod
    def variables(cls, ring: Ring, indices: Iterable[int]) -> MonomialIdeal:
        return cls(ring, tuple(ring.unit_vector(i) for i in indices))

    # predicates
    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (self.ring.zero(),)

    def is_proper(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def contains(self, a: Sequence[int]) -> bool:
        """Is the monomial x^a in the ideal?"""
        if len(a) != self.ring.n:
            raise DimensionError(f"point {tuple(a)} has wrong length for {self.ring.variables}")
        return any(divides(g, a) for g in self.gens)

    def __contains__(self, a) -> bool:
        return self.contains(a)

    def issubset(self, other: MonomialIdeal) -> bool:
        _same_ring(self, other)
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other: MonomialIdeal) -> bool:
        return self.issubset(other)

    def __ge__(self, other: MonomialIdeal) -> bool:
        return other.issubset(self)

    def max_exponents(self) -> Exponent:
        if not self.gens:
            return self.ring.zero()
        return tuple(max(col) for col in zip(*self.gens))

    # arithmetic
    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def __str__(self) -> str:
        return format_ideal(self)


@dataclass(frozen=True)
class MonomialPrime:
    """Prime ideal generated by the variables with the given (0-based) indices."""

    ring: Ring
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        if not idx:
            raise ValueError("a monomial prime needs at least one variable")
        if idx[0] < 0 or idx[-1] >= self.ring.n:
            raise ValueError(f"variable index out of range in {idx}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def from_names(cls, ring: Ring, names: Iterable[str]) -> MonomialPrime:
        return cls(ring, tuple(ring.index(s) for s in names))

    @property
    def height(self) -> int:
        return len(self.indices)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.variables(self.ring, self.indices)

    def names(self) -> list[str]:
        return [self.ring.variables[i] for i in self.indices]

    def issubset(self, other: MonomialPrime) -> bool:
        return set(self.indices) <= set(other.indices)

    def __str__(self) -> str:
        return "(" + ",".join(self.names()) + ")"

    def sort_key(self):
        return (len(self.indices), self.indices)


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ring != J.ring:
        raise RingMismatchError(f"ideals live in different rings: {I.ring.variables} vs {J.ring.variables}")


def minimalize(gens: Iterable[Sequence[int]], ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, tuple(tuple(g) for g in gens))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, I.gens + J.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, tuple(tuple(x + y for x, y in zip(g, h)) for g in I.gens for h in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("power exponent must be nonnegative")
    result = MonomialIdeal.unit(I.ring)
    base = I
    # square-and-multiply keeps the intermediate generator lists small
    while k:
        if k & 1:
            result = product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, tuple(lcm(g, h) for g in I.gens for h in J.gens))


def intersect_all(ideals: Iterable[MonomialIdeal], ring: Ring) -> MonomialIdeal:
    """Intersection of a family; the empty intersection is the unit ideal."""
    return reduce(intersect, ideals, MonomialIdeal.unit(ring))


def colon_monomial(I: MonomialIdeal, h: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal(I.ring, tuple(tuple(max(x - y, 0) for x, y in zip(g, h)) for g in I.gens))


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J. The zero ideal as divisor is rejected."""
    _same_ring(I, J)
    if J.is_zero():
        raise UndefinedColonError("colon by the zero ideal is not defined here")
    return intersect_all((colon_monomial(I, h) for h in J.gens), I.ring)


def saturate(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J^infinity, by iterating the colon until it stabilizes."""
    current = I
    while True:
        nxt = colon(current, J)
        if nxt == current:
            return current
        current = nxt


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ring, tuple(tuple(min(e, 1) for e in g) for g in I.gens))


def contract_to_prime(J: MonomialIdeal, p: MonomialPrime) -> MonomialIdeal:
    """J R_p intersected with R: variables outside p become units."""
    if J.ring != p.ring:
        raise RingMismatchError("prime and ideal live in different rings")
    keep = set(p.indices)
    return MonomialIdeal(J.ring, tuple(tuple(e if i in keep else 0 for i, e in enumerate(g)) for g in J.gens))


@dataclass(frozen=True)
class BlockEmbedding:
    """Embedding of the exponents of a block ring into the joined ring."""

    offset: int
    size: int
    total: int

    def __call__(self, a: Sequence[int]) -> Exponent:
        if len(a) != self.size:
            raise DimensionError(f"expected {self.size} exponents, got {len(a)}")
        return (0,) * self.offset + tuple(a) + (0,) * (self.total - self.offset - self.size)

    def ideal(self, I: MonomialIdeal, ring: Ring) -> MonomialIdeal:
        return MonomialIdeal(ring, tuple(self(g) for g in I.gens))


def join_rings(A: Ring, B: Ring) -> tuple[Ring, BlockEmbedding, BlockEmbedding]:
    overlap = set(A.variables) & set(B.variables)
    if overlap:
        raise PreconditionError(f"variable blocks overlap in {sorted(overlap)}")
    if A.characteristic != B.characteristic:
        raise RingMismatchError("blocks have different characteristics")
    ring = Ring(A.variables + B.variables, A.characteristic)
    return ring, BlockEmbedding(0, A.n, ring.n), BlockEmbedding(A.n, B.n, ring.n)


def disjoint_block_sum(I: MonomialIdeal, J: MonomialIdeal):
    """The mixed sum I + J in the tensor product ring.

    Returns ``(I + J, embed_I, embed_J)``; the embeddings act on exponent
    vectors and on ideals (``embed_I.ideal(I, ring)``).
    """
    ring, ea, eb = join_rings(I.ring, J.ring)
    return ea.ideal(I, ring) + eb.ideal(J, ring), ea, eb


def format_monomial(ring: Ring, a: Sequence[int]) -> str:
    parts = []
    for name, e in zip(ring.variables, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal) -> str:
    if I.is_zero():
        return "0"
    return ", ".join(format_monomial(I.ring, g) for g in I.gens)


def ideal_to_dict(I: MonomialIdeal) -> dict:
    return {"ring": list(I.ring.variables), "generators": [list(g) for g in I.gens]}


def ideal_from_dict(data: dict) -> MonomialIdeal:
    ring = Ring(tuple(data["ring"]))
    return MonomialIdeal(ring, tuple(tuple(int(e) for e in g) for g in data["generators"]))
