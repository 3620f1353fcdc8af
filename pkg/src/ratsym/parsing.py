"""Text grammar for monomial ideals and rationals.

An ideal is a comma separated list of monomials, each a ``*``-product of
``var`` or ``var^k`` factors::

    x*y^5, x^2*y^2, x^4*y

When every variable name of the ring is a single letter, juxtaposition is
also accepted (``xy^5, x^2y^2``). ``1`` is the unit monomial; ``0`` or an
empty string is the zero ideal.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .monomial import MonomialIdeal, Ring

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")
_RATIONAL = re.compile(r"\s*([+-]?[0-9]+)\s*(?:/\s*([0-9]+))?\s*\Z")


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    start = text.rfind("\n", 0, offset) + 1
    return line, offset - start + 1


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.pos = 0
        self.single = all(len(v) == 1 for v in ring.variables)

    def error(self, message: str, offset: int | None = None):
        line, col = _position(self.text, self.pos if offset is None else offset)
        raise ParseError(message, line, col)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def ideal(self) -> MonomialIdeal:
        if self.text.strip() in ("", "0"):
            return MonomialIdeal.zero(self.ring)
        gens = [self.monomial()]
        while self.peek() == ",":
            self.pos += 1
            gens.append(self.monomial())
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return MonomialIdeal(self.ring, tuple(gens))

    def monomial(self) -> tuple[int, ...]:
        exps = [0] * self.ring.n
        self.skip()
        if self.text.startswith("1", self.pos) and not _INT.match(self.text, self.pos + 1):
            self.pos += 1
            return tuple(exps)
        self.factor(exps)
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                self.skip()
                self.factor(exps)
            elif c.isalpha() and self.single:
                self.factor(exps)
            else:
                return tuple(exps)

    def factor(self, exps: list[int]):
        start = self.pos
        if self.single:
            if self.pos >= len(self.text) or not self.text[self.pos].isalpha():
                self.error("expected a variable")
            name = self.text[self.pos]
            self.pos += 1
        else:
            m = _IDENT.match(self.text, self.pos)
            if not m:
                self.error("expected a variable")
            name = m.group()
            self.pos = m.end()
        if name not in self.ring.variables:
            self.error(f"unknown variable {name!r}", start)
        k = 1
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            m = _INT.match(self.text, self.pos)
            if not m:
                self.error("expected a nonnegative integer exponent")
            k = int(m.group())
            self.pos = m.end()
        exps[self.ring.index(name)] += k


def parse_ideal(text: str, ring: Ring) -> MonomialIdeal:
    return _Parser(text, ring).ideal()


def parse_monomial(text: str, ring: Ring) -> tuple[int, ...]:
    p = _Parser(text, ring)
    mono = p.monomial()
    if p.peek():
        p.error(f"unexpected character {p.peek()!r}")
    return mono


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"malformed rational {text!r}", 1, 1)
    if m.group(2) is not None and int(m.group(2)) == 0:
        raise ParseError(f"malformed rational {text!r}: zero denominator", 1, text.index("/") + 2)
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
