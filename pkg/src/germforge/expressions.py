"""Recursive-descent parser for series expressions.

Grammar (whitespace free between tokens):

    expr     := term (('+' | '-') term)*
    term     := signed (('*' | '/') signed)*
    signed   := ('-' | '+')* power
    power    := atom ['^' exponent]
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom     := INT | 'z' | 'i' | 'zeta' '(' INT ')' | '(' expr ')'

Everything evaluates to a truncated series; rationals appear as quotients
of integers, `i` abbreviates zeta(4), and division is legal when the
denominator is a unit or shares a cancelling power of z with the numerator.
A trailing `+ O(z^M)` fixes the truncation order to M-1, which is what the
text renderer emits, so render -> parse is the identity.
"""

from __future__ import annotations

import re

from .errors import (
    NonUnitConstantTerm,
    NonUnitDivision,
    ParseError,
)
from .germs import Germ
from .powerseries import TruncatedSeries, exact_divide
from .scalar import primitive_root

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^()]))")
_ORDER_TAIL_RE = re.compile(r"\s*\+\s*O\(\s*z\s*\^\s*(\d+)\s*\)\s*$")

DEFAULT_TRUNC = 24


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == pos:
                if text[pos:].strip():
                    raise ParseError(f"unexpected character {text[pos]!r}", pos)
                break
            if m.group(1):
                self.items.append(("int", m.group(1), m.start(1)))
            elif m.group(2):
                self.items.append(("name", m.group(2), m.start(2)))
            else:
                self.items.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.items.append(("end", "", len(text)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.items[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.items[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, value: str | None = None) -> tuple[str, str, int]:
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok


class _Parser:
    def __init__(self, text: str, trunc: int):
        self.toks = _Tokens(text)
        self.trunc = trunc

    def parse(self) -> TruncatedSeries:
        value = self.expr()
        tok = self.toks.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self) -> TruncatedSeries:
        value = self.term()
        while True:
            tok = self.toks.peek()
            if tok[:2] == ("op", "+"):
                self.toks.next()
                value = value + self.term()
            elif tok[:2] == ("op", "-"):
                self.toks.next()
                value = value - self.term()
            else:
                return value

    def term(self) -> TruncatedSeries:
        value = self.signed()
        while True:
            tok = self.toks.peek()
            if tok[:2] == ("op", "*"):
                self.toks.next()
                value = value * self.signed()
            elif tok[:2] == ("op", "/"):
                self.toks.next()
                rhs = self.signed()
                value = self._divide(value, rhs, tok[2])
            else:
                return value

    def signed(self) -> TruncatedSeries:
        negate = False
        while self.toks.peek()[:2] in (("op", "-"), ("op", "+")):
            if self.toks.next()[1] == "-":
                negate = not negate
        value = self.power()
        return -value if negate else value

    def power(self) -> TruncatedSeries:
        value = self.atom()
        if self.toks.peek()[:2] == ("op", "^"):
            pos = self.toks.next()[2]
            e = self._exponent()
            if e >= 0:
                return value.pow_int(e)
            return self._reciprocal(value, pos).pow_int(-e)
        return value

    def _exponent(self) -> int:
        tok = self.toks.peek()
        parens = tok[:2] == ("op", "(")
        if parens:
            self.toks.next()
        sign = 1
        if self.toks.peek()[:2] == ("op", "-"):
            self.toks.next()
            sign = -1
        num = self.toks.expect("int")
        if parens:
            self.toks.expect("op", ")")
        return sign * int(num[1])

    def atom(self) -> TruncatedSeries:
        kind, value, pos = self.toks.next()
        if kind == "int":
            return TruncatedSeries.constant(int(value), self.trunc)
        if kind == "name":
            if value == "z":
                return TruncatedSeries.identity(self.trunc)
            if value == "i":
                return TruncatedSeries.constant(primitive_root(4, 1), self.trunc)
            if value == "zeta":
                self.toks.expect("op", "(")
                n = int(self.toks.expect("int")[1])
                self.toks.expect("op", ")")
                if n < 1:
                    raise ParseError("zeta needs a positive order", pos)
                return TruncatedSeries.constant(primitive_root(n, 1), self.trunc)
            raise ParseError(f"unknown name {value!r}", pos)
        if (kind, value) == ("op", "("):
            inner = self.expr()
            self.toks.expect("op", ")")
            return inner
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)

    def _divide(self, num: TruncatedSeries, den: TruncatedSeries, pos: int) -> TruncatedSeries:
        try:
            return exact_divide(num, den)
        except NonUnitDivision as exc:
            raise NonUnitDivision(f"{exc} (operator at position {pos})") from None

    def _reciprocal(self, s: TruncatedSeries, pos: int) -> TruncatedSeries:
        try:
            return s.reciprocal()
        except NonUnitConstantTerm:
            raise NonUnitDivision(
                f"negative power of a series with no constant term (at position {pos})"
            ) from None


def parse_series(text: str, trunc: int = DEFAULT_TRUNC) -> TruncatedSeries:
    """Evaluate a series expression at the requested truncation order.

    A trailing `+ O(z^M)` overrides the truncation to M-1 so that rendered
    series parse back exactly.
    """
    m = _ORDER_TAIL_RE.search(text)
    if m:
        order = int(m.group(1))
        if order < 1:
            raise ParseError("O(z^M) needs M >= 1", m.start(1))
        trunc = order - 1
        text = text[: m.start()]
    if trunc < 0:
        raise ValueError("truncation order must be non-negative")
    return _Parser(text, trunc).parse()


def parse_germ(text: str, trunc: int = DEFAULT_TRUNC) -> Germ:
    """Parse and validate an invertible germ (f(0) = 0, f'(0) != 0)."""
    return Germ(parse_series(text, trunc))
