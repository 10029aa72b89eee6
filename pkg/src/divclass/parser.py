"""Recursive-descent parser for polynomial expressions.

Grammar (explicit multiplication only, ^ binds tightest, then unary minus,
then *, then + and -):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-'* power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Errors carry the character offset of the offending token.
"""

from __future__ import annotations

import re

from .errors import NegativeExponent, PolynomialSyntaxError, UnknownVariable
from .wpoly import WeightedRing, WPolynomial

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise PolynomialSyntaxError(f"unexpected character {text[at]!r}", at)
        if m.lastgroup is None:
            break
        tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: WeightedRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, symbol: str):
        kind, value, pos = self.peek()
        if kind != "op" or value != symbol:
            raise PolynomialSyntaxError(f"expected {symbol!r}", pos)
        return self.advance()

    def parse(self) -> WPolynomial:
        result = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise PolynomialSyntaxError(f"unexpected {value!r}", pos)
        return result

    def expr(self) -> WPolynomial:
        result = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                result = result + rhs if value == "+" else result - rhs
            else:
                return result

    def term(self) -> WPolynomial:
        result = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                result = result * self.factor()
            else:
                return result

    def factor(self) -> WPolynomial:
        negate = False
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "-":
                self.advance()
                negate = not negate
            else:
                break
        result = self.power()
        return -result if negate else result

    def power(self) -> WPolynomial:
        base = self.atom()
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, pos = self.peek()
            if kind == "op" and value == "-":
                raise NegativeExponent("negative exponents are not allowed", pos)
            if kind != "int":
                raise PolynomialSyntaxError("expected an integer exponent", pos)
            self.advance()
            return base ** int(value)
        return base

    def atom(self) -> WPolynomial:
        kind, value, pos = self.advance()
        if kind == "int":
            return WPolynomial.constant(self.ring, int(value))
        if kind == "name":
            try:
                idx = self.ring.variables.index(value)
            except ValueError:
                raise UnknownVariable(
                    f"unknown variable {value!r}; ring has {self.ring.variables}", pos
                ) from None
            return WPolynomial.variable(self.ring, idx)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolynomialSyntaxError(
            f"expected a number, variable or parenthesized expression, got {value!r}"
            if value
            else "unexpected end of input",
            pos,
        )


def parse_polynomial(text: str, ring: WeightedRing) -> WPolynomial:
    """Parse an expression string into an exact sparse polynomial."""
    return _Parser(text, ring).parse()
