"""Recursive-descent parser for integer polynomials in ``x``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('+' | '-') factor | power
    power  := atom ('^' INT)?
    atom   := INT | 'x' | '(' expr ')'

Implicit multiplication (``3x``, ``2(x+1)``, ``x x``) is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .poly import IntPolynomial

MAX_EXPONENT = 10**6

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|([-+*^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "x", an operator character, or "end"
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        if m.group(1) is not None:
            toks.append(_Tok("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(_Tok("x", "x", m.start(2)))
        else:
            toks.append(_Tok(m.group(3), m.group(3), m.start(3)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: _Tok | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def parse(self) -> IntPolynomial:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        result = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected token {self.tok.value!r}")
        return result

    def expr(self) -> IntPolynomial:
        acc = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> IntPolynomial:
        acc = self.factor()
        while True:
            if self.tok.kind == "*":
                self.advance()
                acc = acc * self.factor()
            elif self.tok.kind in ("int", "x", "("):
                raise self.error("implicit multiplication is not allowed; use '*'")
            else:
                return acc

    def factor(self) -> IntPolynomial:
        if self.tok.kind == "-":
            self.advance()
            return -self.factor()
        if self.tok.kind == "+":
            self.advance()
            return self.factor()
        return self.power()

    def power(self) -> IntPolynomial:
        base = self.atom()
        if self.tok.kind != "^":
            return base
        self.advance()
        tok = self.tok
        if tok.kind != "int":
            raise self.error("exponent must be a non-negative integer literal")
        self.advance()
        e = int(tok.value)
        if e > MAX_EXPONENT:
            raise self.error(f"exponent {e} exceeds limit {MAX_EXPONENT}", tok)
        if self.tok.kind == "^":
            raise self.error("chained exponents are not allowed; use parentheses")
        return base**e

    def atom(self) -> IntPolynomial:
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            return IntPolynomial.constant(int(tok.value))
        if tok.kind == "x":
            self.advance()
            return IntPolynomial.monomial(1)
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            if self.tok.kind != ")":
                raise self.error("expected ')'")
            self.advance()
            return inner
        if tok.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected token {tok.value!r}")


def parse_poly(text: str) -> IntPolynomial:
    """Parse and expand a polynomial such as ``"(x+1)^6 + 1"``."""
    return _Parser(text).parse()
