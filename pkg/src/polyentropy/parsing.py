"""Textual form of polynomials: sums of natural-coefficient monomials in y.

Grammar, with whitespace between tokens ignored:

    expr := term ("+" term)*
    term := nat | [nat] "y" ["^" nat]
    nat  := digit+

A coefficient repeats its monomial, so "4y" contributes four exponent-1
positions and "3" contributes three constant positions.  ``parse_poly``
inverts the canonical rendering produced by ``str(FinPoly)``.
"""
from __future__ import annotations

from .finpoly import FinPoly


class ParseError(ValueError):
    """Syntax error, carrying the byte offset where parsing stopped."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, len(self.text[: self.pos].encode("utf-8")))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def nat(self) -> int:
        start = self.pos
        # ASCII only; int() would accept other Unicode decimals
        while self.peek().isascii() and self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected digits")
        return int(self.text[start : self.pos])

    def term(self) -> list[int]:
        coefficient = None
        if self.peek().isascii() and self.peek().isdigit():
            coefficient = self.nat()
            self.skip_ws()
        if self.peek() == "y":
            self.pos += 1
            self.skip_ws()
            exponent = 1
            if self.peek() == "^":
                self.pos += 1
                self.skip_ws()
                exponent = self.nat()
            return [exponent] * (1 if coefficient is None else coefficient)
        if coefficient is None:
            raise self.error("expected a term: a number or 'y'")
        return [0] * coefficient

    def expr(self) -> FinPoly:
        self.skip_ws()
        exps = self.term()
        self.skip_ws()
        while self.peek() == "+":
            self.pos += 1
            self.skip_ws()
            exps.extend(self.term())
            self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("expected '+' or end of input")
        return FinPoly(exps)


def parse_poly(text: str) -> FinPoly:
    """Parse the textual form; raises ParseError with a byte offset on bad syntax."""
    return _Parser(text).expr()
