"""Parser for the small poset expression language.

Grammar (whitespace is ignored)::

    expr    := atom | "otimes(" operand "," INT "," operand ")"
                    | "oplus(" operand "," INT ")"
    operand := expr | "0"
    atom    := "P" INT | "V" INT | "A" INT | "AC" INT | "D" INT
             | "N" | "B" | "B+" | "B++" | "K(" INT ("," INT)* ")"

``0`` (the empty poset) is only accepted as an operand of ``otimes``/``oplus``.
"""

from __future__ import annotations

import re

from . import posets
from .posets import Poset

__all__ = ["PosetSyntaxError", "parse_poset", "render"]


class PosetSyntaxError(ValueError):
    """Raised for malformed expressions; ``pos`` is the offset in the stripped text."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_INT = re.compile(r"\d+")
_PARAM_ATOMS = {"AC": posets.antichain, "P": posets.chain, "V": posets.vee,
                "A": posets.wedge, "D": posets.diamond}


class _Parser:
    def __init__(self, text: str):
        self.text = "".join(text.split())
        self.pos = 0

    def error(self, message: str) -> PosetSyntaxError:
        return PosetSyntaxError(message, self.text, self.pos)

    def peek(self, literal: str) -> bool:
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str) -> None:
        if not self.peek(literal):
            raise self.error(f"expected {literal!r}")
        self.pos += len(literal)

    def integer(self) -> int:
        match = _INT.match(self.text, self.pos)
        if not match:
            raise self.error("expected an integer")
        self.pos = match.end()
        return int(match.group())

    def positive(self) -> int:
        start = self.pos
        value = self.integer()
        if value < 1:
            self.pos = start
            raise self.error("parameter must be positive")
        return value

    def parse(self) -> Poset:
        if not self.text:
            raise self.error("empty expression")
        result = self.expr()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")
        return result

    def operand(self) -> Poset:
        if self.peek("0"):
            self.pos += 1
            return posets.empty()
        return self.expr()

    def expr(self) -> Poset:
        if self.peek("otimes("):
            self.pos += len("otimes(")
            left = self.operand()
            self.expect(",")
            r = self.positive()
            self.expect(",")
            right = self.operand()
            self.expect(")")
            return posets.otimes(left, r, right)
        if self.peek("oplus("):
            self.pos += len("oplus(")
            base = self.operand()
            self.expect(",")
            r = self.positive()
            self.expect(")")
            return posets.oplus(base, r)
        if self.peek("K("):
            self.pos += 2
            parts = [self.positive()]
            while self.peek(","):
                self.pos += 1
                parts.append(self.positive())
            self.expect(")")
            return posets.multilevel(*parts)
        for prefix in ("B++", "B+", "B", "N"):
            if self.peek(prefix):
                self.pos += len(prefix)
                return posets.named(prefix)
        for prefix, ctor in _PARAM_ATOMS.items():
            if self.peek(prefix):
                self.pos += len(prefix)
                return ctor(self.positive())
        if self.peek("0"):
            raise self.error("the empty poset is only allowed as an operand")
        raise self.error("unknown poset name")


def parse_poset(spec: str) -> Poset:
    """Parse a poset expression such as ``"K(1,2,1)"`` or ``"otimes(P1,2,N)"``."""
    return _Parser(spec).parse()


def render(p: Poset) -> str:
    return p.render()
