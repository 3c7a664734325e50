"""
core.oracle.words
-----------------

Bracket words over named generators and their s-expression syntax::

    x                 a generator
    (x y)             the bracket [x, y]
    (x (x y))         [x, [x, y]]
    (+ t1 t2 ...)     sum
    (- t1 t2 ...)     t1 - t2 - ...
    (- t)             -t
    (* -3/2 t)        rational multiple

Generator names match ``[A-Za-z_][A-Za-z0-9_']*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Collection, List, Mapping, Optional, Tuple, Union

from core.algebra.superspace import Parity
from core.errors import InterchangeError, NotGradedError

NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")
_TOKEN = re.compile(r"\(|\)|[^\s()]+")


@dataclass(frozen=True)
class Generator:
    name: str


@dataclass(frozen=True)
class Bracket:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Combination:
    terms: Tuple[Tuple[Fraction, "Term"], ...]


Term = Union[Generator, Bracket, Combination]


class _Parser:
    def __init__(self, text: str, names: Optional[Collection[str]], line: Optional[int], column: int):
        self.tokens: List[Tuple[str, int]] = [(m.group(), m.start()) for m in _TOKEN.finditer(text)]
        self.names = names
        self.line = line
        self.column = column
        self.i = 0

    def error(self, message: str, pos: int) -> InterchangeError:
        return InterchangeError(message, line=self.line, column=self.column + pos)

    def next(self, end: int) -> Tuple[str, int]:
        if self.i >= len(self.tokens):
            raise self.error("unexpected end of term", end)
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_close(self, end: int) -> None:
        tok, pos = self.next(end)
        if tok != ")":
            raise self.error(f"expected ')' but found {tok!r}", pos)

    def parse(self, end: int) -> Term:
        if not self.tokens:
            raise self.error("empty term", 0)
        term = self.term(end)
        if self.i < len(self.tokens):
            raise self.error("unexpected trailing input", self.tokens[self.i][1])
        return term

    def term(self, end: int) -> Term:
        tok, pos = self.next(end)
        if tok == ")":
            raise self.error("unexpected ')'", pos)
        if tok != "(":
            return self.atom(tok, pos)
        if self.i < len(self.tokens) and self.tokens[self.i][0] in ("+", "-", "*"):
            op, _ = self.next(end)
            if op == "*":
                ctok, cpos = self.next(end)
                try:
                    coeff = Fraction(ctok)
                except (ValueError, ZeroDivisionError):
                    raise self.error(f"bad coefficient {ctok!r}", cpos) from None
                inner = self.term(end)
                self.expect_close(end)
                return Combination(((coeff, inner),))
            args = []
            while self.i < len(self.tokens) and self.tokens[self.i][0] != ")":
                args.append(self.term(end))
            self.expect_close(end)
            if not args:
                raise self.error(f"'{op}' needs at least one argument", pos)
            if op == "+":
                return Combination(tuple((Fraction(1), a) for a in args))
            if len(args) == 1:
                return Combination(((Fraction(-1), args[0]),))
            return Combination(((Fraction(1), args[0]),) + tuple((Fraction(-1), a) for a in args[1:]))
        left = self.term(end)
        right = self.term(end)
        self.expect_close(end)
        return Bracket(left, right)

    def atom(self, tok: str, pos: int) -> Generator:
        if not NAME.match(tok):
            raise self.error(f"bad generator name {tok!r}", pos)
        if self.names is not None and tok not in self.names:
            raise self.error(f"unknown generator {tok!r}", pos)
        return Generator(tok)


def parse_term(
    text: str, names: Optional[Collection[str]] = None, line: Optional[int] = None, column: int = 1
) -> Term:
    """Parse one s-expression term; ``line``/``column`` locate ``text`` inside a larger file."""
    return _Parser(text, names, line, column).parse(len(text))


def to_sexpr(term: Term) -> str:
    if isinstance(term, Generator):
        return term.name
    if isinstance(term, Bracket):
        return f"({to_sexpr(term.left)} {to_sexpr(term.right)})"
    parts = []
    for c, t in term.terms:
        parts.append(to_sexpr(t) if c == 1 else f"(* {c} {to_sexpr(t)})")
    return parts[0] if len(parts) == 1 else "(+ " + " ".join(parts) + ")"


def render(term: Term) -> str:
    """Bracket notation: ``[x,[x,y]] - 2*z``."""
    if isinstance(term, Generator):
        return term.name
    if isinstance(term, Bracket):
        return f"[{render(term.left)},{render(term.right)}]"
    out = ""
    for c, t in term.terms:
        body = render(t) if abs(c) == 1 else f"{abs(c)}*{render(t)}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def generators_of(term: Term) -> List[str]:
    if isinstance(term, Generator):
        return [term.name]
    if isinstance(term, Bracket):
        return generators_of(term.left) + generators_of(term.right)
    return [name for _, t in term.terms for name in generators_of(t)]


def term_parity(term: Term, parities: Mapping[str, Parity]) -> Optional[Parity]:
    """Parity of a homogeneous term; ``None`` for an empty combination."""
    if isinstance(term, Generator):
        return parities[term.name]
    if isinstance(term, Bracket):
        left, right = term_parity(term.left, parities), term_parity(term.right, parities)
        if left is None or right is None:
            return None
        return left + right
    found = {term_parity(t, parities) for c, t in term.terms if c}
    found.discard(None)
    if len(found) > 1:
        raise NotGradedError(f"term {render(term)} mixes even and odd parts")
    return found.pop() if found else None


__all__ = [
    "Generator",
    "Bracket",
    "Combination",
    "Term",
    "parse_term",
    "to_sexpr",
    "render",
    "generators_of",
    "term_parity",
    "NAME",
]
