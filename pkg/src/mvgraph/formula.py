"""Formulas of the multi-modal non-distributive language, with parser and printer.

Concrete syntax::

    formula  := disj
    disj     := conj ("|" conj)*
    conj     := unary ("&" unary)*
    unary    := "[]" label? unary | "<>" label? unary | atom
    atom     := "bot" | "top" | IDENT | "(" formula ")"
    label    := "_" IDENT

Both binary connectives associate to the left; ``&`` binds tighter than ``|``.
A sequent is ``formula "|-" formula`` (``⊢`` is accepted too).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

__all__ = [
    "And",
    "Atom",
    "Bottom",
    "Box",
    "Dia",
    "Formula",
    "Or",
    "ParseError",
    "Top",
    "atoms",
    "labels",
    "parse",
    "parse_sequent",
    "print_formula",
    "subformulas",
]


@dataclass(frozen=True)
class Bottom:
    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Top:
    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Box:
    label: str
    sub: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Dia:
    label: str
    sub: "Formula"

    def __str__(self) -> str:
        return print_formula(self)


Formula = Union[Bottom, Top, Atom, And, Or, Box, Dia]

KEYWORDS = {"bot", "top"}
_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_']*")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected: frozenset[str], text: str = ""):
        self.position = position
        self.expected = frozenset(expected)
        self.text = text
        exp = ", ".join(sorted(self.expected))
        super().__init__(f"{message} at position {position} (expected one of: {exp})")

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^"


@dataclass(frozen=True)
class Token:
    kind: str  # ident, bot, top, box, dia, and, or, lparen, rparen, turnstile, end
    text: str
    pos: int
    label: str | None = None


_ATOM_START = frozenset({"identifier", "bot", "top", "[]", "<>", "("})


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if text.startswith("[]", i) or text.startswith("<>", i):
            kind = "box" if c == "[" else "dia"
            start = i
            i += 2
            label = ""
            if i < n and text[i] == "_":
                m = _IDENT.match(text, i + 1)
                if m is None:
                    raise ParseError("dangling modality label", i + 1, frozenset({"label"}), text)
                label = m.group()
                i = m.end()
            tokens.append(Token(kind, text[start:i], start, label))
            continue
        if text.startswith("|-", i):
            tokens.append(Token("turnstile", "|-", i))
            i += 2
            continue
        if c == "⊢":
            tokens.append(Token("turnstile", c, i))
            i += 1
            continue
        simple = {"&": "and", "|": "or", "(": "lparen", ")": "rparen"}
        if c in simple:
            tokens.append(Token(simple[c], c, i))
            i += 1
            continue
        m = _IDENT.match(text, i)
        if m:
            word = m.group()
            tokens.append(Token(word if word in KEYWORDS else "ident", word, i))
            i = m.end()
            continue
        raise ParseError(f"unexpected character {c!r}", i, _ATOM_START, text)
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected, what=None):
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(what or f"unexpected {found}", tok.pos, frozenset(expected), self.text)

    def disj(self) -> Formula:
        left = self.conj()
        while self.tok.kind == "or":
            self.i += 1
            left = Or(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        while self.tok.kind == "and":
            self.i += 1
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.tok
        if tok.kind in ("box", "dia"):
            self.i += 1
            sub = self.unary()
            return Box(tok.label, sub) if tok.kind == "box" else Dia(tok.label, sub)
        if tok.kind == "bot":
            self.i += 1
            return Bottom()
        if tok.kind == "top":
            self.i += 1
            return Top()
        if tok.kind == "ident":
            self.i += 1
            return Atom(tok.text)
        if tok.kind == "lparen":
            self.i += 1
            inner = self.disj()
            if self.tok.kind != "rparen":
                self.fail({")", "&", "|"})
            self.i += 1
            return inner
        self.fail(_ATOM_START)

    def expect_end(self, also=()):
        if self.tok.kind != "end":
            self.fail({"end of input", "&", "|", *also})


def parse(text: str) -> Formula:
    """Parse a formula; raises :class:`ParseError` with position and expected tokens."""
    p = _Parser(text)
    phi = p.disj()
    p.expect_end()
    return phi


def parse_sequent(text: str) -> tuple[Formula, Formula]:
    """Parse ``phi |- psi`` (or ``phi ⊢ psi``)."""
    p = _Parser(text)
    lhs = p.disj()
    if p.tok.kind != "turnstile":
        p.fail({"|-", "&", "|"})
    p.i += 1
    rhs = p.disj()
    p.expect_end()
    return lhs, rhs


_PREC = {Or: 1, And: 2}


def print_formula(phi: Formula) -> str:
    """Render with the fewest parentheses that parse back to the same tree."""

    def go(f, ctx: int, right: bool) -> str:
        if isinstance(f, Bottom):
            return "bot"
        if isinstance(f, Top):
            return "top"
        if isinstance(f, Atom):
            return f.name
        if isinstance(f, (Box, Dia)):
            op = "[]" if isinstance(f, Box) else "<>"
            if f.label:
                op += "_" + f.label
            return f"{op} {go(f.sub, 3, False)}"
        prec = _PREC[type(f)]
        sym = " | " if isinstance(f, Or) else " & "
        body = go(f.left, prec, False) + sym + go(f.right, prec, True)
        # left-associative: a right operand of equal precedence needs parentheses
        if prec < ctx or (prec == ctx and right):
            return f"({body})"
        return body

    return go(phi, 0, False)


def subformulas(phi: Formula) -> Iterator[Formula]:
    """Post-order traversal (children before parents)."""
    if isinstance(phi, (And, Or)):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)
    elif isinstance(phi, (Box, Dia)):
        yield from subformulas(phi.sub)
    yield phi


def atoms(*phis: Formula) -> list[str]:
    seen: dict[str, None] = {}
    for phi in phis:
        for f in subformulas(phi):
            if isinstance(f, Atom):
                seen.setdefault(f.name)
    return list(seen)


def labels(*phis: Formula) -> list[str]:
    seen: dict[str, None] = {}
    for phi in phis:
        for f in subformulas(phi):
            if isinstance(f, (Box, Dia)):
                seen.setdefault(f.label)
    return list(seen)
