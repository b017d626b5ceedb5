"""Expression language for bracket words in the generators X_ij.

    expr      := term { ("+" | "-") term }      (a leading "-" is allowed)
    term      := [ rational "*" ] factor
    factor    := generator | "[" expr "," expr "]" | autoname "(" expr ")" | "(" expr ")"
    generator := "X" digit digit                 (distinct digits from 0123)
    autoname  := "prime" | "omega" | "d" | "down" | "Down" | "star"
               | "perm" "(" digit digit digit digit ")"
    rational  := integer [ "/" positive-integer ]

``perm(abcd)`` lists the images of 0, 1, 2, 3.  Nested automorphisms act
inner first: ``star(prime(X12))`` applies prime, then star.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .tetra import (
    IDENTITY,
    NAMED_PERMS,
    Permutation,
    TetraElem,
    generator_image,
    resolve_perm,
    tetra_bracket,
)


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"at position {pos}: {message}")
        self.pos = pos
        self.message = message


@dataclass(frozen=True)
class Generator:
    i: int
    j: int
    span: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Bracket:
    left: "Node"
    right: "Node"
    span: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (Fraction, Node)
    span: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.terms:
            raise ValueError("Sum needs at least one term")
        object.__setattr__(self, "terms", tuple((Fraction(c), n) for c, n in self.terms))


@dataclass(frozen=True)
class Auto:
    name: Union[str, Permutation]
    arg: "Node"
    span: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if isinstance(self.name, str) and self.name not in NAMED_PERMS:
            raise ValueError(f"unknown automorphism {self.name!r}")


Node = Union[Generator, Bracket, Sum, Auto]

# -- tokenizer --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<gen>X\d*)|(?P<name>[A-Za-z]+)|(?P<int>\d+)|(?P<sym>[-+*/,()\[\]]))")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.k = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.k]

    def advance(self) -> _Tok:
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.cur
        if tok.text != text or tok.kind == "end":
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"expected {text!r}, found {found}", tok.pos)
        return self.advance()

    def expr(self) -> Node:
        start = self.cur.pos
        terms = []
        bare = True
        sign = 1
        if self.cur.text == "-" and self.cur.kind == "sym":
            self.advance()
            sign, bare = -1, False
        while True:
            coef, node, explicit = self.term()
            bare = bare and not explicit
            terms.append((sign * coef, node))
            if self.cur.kind == "sym" and self.cur.text in "+-":
                sign = 1 if self.advance().text == "+" else -1
                continue
            break
        if bare and len(terms) == 1:
            return terms[0][1]
        return Sum(tuple(terms), span=(start, self.cur.pos))

    def term(self):
        if self.cur.kind == "int":
            coef = self.rational()
            self.expect("*")
            return coef, self.factor(), True
        return Fraction(1), self.factor(), False

    def rational(self) -> Fraction:
        num = int(self.advance().text)
        if self.cur.text == "/":
            self.advance()
            tok = self.cur
            if tok.kind != "int":
                raise ParseError("expected a positive integer denominator", tok.pos)
            self.advance()
            if int(tok.text) == 0:
                raise ParseError("denominator must be positive", tok.pos)
            return Fraction(num, int(tok.text))
        return Fraction(num)

    def factor(self) -> Node:
        tok = self.cur
        if tok.kind == "gen":
            self.advance()
            digits = tok.text[1:]
            if len(digits) != 2 or not set(digits) <= set("0123"):
                raise ParseError(f"invalid generator {tok.text!r}: expected X followed by two digits from 0123", tok.pos)
            i, j = int(digits[0]), int(digits[1])
            if i == j:
                raise ParseError(f"invalid generator {tok.text!r}: generator digits must differ", tok.pos)
            return Generator(i, j, span=(tok.pos, tok.pos + 3))
        if tok.text == "[":
            self.advance()
            left = self.expr()
            self.expect(",")
            right = self.expr()
            end = self.expect("]")
            return Bracket(left, right, span=(tok.pos, end.pos + 1))
        if tok.text == "(" and tok.kind == "sym":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "name":
            self.advance()
            if tok.text == "perm":
                name = self.perm_literal()
            elif tok.text in NAMED_PERMS:
                name = tok.text
            else:
                raise ParseError(f"unknown automorphism {tok.text!r}", tok.pos)
            self.expect("(")
            arg = self.expr()
            end = self.expect(")")
            return Auto(name, arg, span=(tok.pos, end.pos + 1))
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"expected a generator, '[', '(' or an automorphism, found {found}", tok.pos)

    def perm_literal(self) -> Permutation:
        self.expect("(")
        tok = self.cur
        if tok.kind != "int" or len(tok.text) != 4:
            raise ParseError("perm expects four digits listing the images of 0,1,2,3", tok.pos)
        if not set(tok.text) <= set("0123") or len(set(tok.text)) != 4:
            raise ParseError(f"invalid permutation {tok.text!r}: digits must be 0,1,2,3 without repeats", tok.pos)
        self.advance()
        self.expect(")")
        return Permutation.parse(tok.text)


def parse(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    if p.cur.kind != "end":
        raise ParseError(f"unexpected {p.cur.text!r}", p.cur.pos)
    return node


# -- printing ---------------------------------------------------------------


def _fmt_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def print_expr(node: Node) -> str:
    if isinstance(node, Generator):
        return f"X{node.i}{node.j}"
    if isinstance(node, Bracket):
        return f"[{print_expr(node.left)}, {print_expr(node.right)}]"
    if isinstance(node, Auto):
        head = node.name if isinstance(node.name, str) else f"perm({node.name.to_text()})"
        return f"{head}({print_expr(node.arg)})"
    if isinstance(node, Sum):
        if len(node.terms) == 1 and node.terms[0][0] == 1:
            return f"1*{_term_body(node.terms[0][1])}"
        parts = []
        for k, (c, sub) in enumerate(node.terms):
            body = _term_body(sub)
            mag = abs(c)
            piece = body if mag == 1 else f"{_fmt_coef(mag)}*{body}"
            if k == 0:
                parts.append(f"-{piece}" if c < 0 else piece)
            else:
                parts.append(f"{'-' if c < 0 else '+'} {piece}")
        return " ".join(parts)
    raise TypeError(f"not an expression node: {node!r}")


def _term_body(node: Node) -> str:
    return f"({print_expr(node)})" if isinstance(node, Sum) else print_expr(node)


# -- evaluation -------------------------------------------------------------


def _eval(node: Node, perm: Permutation) -> TetraElem:
    if isinstance(node, Generator):
        return generator_image(perm(node.i), perm(node.j))
    if isinstance(node, Bracket):
        return tetra_bracket(_eval(node.left, perm), _eval(node.right, perm))
    if isinstance(node, Sum):
        out = TetraElem()
        for c, sub in node.terms:
            if c:
                out = out + c * _eval(sub, perm)
        return out
    if isinstance(node, Auto):
        # the inner automorphism is applied first, then the accumulated one
        return _eval(node.arg, resolve_perm(node.name).then(perm))
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Node, perm=IDENTITY) -> TetraElem:
    """Normal form of ``node``, optionally after relabelling vertices by ``perm``."""
    perm = resolve_perm(perm)
    src = node if perm.is_identity() else Auto(perm, node)
    return TetraElem(_eval(node, perm).normal_form, source=src)


def generators_in(node: Node) -> list:
    if isinstance(node, Generator):
        return [node]
    if isinstance(node, Bracket):
        return generators_in(node.left) + generators_in(node.right)
    if isinstance(node, Sum):
        return [g for _, sub in node.terms for g in generators_in(sub)]
    return generators_in(node.arg)
