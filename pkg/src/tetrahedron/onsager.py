"""The Onsager algebra on the basis A_m (m in Z), G_l (l >= 1).

    [A_l, A_m] = 2 G_{l-m},   [G_l, A_m] = A_{m+l} - A_{m-l},   [G_l, G_m] = 0

with the conventions G_0 = 0 and G_{-k} = -G_k, which make the first rule
valid for every pair (l, m).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .ring import _format_terms, format_rational


class OnsagerElem:
    """Finitely supported coordinates on {A_m} and {G_l}.  Immutable."""

    __slots__ = ("_a", "_g")

    def __init__(self, a_coeffs: Mapping[int, object] = None, g_coeffs: Mapping[int, object] = None):
        a = {}
        for m, c in (a_coeffs or {}).items():
            c = Fraction(c)
            if c:
                a[int(m)] = a.get(int(m), 0) + c
        g = {}
        for l, c in (g_coeffs or {}).items():
            l = int(l)
            c = Fraction(c)
            if l == 0 or not c:
                continue
            if l < 0:
                l, c = -l, -c
            g[l] = g.get(l, 0) + c
        self._a = tuple(sorted((m, c) for m, c in a.items() if c))
        self._g = tuple(sorted((l, c) for l, c in g.items() if c))

    @property
    def a_coeffs(self) -> dict:
        return dict(self._a)

    @property
    def g_coeffs(self) -> dict:
        return dict(self._g)

    def is_zero(self) -> bool:
        return not self._a and not self._g

    def __eq__(self, other):
        if isinstance(other, OnsagerElem):
            return self._a == other._a and self._g == other._g
        return NotImplemented

    def __hash__(self):
        return hash((self._a, self._g))

    def __add__(self, other: "OnsagerElem") -> "OnsagerElem":
        a = self.a_coeffs
        for m, c in other._a:
            a[m] = a.get(m, 0) + c
        g = self.g_coeffs
        for l, c in other._g:
            g[l] = g.get(l, 0) + c
        return OnsagerElem(a, g)

    def __neg__(self) -> "OnsagerElem":
        return OnsagerElem({m: -c for m, c in self._a}, {l: -c for l, c in self._g})

    def __sub__(self, other: "OnsagerElem") -> "OnsagerElem":
        return self + (-other)

    def __mul__(self, c) -> "OnsagerElem":
        c = Fraction(c)
        return OnsagerElem({m: c * x for m, x in self._a}, {l: c * x for l, x in self._g})

    __rmul__ = __mul__

    def __repr__(self):
        return f"OnsagerElem({self.to_text()!r})"

    def to_text(self) -> str:
        return format_onsager(self)

    def __str__(self):
        return format_onsager(self)


ONSAGER_ZERO = OnsagerElem()


def A(m: int) -> OnsagerElem:
    return OnsagerElem({m: 1})


def G(l: int) -> OnsagerElem:
    """G_l, with G_0 = 0 and G_{-l} = -G_l."""
    return OnsagerElem(None, {l: 1})


def onsager_bracket(u: OnsagerElem, v: OnsagerElem) -> OnsagerElem:
    a_out: dict = {}
    g_out: dict = {}

    def add_a(m, c):
        a_out[m] = a_out.get(m, 0) + c

    def add_g(l, c):
        # G_0 = 0, G_{-k} = -G_k
        if l == 0:
            return
        if l < 0:
            l, c = -l, -c
        g_out[l] = g_out.get(l, 0) + c

    for l, c in u._a:
        for m, d in v._a:
            if l != m:
                add_g(l - m, 2 * c * d)
        for k, d in v._g:
            # [A_l, G_k] = -(A_{l+k} - A_{l-k})
            add_a(l + k, -c * d)
            add_a(l - k, c * d)
    for k, c in u._g:
        for m, d in v._a:
            add_a(m + k, c * d)
            add_a(m - k, -c * d)
    return OnsagerElem(a_out, g_out)


AUTOMORPHISMS = ("down", "Down", "star")


def onsager_auto(u: OnsagerElem, which: str) -> OnsagerElem:
    """The automorphisms of O fixing the pair {A_0, A_1} up to sign and swap.

    ``down``: A_m -> (-1)^(m-1) A_m, G_l -> (-1)^l G_l
    ``Down``: A_m -> (-1)^m A_m,     G_l -> (-1)^l G_l
    ``star``: A_m -> A_{1-m},        G_l -> -G_l
    """
    if which == "down":
        return OnsagerElem({m: c * (-1) ** ((m - 1) % 2) for m, c in u._a},
                           {l: c * (-1) ** (l % 2) for l, c in u._g})
    if which == "Down":
        return OnsagerElem({m: c * (-1) ** (m % 2) for m, c in u._a},
                           {l: c * (-1) ** (l % 2) for l, c in u._g})
    if which == "star":
        return OnsagerElem({1 - m: c for m, c in u._a}, {l: -c for l, c in u._g})
    raise ValueError(f"unknown Onsager automorphism {which!r}; expected one of {AUTOMORPHISMS}")


def dolan_grady_holds(a, b, bracket) -> bool:
    """[a,[a,[a,b]]] = 4[a,b] and [b,[b,[b,a]]] = 4[b,a] under ``bracket``."""
    ab = bracket(a, b)
    ba = bracket(b, a)
    lhs1 = bracket(a, bracket(a, ab))
    lhs2 = bracket(b, bracket(b, ba))
    return lhs1 == 4 * ab and lhs2 == 4 * ba


def check_dolan_grady(a: OnsagerElem, b: OnsagerElem) -> bool:
    return dolan_grady_holds(a, b, onsager_bracket)


# -- text -------------------------------------------------------------------


def _index(i: int) -> str:
    return str(i) if 0 <= i <= 9 else "{" + str(i) + "}"


def format_onsager(u: OnsagerElem) -> str:
    """A-terms by ascending index, then G-terms; e.g. ``A_{-1} + A_0 - 2*G_3``."""
    pairs = [(format_rational(c), f"A_{_index(m)}") for m, c in u._a]
    pairs += [(format_rational(c), f"G_{_index(l)}") for l, c in u._g]
    return _format_terms(pairs)


_ONS_TERM = re.compile(
    r"\s*(?P<sign>[-+])?\s*(?:(?P<num>\d+(?:/\d+)?)\s*(?:\*\s*)?)?"
    r"(?P<sym>[AG])_(?:\{\s*(?P<braced>-?\d+)\s*\}|(?P<bare>-?\d+))\s*"
)


def parse_onsager(text: str) -> OnsagerElem:
    text = text.strip()
    if text in ("", "0"):
        return ONSAGER_ZERO
    pos = 0
    a: dict = {}
    g: dict = {}
    first = True
    while pos < len(text):
        m = _ONS_TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad Onsager term at position {pos}: {text!r}")
        if not first and not m["sign"]:
            raise ValueError(f"expected + or - at position {pos}: {text!r}")
        first = False
        c = Fraction(m["num"]) if m["num"] else Fraction(1)
        if m["sign"] == "-":
            c = -c
        idx = int(m["braced"] if m["braced"] is not None else m["bare"])
        if m["sym"] == "A":
            a[idx] = a.get(idx, 0) + c
        else:
            if idx < 1:
                raise ValueError(f"G index must be >= 1: {text!r}")
            g[idx] = g.get(idx, 0) + c
        pos = m.end()
    return OnsagerElem(a, g)


def onsager_to_json(u: OnsagerElem) -> dict:
    return {
        "A": {str(m): format_rational(c) for m, c in u._a},
        "G": {str(l): format_rational(c) for l, c in u._g},
    }


def onsager_from_json(obj) -> OnsagerElem:
    return OnsagerElem({int(m): Fraction(c) for m, c in obj.get("A", {}).items()},
                       {int(l): Fraction(c) for l, c in obj.get("G", {}).items()})
