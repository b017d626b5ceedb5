"""The three-point loop algebra sl2 (x) A and its subalgebra L(sl2) = sl2 (x) Q[T, 1/T].

An element is ``X (x) cx + Y (x) cy + Z (x) cz`` with ring coefficients.  This
module also carries the Chevalley and equitable generators of L(sl2), the
presentation checks for them, and the splitting of sl2 (x) A into the three
subalgebras Delta, Delta', Delta''.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .report import Report
from .ring import (
    ONE,
    ZERO,
    Polynomial,
    RingElem,
    T,
    TP,
    canonical_decompose,
    format_ring,
    parse_ring,
    ring_from_json,
    ring_invert,
    ring_prime,
    ring_to_json,
)
from .sl2 import Sl2Elem, efh_to_equitable, equitable_bracket


@dataclass(frozen=True)
class LoopElem:
    cx: RingElem = ZERO
    cy: RingElem = ZERO
    cz: RingElem = ZERO

    @classmethod
    def tensor(cls, u: Sl2Elem, a: RingElem) -> "LoopElem":
        """``u (x) a``."""
        return cls(a.scale(u.x), a.scale(u.y), a.scale(u.z))

    def __add__(self, other: "LoopElem") -> "LoopElem":
        return LoopElem(self.cx + other.cx, self.cy + other.cy, self.cz + other.cz)

    def __sub__(self, other: "LoopElem") -> "LoopElem":
        return LoopElem(self.cx - other.cx, self.cy - other.cy, self.cz - other.cz)

    def __neg__(self) -> "LoopElem":
        return LoopElem(-self.cx, -self.cy, -self.cz)

    def __mul__(self, c) -> "LoopElem":
        return LoopElem(self.cx.scale(c), self.cy.scale(c), self.cz.scale(c))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.cx.is_zero() and self.cy.is_zero() and self.cz.is_zero()

    def coords(self) -> tuple:
        return self.cx, self.cy, self.cz

    def to_text(self) -> str:
        return format_loop(self)

    def __str__(self):
        return format_loop(self)


LOOP_ZERO = LoopElem()


def loop_bracket(u: LoopElem, v: LoopElem) -> LoopElem:
    """[u (x) a, v (x) b] = [u, v] (x) ab, extended bilinearly."""
    return LoopElem(*equitable_bracket(u.cx, u.cy, u.cz, v.cx, v.cy, v.cz))


def loop_prime(u: LoopElem) -> LoopElem:
    """(u (x) a)' = u' (x) a'; order 3."""
    return LoopElem(ring_prime(u.cz), ring_prime(u.cx), ring_prime(u.cy))


def loop_omega(u: LoopElem) -> LoopElem:
    """u (x) a(T) -> u^omega (x) a(1/T): the omega automorphism of L(sl2), extended to A."""
    return LoopElem(-ring_invert(u.cy), -ring_invert(u.cx), -ring_invert(u.cz))


def in_laurent_subalgebra(u: LoopElem) -> bool:
    """True iff every coefficient lies in Q[T, 1/T], i.e. has no V-part."""
    return all(not c.v for c in u.coords())


# -- generators of L(sl2) ---------------------------------------------------

T_INV = canonical_decompose(Polynomial([1]), 1, 0)  # 1 - U

_E = efh_to_equitable(1, 0, 0)
_F = efh_to_equitable(0, 1, 0)
_H = efh_to_equitable(0, 0, 1)

CHEVALLEY_NAMES = ("e0", "e1", "f0", "f1", "h0", "h1")


def chevalley_generator(name: str) -> LoopElem:
    """e1 = e(x)1, f1 = f(x)1, h1 = h(x)1, e0 = f(x)T, f0 = e(x)T^-1, h0 = -h(x)1."""
    table = {
        "e1": (_E, ONE),
        "f1": (_F, ONE),
        "h1": (_H, ONE),
        "e0": (_F, T),
        "f0": (_E, T_INV),
        "h0": (-_H, ONE),
    }
    try:
        u, a = table[name]
    except KeyError:
        raise ValueError(f"unknown Chevalley generator {name!r}") from None
    return LoopElem.tensor(u, a)


EQUITABLE_NAMES = ("X0", "Y0", "Z0", "X1", "Y1", "Z1")

# X1, Y1, Z1 are X(x)1, Y(x)1, Z(x)1; the index-0 generators are the sigma-images
# of X30, X01, X13 (standard loop homomorphism followed by sigma).
_EQUITABLE = {
    "X1": LoopElem(ONE, ZERO, ZERO),
    "Y1": LoopElem(ZERO, ONE, ZERO),
    "Z1": LoopElem(ZERO, ZERO, ONE),
    "X0": LoopElem(ZERO, -T, ONE - T),
    "Y0": LoopElem(TP - ONE, ZERO, TP),
    "Z0": LoopElem(ZERO, ZERO, -ONE),
}


def equitable_generator(name: str) -> LoopElem:
    try:
        return _EQUITABLE[name]
    except KeyError:
        raise ValueError(f"unknown equitable generator {name!r}") from None


CARTAN = ((2, -2), (-2, 2))


def check_loop_presentation(maxdeg: int = 3) -> Report:
    """Verify the Chevalley and equitable presentations of L(sl2) on the concrete generators.

    ``maxdeg`` additionally bounds a generation check: bracket words in the
    Chevalley generators must reproduce e(x)T^n, f(x)T^n, h(x)T^n for |n| <= maxdeg.
    """
    rep = Report("presentation")
    br = loop_bracket
    e = {i: chevalley_generator(f"e{i}") for i in (0, 1)}
    f = {i: chevalley_generator(f"f{i}") for i in (0, 1)}
    h = {i: chevalley_generator(f"h{i}") for i in (0, 1)}

    rep.add("kac-moody: h0 + h1 = 0", (h[0] + h[1]).is_zero())
    for i in (0, 1):
        for j in (0, 1):
            a = CARTAN[i][j]
            rep.add(f"kac-moody: [h{i}, e{j}] = {a}*e{j}", br(h[i], e[j]) == a * e[j])
            rep.add(f"kac-moody: [h{i}, f{j}] = {-a}*f{j}", br(h[i], f[j]) == -a * f[j])
            want = h[j] if i == j else LOOP_ZERO
            rep.add(f"kac-moody: [e{i}, f{j}] = {'h' + str(j) if i == j else '0'}", br(e[i], f[j]) == want)
    for i, j in ((0, 1), (1, 0)):
        rep.add(f"kac-moody: [e{i}, [e{i}, [e{i}, e{j}]]] = 0", br(e[i], br(e[i], br(e[i], e[j]))).is_zero())
        rep.add(f"kac-moody: [f{i}, [f{i}, [f{i}, f{j}]]] = 0", br(f[i], br(f[i], br(f[i], f[j]))).is_zero())

    X = {i: equitable_generator(f"X{i}") for i in (0, 1)}
    Y = {i: equitable_generator(f"Y{i}") for i in (0, 1)}
    Z = {i: equitable_generator(f"Z{i}") for i in (0, 1)}
    for i in (0, 1):
        rep.add(f"equitable: X{i} = 2e{i} - h{i}", X[i] == 2 * e[i] - h[i])
        rep.add(f"equitable: Y{i} = -2f{i} - h{i}", Y[i] == -2 * f[i] - h[i])
        rep.add(f"equitable: Z{i} = h{i}", Z[i] == h[i])
        rep.add(f"equitable: e{i} = (X{i} + Z{i})/2", e[i] == Fraction(1, 2) * (X[i] + Z[i]))
        rep.add(f"equitable: f{i} = -(Y{i} + Z{i})/2", f[i] == Fraction(-1, 2) * (Y[i] + Z[i]))
    rep.add("equitable: Z0 + Z1 = 0", (Z[0] + Z[1]).is_zero())
    for i in (0, 1):
        rep.add(f"equitable: [X{i}, Y{i}] = 2X{i} + 2Y{i}", br(X[i], Y[i]) == 2 * X[i] + 2 * Y[i])
        rep.add(f"equitable: [Y{i}, Z{i}] = 2Y{i} + 2Z{i}", br(Y[i], Z[i]) == 2 * Y[i] + 2 * Z[i])
        rep.add(f"equitable: [Z{i}, X{i}] = 2Z{i} + 2X{i}", br(Z[i], X[i]) == 2 * Z[i] + 2 * X[i])
    for i, j in ((0, 1), (1, 0)):
        rep.add(f"equitable: [Y{i}, X{j}] = 2Y{i} + 2X{j}", br(Y[i], X[j]) == 2 * Y[i] + 2 * X[j])
        rep.add(f"equitable: [X{i}, [X{i}, [X{i}, X{j}]]] = 4[X{i}, X{j}]",
                br(X[i], br(X[i], br(X[i], X[j]))) == 4 * br(X[i], X[j]))
        rep.add(f"equitable: [Y{i}, [Y{i}, [Y{i}, Y{j}]]] = 4[Y{i}, Y{j}]",
                br(Y[i], br(Y[i], br(Y[i], Y[j]))) == 4 * br(Y[i], Y[j]))

    # generation of u (x) T^n, |n| <= maxdeg
    for sign, step in ((1, br(e[1], e[0])), (-1, br(f[0], f[1]))):  # h(x)T, h(x)T^-1
        e_cur, f_cur = e[1], f[1]
        for n in range(1, maxdeg + 1):
            # [e(x)T^(n-1), f(x)T] or [e(x)T^-1, f(x)T^-(n-1)]
            h_cur = br(e_cur, e[0]) if sign > 0 else br(f[0], f_cur)
            e_cur = Fraction(1, 2) * br(step, e_cur)
            f_cur = Fraction(-1, 2) * br(step, f_cur)
            tn = laurent_monomial(sign * n)
            for label, got, u in (("e", e_cur, _E), ("f", f_cur, _F), ("h", h_cur, _H)):
                rep.add(f"generation: {label}(x)T^{sign * n}",
                        got == LoopElem.tensor(u, tn) and in_laurent_subalgebra(got))
    return rep


def laurent_monomial(n: int) -> RingElem:
    """T^n for any integer n, as an element of A."""
    if n >= 0:
        return RingElem.from_t_poly(Polynomial.monomial(n))
    return canonical_decompose(Polynomial([1]), -n, 0)


# -- Delta decomposition ----------------------------------------------------


@dataclass(frozen=True)
class DeltaSplit:
    d: LoopElem
    dp: LoopElem
    dpp: LoopElem

    def total(self) -> LoopElem:
        return self.d + self.dp + self.dpp


def _route(a: RingElem, home: str) -> tuple:
    """Split one coordinate along K[S] + (S'-1)K[S'] + S''K[S''].

    ``home`` is the chart that receives the constant; the chart after it (in the
    cycle t -> u -> v -> t) gets its powers shifted by -1, the remaining chart
    keeps its powers unchanged.  Returns the pieces indexed by chart.
    """
    nxt = {"t": "u", "u": "v", "v": "t"}[home]
    last = {"t": "v", "u": "t", "v": "u"}[home]
    shifted_sum = sum(getattr(a, nxt), Fraction(0))
    pieces = {
        home: RingElem(a.constant + shifted_sum, **{home: getattr(a, home)}),
        nxt: RingElem(-shifted_sum, **{nxt: getattr(a, nxt)}),
        last: RingElem(0, **{last: getattr(a, last)}),
    }
    return pieces


# which summand each chart's piece belongs to, per sl2 coordinate:
# X (x) A = X(x)K[T] + X(x)(T'-1)K[T'] + X(x)T''K[T'']
# Y (x) A = Y(x)TK[T] + Y(x)K[T'] + Y(x)(T''-1)K[T'']
# Z (x) A = Z(x)(T-1)K[T] + Z(x)T'K[T'] + Z(x)K[T'']
_HOME = {"x": "t", "y": "u", "z": "v"}
_SUMMAND = {"t": 0, "u": 1, "v": 2}


def split_delta(u: LoopElem) -> DeltaSplit:
    parts = [[ZERO, ZERO, ZERO] for _ in range(3)]
    for k, (coord, a) in enumerate(zip("xyz", u.coords())):
        for chart, piece in _route(a, _HOME[coord]).items():
            parts[_SUMMAND[chart]][k] = piece
    return DeltaSplit(*(LoopElem(*p) for p in parts))


def _only(a: RingElem, chart: str) -> bool:
    return all(not getattr(a, ch) for ch in ("t", "u", "v") if ch != chart)


def _vanishes_at_one(a: RingElem, chart: str) -> bool:
    return a.constant + sum(getattr(a, chart), Fraction(0)) == 0


def delta_membership(u: LoopElem, which: int) -> bool:
    """Membership in Delta (0), Delta' (1) or Delta'' (2).

    The three conditions are the images of each other under the prime cycle.
    """
    if which not in (0, 1, 2):
        raise ValueError("which must be 0, 1 or 2")
    chart = "tuv"[which]
    # rotate so the coordinate playing the X role comes first
    coords = u.coords()
    cx, cy, cz = coords[which], coords[(1 + which) % 3], coords[(2 + which) % 3]
    if not all(_only(c, chart) for c in (cx, cy, cz)):
        return False
    # cx in K[S]; cy in S K[S]; cz in (S-1) K[S]
    return cy.constant == 0 and _vanishes_at_one(cz, chart)


def loop_coordinates(u: LoopElem) -> dict:
    """Coordinates on the basis {X, Y, Z} (x) {1, T^i, U^i, V^i}, keyed (sym, chart, power)."""
    out = {}
    for sym, a in zip("XYZ", u.coords()):
        if a.constant:
            out[sym, "1", 0] = a.constant
        for chart in ("t", "u", "v"):
            for k, c in enumerate(getattr(a, chart)):
                if c:
                    out[sym, chart, k + 1] = c
    return out


# -- text and JSON ----------------------------------------------------------


def format_loop(u: LoopElem) -> str:
    """``X[<ring>]; Y[<ring>]; Z[<ring>]`` with empty brackets for zero."""
    def block(sym, a):
        return f"{sym}[{'' if a.is_zero() else format_ring(a)}]"
    return "; ".join(block(s, a) for s, a in zip("XYZ", u.coords()))


_BLOCK = re.compile(r"\s*([XYZ])\s*\[([^\]]*)\]\s*")


def parse_loop(text: str) -> LoopElem:
    coords = {"X": ZERO, "Y": ZERO, "Z": ZERO}
    seen = set()
    for chunk in (c for c in text.split(";") if c.strip()):
        m = _BLOCK.fullmatch(chunk)
        if not m:
            raise ValueError(f"bad loop block {chunk!r}")
        sym, body = m.groups()
        if sym in seen:
            raise ValueError(f"duplicate {sym} block")
        seen.add(sym)
        coords[sym] = parse_ring(body) if body.strip() else ZERO
    return LoopElem(coords["X"], coords["Y"], coords["Z"])


def loop_to_json(u: LoopElem) -> dict:
    return {sym: ring_to_json(a) for sym, a in zip("XYZ", u.coords())}


def loop_from_json(obj) -> LoopElem:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return LoopElem(*(ring_from_json(obj.get(sym, {})) for sym in "XYZ"))
