"""Onsager subalgebras of the tetrahedron algebra and the three-way decomposition.

The standard Onsager homomorphism sends A_0 -> X12 and A_1 -> X03; write a_m,
g_l for the images of A_m, G_l.  Its primed copies come from the order-3
automorphism.  Every element of the algebra is uniquely a sum of pieces from
the three copies; ``omega_decompose`` finds the Onsager coordinates of each.

Images of basis vectors are available two ways: closed forms in shifted
Chebyshev polynomials (``table_image``) and the bracket recursion seeded by
the two generators (``BasisImages``).  The two are kept independent so one
can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chebyshev import chebyshev_shifted_poly
from .loop import (
    LOOP_ZERO,
    LoopElem,
    in_laurent_subalgebra,
    loop_bracket,
    loop_prime,
    split_delta,
)
from .onsager import ONSAGER_ZERO, OnsagerElem, format_onsager
from .ring import Polynomial, RingElem
from .tetra import IDENTITY, NAMED_PERMS, Permutation, _check_distinct, generator_loop, perm_power

_HALF = Fraction(1, 2)
_CHARTS = "tuv"

# Closed-form images, one row per (level, kind).  Each row gives the X, Y, Z
# coefficients as (sign, factor, shift), meaning sign * factor * U_{m-shift}(1-2S)
# with S = T, T', T'' for levels 0, 1, 2.  Valid for m >= 1.
ROW_KINDS = ("a", "a_neg", "g")  # a_m, a_{1-m}, g_m
TABLE_ROWS = {
    (0, "a"): ((-1, "1", 2), (1, "S", 1), (1, "S-1", 1)),
    (0, "a_neg"): ((1, "1", 1), (-1, "S", 2), (-1, "S-1", 2)),
    (0, "g"): ((-1, "1", 1), (-1, "S", 1), (1, "S-1", 1)),
    (1, "a"): ((1, "S-1", 1), (-1, "1", 2), (1, "S", 1)),
    (1, "a_neg"): ((-1, "S-1", 2), (1, "1", 1), (-1, "S", 2)),
    (1, "g"): ((1, "S-1", 1), (-1, "1", 1), (-1, "S", 1)),
    (2, "a"): ((1, "S", 1), (1, "S-1", 1), (-1, "1", 2)),
    (2, "a_neg"): ((-1, "S", 2), (-1, "S-1", 2), (1, "1", 1)),
    (2, "g"): ((-1, "S", 1), (1, "S-1", 1), (-1, "1", 1)),
}

_FACTORS = {"1": Polynomial([1]), "S": Polynomial([0, 1]), "S-1": Polynomial([-1, 1])}


def _table_entry(sign: int, factor: str, shift: int, m: int, chart: str) -> RingElem:
    n = m - shift
    if n < 0:
        return RingElem()
    poly = _FACTORS[factor] * chebyshev_shifted_poly(n) * sign
    return RingElem.from_chart_poly(chart, poly)


@lru_cache(maxsize=None)
def table_image(level: int, kind: str, m: int) -> LoopElem:
    """The closed-form row ``kind`` at level ``level`` for index m >= 1."""
    if m < 1:
        raise ValueError("table rows are indexed by m >= 1")
    row = TABLE_ROWS[level, kind]
    chart = _CHARTS[level]
    return LoopElem(*(_table_entry(s, f, sh, m, chart) for s, f, sh in row))


def table_a(level: int, m: int) -> LoopElem:
    """a_m at the given level, any m in Z."""
    return table_image(level, "a", m) if m >= 1 else table_image(level, "a_neg", 1 - m)


def table_g(level: int, l: int) -> LoopElem:
    return table_image(level, "g", l)


class BasisImages:
    """a_m, g_l for the Onsager homomorphism A_0 -> X_{p1 p2}, A_1 -> X_{p0 p3}.

    Computed from the two seeds by brackets alone:
    g_1 = [a_1, a_0]/2, a_{m+1} = [g_1, a_m] + a_{m-1},
    a_{-m} = a_{2-m} - [g_1, a_{1-m}], g_m = [a_m, a_0]/2.
    """

    def __init__(self, perm: Permutation = IDENTITY):
        self.perm = perm
        a0 = generator_loop(perm(1), perm(2))
        a1 = generator_loop(perm(0), perm(3))
        self._a = {0: a0, 1: a1}
        self._g = {1: _HALF * loop_bracket(a1, a0)}

    def a(self, m: int) -> LoopElem:
        if m in self._a:
            return self._a[m]
        g1 = self._g[1]
        if m > 1:
            top = max(k for k in self._a if k >= 1)
            for k in range(top, m):
                self._a[k + 1] = loop_bracket(g1, self._a[k]) + self._a[k - 1]
        else:
            bottom = min(self._a)
            for k in range(-bottom, -m):
                # a_{-(k+1)} from a_{1-k} and a_{-k}
                self._a[-k - 1] = self._a[1 - k] - loop_bracket(g1, self._a[-k])
        return self._a[m]

    def g(self, l: int) -> LoopElem:
        if l < 1:
            raise ValueError("g_l is indexed by l >= 1")
        if l not in self._g:
            self._g[l] = _HALF * loop_bracket(self.a(l), self.a(0))
        return self._g[l]


@lru_cache(maxsize=None)
def basis_images(perm: Permutation = IDENTITY) -> BasisImages:
    return BasisImages(perm)


def _combine(u: OnsagerElem, a_of, g_of) -> LoopElem:
    out = LOOP_ZERO
    for m, c in u.a_coeffs.items():
        out = out + c * a_of(m)
    for l, c in u.g_coeffs.items():
        out = out + c * g_of(l)
    return out


def _onsager_under(u: OnsagerElem, perm: Permutation) -> LoopElem:
    if perm.is_identity():
        return _combine(u, lambda m: table_a(0, m), lambda l: table_g(0, l))
    images = basis_images(perm)
    return _combine(u, images.a, images.g)


def quad_perm(quad, positions) -> Permutation:
    """The permutation sending ``positions[n]`` to ``quad[n]``."""
    quad = _check_distinct(quad, 4)
    images = [0] * 4
    for src, dst in zip(positions, quad):
        images[src] = dst
    return Permutation(tuple(images))


STANDARD_ONSAGER_QUAD = (1, 2, 0, 3)
STANDARD_LOOP_QUAD = (1, 2, 3, 0)


def onsager_image(u: OnsagerElem, quad=STANDARD_ONSAGER_QUAD) -> LoopElem:
    """Image of u under the homomorphism A_0 -> X_hi, A_1 -> X_jk (quad = (h,i,j,k))."""
    return _onsager_under(u, quad_perm(quad, STANDARD_ONSAGER_QUAD))


# -- three-way decomposition ------------------------------------------------


@dataclass(frozen=True)
class OmegaCoords:
    omega: OnsagerElem = ONSAGER_ZERO
    omega_p: OnsagerElem = ONSAGER_ZERO
    omega_pp: OnsagerElem = ONSAGER_ZERO

    def levels(self) -> tuple:
        return self.omega, self.omega_p, self.omega_pp

    def to_text(self) -> str:
        labels = ("Omega", "Omega'", "Omega''")
        return "\n".join(f"{lab}: {format_onsager(c)}" for lab, c in zip(labels, self.levels()))

    def __str__(self):
        return self.to_text()


def _coeff(a: RingElem, k: int) -> Fraction:
    """Coefficient of T^k in an element supported on the constant and T-part."""
    if k == 0:
        return a.constant
    return a.t[k - 1] if k - 1 < len(a.t) else Fraction(0)


def _degree(a: RingElem) -> int:
    if a.t:
        return len(a.t)
    return 0 if a.constant else -1


def _solve_delta(u: LoopElem) -> OnsagerElem:
    """Onsager coordinates of an element of Delta, by triangular elimination.

    Block k (from the top down) fixes the coefficient of g_{k+1} from T^{k+1}
    in Z, that of a_{k+1} - g_{k+1} from T^{k+1} in Y, and that of a_{-k} from
    T^k in X.  Each step's leading coefficient is (-4)^k, or twice that for Y.
    """
    top = max(_degree(u.cx), _degree(u.cy) - 1, _degree(u.cz) - 1)
    a_coeffs: dict = {}
    g_coeffs: dict = {}
    res = u
    for k in range(top, -1, -1):
        lead = Fraction((-4) ** k)
        beta = _coeff(res.cz, k + 1) / lead
        if beta:
            g_coeffs[k + 1] = g_coeffs.get(k + 1, 0) + beta
            res = res - beta * table_g(0, k + 1)
        gamma = _coeff(res.cy, k + 1) / (2 * lead)
        if gamma:
            a_coeffs[k + 1] = a_coeffs.get(k + 1, 0) + gamma
            g_coeffs[k + 1] = g_coeffs.get(k + 1, 0) - gamma
            res = res - gamma * (table_a(0, k + 1) - table_g(0, k + 1))
        alpha = _coeff(res.cx, k) / lead
        if alpha:
            a_coeffs[-k] = a_coeffs.get(-k, 0) + alpha
            res = res - alpha * table_a(0, -k)
    if not res.is_zero():
        raise ArithmeticError(f"element is not in Delta; residual {res}")
    return OnsagerElem(a_coeffs, g_coeffs)


def omega_decompose(u: LoopElem) -> OmegaCoords:
    """Onsager coordinates of the three components of a normal form."""
    parts = split_delta(u)
    return OmegaCoords(
        _solve_delta(parts.d),
        _solve_delta(loop_prime(loop_prime(parts.dp))),
        _solve_delta(loop_prime(parts.dpp)),
    )


def omega_reconstruct(coords: OmegaCoords) -> LoopElem:
    c0, c1, c2 = coords.levels()
    return (onsager_image(c0) + loop_prime(onsager_image(c1))
            + loop_prime(loop_prime(onsager_image(c2))))


def level_perm(level: int, perm: Permutation = IDENTITY) -> Permutation:
    """Prime applied ``level`` times, followed by ``perm``."""
    return perm_power(NAMED_PERMS["prime"], level).then(perm)


def s4_act_normal_form(u: LoopElem, perm: Permutation) -> LoopElem:
    """Vertex permutation acting directly on a normal form.

    Each Onsager coordinate at level k is pushed through the homomorphism whose
    seeds are the generators relabelled by prime^k and then ``perm``.
    """
    coords = omega_decompose(u)
    out = LOOP_ZERO
    for level, c in enumerate(coords.levels()):
        if not c.is_zero():
            out = out + _onsager_under(c, level_perm(level, perm))
    return out


def loop_image(u: LoopElem, quad=STANDARD_LOOP_QUAD) -> LoopElem:
    """Image of u in L(sl2) under the loop homomorphism for quad (h,i,j,k).

    X_1 -> X_hi, Y_1 -> X_ij, Z_1 -> X_jh, X_0 -> X_jk, Y_0 -> X_kh, Z_0 -> X_hj.
    The standard quad gives the natural inclusion; others are its S4 conjugates.
    """
    perm = quad_perm(quad, STANDARD_LOOP_QUAD)
    if not in_laurent_subalgebra(u):
        raise ValueError("element does not lie in L(sl2): it has a (T-1)^-1 part")
    if perm.is_identity():
        return u
    return s4_act_normal_form(u, perm)
