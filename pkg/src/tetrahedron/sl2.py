"""sl2 on the equitable basis X, Y, Z.

[X, Y] = 2X + 2Y, [Y, Z] = 2Y + 2Z, [Z, X] = 2Z + 2X.  The e, f, h basis only
appears through the conversion helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ring import format_rational, _format_terms


def equitable_bracket(ux, uy, uz, vx, vy, vz):
    """Structure constants of the equitable basis, over any commutative ring.

    Returns the X, Y, Z coefficients of ``[u, v]``.
    """
    p = ux * vy - uy * vx  # [X, Y]
    q = uy * vz - uz * vy  # [Y, Z]
    r = uz * vx - ux * vz  # [Z, X]
    return 2 * (p + r), 2 * (p + q), 2 * (q + r)


@dataclass(frozen=True)
class Sl2Elem:
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __add__(self, other: "Sl2Elem") -> "Sl2Elem":
        return Sl2Elem(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Sl2Elem") -> "Sl2Elem":
        return Sl2Elem(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Sl2Elem":
        return Sl2Elem(-self.x, -self.y, -self.z)

    def __mul__(self, c) -> "Sl2Elem":
        c = Fraction(c)
        return Sl2Elem(c * self.x, c * self.y, c * self.z)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not (self.x or self.y or self.z)

    def to_text(self) -> str:
        return _format_terms(
            (format_rational(c), sym) for c, sym in ((self.x, "X"), (self.y, "Y"), (self.z, "Z")) if c
        )

    def __str__(self):
        return self.to_text()


X = Sl2Elem(1, 0, 0)
Y = Sl2Elem(0, 1, 0)
Z = Sl2Elem(0, 0, 1)


def sl2_bracket(u: Sl2Elem, v: Sl2Elem) -> Sl2Elem:
    return Sl2Elem(*equitable_bracket(u.x, u.y, u.z, v.x, v.y, v.z))


def efh_to_equitable(ce, cf, ch) -> Sl2Elem:
    """Image of ce*e + cf*f + ch*h under e -> (X+Z)/2, f -> -(Y+Z)/2, h -> Z."""
    ce, cf, ch = Fraction(ce), Fraction(cf), Fraction(ch)
    return Sl2Elem(ce / 2, -cf / 2, ce / 2 - cf / 2 + ch)


def equitable_to_efh(u: Sl2Elem) -> tuple:
    """Inverse conversion: X -> 2e - h, Y -> -2f - h, Z -> h.  Returns (ce, cf, ch)."""
    return 2 * u.x, -2 * u.y, u.z - u.x - u.y


def sl2_prime(u: Sl2Elem) -> Sl2Elem:
    """X -> Y -> Z -> X."""
    return Sl2Elem(u.z, u.x, u.y)


def sl2_omega(u: Sl2Elem) -> Sl2Elem:
    """X -> -Y, Y -> -X, Z -> -Z."""
    return Sl2Elem(-u.y, -u.x, -u.z)
