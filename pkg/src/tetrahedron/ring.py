"""Exact scalars, univariate polynomials and the ring A = Q[T, 1/T, 1/(T-1)].

Elements of A are stored on the basis ``1, T^i, U^i, V^i`` (i >= 1) where
``U = T' = 1 - 1/T`` and ``V = T'' = 1/(1 - T)``.  That representation is
unique, so equality is structural.  Multiplication goes through the fraction
form ``p(T) / (T^a (T-1)^b)`` followed by a partial-fraction split.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(coeffs: Iterable[Scalar]) -> tuple:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def format_rational(q: Fraction) -> str:
    """Lowest-terms text ``p`` or ``p/q``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Polynomial:
    """Dense univariate polynomial over Q.  ``coeffs[k]`` multiplies ``x^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def from_dict(cls, terms: Mapping[int, Scalar]) -> "Polynomial":
        if not terms:
            return cls()
        if min(terms) < 0:
            raise ValueError("negative exponent in polynomial")
        dense = [_ZERO] * (max(terms) + 1)
        for k, c in terms.items():
            dense[k] += Fraction(c)
        return cls(dense)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self):
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def terms(self) -> dict:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __repr__(self):
        return f"Polynomial({[format_rational(c) for c in self.coeffs]})"

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if c == 0:
                return Polynomial()
            return Polynomial([c * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= dd:
            return Polynomial(), Polynomial(rem)
        quot = [_ZERO] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / lead
            quot[k - dd] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k - dd + j] -= c * y
        return Polynomial(quot), Polynomial(rem[:dd])

    def __call__(self, x):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Substitution ``self(inner(x))``."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def taylor_shift(self, c: Scalar) -> "Polynomial":
        """``self(x + c)`` by repeated synthetic division."""
        out = list(self.coeffs)
        c = Fraction(c)
        n = len(out)
        for i in range(n):
            for k in range(n - 2, i - 1, -1):
                out[k] += c * out[k + 1]
        return Polynomial(out)

    def to_text(self, var: str = "x") -> str:
        return _format_terms(
            (format_rational(c), "1" if k == 0 else (var if k == 1 else f"{var}^{k}"))
            for k, c in enumerate(self.coeffs)
            if c
        )


def _format_terms(pairs) -> str:
    """Join (coefficient-text, atom) pairs as ``c*atom`` with +/- separators."""
    parts = []
    for ctext, atom in pairs:
        neg = ctext.startswith("-")
        mag = ctext[1:] if neg else ctext
        if atom == "1":
            body = mag
        elif mag == "1":
            body = atom
        else:
            body = f"{mag}*{atom}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# the ring A

_CHARTS = ("t", "u", "v")


class RingElem:
    """Element of A on the basis ``{1} + {T^i, U^i, V^i : i >= 1}``.

    ``t``, ``u``, ``v`` are dense tuples; index ``k`` holds the coefficient of
    the power ``k + 1``.  Instances are immutable.
    """

    __slots__ = ("constant", "t", "u", "v", "_hash")

    def __init__(self, constant: Scalar = 0, t: Iterable = (), u: Iterable = (), v: Iterable = ()):
        self.constant = Fraction(constant)
        self.t = _trim(t)
        self.u = _trim(u)
        self.v = _trim(v)
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_parts(cls, constant: Scalar = 0, t_part: Mapping[int, Scalar] = None,
                   tp_part: Mapping[int, Scalar] = None, tpp_part: Mapping[int, Scalar] = None):
        """Build from exponent -> coefficient maps (exponents >= 1)."""
        def dense(part):
            if not part:
                return ()
            if min(part) < 1:
                raise ValueError("basis exponents must be >= 1")
            out = [_ZERO] * max(part)
            for i, c in part.items():
                out[i - 1] += Fraction(c)
            return out
        return cls(constant, dense(t_part), dense(tp_part), dense(tpp_part))

    @classmethod
    def from_t_poly(cls, p: Polynomial) -> "RingElem":
        return cls(p.coeff(0), p.coeffs[1:])

    @classmethod
    def from_chart_poly(cls, chart: str, p: Polynomial) -> "RingElem":
        """Polynomial in T (``chart='t'``), U (``'u'``) or V (``'v'``)."""
        rest = p.coeffs[1:]
        return cls(p.coeff(0), **{chart: rest})

    # -- views ------------------------------------------------------------

    @property
    def t_part(self) -> dict:
        return {k + 1: c for k, c in enumerate(self.t) if c}

    @property
    def tp_part(self) -> dict:
        return {k + 1: c for k, c in enumerate(self.u) if c}

    @property
    def tpp_part(self) -> dict:
        return {k + 1: c for k, c in enumerate(self.v) if c}

    def chart_poly(self, chart: str) -> Polynomial:
        """Constant plus one chart, as a polynomial in that chart's variable."""
        return Polynomial((self.constant,) + getattr(self, chart))

    def charts(self) -> tuple:
        return tuple(ch for ch in _CHARTS if getattr(self, ch))

    def is_zero(self) -> bool:
        return self.constant == 0 and not self.t and not self.u and not self.v

    def __bool__(self):
        return not self.is_zero()

    def _key(self):
        return (self.constant, self.t, self.u, self.v)

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)):
            return self._key() == (Fraction(other), (), (), ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"RingElem({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _as_ring(other)
        if other is NotImplemented:
            return other
        return RingElem(self.constant + other.constant, _add_dense(self.t, other.t),
                        _add_dense(self.u, other.u), _add_dense(self.v, other.v))

    __radd__ = __add__

    def __neg__(self):
        return RingElem(-self.constant, [-c for c in self.t], [-c for c in self.u],
                        [-c for c in self.v])

    def __sub__(self, other):
        other = _as_ring(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "RingElem":
        c = Fraction(c)
        if c == 0:
            return ZERO
        if c == 1:
            return self
        return RingElem(c * self.constant, [c * x for x in self.t], [c * x for x in self.u],
                        [c * x for x in self.v])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, RingElem):
            return ring_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use canonical_decompose for negative powers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_text(self) -> str:
        return format_ring(self)


def _add_dense(a: tuple, b: tuple) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return out


def _as_ring(x):
    if isinstance(x, RingElem):
        return x
    if isinstance(x, (int, Fraction)):
        return RingElem(x)
    return NotImplemented


ZERO = RingElem()
ONE = RingElem(1)
T = RingElem(0, [1])
TP = RingElem(0, (), [1])
TPP = RingElem(0, (), (), [1])


def ring_add(a: RingElem, b: RingElem) -> RingElem:
    return a + b


# -- fraction form ----------------------------------------------------------

_T_MINUS_1 = Polynomial([-1, 1])


@lru_cache(maxsize=None)
def _t_minus_1_pow(n: int) -> Polynomial:
    return Polynomial([comb(n, k) * (-1) ** (n - k) for k in range(n + 1)])


def to_fraction(a: RingElem):
    """Return ``(num, a_exp, b_exp)`` with ``a == num / (T^a_exp (T-1)^b_exp)``."""
    ea, eb = len(a.u), len(a.v)
    # (c + sum p_i T^i) * T^ea (T-1)^eb
    num = (Polynomial((a.constant,) + a.t) * _t_minus_1_pow(eb)) * Polynomial.monomial(ea)
    # U^i = (T-1)^i / T^i
    for k, q in enumerate(a.u):
        if q:
            i = k + 1
            num = num + (_t_minus_1_pow(i + eb) * Polynomial.monomial(ea - i)) * q
    # V^i = (-1)^i / (T-1)^i
    for k, r in enumerate(a.v):
        if r:
            i = k + 1
            num = num + (_t_minus_1_pow(eb - i) * Polynomial.monomial(ea)) * (r * (-1) ** i)
    return num, ea, eb


def canonical_decompose(num: Polynomial, a: int, b: int) -> RingElem:
    """Expand ``num(T) / (T^a (T-1)^b)`` on the canonical basis of A."""
    if not isinstance(a, int) or not isinstance(b, int) or a < 0 or b < 0:
        raise ValueError(f"pole orders must be non-negative integers, got a={a!r}, b={b!r}")
    if not isinstance(num, Polynomial):
        num = Polynomial(num)
    if num.is_zero():
        return ZERO

    # principal part at T = 0: coefficients of T^-k, k = 1..a
    at_zero = [_ZERO] * (a + 1)
    if a:
        # series of 1/(T-1)^b about T = 0
        sgn = (-1) ** b
        series = [sgn * comb(n + b - 1, b - 1) if b else (1 if n == 0 else 0) for n in range(a)]
        for n in range(a):
            acc = _ZERO
            for j in range(min(n, len(num.coeffs) - 1) + 1):
                acc += num.coeffs[j] * series[n - j]
            at_zero[a - n] = acc
    # principal part at T = 1: coefficients of (T-1)^-k, k = 1..b
    at_one = [_ZERO] * (b + 1)
    if b:
        shifted = num.taylor_shift(1)
        series = [(-1) ** n * comb(n + a - 1, a - 1) if a else (1 if n == 0 else 0) for n in range(b)]
        for n in range(b):
            acc = _ZERO
            for j in range(min(n, len(shifted.coeffs) - 1) + 1):
                acc += shifted.coeffs[j] * series[n - j]
            at_one[b - n] = acc

    rem_poly = num
    for k in range(1, a + 1):
        if at_zero[k]:
            rem_poly = rem_poly - (_t_minus_1_pow(b) * Polynomial.monomial(a - k)) * at_zero[k]
    for k in range(1, b + 1):
        if at_one[k]:
            rem_poly = rem_poly - (_t_minus_1_pow(b - k) * Polynomial.monomial(a)) * at_one[k]

    # exact division by T^a (T-1)^b
    coeffs = list(rem_poly.coeffs)
    if any(coeffs[:a]):
        raise ArithmeticError("partial fraction residue not divisible by T^a")
    coeffs = coeffs[a:]
    for _ in range(b):
        coeffs = _divide_by_t_minus_1(coeffs)
    poly = Polynomial(coeffs)

    constant = poly.coeff(0)
    u = [_ZERO] * a
    for k in range(1, a + 1):
        c = at_zero[k]
        if c:
            # T^-k = (1 - U)^k
            constant += c
            for j in range(1, k + 1):
                u[j - 1] += c * comb(k, j) * (-1) ** j
    # (T-1)^-k = (-1)^k V^k
    v = [at_one[k] * (-1) ** k for k in range(1, b + 1)]
    return RingElem(constant, poly.coeffs[1:], u, v)


def _divide_by_t_minus_1(coeffs: Sequence[Fraction]) -> list:
    """Exact synthetic division by (T - 1); raises if the remainder is nonzero."""
    if not coeffs:
        return []
    n = len(coeffs)
    quot = [_ZERO] * (n - 1)
    carry = _ZERO
    for k in range(n - 1, 0, -1):
        carry = coeffs[k] + carry
        quot[k - 1] = carry
    if coeffs[0] + carry != 0:
        raise ArithmeticError("partial fraction residue not divisible by (T - 1)")
    return quot


def _mul_via_fractions(a: RingElem, b: RingElem) -> RingElem:
    na, aa, ba = to_fraction(a)
    nb, ab, bb = to_fraction(b)
    return canonical_decompose(na * nb, aa + ab, ba + bb)


def _single_chart(x: RingElem):
    charts = x.charts()
    if len(charts) > 1:
        return None
    return charts[0] if charts else ""


def ring_mul(a: RingElem, b: RingElem) -> RingElem:
    """Product in A, re-expressed on the canonical basis."""
    if a.is_zero() or b.is_zero():
        return ZERO
    ca, cb = _single_chart(a), _single_chart(b)
    if ca is not None and cb is not None and (ca == cb or not ca or not cb):
        # each of Q[T], Q[U], Q[V] is a subring: multiply as polynomials
        chart = ca or cb or "t"
        return RingElem.from_chart_poly(chart, a.chart_poly(chart) * b.chart_poly(chart))
    return _mul_via_fractions(a, b)


def ring_prime(a: RingElem) -> RingElem:
    """The order-3 automorphism T -> U -> V -> T, acting on basis labels."""
    return RingElem(a.constant, a.v, a.t, a.u)


def ring_invert(a: RingElem) -> RingElem:
    """The automorphism T -> 1/T; on the basis T -> 1 - U, U -> 1 - T, V -> 1 - V."""
    one_minus = Polynomial([1, -1])
    out = RingElem(a.constant)
    for src, dst in (("t", "u"), ("u", "t"), ("v", "v")):
        coeffs = getattr(a, src)
        if coeffs:
            p = Polynomial((0,) + coeffs).compose(one_minus)
            out = out + RingElem.from_chart_poly(dst, p)
    return out


def eval_at(a: RingElem, t: Scalar) -> Fraction:
    """Evaluate at T = t, so U = 1 - 1/t and V = 1/(1 - t)."""
    t = Fraction(t)
    if t == 0 or t == 1:
        raise ValueError(f"T = {t} is a pole of A")
    u = 1 - 1 / t
    v = 1 / (1 - t)
    total = a.constant
    for coeffs, x in ((a.t, t), (a.u, u), (a.v, v)):
        if coeffs:
            total += x * Polynomial(coeffs)(x)
    return total


# -- text -------------------------------------------------------------------

_ATOMS = (("t", "T"), ("u", "U"), ("v", "V"))


def format_ring(a: RingElem) -> str:
    """Canonical text, e.g. ``-1 + T - 2*U^3 + 1/2*V``; zero is ``0``."""
    pairs = []
    if a.constant:
        pairs.append((format_rational(a.constant), "1"))
    for chart, sym in _ATOMS:
        for k, c in enumerate(getattr(a, chart)):
            if c:
                i = k + 1
                pairs.append((format_rational(c), sym if i == 1 else f"{sym}^{i}"))
    return _format_terms(pairs)


_RING_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<atom>[TUV])(?:\^(?P<exp>\d+))?|(?P<op>[-+*]))")


def parse_ring(text: str) -> RingElem:
    """Inverse of :func:`format_ring`.  Empty text and ``0`` denote zero."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _RING_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad ring term at position {pos}: {text!r}")
        tokens.append(m)
        pos = m.end()
    out = {"": _ZERO, "t": {}, "u": {}, "v": {}}
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i]["op"] in ("+", "-"):
            sign = -1 if tokens[i]["op"] == "-" else 1
            i += 1
        elif not first:
            raise ValueError(f"expected + or - in {text!r}")
        first = False
        if i >= len(tokens):
            raise ValueError(f"dangling sign in {text!r}")
        coeff = _ONE
        tok = tokens[i]
        if tok["num"] is not None:
            coeff = Fraction(tok["num"])
            i += 1
            if i < len(tokens) and tokens[i]["op"] == "*":
                i += 1
                if i >= len(tokens):
                    raise ValueError(f"missing atom in {text!r}")
                tok = tokens[i]
            else:
                out[""] += sign * coeff
                continue
        if tok["atom"] is not None:
            exp = int(tok["exp"]) if tok["exp"] is not None else 1
            if exp < 1:
                raise ValueError(f"exponent must be >= 1 in {text!r}")
            chart = {"T": "t", "U": "u", "V": "v"}[tok["atom"]]
            out[chart][exp] = out[chart].get(exp, _ZERO) + sign * coeff
        elif tok["num"] == "1":
            out[""] += sign * coeff
        else:
            raise ValueError(f"expected an atom in {text!r}")
        i += 1
    return RingElem.from_parts(out[""], out["t"], out["u"], out["v"])


def ring_to_json(a: RingElem) -> dict:
    return {
        "1": format_rational(a.constant),
        "T": {str(i): format_rational(c) for i, c in a.t_part.items()},
        "U": {str(i): format_rational(c) for i, c in a.tp_part.items()},
        "V": {str(i): format_rational(c) for i, c in a.tpp_part.items()},
    }


def ring_from_json(obj: Mapping) -> RingElem:
    def part(key):
        return {int(i): Fraction(c) for i, c in (obj.get(key) or {}).items()}
    return RingElem.from_parts(Fraction(obj.get("1", "0")), part("T"), part("U"), part("V"))
