"""Chebyshev polynomials of the second kind, exact, by the three-term recurrence."""

from __future__ import annotations

from functools import lru_cache

from .ring import Polynomial, RingElem

_TWO_X = Polynomial([0, 2])


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < -1:
        raise ValueError(f"Chebyshev index must be an integer >= -1, got {n!r}")


@lru_cache(maxsize=None)
def _u(n: int) -> Polynomial:
    if n == -1:
        return Polynomial()
    if n == 0:
        return Polynomial([1])
    return _TWO_X * _u(n - 1) - _u(n - 2)


def chebyshev_u(n: int) -> Polynomial:
    """U_n with U_{-1} = 0, U_0 = 1 and 2x U_n = U_{n+1} + U_{n-1}."""
    _check_index(n)
    # fill the cache bottom-up so deep indices never recurse far
    for k in range(-1, n + 1):
        _u(k)
    return _u(n)


@lru_cache(maxsize=None)
def _shifted(n: int) -> Polynomial:
    return chebyshev_u(n).compose(Polynomial([1, -2]))


def chebyshev_shifted_poly(n: int) -> Polynomial:
    """U_n(1 - 2x) as a polynomial in x."""
    _check_index(n)
    return _shifted(n)


def chebyshev_shifted(n: int) -> RingElem:
    """U_n(1 - 2T) as an element of A (constant and T-part only)."""
    return RingElem.from_t_poly(chebyshev_shifted_poly(n))
