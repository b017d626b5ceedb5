from fractions import Fraction

import pytest
from hypothesis import given, settings

from strategies import laurent_loop_elems, loop_elems
from tetrahedron.loop import (
    LOOP_ZERO,
    LoopElem,
    check_loop_presentation,
    chevalley_generator,
    delta_membership,
    equitable_generator,
    in_laurent_subalgebra,
    laurent_monomial,
    loop_bracket,
    loop_from_json,
    loop_omega,
    loop_prime,
    loop_to_json,
    parse_loop,
    split_delta,
)
from tetrahedron.ring import ONE, ZERO, T, TPP, eval_at
from tetrahedron.sl2 import Y, Z, sl2_bracket, Sl2Elem


def _at(u: LoopElem, t) -> Sl2Elem:
    return Sl2Elem(*(eval_at(c, t) for c in u.coords()))


@given(loop_elems, loop_elems)
@settings(max_examples=40, deadline=None)
def test_bracket_is_pointwise(u, v):
    # evaluation at T = t is a homomorphism onto sl2
    w = loop_bracket(u, v)
    for t in (Fraction(3), Fraction(-1, 2)):
        assert _at(w, t) == sl2_bracket(_at(u, t), _at(v, t))


@given(loop_elems, loop_elems, loop_elems)
@settings(max_examples=25, deadline=None)
def test_jacobi(u, v, w):
    br = loop_bracket
    assert br(u, v) == -br(v, u)
    assert (br(u, br(v, w)) + br(v, br(w, u)) + br(w, br(u, v))).is_zero()


@given(loop_elems, loop_elems)
@settings(max_examples=30, deadline=None)
def test_prime_is_an_automorphism_of_order_3(u, v):
    assert loop_prime(loop_prime(loop_prime(u))) == u
    assert loop_prime(loop_bracket(u, v)) == loop_bracket(loop_prime(u), loop_prime(v))


@given(loop_elems, loop_elems)
@settings(max_examples=30, deadline=None)
def test_omega_is_an_involutive_automorphism(u, v):
    assert loop_omega(loop_omega(u)) == u
    assert loop_omega(loop_bracket(u, v)) == loop_bracket(loop_omega(u), loop_omega(v))


def test_tensor_and_text():
    u = LoopElem.tensor(Y, T) + LoopElem.tensor(Z, T - ONE)
    assert u.to_text() == "X[]; Y[T]; Z[-1 + T]"
    assert parse_loop("Y[T]; Z[-1 + T]") == u
    assert parse_loop("") == LOOP_ZERO


@given(loop_elems)
def test_text_and_json_round_trip(u):
    assert parse_loop(u.to_text()) == u
    assert loop_from_json(loop_to_json(u)) == u


def test_chevalley_generators():
    assert chevalley_generator("e0").to_text() == "X[]; Y[-1/2*T]; Z[-1/2*T]"
    assert chevalley_generator("h1") == LoopElem(ZERO, ZERO, ONE)
    assert chevalley_generator("h0") == -chevalley_generator("h1")
    with pytest.raises(ValueError):
        chevalley_generator("e2")
    with pytest.raises(ValueError):
        equitable_generator("W0")


def test_presentation_report():
    rep = check_loop_presentation(4)
    assert rep.ok, list(rep.lines())
    assert rep.checked > 40


def test_laurent_monomials():
    assert laurent_monomial(0) == ONE
    assert laurent_monomial(2) == T * T
    assert laurent_monomial(-1) * T == ONE
    assert laurent_monomial(-3) * laurent_monomial(3) == ONE


def test_laurent_subalgebra():
    assert in_laurent_subalgebra(equitable_generator("Y0"))
    assert not in_laurent_subalgebra(LoopElem(TPP, ZERO, ZERO))


@given(loop_elems)
@settings(max_examples=60, deadline=None)
def test_split_delta(u):
    parts = split_delta(u)
    assert parts.total() == u
    for k, piece in enumerate((parts.d, parts.dp, parts.dpp)):
        assert delta_membership(piece, k)


def test_delta_membership_examples():
    x03 = LoopElem(ZERO, T, T - ONE)
    assert delta_membership(LoopElem(ONE, ZERO, ZERO), 0)
    assert delta_membership(x03, 0)
    assert not delta_membership(x03, 1)
    assert delta_membership(loop_prime(x03), 1)
    assert delta_membership(loop_prime(loop_prime(x03)), 2)
    # Y needs a factor of T, Z a factor of T - 1
    assert not delta_membership(LoopElem(ZERO, ONE, ZERO), 0)
    assert not delta_membership(LoopElem(ZERO, ZERO, T), 0)
    with pytest.raises(ValueError):
        delta_membership(x03, 3)


@given(laurent_loop_elems, laurent_loop_elems)
@settings(max_examples=30, deadline=None)
def test_laurent_subalgebra_is_closed(u, v):
    assert in_laurent_subalgebra(loop_bracket(u, v))
