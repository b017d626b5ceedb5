import itertools

import pytest
from hypothesis import given, settings

from strategies import onsager_elems
from tetrahedron.onsager import (
    AUTOMORPHISMS,
    ONSAGER_ZERO,
    A,
    G,
    OnsagerElem,
    check_dolan_grady,
    onsager_auto,
    onsager_bracket,
    onsager_from_json,
    onsager_to_json,
    parse_onsager,
)

BASIS = [A(m) for m in range(-4, 5)] + [G(l) for l in range(1, 5)]


def test_bracket_examples():
    assert onsager_bracket(A(1), A(0)) == 2 * G(1)
    assert onsager_bracket(G(1), A(0)) == A(1) - A(-1)
    assert onsager_bracket(G(2), G(5)) == ONSAGER_ZERO


def test_index_conventions():
    assert G(0) == ONSAGER_ZERO
    assert G(-3) == -G(3)
    # [A_l, A_m] = 2 G_{l-m} for every pair
    for l, m in itertools.product(range(-3, 4), repeat=2):
        assert onsager_bracket(A(l), A(m)) == 2 * G(l - m)


def test_antisymmetry_and_jacobi_on_basis():
    br = onsager_bracket
    for u, v in itertools.product(BASIS, repeat=2):
        assert br(u, v) == -br(v, u)
    for u, v, w in itertools.product(BASIS, repeat=3):
        assert (br(u, br(v, w)) + br(v, br(w, u)) + br(w, br(u, v))).is_zero()


@given(onsager_elems, onsager_elems, onsager_elems)
@settings(max_examples=60)
def test_jacobi_random(u, v, w):
    br = onsager_bracket
    assert (br(u, br(v, w)) + br(v, br(w, u)) + br(w, br(u, v))).is_zero()


def test_automorphism_examples():
    assert onsager_auto(A(2), "down") == -A(2)
    assert onsager_auto(A(3), "star") == A(-2)
    assert onsager_auto(G(2), "Down") == G(2)
    with pytest.raises(ValueError):
        onsager_auto(A(0), "up")


@given(onsager_elems, onsager_elems)
@settings(max_examples=60)
def test_automorphisms_preserve_bracket(u, v):
    for name in AUTOMORPHISMS:
        lhs = onsager_auto(onsager_bracket(u, v), name)
        assert lhs == onsager_bracket(onsager_auto(u, name), onsager_auto(v, name))


def test_automorphisms_generate_d4():
    probe = [A(m) for m in range(-3, 4)] + [G(l) for l in range(1, 4)]

    def act(word, u):
        for name in word:
            u = onsager_auto(u, name)
        return u

    seen = {}
    frontier = [()]
    while frontier:
        word = frontier.pop()
        key = tuple(act(word, u) for u in probe)
        if key in seen:
            continue
        seen[key] = word
        frontier.extend(word + (name,) for name in AUTOMORPHISMS)
    assert len(seen) == 8


def test_dolan_grady():
    assert check_dolan_grady(A(0), A(1))
    assert check_dolan_grady(A(0), A(0))
    # regression: [G1, [G1, [G1, A0]]] = A3 - 3A1 + 3A_-1 - A_-3, not 4[G1, A0]
    assert check_dolan_grady(A(0), G(1)) is False


def test_text_form():
    u = A(0) - 2 * G(3) + OnsagerElem({-1: "1/2"})
    assert u.to_text() == "1/2*A_{-1} + A_0 - 2*G_3"
    assert parse_onsager("A_0 - 2*G_3 + 1/2*A_{-1}") == u
    assert A(12).to_text() == "A_{12}"
    assert ONSAGER_ZERO.to_text() == "0"
    with pytest.raises(ValueError):
        parse_onsager("G_0")


@given(onsager_elems)
def test_text_and_json_round_trip(u):
    assert parse_onsager(u.to_text()) == u
    assert onsager_from_json(onsager_to_json(u)) == u
