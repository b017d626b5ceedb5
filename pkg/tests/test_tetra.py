import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from strategies import bracket_words, laurent_loop_elems, onsager_elems, permutations
from tetrahedron.expr import evaluate, parse
from tetrahedron.loop import (
    LoopElem,
    chevalley_generator,
    delta_membership,
    equitable_generator,
    loop_bracket,
    loop_prime,
)
from tetrahedron.omega import (
    BasisImages,
    OmegaCoords,
    loop_image,
    omega_decompose,
    omega_reconstruct,
    onsager_image,
    s4_act_normal_form,
    table_a,
)
from tetrahedron.onsager import A, G, onsager_bracket
from tetrahedron.ring import ONE, ZERO, T, TP, TPP, eval_at
from tetrahedron.sl2 import X, Z, Sl2Elem
from tetrahedron.tetra import (
    IDENTITY,
    NAMED_PERMS,
    Permutation,
    TetraElem,
    all_permutations,
    generator_image,
    s4_act,
    std_hom_sl2,
    tetra_bracket,
)
from tetrahedron.verify import (
    verify_diagrams,
    verify_independence,
    verify_prime_brackets,
    verify_presentation,
    verify_s4_injection,
    verify_table,
    verify_tetra_relations,
)


def gen(i, j):
    return generator_image(i, j)


def test_generator_images():
    assert gen(1, 2).normal_form == LoopElem(ONE, ZERO, ZERO)
    assert gen(0, 2).normal_form == LoopElem(TPP, TPP - ONE, ZERO)
    assert gen(0, 1).normal_form == LoopElem(TP - ONE, ZERO, TP)
    assert gen(2, 1) == -gen(1, 2)
    with pytest.raises(ValueError):
        gen(1, 1)
    with pytest.raises(ValueError):
        gen(0, 4)


def test_bracket_examples():
    assert tetra_bracket(gen(2, 3), gen(3, 0)) == 2 * gen(2, 3) + 2 * gen(3, 0)
    a, b = gen(1, 2), gen(0, 3)
    ab = tetra_bracket(a, b)
    assert tetra_bracket(a, tetra_bracket(a, ab)) == 4 * ab
    assert tetra_bracket(ab, ab).is_zero()


def test_bracket_spot_check_by_evaluation():
    # [X23, X30] = 2Y(x)1 - 2(Y(x)T + Z(x)(T-1)), checked pointwise
    u = tetra_bracket(gen(2, 3), gen(3, 0)).normal_form
    for t in (Fraction(3), Fraction(-2, 5)):
        assert eval_at(u.cx, t) == 0
        assert eval_at(u.cy, t) == 2 - 2 * t
        assert eval_at(u.cz, t) == -2 * (t - 1)


def test_permutations():
    prime = NAMED_PERMS["prime"]
    assert prime.then(prime).then(prime) == IDENTITY
    assert Permutation.parse("0132").inverse() == Permutation.parse("0132")
    assert len(set(all_permutations())) == 24
    with pytest.raises(ValueError):
        Permutation.parse("0112")


def test_s4_act_examples():
    prime, star = NAMED_PERMS["prime"], NAMED_PERMS["star"]
    assert s4_act((0, 1), prime) == gen(0, 2)
    assert s4_act((1, 2), prime.then(star)) == gen(3, 2)
    assert s4_act(parse("star(prime(X12))"), IDENTITY) == gen(3, 2)
    for g in itertools.permutations(range(4), 2):
        assert s4_act(g, IDENTITY) == gen(*g)


def test_s4_act_on_elements_without_source():
    u = evaluate(parse("[X01, [X23, X02]]"))
    bare = TetraElem(u.normal_form)
    p = Permutation.parse("3102")
    assert s4_act(bare, p) == s4_act(u, p)


def test_std_hom_sl2():
    assert std_hom_sl2(X) == gen(1, 2)
    assert std_hom_sl2(Z).normal_form == LoopElem(ZERO, ZERO, ONE)
    assert std_hom_sl2(Sl2Elem(0, 0, 0)).is_zero()
    u, v = Sl2Elem(1, -2, 3), Sl2Elem(Fraction(1, 2), 0, 5)
    from tetrahedron.sl2 import sl2_bracket
    for triple in itertools.permutations(range(4), 3):
        assert std_hom_sl2(sl2_bracket(u, v), triple) == tetra_bracket(
            std_hom_sl2(u, triple), std_hom_sl2(v, triple))
    with pytest.raises(ValueError):
        std_hom_sl2(X, (1, 1, 2))


def test_onsager_image_examples():
    assert onsager_image(A(0)) == LoopElem(ONE, ZERO, ZERO)
    assert onsager_image(A(1)) == LoopElem(ZERO, T, T - ONE)
    assert onsager_image(G(1)) == LoopElem(-ONE, -T, T - ONE)
    assert onsager_image(A(2)) == LoopElem(-ONE, 2 * T - 4 * T * T, -2 + 6 * T - 4 * T * T)
    # the same value from the bracket recursion
    assert BasisImages().a(2) == onsager_image(A(2))
    with pytest.raises(ValueError):
        onsager_image(A(0), (1, 2, 2, 3))


def test_onsager_image_is_a_homomorphism():
    basis = [A(m) for m in range(-5, 6)] + [G(l) for l in range(1, 6)]
    for u, v in itertools.combinations(basis, 2):
        assert onsager_image(onsager_bracket(u, v)) == loop_bracket(onsager_image(u), onsager_image(v))


@given(onsager_elems, onsager_elems, permutations)
@settings(max_examples=25, deadline=None)
def test_conjugate_onsager_images_are_homomorphisms(u, v, p):
    quad = (p(1), p(2), p(0), p(3))
    lhs = onsager_image(onsager_bracket(u, v), quad)
    assert lhs == loop_bracket(onsager_image(u, quad), onsager_image(v, quad))


def test_nonstandard_quad_seeds():
    assert onsager_image(A(0), (2, 3, 0, 1)) == gen(2, 3).normal_form
    assert onsager_image(A(1), (2, 3, 0, 1)) == gen(0, 1).normal_form


def test_loop_image():
    e0 = chevalley_generator("e0")
    assert loop_image(e0) == e0
    assert loop_image(LoopElem(ZERO, ZERO, ONE)) == LoopElem(ZERO, ZERO, ONE)
    assert loop_image(equitable_generator("X1")) == gen(1, 2).normal_form
    # quad (h,i,j,k): X1 -> X_hi, Y0 -> X_kh
    assert loop_image(equitable_generator("X1"), (0, 3, 1, 2)) == gen(0, 3).normal_form
    assert loop_image(equitable_generator("Y0"), (0, 3, 1, 2)) == gen(2, 0).normal_form
    with pytest.raises(ValueError):
        loop_image(LoopElem(TPP, ZERO, ZERO))
    with pytest.raises(ValueError):
        loop_image(e0, (0, 0, 1, 2))


@given(laurent_loop_elems, laurent_loop_elems, permutations)
@settings(max_examples=15, deadline=None)
def test_loop_image_is_a_homomorphism(u, v, p):
    quad = (p(1), p(2), p(3), p(0))
    lhs = loop_image(loop_bracket(u, v), quad)
    assert lhs == loop_bracket(loop_image(u, quad), loop_image(v, quad))


def test_omega_decompose_examples():
    assert omega_decompose(gen(1, 2).normal_form) == OmegaCoords(A(0))
    assert omega_decompose(gen(2, 3).normal_form) == OmegaCoords(omega_p=A(0))
    assert omega_decompose(gen(0, 3).normal_form) == OmegaCoords(A(1))
    assert omega_decompose(gen(0, 2).normal_form) == OmegaCoords(omega_pp=A(1))
    assert OmegaCoords(A(0)).to_text() == "Omega: A_0\nOmega': 0\nOmega'': 0"


@given(onsager_elems, onsager_elems, onsager_elems)
@settings(max_examples=40, deadline=None)
def test_reconstruct_then_decompose(c0, c1, c2):
    coords = OmegaCoords(c0, c1, c2)
    assert omega_decompose(omega_reconstruct(coords)) == coords


@given(bracket_words(4))
@settings(max_examples=40, deadline=None)
def test_decompose_then_reconstruct(word):
    u = evaluate(word).normal_form
    coords = omega_decompose(u)
    assert omega_reconstruct(coords) == u
    pieces = (onsager_image(coords.omega), loop_prime(onsager_image(coords.omega_p)),
              loop_prime(loop_prime(onsager_image(coords.omega_pp))))
    for k, piece in enumerate(pieces):
        assert delta_membership(piece, k)


@given(bracket_words(3), permutations)
@settings(max_examples=40, deadline=None)
def test_normal_form_action_matches_word_action(word, p):
    u = evaluate(word).normal_form
    assert s4_act_normal_form(u, p) == evaluate(word, p).normal_form


def test_table_rows_negative_indices():
    rec = BasisImages()
    for m in range(-6, 7):
        assert table_a(0, m) == rec.a(m)


def test_relation_suite():
    rep = verify_tetra_relations()
    assert rep.ok and rep.checked == 60


def test_prime_bracket_suite():
    rep = verify_prime_brackets(4)
    assert rep.ok and rep.checked == 24
    assert rep.result("[a'0, a_m] at m=1") and rep.result("[a'0, g_m] at m=1")
    with pytest.raises(ValueError):
        verify_prime_brackets(0)


def test_other_suites():
    for rep in (verify_table(6), verify_diagrams(), verify_presentation(3),
                verify_s4_injection(), verify_independence(4)):
        assert rep.ok, [line for line in rep.lines() if line.startswith("FAIL")]
