"""Verification suites: each check compares two independently computed normal forms."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .expr import Bracket, Generator, Sum, evaluate, parse
from .linalg import rank
from .loop import (
    CHEVALLEY_NAMES,
    LOOP_ZERO,
    check_loop_presentation,
    chevalley_generator,
    equitable_generator,
    loop_bracket,
    loop_coordinates,
    loop_omega,
    loop_prime,
)
from .omega import (
    BasisImages,
    ROW_KINDS,
    level_perm,
    loop_image,
    omega_decompose,
    omega_reconstruct,
    onsager_image,
    s4_act_normal_form,
    table_a,
    table_g,
    table_image,
)
from .onsager import AUTOMORPHISMS, A, G, check_dolan_grady, dolan_grady_holds, onsager_auto, onsager_bracket
from .report import Report
from .sl2 import X, Y, Z, sl2_omega, sl2_prime
from .tetra import (
    NAMED_PERMS,
    VERTICES,
    all_permutations,
    generator_image,
    generator_loop,
    tetra_bracket,
)

CANONICAL_GENERATORS = ((1, 2), (2, 3), (3, 1), (0, 3), (0, 1), (0, 2))


def _distinct(n: int):
    return itertools.permutations(VERTICES, n)


def verify_tetra_relations() -> Report:
    """Defining relations on the generator images, over every index combination."""
    rep = Report("relations")
    gen = generator_image
    for i, j in _distinct(2):
        rep.add(f"X{i}{j} + X{j}{i} = 0", (gen(i, j) + gen(j, i)).is_zero())
    for h, i, j in _distinct(3):
        lhs = tetra_bracket(gen(h, i), gen(i, j))
        rep.add(f"[X{h}{i}, X{i}{j}] = 2X{h}{i} + 2X{i}{j}", lhs == 2 * gen(h, i) + 2 * gen(i, j))
    for h, i, j, k in _distinct(4):
        a, b = gen(h, i), gen(j, k)
        ab = tetra_bracket(a, b)
        lhs = tetra_bracket(a, tetra_bracket(a, ab))
        rep.add(f"[X{h}{i}, [X{h}{i}, [X{h}{i}, X{j}{k}]]] = 4[X{h}{i}, X{j}{k}]", lhs == 4 * ab)
    return rep


def verify_prime_brackets(max_m: int) -> Report:
    """Brackets of a'_0 = X23 and a'_1 = X01 against a_m, a_{1-m}, g_m, for 1 <= m <= max_m."""
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    rep = Report("prime brackets")
    br = loop_bracket
    p0 = generator_loop(2, 3)
    p1 = generator_loop(0, 1)

    def a(m):
        return table_a(0, m)

    def total(items):
        out = LOOP_ZERO
        for x in items:
            out = out + x
        return out

    for m in range(1, max_m + 1):
        sa = total(a(i) for i in range(1, m))
        sa_neg = total(a(1 - i) for i in range(1, m))
        sg = total(table_g(0, i) for i in range(1, m))
        span = total(a(i) for i in range(1 - m, m + 1))
        am, a1m, gm = a(m), a(1 - m), table_g(0, m)
        cases = (
            ("[a'0, a_m]", br(p0, am), -2 * p0 + 2 * am + 4 * sa - 4 * sg),
            ("[a'0, a_{1-m}]", br(p0, a1m), -2 * p0 - 2 * a1m - 4 * sa_neg - 4 * sg),
            ("[a'0, g_m]", br(p0, gm), 2 * span),
            ("[a'1, a_m]", br(p1, am), 2 * p1 - 2 * am - 4 * sa - 4 * sg),
            ("[a'1, a_{1-m}]", br(p1, a1m), 2 * p1 + 2 * a1m + 4 * sa_neg - 4 * sg),
            ("[a'1, g_m]", br(p1, gm), 2 * span),
        )
        for label, lhs, rhs in cases:
            rep.add(f"{label} at m={m}", lhs == rhs)
    return rep


def verify_table(max_m: int = 20) -> Report:
    """Closed-form rows against the bracket recursion, all three levels."""
    rep = Report("table")
    for level in range(3):
        rec = BasisImages(level_perm(level))
        for m in range(1, max_m + 1):
            recursed = {"a": rec.a(m), "a_neg": rec.a(1 - m), "g": rec.g(m)}
            for kind in ROW_KINDS:
                name = {"a": "a_m", "a_neg": "a_{1-m}", "g": "g_m"}[kind] + "'" * level
                rep.add(f"table {name} at m={m}", table_image(level, kind, m) == recursed[kind])
    # the stepping identities, read off the closed forms themselves
    a0 = table_a(0, 0)
    g1 = table_g(0, 1)
    for m in range(1, max_m + 1):
        rep.add(f"[a_{m}, a_0] = 2g_{m}", loop_bracket(table_a(0, m), a0) == 2 * table_g(0, m))
        rep.add(f"[g_1, a_{m}] = a_{m + 1} - a_{m - 1}",
                loop_bracket(g1, table_a(0, m)) == table_a(0, m + 1) - table_a(0, m - 1))
    return rep


def basis_family(n: int) -> list:
    """a_m, g_l (|m| <= n, 1 <= l <= n) with their primed and double-primed copies."""
    out = []
    for level in range(3):
        for m in range(-n, n + 1):
            out.append(table_a(level, m))
        for l in range(1, n + 1):
            out.append(table_g(level, l))
    return out


def verify_independence(n: int = 8) -> Report:
    rep = Report("independence")
    family = basis_family(n)
    r = rank(loop_coordinates(u) for u in family)
    rep.add(f"rank of the {len(family)} basis images with |m|, l <= {n}", r == len(family),
            f"rank {r}")
    gens = [generator_loop(i, j) for i, j in CANONICAL_GENERATORS]
    rep.add("the six generator images are linearly independent",
            rank(loop_coordinates(u) for u in gens) == 6)
    return rep


def _onsager_basis(n: int) -> list:
    return [(f"A_{m}", A(m)) for m in range(-n, n + 1)] + [(f"G_{l}", G(l)) for l in range(1, n + 1)]


def verify_brackets(max_degree: int = 6) -> Report:
    """Bracket formulas for the primed generators and the Onsager homomorphism on basis pairs."""
    rep = Report("brackets")
    rep.extend(verify_prime_brackets(max(1, max_degree)))
    n = max(1, min(max_degree, 5))
    basis = _onsager_basis(n)
    for (nu, u), (nv, v) in itertools.combinations_with_replacement(basis, 2):
        lhs = onsager_image(onsager_bracket(u, v))
        rhs = loop_bracket(onsager_image(u), onsager_image(v))
        rep.add(f"image of [{nu}, {nv}]", lhs == rhs)
    return rep


def _sl2_word(u, triple=(1, 2, 3)):
    h, i, j = triple
    return Sum(((u.x, Generator(h, i)), (u.y, Generator(i, j)), (u.z, Generator(j, h))))


# equitable generators of L(sl2) and their images under the standard loop homomorphism
_LOOP_WORDS = {
    "X1": Generator(1, 2), "Y1": Generator(2, 3), "Z1": Generator(3, 1),
    "X0": Generator(3, 0), "Y0": Generator(0, 1), "Z0": Generator(1, 3),
}
_LOOP_OMEGA = {"X0": (-1, "Y0"), "Y0": (-1, "X0"), "Z0": (-1, "Z0"),
               "X1": (-1, "Y1"), "Y1": (-1, "X1"), "Z1": (-1, "Z1")}
_LOOP_D = {"X0": (1, "X1"), "Y0": (1, "Y1"), "Z0": (1, "Z1"),
           "X1": (1, "X0"), "Y1": (1, "Y0"), "Z1": (1, "Z0")}
_CHEVALLEY_AS_EQUITABLE = {
    "e": ((Fraction(1, 2), "X"), (Fraction(1, 2), "Z")),
    "f": ((Fraction(-1, 2), "Y"), (Fraction(-1, 2), "Z")),
    "h": ((Fraction(1), "Z"),),
}


def verify_diagrams() -> Report:
    rep = Report("diagrams")
    # sl2: prime and omega against the standard homomorphism
    for label, u in (("X", X), ("Y", Y), ("Z", Z)):
        for name, auto in (("prime", sl2_prime), ("omega", sl2_omega)):
            down = evaluate(_sl2_word(auto(u)))
            across = evaluate(_sl2_word(u), NAMED_PERMS[name])
            rep.add(f"sl2 diagram {name} on {label}", down == across)

    # Onsager: down, Down, star against the standard homomorphism
    for name in AUTOMORPHISMS:
        perm = NAMED_PERMS[name]
        for m, word in ((0, Generator(1, 2)), (1, Generator(0, 3))):
            got = onsager_image(onsager_auto(A(m), name))
            rep.add(f"Onsager diagram {name} on A_{m}", got == evaluate(word, perm).normal_form)
        for label, u in _onsager_basis(3):
            got = onsager_image(onsager_auto(u, name))
            rep.add(f"Onsager diagram {name} on {label}",
                    got == s4_act_normal_form(onsager_image(u), perm))

    # L(sl2): omega and d on the equitable generators
    for name, table in (("omega", _LOOP_OMEGA), ("d", _LOOP_D)):
        perm = NAMED_PERMS[name]
        for g, (sign, target) in table.items():
            down = sign * evaluate(_LOOP_WORDS[target])
            across = evaluate(_LOOP_WORDS[g], perm)
            rep.add(f"loop diagram {name} on {g}", down == across)
            rep.add(f"loop diagram {name} on {g} via loop_image",
                    loop_image(sign * equitable_generator(target)) == across.normal_form)
    for c in CHEVALLEY_NAMES:
        u = chevalley_generator(c)
        rep.add(f"omega as T -> 1/T on {c}",
                loop_omega(u) == s4_act_normal_form(u, NAMED_PERMS["omega"]))

    # sigma intertwines the prime automorphisms
    for i, j in CANONICAL_GENERATORS:
        p = NAMED_PERMS["prime"]
        rep.add(f"prime diagram on X{i}{j}", loop_prime(generator_loop(i, j)) == generator_loop(p(i), p(j)))

    # natural inclusion = sigma after the standard loop homomorphism
    for c in CHEVALLEY_NAMES:
        letter, idx = c[0], c[1]
        word = Sum(tuple((coef, _LOOP_WORDS[f"{sym}{idx}"]) for coef, sym in _CHEVALLEY_AS_EQUITABLE[letter]))
        rep.add(f"natural inclusion on {c}", evaluate(word).normal_form == chevalley_generator(c))
    return rep


def verify_presentation(max_degree: int = 3) -> Report:
    rep = Report("presentation")
    rep.extend(check_loop_presentation(max_degree))
    rep.add("Dolan-Grady for (A_0, A_1) in O", check_dolan_grady(A(0), A(1)))
    for quad in itertools.permutations(VERTICES):
        a = onsager_image(A(0), quad)
        b = onsager_image(A(1), quad)
        h, i, j, k = quad
        rep.add(f"Dolan-Grady for (X{h}{i}, X{j}{k})", dolan_grady_holds(a, b, loop_bracket))
    return rep


SAMPLE_WORDS = (
    "[X12, X03]",
    "[X01, [X23, X02]]",
    "[[X12, X30], [X01, X23]] - 3*X02",
    "[X31, [X31, [X02, X13]]] + 1/2*[X10, X32]",
    "[[X03, X12], [X12, [X03, X12]]]",
)
ZERO_WORDS = (
    "X12 + X21",
    "[X12, X23] - 2*X12 - 2*X23",
    "[X01, [X01, [X01, X23]]] - 4*[X01, X23]",
)


def verify_s4_injection() -> Report:
    rep = Report("s4")
    perms = all_permutations()
    maps = {}
    for p in perms:
        maps[p] = tuple(generator_loop(p(i), p(j)) for i, j in CANONICAL_GENERATORS)
    distinct = len(set(maps.values()))
    rep.add("24 pairwise distinct maps on the generators", distinct == 24, f"{distinct} distinct")
    words = [parse(w) for w in SAMPLE_WORDS]
    zero_words = [parse(w) for w in ZERO_WORDS]
    for p in perms:
        tag = p.to_text()
        ok = True
        for w in words:
            image = evaluate(w, p)
            ok = ok and image.normal_form == s4_act_normal_form(evaluate(w).normal_form, p)
            if isinstance(w, Bracket):
                ok = ok and image == tetra_bracket(evaluate(w.left, p), evaluate(w.right, p))
        rep.add(f"perm {tag} preserves brackets on sample words", ok)
        rep.add(f"perm {tag} sends relations to zero", all(evaluate(w, p).is_zero() for w in zero_words))
    rep.extend(verify_independence(2))
    return rep


def verify_round_trip(elements) -> Report:
    """Decompose then reconstruct; each piece must lie in its Delta summand."""
    from .loop import delta_membership

    rep = Report("round trip")
    for n, u in enumerate(elements):
        coords = omega_decompose(u)
        pieces = [onsager_image(coords.omega), loop_prime(onsager_image(coords.omega_p)),
                  loop_prime(loop_prime(onsager_image(coords.omega_pp)))]
        ok = omega_reconstruct(coords) == u and all(delta_membership(x, k) for k, x in enumerate(pieces))
        rep.add(f"element {n}", ok)
    return rep


SUITES = ("relations", "table", "brackets", "diagrams", "presentation", "s4")


def run_suite(name: str, max_degree: int = 6) -> Report:
    if name == "all":
        rep = Report("all")
        for s in SUITES:
            rep.extend(run_suite(s, max_degree))
        return rep
    if name == "relations":
        return verify_tetra_relations()
    if name == "table":
        rep = verify_table(max(1, max_degree))
        rep.extend(verify_independence(max(1, min(max_degree, 8))))
        return rep
    if name == "brackets":
        return verify_brackets(max_degree)
    if name == "diagrams":
        return verify_diagrams()
    if name == "presentation":
        return verify_presentation(max_degree)
    if name == "s4":
        return verify_s4_injection()
    raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES + ('all',))}")
