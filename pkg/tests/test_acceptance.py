"""One test per acceptance criterion; each records a PASS/FAIL line.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction

from tetrahedron.chebyshev import _shifted, _u, chebyshev_u
from tetrahedron.expr import Auto, Bracket, Generator, Sum, evaluate, parse, print_expr
from tetrahedron.loop import LoopElem, chevalley_generator, loop_bracket
from tetrahedron.omega import table_image
from tetrahedron.ring import RingElem, Polynomial, eval_at, ring_prime
from tetrahedron.sl2 import Y, Z, efh_to_equitable
from tetrahedron.tetra import NAMED_PERMS, all_permutations
from tetrahedron.verify import (
    verify_diagrams,
    verify_independence,
    verify_prime_brackets,
    verify_presentation,
    verify_round_trip,
    verify_s4_injection,
    verify_table,
    verify_tetra_relations,
)

RESULTS = []
PAIRS = [(i, j) for i in range(4) for j in range(4) if i != j]


def record(number: int, title: str, passed: bool, detail: str = "") -> None:
    line = f"{'PASS' if passed else 'FAIL'} criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    RESULTS.append(line)
    print(line)
    assert passed, line


def _timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def test_criterion_01_relations():
    rep, secs = _timed(verify_tetra_relations)
    record(1, "defining relations on all index combinations",
           rep.ok and rep.checked == 60 and secs < 1.0,
           f"{rep.summary()}, {secs:.3f}s")


def test_criterion_02_table():
    # start cold so the timing covers the Chebyshev closed forms too
    for cached in (table_image, _u, _shifted):
        cached.cache_clear()
    rep, secs = _timed(verify_table, 20)
    rows = [c for c in rep.checks if c.name.startswith("table ")]
    record(2, "nine closed-form rows equal the bracket recursion for m <= 20",
           rep.ok and len(rows) == 9 * 20 and secs < 5.0,
           f"{rep.summary()}, {secs:.3f}s")


def test_criterion_03_prime_brackets():
    rep = verify_prime_brackets(15)
    record(3, "six bracket formulas for a'_0, a'_1 at 1 <= m <= 15",
           rep.ok and rep.checked == 6 * 15, rep.summary())


def _random_word(rng, depth):
    if depth == 0 or rng.random() < 0.25:
        return Generator(*rng.choice(PAIRS))
    return Bracket(_random_word(rng, depth - 1), _random_word(rng, depth - 1))


def _depth(node):
    if isinstance(node, Bracket):
        return 1 + max(_depth(node.left), _depth(node.right))
    return 0


def test_criterion_04_round_trip():
    rng = random.Random(4)
    words = [_random_word(rng, 5) for _ in range(200)]
    assert max(_depth(w) for w in words) <= 5
    rep = verify_round_trip(evaluate(w).normal_form for w in words)
    record(4, "decompose/reconstruct is the identity on random bracket words",
           rep.ok and rep.checked >= 200, rep.summary())


def test_criterion_05_independence():
    rep = verify_independence(8)
    record(5, "75 basis images with |m|, l <= 8 are linearly independent", rep.ok,
           rep.checks[0].detail)


def test_criterion_06_presentation():
    rep = verify_presentation(6)
    dg = [c for c in rep.checks if c.name.startswith("Dolan-Grady for (X")]
    record(6, "loop presentations hold and Dolan-Grady holds for all 24 quads",
           rep.ok and len(dg) == 24, rep.summary())


def test_criterion_07_diagrams():
    rep = verify_diagrams()
    # the e_0 chase: (X30 + X13)/2 under sigma is -(Y+Z)(x)T/2 = f(x)T
    chased = evaluate(parse("1/2*X30 + 1/2*X13")).normal_form
    t = RingElem(0, [1])
    expected = LoopElem.tensor(Fraction(-1, 2) * (Y + Z), t)
    e0_ok = chased == expected == LoopElem.tensor(efh_to_equitable(0, 1, 0), t) == chevalley_generator("e0")
    record(7, "commuting diagrams for sl2, O, L(sl2), prime and the natural inclusion",
           rep.ok and e0_ok, rep.summary())


def test_criterion_08_s4():
    rep = verify_s4_injection()
    record(8, "24 pairwise distinct automorphisms on the generators",
           rep.result("24 pairwise distinct maps on the generators") and rep.ok,
           rep.checks[0].detail)


def _random_ring(rng):
    def part():
        return [rng.randint(-4, 4) for _ in range(rng.randint(0, 3))]
    return RingElem(Fraction(rng.randint(-5, 5), rng.randint(1, 3)), part(), part(), part())


def test_criterion_09_core_properties():
    rng = random.Random(9)
    cases = failures = 0

    def check(ok):
        nonlocal cases, failures
        cases += 1
        failures += not ok

    points = (Fraction(2), Fraction(-1, 3), Fraction(5, 7))
    for _ in range(120):
        a, b, c = (_random_ring(rng) for _ in range(3))
        check(a * b == b * a)
        check((a * b) * c == a * (b * c))
        check(a * (b + c) == a * b + a * c)
        check(ring_prime(ring_prime(ring_prime(a))) == a and ring_prime(a * b) == ring_prime(a) * ring_prime(b))
        t = rng.choice(points)
        check(eval_at(a * b, t) == eval_at(a, t) * eval_at(b, t) and eval_at(a + b, t) == eval_at(a, t) + eval_at(b, t))
    for _ in range(60):
        u, v, w = (LoopElem(*(_random_ring(rng) for _ in range(3))) for _ in range(3))
        br = loop_bracket
        check((br(u, br(v, w)) + br(v, br(w, u)) + br(w, br(u, v))).is_zero())
    two_x = Polynomial([0, 2])
    for n in range(1, 41):
        check(chebyshev_u(n + 1) == two_x * chebyshev_u(n) - chebyshev_u(n - 1))
    record(9, "ring axioms, prime order 3, Jacobi, Chebyshev recurrence, evaluation",
           failures == 0 and cases >= 500, f"{cases} cases, {failures} failures")


def _random_ast(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        return Generator(*rng.choice(PAIRS))
    kind = rng.randrange(3)
    if kind == 0:
        return Bracket(_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    if kind == 1:
        names = sorted(NAMED_PERMS) + all_permutations()
        return Auto(rng.choice(names), _random_ast(rng, depth - 1))
    terms = tuple((Fraction(rng.randint(-9, 9), rng.randint(1, 6)), _random_ast(rng, depth - 1))
                  for _ in range(rng.randint(1, 3)))
    return Sum(terms)


ERROR_CASES = (
    ("[X12 X03]", 5),
    ("X11", 0),
    ("perm(0112)(X12)", 5),
)


def test_criterion_10_parser():
    rng = random.Random(10)
    asts = [_random_ast(rng, 6) for _ in range(250)]
    round_trips = sum(parse(print_expr(a)) == a for a in asts)
    errors_ok = True
    for text, pos in ERROR_CASES:
        proc = subprocess.run([sys.executable, "-m", "tetrahedron", "eval", text],
                              capture_output=True, text=True)
        errors_ok = errors_ok and proc.returncode == 2 and f"at position {pos}" in proc.stderr
    record(10, "print/parse round trip and exit code 2 with positions on bad input",
           round_trips == len(asts) and errors_ok,
           f"{round_trips}/{len(asts)} round trips")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
