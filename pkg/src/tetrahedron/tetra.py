"""The tetrahedron algebra, realized through its faithful image in sl2 (x) A.

Elements are stored as their loop-algebra normal form.  Generators X_ij
(i != j in {0,1,2,3}) map to the six fixed images below, and the symmetric
group S4 acts by permuting the vertex labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .loop import LOOP_ZERO, LoopElem, loop_bracket
from .ring import ONE, ZERO, T, TP, TPP
from .sl2 import Sl2Elem

VERTICES = (0, 1, 2, 3)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0,1,2,3}, stored as the images of 0, 1, 2, 3."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(VERTICES):
            raise ValueError(f"not a permutation of 0123: {self.images!r}")
        object.__setattr__(self, "images", images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(i)) for i in VERTICES))

    def inverse(self) -> "Permutation":
        inv = [0] * 4
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == VERTICES

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """``"0132"``: the images of 0, 1, 2, 3 in order."""
        if len(text) != 4 or not text.isdigit():
            raise ValueError(f"expected four digits, got {text!r}")
        return cls(tuple(int(c) for c in text))

    def to_text(self) -> str:
        return "".join(map(str, self.images))

    def __str__(self):
        return self.to_text()


IDENTITY = Permutation(VERTICES)

NAMED_PERMS = {
    "prime": Permutation((0, 2, 3, 1)),  # (123)
    "omega": Permutation((0, 3, 2, 1)),  # (13)
    "d": Permutation((2, 3, 0, 1)),  # (13)(02)
    "down": Permutation((0, 2, 1, 3)),  # (12)
    "Down": Permutation((3, 1, 2, 0)),  # (03)
    "star": Permutation((1, 0, 3, 2)),  # (01)(23)
}


def all_permutations() -> list:
    return [Permutation(p) for p in itertools.permutations(VERTICES)]


def resolve_perm(perm) -> Permutation:
    """Accept a Permutation, a name from NAMED_PERMS, or a four-digit image list."""
    if isinstance(perm, Permutation):
        return perm
    if isinstance(perm, str):
        if perm in NAMED_PERMS:
            return NAMED_PERMS[perm]
        return Permutation.parse(perm)
    return Permutation(tuple(perm))


def perm_power(p: Permutation, k: int) -> Permutation:
    out = IDENTITY
    for _ in range(k % 24):
        out = out.then(p)
    return out


# -- generators -------------------------------------------------------------

_GENERATOR_IMAGES = {
    (1, 2): LoopElem(ONE, ZERO, ZERO),
    (2, 3): LoopElem(ZERO, ONE, ZERO),
    (3, 1): LoopElem(ZERO, ZERO, ONE),
    (0, 3): LoopElem(ZERO, T, T - ONE),
    (0, 1): LoopElem(TP - ONE, ZERO, TP),
    (0, 2): LoopElem(TPP, TPP - ONE, ZERO),
}


def check_generator(i: int, j: int) -> None:
    if i not in VERTICES or j not in VERTICES:
        raise ValueError(f"generator indices must lie in 0..3, got X{i}{j}")
    if i == j:
        raise ValueError(f"generator digits must differ, got X{i}{j}")


def generator_loop(i: int, j: int) -> LoopElem:
    check_generator(i, j)
    if (i, j) in _GENERATOR_IMAGES:
        return _GENERATOR_IMAGES[i, j]
    return -_GENERATOR_IMAGES[j, i]


@dataclass(frozen=True)
class TetraElem:
    """An element of the tetrahedron algebra, identified with its normal form.

    ``source`` optionally keeps the expression the element was built from; it
    does not take part in equality.
    """

    normal_form: LoopElem = LOOP_ZERO
    source: object = field(default=None, compare=False, repr=False)

    def __add__(self, other: "TetraElem") -> "TetraElem":
        return TetraElem(self.normal_form + other.normal_form)

    def __sub__(self, other: "TetraElem") -> "TetraElem":
        return TetraElem(self.normal_form - other.normal_form)

    def __neg__(self) -> "TetraElem":
        return TetraElem(-self.normal_form)

    def __mul__(self, c) -> "TetraElem":
        return TetraElem(self.normal_form * Fraction(c))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.normal_form.is_zero()

    def to_text(self) -> str:
        return self.normal_form.to_text()

    def __str__(self):
        return self.to_text()


TETRA_ZERO = TetraElem()


def generator_image(i: int, j: int) -> TetraElem:
    return TetraElem(generator_loop(i, j))


def tetra_bracket(u: TetraElem, v: TetraElem) -> TetraElem:
    return TetraElem(loop_bracket(u.normal_form, v.normal_form))


def s4_act(u, perm) -> TetraElem:
    """Image of ``u`` under the vertex permutation ``perm``.

    ``u`` may be a generator pair ``(i, j)``, an expression tree, or a
    TetraElem.  A TetraElem with a recorded source is acted on through that
    source; otherwise it is first written in the Onsager coordinates of the
    three-way decomposition, where the action is known on every basis vector.
    """
    perm = resolve_perm(perm)
    if isinstance(u, tuple) and len(u) == 2:
        i, j = u
        check_generator(i, j)
        return generator_image(perm(i), perm(j))
    if isinstance(u, TetraElem):
        if u.source is None:
            from .omega import s4_act_normal_form
            return TetraElem(s4_act_normal_form(u.normal_form, perm))
        u = u.source
    from .expr import evaluate
    return evaluate(u, perm)


def _check_distinct(idx, n: int) -> tuple:
    idx = tuple(int(i) for i in idx)
    if len(idx) != n or len(set(idx)) != n or not set(idx) <= set(VERTICES):
        raise ValueError(f"expected {n} mutually distinct indices from 0..3, got {idx!r}")
    return idx


def std_hom_sl2(u: Sl2Elem, triple=(1, 2, 3)) -> TetraElem:
    """X -> X_hi, Y -> X_ij, Z -> X_jh, extended linearly."""
    h, i, j = _check_distinct(triple, 3)
    return (u.x * generator_image(h, i) + u.y * generator_image(i, j)
            + u.z * generator_image(j, h))
