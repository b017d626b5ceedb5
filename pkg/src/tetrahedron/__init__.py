"""Exact computation in the tetrahedron algebra, the Onsager algebra and sl2 loop algebras.

Everything is realized inside sl2 (x) Q[T, 1/T, 1/(T-1)] with exact rational
arithmetic.  See the README for the command-line tool.
"""

from .chebyshev import chebyshev_shifted, chebyshev_shifted_poly, chebyshev_u
from .expr import ParseError, evaluate, parse, print_expr
from .loop import (
    LoopElem,
    check_loop_presentation,
    delta_membership,
    format_loop,
    loop_bracket,
    loop_from_json,
    loop_omega,
    loop_prime,
    loop_to_json,
    parse_loop,
    split_delta,
)
from .omega import (
    OmegaCoords,
    loop_image,
    omega_decompose,
    omega_reconstruct,
    onsager_image,
    s4_act_normal_form,
)
from .onsager import A, G, OnsagerElem, check_dolan_grady, onsager_auto, onsager_bracket
from .ring import (
    Polynomial,
    RingElem,
    canonical_decompose,
    eval_at,
    format_ring,
    parse_ring,
    ring_add,
    ring_invert,
    ring_mul,
    ring_prime,
)
from .sl2 import Sl2Elem, sl2_bracket, sl2_omega, sl2_prime
from .tetra import (
    NAMED_PERMS,
    Permutation,
    TetraElem,
    generator_image,
    s4_act,
    std_hom_sl2,
    tetra_bracket,
)
from .verify import (
    run_suite,
    verify_prime_brackets,
    verify_s4_injection,
    verify_tetra_relations,
)

__all__ = [
    "A", "G", "NAMED_PERMS", "LoopElem", "OmegaCoords", "OnsagerElem", "ParseError",
    "Permutation", "Polynomial", "RingElem", "Sl2Elem", "TetraElem",
    "canonical_decompose", "chebyshev_shifted", "chebyshev_shifted_poly", "chebyshev_u",
    "check_dolan_grady", "check_loop_presentation", "delta_membership", "eval_at", "evaluate",
    "format_loop", "format_ring", "generator_image", "loop_bracket", "loop_from_json",
    "loop_image", "loop_omega", "loop_prime", "loop_to_json", "omega_decompose",
    "omega_reconstruct", "onsager_auto", "onsager_bracket", "onsager_image", "parse",
    "parse_loop", "parse_ring", "print_expr", "ring_add", "ring_invert", "ring_mul",
    "ring_prime", "run_suite", "s4_act", "s4_act_normal_form", "sl2_bracket", "sl2_omega",
    "sl2_prime", "split_delta", "std_hom_sl2", "tetra_bracket", "verify_prime_brackets",
    "verify_s4_injection", "verify_tetra_relations",
]
