"""Command-line interface: ``tetra eval|decompose|chebyshev|act|verify``."""

from __future__ import annotations

import argparse
import json
import sys

from .chebyshev import chebyshev_shifted_poly, chebyshev_u
from .expr import ParseError, evaluate, parse
from .loop import loop_to_json
from .omega import omega_decompose
from .onsager import onsager_to_json
from .tetra import NAMED_PERMS, resolve_perm
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

PERM_HELP = (
    "a name (" + ", ".join(NAMED_PERMS) + ") or four digits listing the images of "
    "0, 1, 2, 3, e.g. 0231 for (123)"
)


def _coords_json(coords) -> dict:
    return {label: onsager_to_json(c)
            for label, c in zip(("Omega", "Omega'", "Omega''"), coords.levels())}


def _emit_element(elem, fmt: str, basis: str) -> str:
    if basis == "omega":
        coords = omega_decompose(elem.normal_form)
        if fmt == "json":
            return json.dumps(_coords_json(coords), sort_keys=True)
        return coords.to_text()
    if fmt == "json":
        return json.dumps(loop_to_json(elem.normal_form), sort_keys=True)
    return elem.to_text()


def _parse_expr(text: str):
    try:
        return parse(text)
    except ParseError as err:
        raise _UsageError(f"parse error {err}\n  {text}\n  {' ' * err.pos}^") from None


class _UsageError(Exception):
    pass


def _cmd_eval(args) -> int:
    print(_emit_element(evaluate(_parse_expr(args.expr)), args.format, args.basis))
    return EXIT_OK


def _cmd_decompose(args) -> int:
    print(omega_decompose(evaluate(_parse_expr(args.expr)).normal_form).to_text())
    return EXIT_OK


def _cmd_chebyshev(args) -> int:
    if args.n < -1:
        raise _UsageError("n must be >= -1")
    if args.shifted:
        print(chebyshev_shifted_poly(args.n).to_text("T"))
    else:
        print(chebyshev_u(args.n).to_text("x"))
    return EXIT_OK


def _cmd_act(args) -> int:
    try:
        perm = resolve_perm(args.perm)
    except ValueError as err:
        raise _UsageError(f"bad --perm: {err}") from None
    print(_emit_element(evaluate(_parse_expr(args.expr), perm), args.format, "loop"))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.max_degree < 1:
        raise _UsageError("--max-degree must be >= 1")
    rep = run_suite(args.suite, args.max_degree)
    for line in rep.lines():
        print(line)
    print(rep.summary())
    return EXIT_OK if rep.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetra",
        description="Exact computation in the tetrahedron algebra via its loop-algebra normal form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--basis", choices=("loop", "omega"), default="loop",
                   help="loop: X/Y/Z coefficients; omega: Onsager coordinates of the three components")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("decompose", help="Onsager coordinates of the three components")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("chebyshev", help="Chebyshev polynomial U_n of the second kind")
    p.add_argument("n", type=int)
    p.add_argument("--shifted", action="store_true", help="print U_n(1 - 2T) instead of U_n(x)")
    p.set_defaults(func=_cmd_chebyshev)

    p = sub.add_parser("act", help="apply a vertex permutation to an expression")
    p.add_argument("expr")
    p.add_argument("--perm", required=True, help=PERM_HELP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-degree", type=int, default=6)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as err:
        print(f"tetra: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
