"""Command-line front end.

Every subcommand writes one JSON object on a single line to stdout (render
writes SVG).  Diagnostics go to stderr.  Exit codes: 0 success or
clash-free, 1 clash found, 2 parameter error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .construct import (
    construct_multi,
    construct_pairwise,
    cycle_walk,
    derive_params,
    matrix_rows,
)
from .errors import ParameterError, ResourceError
from .render import RenderOptions, render_svg
from .ring import Permutation
from .search import DEFAULT_CAP, DEFAULT_MULTI_CAP, known_bounds, sigma_exact, sigma_exact_multi
from .verify import find_multi_clashes, find_pair_clashes, oracle_clashes

EXIT_OK = 0
EXIT_CLASH = 1
EXIT_PARAM = 2
EXIT_RESOURCE = 3


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _read_permutation(args) -> Permutation:
    if getattr(args, "random", None) is not None:
        # Python's Mersenne Twister, seeded explicitly, shuffling range(n)
        return Permutation.random(args.random, random.Random(args.seed))
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParameterError(f"cannot read {args.input}: {exc.strerror}") from None
    return Permutation.from_json(text)


def cmd_construct(args) -> int:
    n, k, r = args.n, args.k, args.r
    if r == 1:
        s, pi = construct_pairwise(n, k)
        trivial = (n - 1) // k - 1 <= 1
    else:
        s, pi = construct_multi(n, k, r)
        trivial = s <= 1
    d = ell = None
    if not trivial:
        p = derive_params(n, s)
        d, ell = p.d, p.ell
    _emit({"n": n, "k": k, "r": r, "s": s, "d": d, "ell": ell, "trivial": trivial,
           "perm": list(pi.values)})
    return EXIT_OK


def cmd_verify(args) -> int:
    pi = _read_permutation(args)
    s, k, r = args.s, args.k, args.r
    if args.all:
        witnesses = oracle_clashes(pi, s, k, r, cap=args.oracle_cap)
    elif r == 1:
        witnesses = find_pair_clashes(pi, s, k)
    else:
        witnesses = find_multi_clashes(pi, s, k, r)
    out = {"n": pi.n, "s": s, "k": k, "r": r, "clash_free": not witnesses}
    if args.random is not None:
        out["perm"] = list(pi.values)
    if witnesses:
        shown = witnesses if args.all else witnesses[:1]
        out["witnesses"] = [w.to_dict() for w in shown]
        out["witness_count"] = len(witnesses)
    _emit(out)
    return EXIT_OK if not witnesses else EXIT_CLASH


def _regime(n: int, k: int, r: int) -> str:
    if r >= n:
        return "r>=n"
    if r >= k:
        return "r>=k"
    if k >= n:
        return "k>=n"
    if k == 1:
        return "k=1"
    return "search"


def cmd_sigma(args) -> int:
    n, k, r = args.n, args.k, args.r
    if r == 1:
        res = sigma_exact(n, k, cap=args.cap or DEFAULT_CAP, threads=args.threads)
    else:
        res = sigma_exact_multi(n, k, r, cap=args.cap or DEFAULT_MULTI_CAP, threads=args.threads)
    lower, upper = known_bounds(n, k, r)
    _emit({"n": n, "k": k, "r": r, "value": res.value, "lower": lower, "upper": upper,
           "regime": _regime(n, k, r), "upper_probe_infeasible": res.upper_probe_infeasible,
           "nodes_explored": res.nodes_explored, "witness": list(res.witness.values)})
    return EXIT_OK


def cmd_bounds(args) -> int:
    n, k, r = args.n, args.k, args.r
    if n < 2 or k < 1 or r < 1:
        raise ParameterError(f"need n >= 2, k >= 1, r >= 1, got n={n}, k={k}, r={r}")
    lower, upper = known_bounds(n, k, r)
    _emit({"n": n, "k": k, "r": r, "lower": lower, "upper": upper})
    return EXIT_OK


def cmd_render(args) -> int:
    pi = _read_permutation(args)
    opts = RenderOptions(cell_px=args.cell_px, grid=not args.no_grid, heatmap=args.heatmap, r=args.r)
    svg = render_svg(pi, args.s, args.k, opts)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_matrix(args) -> int:
    p = derive_params(args.n, args.s)
    walk = cycle_walk(p)
    move_grid = [[None] * p.ell for _ in range(p.d)]
    for (i, j), move in zip(walk.cells, walk.moves):
        move_grid[i][j] = move.kind.value
    _emit({"n": p.n, "s": p.s, "d": p.d, "ell": p.ell, "rows": matrix_rows(p),
           "move_grid": move_grid, "moves": [m.kind.value for m in walk.moves],
           "perm": list(walk.values())})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clashfree",
        description="Construct, verify and search for clash-free permutations of Z_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a clash-free permutation for (n, k[, r])")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a permutation for (s, k[, r])-clashes")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="permutation JSON file ('-' or omitted: stdin)")
    src.add_argument("--random", type=int, metavar="N", help="verify a seeded random permutation of Z_N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--all", action="store_true", help="list every clash by exhaustive enumeration")
    p.add_argument("--oracle-cap", type=int, default=2_000_000, help="max subsets enumerated by --all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sigma", help="exact sigma(n, k[, r]) by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--cap", type=int, default=None,
                   help=f"largest n searched (default {DEFAULT_CAP}, {DEFAULT_MULTI_CAP} for r > 1)")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("bounds", help="known interval for sigma(n, k[, r]) without search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("render", help="draw the torus rectangle packing as SVG")
    p.add_argument("--input", help="permutation JSON file ('-' or omitted: stdin)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1, help="heatmap highlights coverage above r")
    p.add_argument("--cell-px", type=int, default=20)
    p.add_argument("--heatmap", action="store_true")
    p.add_argument("--no-grid", action="store_true")
    p.add_argument("--out", help="write SVG here instead of stdout")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("matrix", help="print the cycle matrix and walk for (n, s)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_matrix)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"clashfree: parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except ResourceError as exc:
        print(f"clashfree: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
