"""Command-line front end.

Exit codes: 0 success (a false verdict is still a successful report),
2 usage or parse error, 3 precondition violation, 4 numeric failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .compounding import Phase, apply_phase, apply_shuffle, compound, euler_compose, shuffle_permutation
from .errors import (
    ConvergenceError,
    FormatError,
    IntegerOverflowError,
    MagicSquareError,
    PreconditionError,
)
from .exact import IntSquare, charpoly_exact
from .props import check_commute, check_magic, check_orthogonal_pair, property_report
from .spectral import jacobi_singular_values, parse_claim, spectrum_claim_check
from .squarefile import read_square, render, write_square

SCHEMA_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_NUMERIC = 0, 2, 3, 4


def load_square(ref: str, one_based: bool = False) -> IntSquare:
    """A path to a square file, or a builtin fixture name such as ``M3``."""
    path = Path(ref)
    if path.exists():
        return read_square(path, 1 if one_based else 0)
    if fixtures.is_square_name(ref):
        return fixtures.fixture(ref)
    raise FormatError(f"{ref!r} is neither a readable file nor a builtin square")


def _emit(args, m: IntSquare) -> None:
    sys.stdout.write(render(m, 1 if args.one_based else 0))


def _write(args, path: Path, m: IntSquare) -> None:
    write_square(path, m, 1 if args.one_based else 0)


def _report(m: IntSquare, pair: IntSquare | None) -> dict:
    rep = property_report(m)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "order": rep.order,
        "summation_index": rep.summation_index,
        "flags": {
            "semi_magic": rep.is_semi_magic,
            "magic": rep.is_magic,
            "natural": rep.is_natural,
            "regular": rep.is_regular,
            "pandiagonal": rep.is_pandiagonal,
        },
        "regular_constant": rep.regular_constant,
    }
    if pair is not None:
        cc = check_commute(m, pair)
        doc["pair"] = {
            "commutes": cc.commutes,
            "product_scalar": cc.product_scalar,
            "orthogonal_pair": check_orthogonal_pair(m, pair),
        }
    return doc


def _plain(doc: dict) -> str:
    rows = [("order", doc["order"]), ("summation_index", doc["summation_index"])]
    rows += list(doc["flags"].items())
    rows.append(("regular_constant", doc["regular_constant"]))
    rows += [(f"pair.{k}", v) for k, v in doc.get("pair", {}).items()]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def cmd_compound(args) -> int:
    seed_n = load_square(args.seed_a, args.one_based)
    seed_m = load_square(args.seed_b, args.one_based)
    if args.n is not None and args.n != seed_n.order:
        raise PreconditionError(f"-n {args.n} but seed {args.seed_a} has order {seed_n.order}")
    if args.m is not None and args.m != seed_m.order:
        raise PreconditionError(f"-m {args.m} but seed {args.seed_b} has order {seed_m.order}")
    pair = compound(seed_m, seed_n)
    ma, mb = euler_compose(pair)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    prefix = args.prefix or f"M{pair.order}"
    for suffix, sq in (("A", pair.a), ("B", pair.b), ("MA", ma), ("MB", mb)):
        path = out / f"{prefix}_{suffix}.txt"
        _write(args, path, sq)
        print(f"{path}\tsummation_index={check_magic(sq).summation_index}")
    return EXIT_OK


def cmd_check(args) -> int:
    m = load_square(args.square, args.one_based)
    pair = load_square(args.pair, args.one_based) if args.pair else None
    doc = _report(m, pair)
    sys.stdout.write(_plain(doc) if args.plain else json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_spectra(args) -> int:
    m = load_square(args.square, args.one_based)
    poly = charpoly_exact(m)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "order": m.order,
        "charpoly": {"coefficients": [str(c) for c in poly.coeffs], "text": str(poly)},
    }
    if args.claim is not None:
        parse_claim(args.claim)  # grammar errors surface before any work
        doc["claim"] = {"text": args.claim, "holds": spectrum_claim_check(m, args.claim)}
    if args.svd:
        doc["singular_values"] = [float(s) for s in jacobi_singular_values(m)]
    if args.plain:
        lines = [f"charpoly  {poly}"]
        if "claim" in doc:
            lines.append(f"claim     {doc['claim']['holds']}")
        if "singular_values" in doc:
            lines.append("svd       " + " ".join(f"{s:.12g}" for s in doc["singular_values"]))
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_shuffle(args) -> int:
    p = shuffle_permutation(args.n)
    if args.apply:
        # P is a 0/1 matrix, so --one-based only shifts the target
        p = apply_shuffle(p, load_square(args.apply, args.one_based))
        _emit(args, p)
    else:
        sys.stdout.write(render(p))
    return EXIT_OK


def cmd_phases(args) -> int:
    m = load_square(args.square, args.one_based)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = args.stem or Path(args.square).stem
    for phase in Phase:
        path = out / f"{stem}_{phase.value}.txt"
        _write(args, path, apply_phase(m, phase))
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commuting-magic",
        description="Build and audit commuting magic squares made by Kronecker compounding.",
    )
    parser.add_argument(
        "--one-based", action="store_true",
        help="read and write squares with entries 1..n^2 instead of 0..n^2-1",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compound", help="write A, B, M^A, M^B from two magic seeds")
    p.add_argument("seed_a", help="order-n seed tiled into A (file or builtin name)")
    p.add_argument("seed_b", help="order-m seed spread into B (file or builtin name)")
    p.add_argument("-n", type=int, help="expected order of seed_a")
    p.add_argument("-m", type=int, help="expected order of seed_b")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--prefix", help="file name prefix (default M<order>)")
    p.set_defaults(func=cmd_compound)

    p = sub.add_parser("check", help="property report for a square (or a pair)")
    p.add_argument("square")
    p.add_argument("--pair", help="second square: adds commutation and orthogonality")
    p.add_argument("--plain", action="store_true", help="human-readable table")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectra", help="exact characteristic polynomial and spectral checks")
    p.add_argument("square")
    p.add_argument("--claim", help='e.g. "L^4(L-360)(L^2+216)(L^2+17496)"')
    p.add_argument("--svd", action="store_true", help="also print singular values")
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=cmd_spectra)

    p = sub.add_parser("shuffle", help="order-n^2 shuffle permutation, or P M P")
    p.add_argument("n", type=int)
    p.add_argument("--apply", help="square of order n^2 to conjugate")
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("phases", help="write all eight dihedral images")
    p.add_argument("square")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--stem", help="file name stem (default: input stem)")
    p.set_defaults(func=cmd_phases)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (IntegerOverflowError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except MagicSquareError as exc:  # pragma: no cover - every subclass is mapped above
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
