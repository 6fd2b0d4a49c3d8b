"""Command-line front end.

Exit codes: 0 success, 1 validation/verification failed, 2 search found no
witness, 3 parse or usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .core import (
    DecompositionError,
    cyclic_sts,
    edge_decomposition,
    near_pencil,
    single_part,
    validate_decomposition,
)
from .factorization import (
    cyclic_factorization_from_starter,
    find_starter_factor,
    validate_factorization,
)
from .formats import FormatError
from .quasigroup import Quasigroup, cayley_factorization, cyclic_group, validate_latin_square
from .theorem import (
    DEFAULT_CAP,
    CapExceeded,
    coloring_from_assignment,
    find_assignment,
    verify_efl_bound,
    verify_p_coloring,
)

OK, INVALID, NO_WITNESS, USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _vertex_sets(text: str) -> list[list[int]]:
    """Parse ``"0,1,4;0,2,7"``."""
    try:
        return [[int(v) for v in chunk.split(",")] for chunk in text.split(";") if chunk.strip()]
    except ValueError:
        raise UsageError(f"cannot parse vertex sets {text!r}; expected e.g. '0,1,4;0,2,7'") from None


def _permutation(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse labeling {text!r}; expected e.g. '0,2,1'") from None


def _emit(text: str, out) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load(parse, path):
    try:
        text = formats.read_text(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _valid_dec(path):
    d = _load(formats.parse_decomposition, path)
    report = validate_decomposition(d)
    if not report.ok:
        print(f"{path}: invalid decomposition\n{report}")
        return None
    return d


def _valid_fac(path):
    fz = _load(formats.parse_factorization, path)
    report = validate_factorization(fz)
    if not report.ok:
        print(f"{path}: invalid factorization\n{report}")
        return None
    return fz


# -- commands --------------------------------------------------------------


def cmd_gen_dec(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    try:
        if args.kind == "single":
            d = single_part(args.n)
        elif args.kind == "edges":
            d = edge_decomposition(args.n)
        elif args.kind == "near-pencil":
            d = near_pencil(args.n)
        else:
            if not args.base:
                raise UsageError("--base is required for --kind cyclic-sts")
            d = cyclic_sts(args.n, _vertex_sets(args.base))
    except DecompositionError as exc:
        print(f"{exc}\n{exc.report}")
        return INVALID
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(formats.format_decomposition(d), args.output)
    return OK


def cmd_gen_fac(args) -> int:
    if args.latin:
        rows = _load(formats.parse_latin_square, args.latin)
        report = validate_latin_square(rows)
        if not report.ok:
            print(f"{args.latin}: not a Latin square\n{report}")
            return INVALID
        fz = cayley_factorization(Quasigroup(rows))
    else:
        if args.n is None:
            raise UsageError("--n is required")
        if args.n < 1:
            raise UsageError(f"--n must be >= 1, got {args.n}")
        if args.group:
            fz = cayley_factorization(cyclic_group(args.n))
        else:
            required = _vertex_sets(args.require) if args.require else []
            try:
                starter = find_starter_factor(args.n, required)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            if starter is None:
                print(f"no starter factor of order {args.n} satisfies the requirements")
                return NO_WITNESS
            fz = cyclic_factorization_from_starter(starter)
    _emit(formats.format_factorization(fz), args.output)
    return OK


def cmd_check(args) -> int:
    if args.kind == "dec":
        report = validate_decomposition(_load(formats.parse_decomposition, args.file))
    elif args.kind == "fac":
        report = validate_factorization(_load(formats.parse_factorization, args.file))
    else:
        report = validate_latin_square(_load(formats.parse_latin_square, args.file))
    print(f"{args.file}: {report}")
    return OK if report.ok else INVALID


def _search(args):
    d = _valid_dec(args.dec)
    fz = _valid_fac(args.fac)
    if d is None or fz is None:
        return INVALID, None, None, None
    if d.order != fz.order:
        raise UsageError(f"order mismatch: {args.dec} has n={d.order}, {args.fac} has n={fz.order}")
    h = find_assignment(d, fz)
    if h is None:
        print("no assignment exists for this decomposition and factorization")
        return NO_WITNESS, d, fz, None
    return OK, d, fz, h


def cmd_assign(args) -> int:
    code, _, _, h = _search(args)
    if h is None:
        return code
    _emit(formats.format_assignment(h), args.output)
    return OK


def cmd_color(args) -> int:
    code, d, fz, h = _search(args)
    if h is None:
        return code
    labeling = _permutation(args.labeling) if args.labeling else None
    try:
        col = coloring_from_assignment(d, fz, h, labeling)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = verify_p_coloring(d, col)
    if not report.ok:
        print(f"constructed coloring failed verification\n{report}")
        return INVALID
    if args.asg:
        _emit(formats.format_assignment(h), args.asg)
    _emit(formats.format_coloring(col), args.output)
    print(f"k {col.k} (n {d.order})", file=sys.stderr if args.output in (None, "-") else sys.stdout)
    return OK


def _load_certificate(d, path):
    col = _load(formats.parse_coloring, path)
    if col.order != d.order:
        raise UsageError(f"{path}: certificate order {col.order} != decomposition order {d.order}")
    if len(col.colors) != len(d.parts):
        raise UsageError(f"{path}: certificate lists {len(col.colors)} parts, expected {len(d.parts)}")
    return col


def cmd_verify(args) -> int:
    d = _valid_dec(args.dec)
    if d is None:
        return INVALID
    col = _load_certificate(d, args.col)
    report = verify_p_coloring(d, col)
    print(f"{args.col}: {report}")
    return OK if report.ok else INVALID


def cmd_oracle(args) -> int:
    d = _valid_dec(args.dec)
    if d is None:
        return INVALID
    try:
        result = verify_efl_bound(d, cap=args.cap)
    except CapExceeded as exc:
        print(f"refused: {exc}")
        return USAGE
    print(f"chi_prime {result.k}")
    print(f"efl_bound {'holds' if result.holds else 'fails'}")
    return OK if result.holds else INVALID


def cmd_export_dot(args) -> int:
    d = _valid_dec(args.dec)
    if d is None:
        return INVALID
    col = None
    if args.col:
        col = _load_certificate(d, args.col)
        report = verify_p_coloring(d, col)
        if not report.ok:
            print(f"{args.col}: certificate does not verify\n{report}")
            return INVALID
    _emit(formats.to_dot(d, col), args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eflcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate decompositions or factorizations")
    gen_sub = gen.add_subparsers(dest="what", required=True, parser_class=_Parser)

    p = gen_sub.add_parser("dec", help="generate a decomposition (.dec)")
    p.add_argument("--kind", required=True, choices=["single", "edges", "cyclic-sts", "near-pencil"])
    p.add_argument("--n", type=int)
    p.add_argument("--base", help="base blocks for cyclic-sts, e.g. '0,1,4;0,2,7'")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_dec)

    p = gen_sub.add_parser("fac", help="generate a linear factorization (.fac)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--latin", metavar="LSQ", help="Cayley factorization of a Latin square file")
    src.add_argument("--group", choices=["zn"], help="Cayley factorization of Z_n")
    src.add_argument("--starter-search", action="store_true", help="cyclic factorization from a starter")
    p.add_argument("--n", type=int)
    p.add_argument("--require", help="vertex sets that must carry a d-gon, e.g. '0,1,4;5,7,12'")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_fac)

    p = sub.add_parser("check", help="validate a .dec, .fac or .lsq file")
    p.add_argument("kind", choices=["dec", "fac", "latin"])
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    for name, func, help_ in (
        ("assign", cmd_assign, "search for an assignment (.asg)"),
        ("color", cmd_color, "build a coloring certificate (.col) from an assignment"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("dec")
        p.add_argument("fac")
        p.add_argument("-o", "--output")
        if name == "color":
            p.add_argument("--asg", help="also write the assignment here")
            p.add_argument("--labeling", help="factor-to-color permutation, e.g. '0,2,1'")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check a coloring certificate against a decomposition")
    p.add_argument("dec")
    p.add_argument("col")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact chromatic index and the n-color bound")
    p.add_argument("dec")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of parts")
    p.set_defaults(func=cmd_oracle)

    export = sub.add_parser("export", help="export to other formats")
    export_sub = export.add_subparsers(dest="fmt", required=True, parser_class=_Parser)
    p = export_sub.add_parser("dot", help="Graphviz description, one cluster per part")
    p.add_argument("dec")
    p.add_argument("--col", help="coloring certificate for edge colors")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
