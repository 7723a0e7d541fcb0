"""Command-line front end.

Exit codes: 0 success, 1 domain error (irregular number, no finite
solution, failed verification), 2 usage or notation error, 3 I/O error.
Commands that report a single value print it bare on the first line and
repeat it on a stable ``#RESULT`` line for scripting; table commands
print the raw TSV and nothing else.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import tables, translit
from .core import SexNumber, multiply, to_floating
from .regular import IrregularError, NoFiniteSolutionError, invert, solve_linear

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _factored(n: int) -> str:
    """Trial-division factorization for diagnostics, e.g. 817 -> '19*43'.

    Falls back to the bare number when it is too large to factor fast.
    """
    if n >= 10**12:
        return str(n)
    parts: list[int] = []
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            parts.append(p)
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        parts.append(m)
    return "*".join(str(q) for q in parts)


def _residue_detail(residue: int) -> str:
    factored = _factored(residue)
    if factored == str(residue):
        return f"residue {residue}"
    return f"residue {residue} = {factored}"


def _read_absolute(text: str) -> SexNumber:
    return translit.to_number(translit.parse(text), "absolute")


def _cmd_parse(args: argparse.Namespace) -> int:
    numeral = translit.parse(args.text)
    if args.floating:
        mode = "floating"
    elif args.absolute or numeral.semicolon_index is not None:
        mode = "absolute"
    else:
        return _fail(
            EXIT_USAGE,
            f"{args.text!r} has no semicolon and is ambiguous:"
            " pass --absolute or --floating",
        )
    value = translit.to_number(numeral, mode)
    text = translit.format(value)
    print(f"canonical: {text}")
    print(f"mantissa: {value.mantissa}")
    if mode == "absolute":
        print(f"exponent: {value.exponent}")
        print(f"#RESULT canonical={text} mantissa={value.mantissa} exponent={value.exponent}")
    else:
        print(f"#RESULT canonical={text} mantissa={value.mantissa}")
    return EXIT_OK


def _cmd_recip(args: argparse.Namespace) -> int:
    value = _read_absolute(args.text)
    if not value:
        return _fail(EXIT_DOMAIN, "zero has no reciprocal")
    try:
        anchored = invert(value)
    except IrregularError as exc:
        return _fail(
            EXIT_DOMAIN,
            f"{translit.format(value)} is irregular, its reciprocal does not"
            f" exist as a finite digit string ({_residue_detail(exc.residue)})",
        )
    floating = to_floating(anchored)
    floating_text = translit.format(floating)
    anchored_text = translit.format(anchored)
    print(f"floating: {floating_text}")
    print(f"anchored: {anchored_text}")
    print(f"#RESULT floating={floating_text} anchored={anchored_text}")
    return EXIT_OK


def _cmd_mul(args: argparse.Namespace) -> int:
    product = multiply(_read_absolute(args.multiplicand), _read_absolute(args.multiplier))
    text = translit.format(product)
    print(text)
    print(f"#RESULT product={text} mantissa={product.mantissa} exponent={product.exponent}")
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    a = _read_absolute(args.a)
    b = _read_absolute(args.b)
    try:
        x = solve_linear(a, b)
    except NoFiniteSolutionError as exc:
        return _fail(
            EXIT_DOMAIN,
            f"no finite solution: x would need the irregular denominator"
            f" {exc.denominator} ({_residue_detail(exc.residue)})",
        )
    text = translit.format(x)
    print(text)
    print(f"#RESULT x={text} mantissa={x.mantissa} exponent={x.exponent}")
    return EXIT_OK


def _emit(path: str | None, text: str) -> int:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    return EXIT_OK


def _cmd_table_double(args: argparse.Namespace) -> int:
    seed = translit.to_number(translit.parse(args.seed), "floating")
    table = tables.generate_doubling(seed, args.rows, args.anchor)
    return _emit(args.output, tables.doubling_table_tsv(table))


def _cmd_table_standard(args: argparse.Namespace) -> int:
    return _emit(args.output, tables.standard_table_tsv(tables.generate_standard(args.limit)))


def _cmd_verify(args: argparse.Namespace) -> int:
    with open(args.file, encoding="utf-8") as handle:
        text = handle.read()
    report = tables.verify_table(tables.parse_tsv(text), args.mode)
    for finding in report.bad():
        print(f"row {finding.row_index}: {finding.kind}: {finding.message}")
    print(f"pairs: {report.count(tables.PAIR_OK)} ok, {report.count(tables.PAIR_BAD)} bad")
    if args.mode == "doubling":
        print(
            f"doubling: {report.count(tables.DOUBLING_OK)} ok,"
            f" {report.count(tables.DOUBLING_BAD)} bad"
        )
        print(
            f"halving: {report.count(tables.HALVING_OK)} ok,"
            f" {report.count(tables.HALVING_BAD)} bad"
        )
    parse_errors = report.count(tables.PARSE_ERROR)
    if parse_errors:
        print(f"parse errors: {parse_errors}")
    print(
        f"#RESULT ok={'true' if report.ok else 'false'}"
        f" pair_ok={report.count(tables.PAIR_OK)}"
        f" pair_bad={report.count(tables.PAIR_BAD)}"
        f" doubling_ok={report.count(tables.DOUBLING_OK)}"
        f" doubling_bad={report.count(tables.DOUBLING_BAD)}"
        f" halving_ok={report.count(tables.HALVING_OK)}"
        f" halving_bad={report.count(tables.HALVING_BAD)}"
        f" parse_errors={parse_errors}"
    )
    return EXIT_OK if report.ok else EXIT_DOMAIN


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _limit_int(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"expected an integer of at least 2, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sexagesimal",
        description="Exact Babylonian base-60 arithmetic and reciprocal tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("parse", help="report a numeral's canonical form")
    p.add_argument("text", help="numeral such as 10,12;45")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--absolute", action="store_true", help="read digits with their place value")
    mode.add_argument("--floating", action="store_true", help="read digits with no place value")
    p.set_defaults(handler=_cmd_parse)

    p = sub.add_parser("recip", help="finite reciprocal of a regular number")
    p.add_argument("text", help="the number to invert, read as absolute")
    p.set_defaults(handler=_cmd_recip)

    p = sub.add_parser("mul", help="multiply two numbers (multiplicand first)")
    p.add_argument("multiplicand")
    p.add_argument("multiplier")
    p.set_defaults(handler=_cmd_mul)

    p = sub.add_parser("solve", help="find x with x * A = B")
    p.add_argument("a", metavar="A", help="the divisor")
    p.add_argument("b", metavar="B", help="the product to reach")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("table", help="generate reciprocal tables as TSV")
    kind = p.add_subparsers(dest="kind", required=True, metavar="kind")
    d = kind.add_parser("double", help="successive doubling/halving table")
    d.add_argument("--seed", required=True, help="starting value, floating digits")
    d.add_argument("--rows", required=True, type=_positive_int, help="number of rows")
    d.add_argument(
        "--anchor", type=int, default=0,
        help="power of 60 giving the seed its place value (default 0)",
    )
    d.add_argument("-o", "--output", help="write to this file instead of stdout")
    d.set_defaults(handler=_cmd_table_double)
    s = kind.add_parser("standard", help="reciprocals of all regular numbers up to a limit")
    s.add_argument("--limit", required=True, type=_limit_int)
    s.add_argument("-o", "--output", help="write to this file instead of stdout")
    s.set_defaults(handler=_cmd_table_standard)

    p = sub.add_parser("verify", help="check a table file; exit 0 only if clean")
    p.add_argument("file")
    p.add_argument(
        "--mode", choices=("pairs", "doubling"), default="pairs",
        help="relation families to check (default pairs)",
    )
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits itself on --help (0) and usage errors (2).
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.handler(args)
    except translit.ParseError as exc:
        return _fail(EXIT_USAGE, str(exc))
    except (IrregularError, NoFiniteSolutionError, ZeroDivisionError) as exc:
        return _fail(EXIT_DOMAIN, str(exc))
    except ValueError as exc:
        return _fail(EXIT_USAGE, str(exc))
    except OSError as exc:
        return _fail(EXIT_IO, str(exc))


if __name__ == "__main__":
    sys.exit(main())
