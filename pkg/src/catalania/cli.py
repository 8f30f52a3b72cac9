"""Command-line surface.

Subcommands: seq, trees (count|list), involution, riordan (entry|check),
verify.  Numeric flags take exact rationals as "p/q" strings; there is no
float parsing anywhere.  Exit codes: 0 success / all checks pass, 1 a
mathematical mismatch, 2 usage or resource errors.  All output is UTF-8
and newline-terminated, and identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .counting import catalan_gen, catalan_sequence
from .exact import as_rat, binom, rat_str
from .forest import EnumerationBudgetError, encode, generate_forests
from .identities import (
    ConfigError,
    load_config,
    reports_to_json,
    run_suite,
)
from .involution import (
    EXCEPTIONAL,
    FIRST,
    classify,
    encode_colored,
    enumerate_colored,
    involute,
)
from .riordan import (
    catalan_family,
    catalan_gf,
    modified_riordan_check,
    riordan_entry,
    riordan_theorem_check,
    series_binpow,
    series_from_json,
    RiordanArray,
)


def rat_flag(text: str) -> Fraction:
    try:
        return as_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def nat_flag(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalania",
        description="Exact generalized-Catalan enumeration and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print a generalized Catalan sequence")
    p_seq.add_argument("--beta", type=rat_flag, required=True)
    p_seq.add_argument("--gamma", type=rat_flag, default=Fraction(1))
    p_seq.add_argument("--n", type=nat_flag, required=True, help="largest index")
    p_seq.add_argument("--format", choices=("text", "json"), default="text")

    p_trees = sub.add_parser("trees", help="enumerate forests exhaustively")
    p_trees.add_argument("action", choices=("count", "list"))
    p_trees.add_argument("--beta", type=nat_flag, required=True)
    p_trees.add_argument("--n", type=nat_flag, required=True, help="internal vertices")
    p_trees.add_argument("--gamma", type=nat_flag, default=1, help="components")
    p_trees.add_argument("--check-formula", action="store_true",
                         help="compare the count with the closed form")
    p_trees.add_argument("--format", choices=("text", "paren", "json"), default="text",
                         help='"paren" is the text parenthesis encoding')

    p_inv = sub.add_parser("involution", help="alternating census of colored forests")
    p_inv.add_argument("--beta", type=nat_flag, required=True)
    p_inv.add_argument("--n", type=nat_flag, required=True, help="total index")
    p_inv.add_argument("--gamma", type=nat_flag, default=1)
    p_inv.add_argument("--alpha", type=nat_flag, default=1)
    p_inv.add_argument("--dump-pairs", action="store_true",
                       help="print matched pairs and exceptional structures")

    p_rio = sub.add_parser("riordan", help="array entries and summation checks")
    p_rio.add_argument("action", choices=("entry", "check"))
    p_rio.add_argument("--alpha", type=rat_flag)
    p_rio.add_argument("--beta", type=rat_flag)
    p_rio.add_argument("--gamma", type=rat_flag)
    p_rio.add_argument("--n", type=nat_flag)
    p_rio.add_argument("--k", type=nat_flag)
    p_rio.add_argument("--order", type=nat_flag)
    p_rio.add_argument("--g-json", metavar="PATH", help="series file overriding g")
    p_rio.add_argument("--f-json", metavar="PATH", help="series file overriding f")
    p_rio.add_argument("--a-json", metavar="PATH", help="series file overriding A")
    p_rio.add_argument("--l-json", metavar="PATH", help="series file overriding L")

    p_verify = sub.add_parser("verify", help="run the identity suite, emit a JSON report")
    p_verify.add_argument("--config", metavar="PATH", help="grid config JSON")

    return parser


def _cmd_seq(args: argparse.Namespace) -> int:
    values = catalan_sequence(args.beta, args.gamma, args.n)
    if args.format == "json":
        print(json.dumps([rat_str(v) for v in values]))
    else:
        for v in values:
            print(rat_str(v))
    return 0


def _cmd_trees(args: argparse.Namespace) -> int:
    forests = generate_forests(args.beta, args.n, args.gamma)
    if args.action == "list":
        encodings = [encode(f) for f in forests]
        if args.format == "json":
            print(json.dumps(encodings))
        else:
            for text in encodings:
                print(text)
        return 0
    count = len(forests)
    if args.check_formula:
        formula = catalan_gen(args.n, args.beta, args.gamma)
        match = formula == count
        verdict = "OK" if match else "MISMATCH"
        if args.format == "json":
            print(json.dumps({"count": str(count), "formula": rat_str(formula),
                              "match": match}, sort_keys=True))
        else:
            relation = "==" if match else "!="
            print(f"{count} {relation} {rat_str(formula)} {verdict}")
        return 0 if match else 1
    if args.format == "json":
        print(json.dumps({"count": str(count)}))
    else:
        print(count)
    return 0


def _cmd_involution(args: argparse.Namespace) -> int:
    if not args.alpha >= args.gamma >= 1:
        print("error: need --alpha >= --gamma >= 1", file=sys.stderr)
        return 2
    beta, n, gamma, alpha = args.beta, args.n, args.gamma, args.alpha
    total = 0
    slices = []
    for i in range(n + 1):
        structures = enumerate_colored(beta, n - i, i, gamma, alpha)
        slices.append(structures)
        total += sum(c.weight() for c in structures)
    rhs = (-1) ** n * binom(alpha - gamma, n)
    verdict = "OK" if total == rhs else "MISMATCH"
    print(f"sum={total} rhs={rat_str(rhs)} {verdict}")
    if args.dump_pairs:
        for structures in slices:
            for c in structures:
                kind = classify(c).kind
                if kind == FIRST:
                    partner = involute(c, [beta])
                    print(f"pair {encode_colored(c)} <-> {encode_colored(partner)}")
                elif kind == EXCEPTIONAL:
                    print(f"exceptional {encode_colored(c)}")
    return 0 if total == rhs else 1


def _load_series_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read series file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"series file {path} is not valid JSON: {exc}") from None
    try:
        return series_from_json(payload)
    except ValueError as exc:
        raise ConfigError(f"series file {path}: {exc}") from None


def _cmd_riordan(args: argparse.Namespace) -> int:
    if args.action == "entry":
        if args.n is None or args.k is None:
            print("error: entry needs --n and --k", file=sys.stderr)
            return 2
        order = args.order if args.order is not None else max(args.n, 1)
        if args.g_json and args.f_json:
            array = RiordanArray(_load_series_file(args.g_json), _load_series_file(args.f_json))
        elif args.alpha is not None and args.beta is not None:
            array = catalan_family(args.alpha, args.beta, max(order, args.n, 1))
        else:
            print("error: entry needs --alpha/--beta or --g-json/--f-json", file=sys.stderr)
            return 2
        print(rat_str(riordan_entry(array, args.n, args.k)))
        return 0

    order = args.order if args.order is not None else 12
    if order < 1:
        print("error: --order must be >= 1", file=sys.stderr)
        return 2
    if args.g_json and args.f_json:
        array = RiordanArray(_load_series_file(args.g_json), _load_series_file(args.f_json))
    elif args.alpha is not None and args.beta is not None:
        array = catalan_family(args.alpha, args.beta, order)
    else:
        print("error: check needs --alpha/--beta or --g-json/--f-json", file=sys.stderr)
        return 2
    if args.a_json:
        a = _load_series_file(args.a_json)
    elif args.beta is not None and args.gamma is not None:
        a = catalan_gf(args.beta, args.gamma, order)
    else:
        print("error: check needs --gamma (with --beta) or --a-json", file=sys.stderr)
        return 2
    if args.l_json:
        l = _load_series_file(args.l_json)
    elif args.alpha is not None and args.gamma is not None:
        l = series_binpow(args.alpha - args.gamma, order)
    else:
        print("error: check needs --alpha and --gamma, or --l-json", file=sys.stderr)
        return 2
    plain = riordan_theorem_check(array, a, l)
    modified = modified_riordan_check(array, a, l)
    print(f"Eq5 {'OK' if plain else 'FAIL'}, Eq6 {'OK' if modified else 'FAIL'}")
    return 0 if plain and modified else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.config is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return 2
        config = load_config(text)
    else:
        config = None
    reports = run_suite(config)
    print(reports_to_json(reports))
    return 0 if all(r.ok for r in reports) else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "seq": _cmd_seq,
        "trees": _cmd_trees,
        "involution": _cmd_involution,
        "riordan": _cmd_riordan,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except EnumerationBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
