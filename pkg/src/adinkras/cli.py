"""Command-line front end.

Exit codes: 0 success or match, 1 verification failure or mismatch,
2 usage or schema error, 3 resource guard, 4 selection out of range.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from . import adinkra, census, codes, oracle
from .chromotopology import bipartition, build_from_code
from .errors import ResourceGuardError, Unsupported
from .garden import GeneratorList, check_relations

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD, EXIT_RANGE = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _positive(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _nonnegative(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _dash_choice(s: str) -> int:
    if s == "first":
        return 0
    if s.startswith("index:"):
        return _nonnegative(s[len("index:"):])
    raise argparse.ArgumentTypeError(f"expected 'first' or 'index:J', got {s!r}")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CliError(EXIT_USAGE, f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_USAGE, f"{path} is not valid JSON: {exc}") from None


def _write_atomic(path: str, text: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_code(path: str) -> codes.DoublyEvenCode:
    try:
        return codes.DoublyEvenCode.from_json(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(EXIT_USAGE, f"{path}: not a doubly-even code: {exc}") from None


# -- subcommands -----------------------------------------------------------

def cmd_count(args) -> int:
    try:
        result = census.census(args.n, args.d)
    except Unsupported as exc:
        raise CliError(EXIT_GUARD, str(exc)) from None
    _emit(result.to_json(lists=args.lists))
    return EXIT_OK


def cmd_codes(args) -> int:
    if args.count_only:
        try:
            count, _ = census.code_count(args.n, args.k)
        except Unsupported as exc:
            raise CliError(EXIT_GUARD, str(exc)) from None
        _emit({"count": count})
        return EXIT_OK
    if args.n > codes.ENUMERATE_MAX_N:
        raise CliError(EXIT_GUARD, f"listing codes is limited to N <= {codes.ENUMERATE_MAX_N}")
    _emit([c.to_json() for c in codes.enumerate_doubly_even(args.n, args.k)])
    return EXIT_OK


def cmd_build(args) -> int:
    if args.code:
        code = _load_code(args.code)
    else:
        if args.n is None or args.k is None:
            raise CliError(EXIT_USAGE, "give --code FILE or all of --n, --k, --index")
        if args.n > codes.ENUMERATE_MAX_N:
            raise CliError(EXIT_GUARD, f"--index selection enumerates codes; limited to N <= {codes.ENUMERATE_MAX_N}")
        code = next((c for i, c in enumerate(codes.enumerate_doubly_even(args.n, args.k)) if i == args.index), None)
        if code is None:
            raise CliError(EXIT_RANGE, f"there is no code with index {args.index} for N={args.n}, k={args.k}")
    try:
        g = build_from_code(code)
    except ResourceGuardError as exc:
        raise CliError(EXIT_GUARD, str(exc)) from None
    total = adinkra.count_dashings(g)
    if args.dash >= total:
        raise CliError(EXIT_RANGE, f"dashing index {args.dash} out of range: only {total} dashings (0..{total - 1})")
    a = adinkra.ValiseAdinkra(g, bipartition(g), adinkra.dashing_at(g, args.dash))
    _write_atomic(args.out, json.dumps(a.to_json(), indent=2) + "\n")
    if args.dot:
        _write_atomic(args.dot, a.to_dot())
    _emit({"out": args.out, "dot": args.dot, "n": g.n, "k": g.k, "vertices": g.order,
           "edges": len(g.edges), "dashings": total, "dash_index": args.dash})
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        gens = GeneratorList.from_json(_read_json(args.matrices))
    except (TypeError, ValueError) as exc:
        raise CliError(EXIT_USAGE, f"{args.matrices}: {exc}") from None
    report = check_relations(gens)
    families = {}
    for c in report.checks:
        fam = c.name.split(" ", 1)[1]
        families[fam] = families.get(fam, True) and c.passed
    _emit({
        "d": gens.d,
        "n": gens.n,
        "pass": report.ok,
        "families": families,
        "failures": [{"i": f.witness["i"], "j": f.witness["j"], "family": f.witness["family"],
                      "sum": f.witness["sum"]} for f in report.failures],
    })
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    try:
        if args.codes:
            if args.n is None or args.k is None:
                raise CliError(EXIT_USAGE, "--codes needs --n and --k")
            brute = oracle.brute_code_count(args.n, args.k)
            formula, _ = census.code_count(args.n, args.k)
            out = {"brute": brute, "formula": formula}
        elif args.dashings:
            g = build_from_code(_load_code(args.dashings))
            brute = oracle.brute_dashing_count(g)
            formula = census.dashing_multiplier(g.n, g.k)
            out = {"brute": brute, "formula": formula}
        else:
            if args.n is None or args.d is None:
                raise CliError(EXIT_USAGE, "give --n and --d, or --codes, or --dashings")
            brute = oracle.brute_class_count(args.n, args.d, signed=args.signed)
            sets = oracle.brute_set_count(args.n, args.d, signed=args.signed)
            count = census.signed_class_count if args.signed else census.unsigned_class_count
            formula = count(args.n, args.d)
            out = {"brute": brute, "formula": formula, "brute_sets": sets}
    except (ResourceGuardError, Unsupported) as exc:
        raise CliError(EXIT_GUARD, str(exc)) from None
    match = out["brute"] == out["formula"]
    _emit({"brute": out["brute"], "formula": out["formula"], "match": match,
           **{k: v for k, v in out.items() if k not in ("brute", "formula")}})
    return EXIT_OK if match else EXIT_FAIL


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="adinkras", description="Count and build garden-algebra generators and valise Adinkras.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="closed-form class counts for (N, d)")
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--d", type=_positive, required=True)
    c.add_argument("--signed", action="store_true", help="accepted for symmetry with 'oracle'; both counts are always printed")
    c.add_argument("--lists", action="store_true", help="count ordered lists (multiply by N!)")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("codes", help="list or count doubly-even (N, k) codes")
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--k", type=_nonnegative, required=True)
    c.add_argument("--count-only", action="store_true")
    c.set_defaults(func=cmd_codes)

    c = sub.add_parser("build", help="build a valise Adinkra from a code")
    c.add_argument("--code", metavar="FILE")
    c.add_argument("--n", type=_positive)
    c.add_argument("--k", type=_nonnegative)
    c.add_argument("--index", type=_nonnegative, default=0)
    c.add_argument("--out", metavar="FILE", required=True)
    c.add_argument("--dot", metavar="FILE")
    c.add_argument("--dash", type=_dash_choice, default=0, metavar="first|index:J")
    c.set_defaults(func=cmd_build)

    c = sub.add_parser("verify", help="check a matrix list against the relations")
    c.add_argument("--matrices", metavar="FILE", required=True)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("oracle", help="brute-force count next to the formula")
    c.add_argument("--n", type=_positive)
    c.add_argument("--d", type=_positive)
    c.add_argument("--k", type=_nonnegative)
    c.add_argument("--signed", action="store_true")
    mode = c.add_mutually_exclusive_group()
    mode.add_argument("--codes", action="store_true")
    mode.add_argument("--dashings", metavar="CODE_FILE")
    c.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
