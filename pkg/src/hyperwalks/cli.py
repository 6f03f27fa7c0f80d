"""Command-line surface: count, series, check, and oeis subcommands."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .core import BudgetExceeded, LanguageSpec, LANGUAGE_IDS
from . import formulas
from .bfile import SequenceNotFound, bfile_emit, oeis_fetch
from .checks import SUITE_NAMES, run_check
from .oracle import DEFAULT_BUDGET, CountTable, count_dp, enumerate_words
from .series import gf_series

METHODS = ("closed", "hyper", "recurrence", "dp", "series", "naive")


class UsageError(ValueError):
    """A flag combination outside the defined contracts."""


def _compute_count(language: str, r: int, n: int, method: str, budget: int) -> int:
    spec = LanguageSpec(language, r)
    if method == "closed":
        return formulas.closed_form(spec, n)
    if method == "hyper":
        if language not in "BCEF" or r < 1 or n < 1:
            raise UsageError(
                "method 'hyper' is defined for languages B, C, E, F with r >= 1 and n >= 1"
            )
        return formulas.hyper_form(spec, n)
    if method == "recurrence":
        return formulas.recurrence_seq(spec, n).values[n]
    if method == "dp":
        return count_dp(spec, n)
    if method == "series":
        coefficient = gf_series(spec, n)[n]
        assert coefficient.denominator == 1
        return coefficient.numerator
    if method == "naive":
        try:
            return len(enumerate_words(spec, n, budget))
        except BudgetExceeded as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"unknown method {method!r}")


def _series_values(language: str, r: int, terms: int) -> list[int]:
    spec = LanguageSpec(language, r)
    coeffs = gf_series(spec, terms - 1).coefficients
    values = []
    for c in coeffs:
        assert c.denominator == 1
        values.append(c.numerator)
    return values


def _format_series(language: str, r: int, values: list[int], fmt: str) -> str:
    if fmt == "csv":
        return ",".join(str(v) for v in values)
    if fmt == "bfile":
        table = CountTable(LanguageSpec(language, r), tuple(values))
        return bfile_emit(table).rstrip("\n")
    if fmt == "json":
        payload = [
            {"language": language, "r": r, "n": n, "method": "series", "value": str(v)}
            for n, v in enumerate(values)
        ]
        return json.dumps(payload, sort_keys=True)
    raise UsageError(f"unknown format {fmt!r}")


def _parse_r_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 0 or hi < lo:
        raise UsageError(f"bad r range {text!r}")
    return list(range(lo, hi + 1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperwalks",
        description=(
            "Exact enumeration of {+-1}^(r+1) lattice walks ending on the last-coordinate "
            "hyperplane, optionally confined to a half-space and avoiding backtracking "
            "or repeated steps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print one walk count")
    p_count.add_argument("language", nargs="?", choices=LANGUAGE_IDS)
    p_count.add_argument("--language", dest="language_flag", choices=LANGUAGE_IDS)
    p_count.add_argument("--r", type=int, required=True)
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--method", choices=METHODS, default="closed")
    p_count.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                         help="candidate cap for the naive method")

    p_series = sub.add_parser("series", help="print leading sequence terms")
    p_series.add_argument("language", nargs="?", choices=LANGUAGE_IDS)
    p_series.add_argument("--language", dest="language_flag", choices=LANGUAGE_IDS)
    p_series.add_argument("--r", type=int, required=True)
    p_series.add_argument("--terms", type=int, required=True)
    p_series.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")

    p_check = sub.add_parser("check", help="run the cross-check suites")
    p_check.add_argument("--r", default="1..2", help="r range, e.g. 2 or 1..3")
    p_check.add_argument("--n-max", type=int, default=20)
    p_check.add_argument("--suites", default="methods,ratios",
                         help=f"comma-separated subset of {','.join(SUITE_NAMES)}")
    p_check.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_check.add_argument("--json", metavar="PATH", default=None,
                         help="also write the JSON report to PATH ('-' for stdout)")

    p_oeis = sub.add_parser("oeis", help="print a bundled or cached OEIS b-file")
    p_oeis.add_argument("sequence_id")
    p_oeis.add_argument("--cache-dir", default=None)

    return parser


def _resolve_language(args) -> str:
    given = [x for x in (args.language, args.language_flag) if x is not None]
    if len(given) != 1:
        raise UsageError("give the language exactly once (positionally or via --language)")
    return given[0]


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            if args.n < 0:
                raise UsageError("n must be nonnegative")
            language = _resolve_language(args)
            print(_compute_count(language, args.r, args.n, args.method, args.budget))
            return 0
        if args.command == "series":
            if args.terms < 1:
                raise UsageError("need at least one term")
            language = _resolve_language(args)
            values = _series_values(language, args.r, args.terms)
            print(_format_series(language, args.r, values, args.format))
            return 0
        if args.command == "check":
            suites = tuple(s for s in args.suites.split(",") if s)
            report = run_check(_parse_r_range(args.r), args.n_max, suites, args.budget)
            print(report.render())
            if args.json == "-":
                print(report.to_json())
            elif args.json:
                Path(args.json).write_text(report.to_json() + "\n")
            return 0 if report.ok else 1
        if args.command == "oeis":
            bf = oeis_fetch(args.sequence_id, cache_dir=args.cache_dir)
            for index, value in bf.entries:
                print(f"{index} {value}")
            return 0
    except (UsageError, ValueError, SequenceNotFound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
