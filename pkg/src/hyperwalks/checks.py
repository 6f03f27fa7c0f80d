"""Cross-check harness: every counting road must lead to the same numbers.

Each suite compares independent computation paths cell by cell and reports
disagreements as data rather than exceptions, so one corrupted constant cannot
hide behind a crash.  Reports are deterministic: same inputs, same bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import BudgetExceeded, LanguageSpec, StepVector, step_alphabet
from . import formulas
from .formulas import closed_form, cross_ratio_check, hyper_form
from .oracle import (
    DEFAULT_BUDGET,
    count_dp,
    count_dp_first_step,
    naive_census,
)
from .series import asymptotic_ratio, gf_series
from .bijection import count_E_double_prime, verify_bijection

SUITE_NAMES = ("methods", "ratios", "symmetry", "bijection", "asymptotics")

# Per-method ceilings for the methods suite; the cheap methods run to n_max.
DP_CAP = 16
HYPER_CAP = 50
SERIES_CAP = 100

ASYMPTOTIC_SCHEDULE = (500, 1000, 2000, 4000)
ASYMPTOTIC_TOLERANCE = 0.01


@dataclass(frozen=True)
class CheckCell:
    """One comparison: a (language, r, n) cell under one suite and detail."""

    suite: str
    language: str
    r: int
    n: int
    detail: str
    agree: bool
    values: tuple[str, ...] = ()

    def sort_key(self):
        return (self.language, self.r, self.n, self.suite, self.detail)


@dataclass(frozen=True)
class CheckReport:
    cells: tuple[CheckCell, ...]

    @property
    def disagreements(self) -> tuple[CheckCell, ...]:
        return tuple(c for c in self.cells if not c.agree)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def summary(self) -> dict:
        return {"cells": len(self.cells), "disagreements": len(self.disagreements)}

    def to_json(self) -> str:
        payload = {
            "cells": [
                {
                    "suite": c.suite,
                    "language": c.language,
                    "r": c.r,
                    "n": c.n,
                    "detail": c.detail,
                    "agree": c.agree,
                    "values": list(c.values),
                }
                for c in sorted(self.cells, key=CheckCell.sort_key)
            ],
            "summary": self.summary(),
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    def render(self) -> str:
        lines = []
        by_suite: dict[str, list[CheckCell]] = {}
        for cell in self.cells:
            by_suite.setdefault(cell.suite, []).append(cell)
        for suite in sorted(by_suite):
            cells = by_suite[suite]
            bad = [c for c in cells if not c.agree]
            lines.append(f"[{suite}] {len(cells)} cells, {len(bad)} disagreements")
            for cell in sorted(bad, key=CheckCell.sort_key):
                values = f" values={list(cell.values)}" if cell.values else ""
                lines.append(
                    f"  FAIL {cell.language} r={cell.r} n={cell.n} {cell.detail}{values}"
                )
        summary = self.summary()
        verdict = "OK" if self.ok else "FAIL"
        lines.append(
            f"{verdict}: {summary['cells']} cells checked, {summary['disagreements']} disagreements"
        )
        return "\n".join(lines)


def _cell(suite, language, r, n, detail, agree, values=()):
    return CheckCell(suite, language, r, n, detail, bool(agree), tuple(str(v) for v in values))


def _error_cell(suite, language, r, n, detail, exc):
    return _cell(suite, language, r, n, f"{detail} error: {exc}", False)


def run_methods_suite(
    r_values: Sequence[int], n_max: int, budget: int = DEFAULT_BUDGET
) -> list[CheckCell]:
    """Closed form vs recurrence, series, hypergeometric, DP, and naive counts."""
    cells: list[CheckCell] = []
    for r in r_values:
        census: dict[int, dict[str, int]] = {}
        for n in range(0, n_max + 1):
            if n and (1 << (r + 1)) ** (2 * n) <= budget:
                try:
                    census[n] = naive_census(r, n, budget)
                except BudgetExceeded:
                    pass
        for lid in "ABCDEF":
            spec = LanguageSpec(lid, r)
            try:
                table = formulas.recurrence_seq(spec, n_max).values
            except Exception as exc:  # keep checking other families
                cells.append(_error_cell("methods", lid, r, 0, "recurrence", exc))
                table = None
            series_order = min(n_max, SERIES_CAP)
            try:
                coeffs = gf_series(spec, series_order).coefficients
            except Exception as exc:
                cells.append(_error_cell("methods", lid, r, 0, "series", exc))
                coeffs = None
            for n in range(0, n_max + 1):
                reference = closed_form(spec, n)
                if table is not None:
                    cells.append(
                        _cell(
                            "methods", lid, r, n, "closed-vs-recurrence",
                            table[n] == reference,
                            () if table[n] == reference else (reference, table[n]),
                        )
                    )
                if coeffs is not None and n <= series_order:
                    agree = coeffs[n].denominator == 1 and coeffs[n] == reference
                    cells.append(
                        _cell(
                            "methods", lid, r, n, "closed-vs-series",
                            agree, () if agree else (reference, coeffs[n]),
                        )
                    )
                if lid in "BCEF" and r >= 1 and 1 <= n <= HYPER_CAP:
                    try:
                        hyper_value = hyper_form(spec, n)
                        cells.append(
                            _cell(
                                "methods", lid, r, n, "closed-vs-hyper",
                                hyper_value == reference,
                                () if hyper_value == reference else (reference, hyper_value),
                            )
                        )
                    except Exception as exc:
                        cells.append(_error_cell("methods", lid, r, n, "hyper", exc))
                if n <= DP_CAP:
                    dp_value = count_dp(spec, n)
                    cells.append(
                        _cell(
                            "methods", lid, r, n, "closed-vs-dp",
                            dp_value == reference,
                            () if dp_value == reference else (reference, dp_value),
                        )
                    )
                if n in census:
                    naive_value = census[n][lid]
                    cells.append(
                        _cell(
                            "methods", lid, r, n, "closed-vs-naive",
                            naive_value == reference,
                            () if naive_value == reference else (reference, naive_value),
                        )
                    )
    return cells


def run_ratios_suite(r_values: Sequence[int], n_max: int) -> list[CheckCell]:
    """The exact 2^r b_n = (2^r-1) c_n and 2^r e_n = (2^r-1) f_n identities."""
    cells: list[CheckCell] = []
    for r in r_values:
        if r < 1:
            continue
        try:
            report = cross_ratio_check(r, n_max)
        except Exception as exc:
            cells.append(_error_cell("ratios", "B", r, 0, "ratio-check", exc))
            continue
        cells.append(
            _cell("ratios", "B", r, n_max, "b-vs-c-and-e-vs-f", report.ok, report.violations)
        )
    return cells


def _allowed_first_steps(spec: LanguageSpec) -> list[StepVector]:
    steps = step_alphabet(spec.r)
    if spec.halfspace:
        return [s for s in steps if s.tracked == 1]
    return list(steps)


def run_symmetry_suite(r_values: Sequence[int], n_max: int) -> list[CheckCell]:
    """First-step counts must be equal across allowed first steps and sum to the total."""
    cells: list[CheckCell] = []
    cap = min(n_max, 10)
    for r in r_values:
        for lid in "BCEF":
            spec = LanguageSpec(lid, r)
            for n in range(1, cap + 1):
                try:
                    total = count_dp(spec, n)
                    allowed = _allowed_first_steps(spec)
                    counts = [count_dp_first_step(spec, n, s) for s in allowed]
                    equal = len(set(counts)) == 1
                    sums = sum(counts) == total
                    blocked_ok = True
                    if spec.halfspace:
                        blocked = [
                            count_dp_first_step(spec, n, s)
                            for s in step_alphabet(r)
                            if s.tracked == -1
                        ]
                        blocked_ok = all(v == 0 for v in blocked)
                    agree = equal and sums and blocked_ok
                    cells.append(
                        _cell(
                            "symmetry", lid, r, n, "first-step-split",
                            agree, () if agree else (total, *counts),
                        )
                    )
                except Exception as exc:
                    cells.append(_error_cell("symmetry", lid, r, n, "first-step-split", exc))
    return cells


def run_bijection_suite(n_max: int) -> list[CheckCell]:
    """Exhaustive bijection verification plus the halved-count identity."""
    cells: list[CheckCell] = []
    for n in range(1, min(n_max, 6) + 1):
        try:
            report = verify_bijection(n)
            cells.append(
                _cell("bijection", "E", 1, n, "round-trip", report.ok, report.failures[:4])
            )
        except Exception as exc:
            cells.append(_error_cell("bijection", "E", 1, n, "round-trip", exc))
    try:
        table = formulas.recurrence_seq(LanguageSpec("E", 1), min(n_max, 10)).values
        for n in range(1, min(n_max, 10) + 1):
            paths = count_E_double_prime(n)
            agree = 2 * paths == table[n]
            cells.append(
                _cell(
                    "bijection", "E", 1, n, "paths-equal-half-count",
                    agree, () if agree else (table[n], paths),
                )
            )
    except Exception as exc:
        cells.append(_error_cell("bijection", "E", 1, 0, "paths-equal-half-count", exc))
    return cells


def run_asymptotics_suite(
    r_values: Sequence[int], schedule: Sequence[int] = ASYMPTOTIC_SCHEDULE
) -> list[CheckCell]:
    """Deviation |count/estimate - 1| must shrink along the schedule and end small."""
    cells: list[CheckCell] = []
    schedule = sorted(schedule)
    for r in r_values:
        if r not in (1, 2):
            continue
        for lid in "BCEF":
            spec = LanguageSpec(lid, r)
            try:
                table = formulas.recurrence_seq(spec, schedule[-1]).values
                deviations = [
                    abs(asymptotic_ratio(spec, n, count=table[n]) - 1.0) for n in schedule
                ]
                shrinking = all(b < a for a, b in zip(deviations, deviations[1:]))
                small = deviations[-1] <= ASYMPTOTIC_TOLERANCE
                agree = shrinking and small
                cells.append(
                    _cell(
                        "asymptotics", lid, r, schedule[-1], "deviation-shrinks",
                        agree, () if agree else tuple(f"{d:.3e}" for d in deviations),
                    )
                )
            except Exception as exc:
                cells.append(_error_cell("asymptotics", lid, r, 0, "deviation-shrinks", exc))
    return cells


def run_check(
    r_values: Iterable[int],
    n_max: int,
    suites: Sequence[str],
    budget: int = DEFAULT_BUDGET,
    asymptotic_schedule: Optional[Sequence[int]] = None,
) -> CheckReport:
    r_values = sorted(set(r_values))
    unknown = [s for s in suites if s not in SUITE_NAMES]
    if unknown:
        raise ValueError(f"unknown suites {unknown}; choose from {SUITE_NAMES}")
    cells: list[CheckCell] = []
    if "methods" in suites:
        cells.extend(run_methods_suite(r_values, n_max, budget))
    if "ratios" in suites:
        cells.extend(run_ratios_suite(r_values, n_max))
    if "symmetry" in suites:
        cells.extend(run_symmetry_suite(r_values, n_max))
    if "bijection" in suites:
        cells.extend(run_bijection_suite(n_max))
    if "asymptotics" in suites:
        cells.extend(run_asymptotics_suite(r_values, asymptotic_schedule or ASYMPTOTIC_SCHEDULE))
    return CheckReport(tuple(sorted(cells, key=CheckCell.sort_key)))
