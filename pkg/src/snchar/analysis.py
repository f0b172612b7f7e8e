"""Verification suites, hook-family cost scans and table reproduction."""
from __future__ import annotations

import json
import os
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod

import numpy as np

from .murnaghan_nakayama import mn_char, mn_char_instrumented, r_lambda_determinant
from .partitions import (
    Partition,
    class_size,
    enumerate_hook,
    enumerate_partitions,
    format_partition,
    hook_number_11,
    iter_partitions,
)
from .roichman import d_lambda, roi_char, roi_char_instrumented, roi_char_naive, roi_invocation_count

SCHEMA_VERSION = 1


class VerificationError(AssertionError):
    """A verification suite found a counterexample."""


@dataclass
class Report:
    """Tabular result of a suite; ``failures`` holds human-readable witnesses."""

    name: str
    columns: list[str]
    rows: list[dict] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self) -> Report:
        if self.failures:
            raise VerificationError(f"{self.name}: " + "; ".join(self.failures[:10]))
        return self

    def to_tsv(self) -> str:
        lines = ["\t".join(self.columns)]
        for row in self.rows:
            lines.append("\t".join(_cell(row.get(c, "")) for c in self.columns))
        return "\n".join(lines) + "\n"

    def to_json(self, command: str | None = None) -> str:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": command or self.name,
            "passed": self.passed,
            "failures": self.failures,
            "results": [{c: _jsonable(row.get(c)) for c in self.columns} for row in self.rows],
        }
        if self.extra:
            payload["extra"] = _jsonable(self.extra)
        return json.dumps(payload, indent=2) + "\n"


def _cell(value) -> str:
    if isinstance(value, tuple):
        return format_partition(value)
    if isinstance(value, (list, set)):
        return ",".join(map(str, value))
    return str(value)


def _jsonable(value):
    if isinstance(value, Partition):
        return format_partition(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.generic):
        return value.item()
    return value


def scan_threads() -> int:
    try:
        return max(1, int(os.environ.get("SNCHAR_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(func: Callable, items: Sequence, threads: int | None = None) -> list:
    threads = scan_threads() if threads is None else threads
    if threads <= 1 or len(items) < 2:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


def ones(n: int) -> Partition:
    return Partition._trusted((1,) * n)


def character_table(n: int, rule: str = "mn") -> tuple[list[Partition], list[list[int]]]:
    """Rows indexed by shapes, columns by cycle types, both in enumeration order."""
    func = {"mn": mn_char, "roi": roi_char}[rule]
    parts = enumerate_partitions(n)
    return parts, [[func(lam, mu) for mu in parts] for lam in parts]


def cross_check_all(n: int, naive: bool = False, strict: bool = True) -> Report:
    """Compare both rules (and optionally the unpruned tableau sum) on every pair."""
    report = Report(f"cross n={n}", ["n", "lambda", "mu", "mn", "roi", "flags"])
    parts = enumerate_partitions(n)
    for lam in parts:
        for mu in parts:
            a, b = mn_char(lam, mu), roi_char(lam, mu)
            values = {a, b}
            if naive:
                values.add(roi_char_naive(lam, mu))
            ok = len(values) == 1
            report.rows.append({"n": n, "lambda": lam, "mu": mu, "mn": a, "roi": b,
                                "flags": "ok" if ok else "MISMATCH"})
            if not ok:
                report.failures.append(f"chi^{lam}({mu}): mn={a} roi={b}")
    return report.check() if strict else report


def orthogonality_check(n: int, strict: bool = True) -> Report:
    """Column orthogonality of the table built from :func:`mn_char`."""
    parts, table = character_table(n, "mn")
    report = Report(f"ortho n={n}", ["n", "mu", "nu", "sum", "expected", "flags"])
    for a, mu in enumerate(parts):
        for b, nu in enumerate(parts):
            total = sum(row[a] * row[b] for row in table)
            expected = class_size(mu) if a == b else 0
            ok = total == expected
            report.rows.append({"n": n, "mu": mu, "nu": nu, "sum": total, "expected": expected,
                                "flags": "ok" if ok else "MISMATCH"})
            if not ok:
                report.failures.append(f"<{mu},{nu}> = {total}, expected {expected}")
    return report.check() if strict else report


@dataclass(frozen=True)
class ScanRow:
    n: int
    mn_lambda: Partition
    mn_cost: int
    roi_lambda: Partition
    roi_cost: int
    family_size: int
    mn_argmax: tuple[Partition, ...] = ()
    roi_argmax: tuple[Partition, ...] = ()


@dataclass(frozen=True)
class FamilyCost:
    lam: Partition
    r: int
    r_h: int
    q: int
    l_q: int


def family_cost(lam: Partition, method: str = "count") -> FamilyCost:
    """Costs of both algorithms on ``(lam, 1^n)``.

    ``method="run"`` performs the pruned Roichman recursion; ``"count"`` gets
    the same call count from the memoized subtree sizes.
    """
    n = lam.weight
    r = mn_char_instrumented(lam, ones(n)).invocations
    det = r_lambda_determinant(lam)
    if det != r:
        raise VerificationError(f"r_lambda mismatch at {lam}: recursion {r}, determinant {det}")
    if method == "run":
        q = roi_char_instrumented(lam, ones(n)).invocations
    elif method == "count":
        q = roi_invocation_count(lam, ones(n))
    else:
        raise ValueError(f"unknown method {method!r}")
    return FamilyCost(lam, r, r * hook_number_11(lam), q, len(lam) * q)


def _family_cost_count(lam: Partition) -> FamilyCost:
    return family_cost(lam, "count")


def _family_cost_run(lam: Partition) -> FamilyCost:
    return family_cost(lam, "run")


def hook_family_costs(k: int, l: int, n: int, method: str = "count",
                      threads: int | None = None) -> list[FamilyCost]:
    func = _family_cost_run if method == "run" else _family_cost_count
    return _pmap(func, enumerate_hook(k, l, n), threads)


def hook_scan(k: int, l: int, n_values: Iterable[int], method: str = "count",
              threads: int | None = None) -> list[ScanRow]:
    """Worst-case costs over the whole (k, l) hook family for each ``n``.

    Ties resolve to the first maximizer in enumeration order; every maximizer
    is kept in ``mn_argmax`` / ``roi_argmax``.
    """
    out = []
    for n in n_values:
        costs = hook_family_costs(k, l, n, method, threads)
        best_mn = max(c.r_h for c in costs)
        best_roi = max(c.l_q for c in costs)
        mn_args = tuple(c.lam for c in costs if c.r_h == best_mn)
        roi_args = tuple(c.lam for c in costs if c.l_q == best_roi)
        out.append(ScanRow(n, mn_args[0], best_mn, roi_args[0], best_roi, len(costs),
                           mn_args, roi_args))
    return out


def scan_report(k: int, l: int, rows: Sequence[ScanRow], method: str = "count") -> Report:
    report = Report(f"scan k={k} l={l}", ["n", "lambda", "r", "r_h", "q", "l_q", "flags"])
    for row in rows:
        for lam in dict.fromkeys((row.mn_lambda, row.roi_lambda)):
            c = family_cost(lam, method)
            flags = [f for f, hit in (("mn_max", lam == row.mn_lambda),
                                      ("roi_max", lam == row.roi_lambda)) if hit]
            report.rows.append({"n": row.n, "lambda": lam, "r": c.r, "r_h": c.r_h, "q": c.q,
                                "l_q": c.l_q, "flags": ",".join(flags)})
    return report


@dataclass(frozen=True)
class GrowthFit:
    side: str
    exponent_estimate: float
    residual: float
    sample: list[tuple[int, int]]

    @property
    def base(self) -> float:
        """Per-unit growth factor ``e**slope``; meaningful for the exponential side."""
        return float(np.exp(self.exponent_estimate))


def fit_growth(rows: Sequence[ScanRow], side: str) -> GrowthFit:
    """Least-squares slope of log cost against log n (``"mn"``) or n (``"roi"``)."""
    if len(rows) < 3:
        raise ValueError("need at least 3 rows to fit")
    if side == "mn":
        sample = [(r.n, r.mn_cost) for r in rows]
        x = np.log([n for n, _ in sample])
    elif side == "roi":
        sample = [(r.n, r.roi_cost) for r in rows]
        x = np.array([n for n, _ in sample], dtype=float)
    else:
        raise ValueError(f"side must be 'mn' or 'roi', got {side!r}")
    y = np.log([c for _, c in sample])
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.max(np.abs(y - (slope * x + intercept))))
    return GrowthFit(side, float(slope), residual, sample)


def step_ratios(rows: Sequence[ScanRow], side: str) -> list[float]:
    """Successive cost ratios ``cost(n_{i+1}) / cost(n_i)``."""
    costs = [r.mn_cost if side == "mn" else r.roi_cost for r in rows]
    return [b / a for a, b in zip(costs, costs[1:])]


# Published cells: (lambda, mu, r, r*h, q, l*q); mu=None means 1^n.
TABLE_1 = [
    ((4, 1, 1), None, 13, 78, 35, 105),
    ((3, 2, 1), None, 14, 70, 48, 144),
    ((4, 2, 1, 1, 1), None, 33, 264, 599, 2995),
    ((6, 2, 1, 1, 1, 1), None, 62, 682, 7010, 42060),
    ((5, 2, 2, 1, 1, 1), None, 67, 670, 11664, 69984),
    ((7, 2, 2, 1, 1, 1, 1), None, 116, 1508, 170566, 1193962),
    ((6, 2, 2, 2, 1, 1, 1), None, 118, 1416, 238174, 1667218),
    ((8, 2, 2, 2, 1, 1, 1, 1), None, 191, 2865, 4000428, 32003424),
    ((7, 2, 2, 2, 2, 1, 1, 1), None, 189, 2646, 5029991, 40215928),
]

TABLE_2 = [
    ((3, 2, 1), None, 14, 70, 48, 144),
    ((3, 2, 1), (3, 2, 1), 5, 25, 32, 96),
    ((3, 1, 1, 1), None, 13, 78, 35, 140),
    ((4, 2, 1, 1), None, 26, 182, 276, 1104),
    ((4, 2, 1, 1), (4, 2, 1, 1), 7, 49, 97, 485),
    ((5, 3, 2, 1, 1), None, 75, 675, 22454, 112270),
    ((5, 3, 2, 1, 1), (5, 3, 2, 1, 1), 1, 9, 1912, 9560),
    ((6, 2, 1, 1, 1, 1), None, 62, 682, 7010, 42060),
    ((4, 4, 2, 1, 1), None, 63, 504, 13921, 69605),
    ((4, 4, 2, 1, 1), (4, 4, 2, 1, 1), 9, 72, 1384, 6920),
    ((5, 4, 2, 2, 1, 1), None, 139, 1390, 714201, 4285206),
    ((6, 3, 2, 1, 1, 1, 1), None, 142, 1704, 463996, 3247972),
]

_CELLS = ("r", "r_h", "q", "l_q")


def _measure(lam: Partition, mu: Partition) -> dict[str, int]:
    r = mn_char_instrumented(lam, mu).invocations
    q = roi_char_instrumented(lam, mu).invocations
    return {"r": r, "r_h": r * hook_number_11(lam), "q": q, "l_q": len(lam) * q}


def reproduce_tables(threads: int | None = None) -> Report:
    """Recompute every published cell by running both recursions and diff them exactly.

    A mismatching cell is also checked against the other cells of its own row
    (``r_h = r * h``, ``l_q = l * q``); when the published row contradicts
    itself the failure says so.
    """
    report = Report("tables", ["table", "n", "lambda", "mu", "r", "r_h", "q", "l_q", "flags"])
    entries = [(1, row) for row in TABLE_1] + [(2, row) for row in TABLE_2]
    pairs = []
    for _, (lam, mu, *_) in entries:
        lam = Partition(lam)
        pairs.append((lam, Partition(mu) if mu else ones(lam.weight)))
    unique = list(dict.fromkeys(pairs))
    measured = dict(zip(unique, _pmap(_measure_pair, unique, threads)))
    for (table, (_, _, *published)), (lam, mu) in zip(entries, pairs):
        got = measured[(lam, mu)]
        expected = dict(zip(_CELLS, published))
        bad = [c for c in _CELLS if got[c] != expected[c]]
        report.rows.append({"table": table, "n": lam.weight, "lambda": lam, "mu": mu, **got,
                            "flags": "ok" if not bad else "MISMATCH:" + ",".join(bad)})
        h, ell = hook_number_11(lam), len(lam)
        implied = {"r": (expected["r_h"], h), "r_h": (expected["r"], h),
                   "q": (expected["l_q"], ell), "l_q": (expected["q"], ell)}
        for c in bad:
            msg = f"table {table} {lam} {mu} {c}: published {expected[c]}, computed {got[c]}"
            other, factor = implied[c]
            if c in ("r_h", "l_q"):
                consistent = expected[c] == other * factor
                hint = other * factor
            else:
                consistent = other == expected[c] * factor
                hint = Fraction(other, factor)
            if not consistent:
                msg += f" (published row contradicts itself: its other cell implies {hint})"
            report.failures.append(msg)
    report.extra["cells_checked"] = len(entries) * len(_CELLS)
    return report


def _measure_pair(pair: tuple[Partition, Partition]) -> dict[str, int]:
    return _measure(*pair)


def bounds_suite(n_max: int, strict: bool = True) -> Report:
    """Exhaustive checks of the strip, hook-number and tableau-count sandwiches."""
    report = Report(f"bounds n<={n_max}", ["bound", "n", "lambda", "low", "value", "high", "flags"])

    def record(bound: str, lam: Partition, low, value: int, high: int) -> None:
        ok = low <= value <= high
        report.rows.append({"bound": bound, "n": lam.weight, "lambda": lam, "low": str(low),
                            "value": value, "high": high, "flags": "ok" if ok else "VIOLATION"})
        if not ok:
            report.failures.append(f"{bound} at {lam}: {value} not in [{low}, {high}]")

    for n in range(1, n_max + 1):
        for lam in iter_partitions(n):
            if len(lam) <= 4:
                r = mn_char_instrumented(lam, ones(n)).invocations
                top = prod(p + 1 for p in lam)
                record("strip", lam, Fraction(top, factorial(len(lam))), r, top)
            d = d_lambda(lam)
            record("tableau", lam, d, roi_invocation_count(lam, ones(n)), n * d + 1)
        for k, l in ((1, 1), (1, 2), (2, 2)):
            for lam in enumerate_hook(k, l, n):
                record(f"hook({k},{l})", lam, Fraction(n, 2 * max(k, l)), hook_number_11(lam), n)
    return report.check() if strict else report
