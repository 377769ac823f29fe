"""Command-line interface: count one value, tabulate a family, verify routes.

Exit codes: 0 success, 1 verification mismatch, 2 usage or budget error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass

from gridsets import bound, oracle, recurrences, transfer
from gridsets.grids import Family, GridSpec
from gridsets.oracle import PROFILE_MAX_ROWS, BudgetExceededError

FAMILIES = {"k": Family.CLIQUE, "grid": Family.GRID}
METHODS = ("oracle", "profile", "transfer", "recurrence", "bound")
CSV_FIELDS = ("m", "n", "family", "method", "value", "exact", "elapsed_ms")


class UsageError(Exception):
    """Bad argument combination; maps to exit code 2."""


@dataclass
class Record:
    m: int
    n: int
    family: str
    method: str
    value: int
    exact: bool
    elapsed_ms: float


def evaluate(family_key: str, m: int, n: int, method: str, spanning: bool) -> tuple[int, bool]:
    """Route one request to the right engine; returns (value, exact)."""
    family = FAMILIES[family_key]
    spec = GridSpec(m, n, family)  # validates the shape
    if method == "oracle":
        if spanning:
            return oracle.brute_count_spanning(spec), True
        return oracle.brute_count(spec), True
    if method == "profile":
        return oracle.profile_count(spec, spanning=spanning), True
    if method == "transfer":
        if family is not Family.CLIQUE:
            raise UsageError("method 'transfer' only covers --family k")
        if spanning:
            return transfer.spanning_count(m, n), True
        return transfer.total_count(m, n), True
    if method == "recurrence":
        if family is not Family.GRID or m not in (3, 4):
            raise UsageError("method 'recurrence' only covers --family grid with m in {3, 4}")
        if spanning:
            return recurrences.grid_spanning_count(m, n), True
        return recurrences.grid_count(m, n), True
    if method == "bound":
        if family is not Family.GRID:
            raise UsageError("method 'bound' only covers --family grid")
        if spanning:
            excess, exact = bound.excess_lower_bound(m, n)
            return transfer.spanning_count(m, n) - excess, exact
        return bound.grid_upper_bound(m, n)
    raise UsageError(f"unknown method {method!r}")


def _measure(family_key: str, m: int, n: int, method: str, spanning: bool) -> Record:
    start = time.perf_counter()
    value, exact = evaluate(family_key, m, n, method, spanning)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return Record(m, n, family_key, method, value, exact, elapsed_ms)


def emit(records: list[Record], fmt: str, stream) -> None:
    if fmt == "csv":
        writer = csv.writer(stream)
        writer.writerow(CSV_FIELDS)
        for r in records:
            writer.writerow([r.m, r.n, r.family, r.method, str(r.value),
                             "true" if r.exact else "false", f"{r.elapsed_ms:.3f}"])
    elif fmt == "json":
        payload = [
            {"m": r.m, "n": r.n, "family": r.family, "method": r.method,
             "value": str(r.value), "exact": r.exact,
             "elapsed_ms": round(r.elapsed_ms, 3)}
            for r in records
        ]
        json.dump(payload, stream, indent=2)
        stream.write("\n")
    else:
        for r in records:
            exact = "exact" if r.exact else "bound"
            print(f"{r.family} {r.m}x{r.n} {r.method}: {r.value} "
                  f"({exact}, {r.elapsed_ms:.3f} ms)", file=stream)


def cmd_count(args: argparse.Namespace) -> int:
    record = _measure(args.family, args.m, args.n, args.method, args.spanning)
    emit([record], args.format, sys.stdout)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    records = [
        _measure(args.family, args.m, n, args.method, args.spanning)
        for n in range(1, args.n_max + 1)  # ascending n, deterministic
    ]
    emit(records, args.format, sys.stdout)
    return 0


# ----- verify ----------------------------------------------------------

@dataclass
class Check:
    name: str
    detail: str
    status: str  # PASS / FAIL / SKIP


def _compare(checks: list[Check], name: str, detail: str, lhs: int, rhs: int) -> None:
    status = "PASS" if lhs == rhs else "FAIL"
    checks.append(Check(name, f"{detail}: {lhs} vs {rhs}", status))


def run_verification(m_max: int, n_max: int, deep: bool = False) -> list[Check]:
    """Cross-check every counting route against the oracles."""
    if deep:
        n_max += 2
    budget = oracle.enumeration_budget()
    checks: list[Check] = []

    def cell(family: Family, m: int, n: int) -> GridSpec:
        return GridSpec(m, n, family)

    for family in (Family.CLIQUE, Family.GRID):
        for m in range(1, m_max + 1):
            for n in range(1, n_max + 1):
                where = f"{family.value} {m}x{n}"
                if m * n > budget:
                    checks.append(Check("oracle-agreement", f"{where}: over budget", "SKIP"))
                    continue
                spec = cell(family, m, n)
                brute_all = oracle.brute_count(spec)
                brute_span = oracle.brute_count_spanning(spec)
                if m <= PROFILE_MAX_ROWS:
                    _compare(checks, "oracle-agreement", where,
                             brute_all, oracle.profile_count(spec))
                    _compare(checks, "oracle-agreement-spanning", where,
                             brute_span, oracle.profile_count(spec, spanning=True))
                if family is Family.CLIQUE:
                    _compare(checks, "transfer-vs-brute", where,
                             transfer.total_count(m, n), brute_all)
                    _compare(checks, "transfer-vs-brute-spanning", where,
                             transfer.spanning_count(m, n), brute_span)
                if family is Family.GRID and m in (3, 4):
                    _compare(checks, "recurrence-vs-brute", where,
                             recurrences.grid_count(m, n), brute_all)
                    _compare(checks, "excess-vs-brute", where,
                             recurrences.excess_count(m, n), oracle.brute_excess(m, n))

    for m in range(3, min(m_max, 4) + 1):
        for n in range(1, n_max + 1):
            value, exact = bound.excess_lower_bound(m, n)
            detail = f"m={m} n={n}"
            _compare(checks, "bound-equals-recurrence", detail,
                     value, recurrences.excess_count(m, n))
            checks.append(Check("bound-exact-flag", detail,
                                "PASS" if exact else "FAIL"))
    for m in range(5, m_max + 1):
        for n in range(1, n_max + 1):
            if m * n > budget:
                checks.append(Check("bound-direction", f"m={m} n={n}: over budget", "SKIP"))
                continue
            value, _ = bound.excess_lower_bound(m, n)
            actual = oracle.brute_excess(m, n)
            checks.append(Check("bound-direction", f"m={m} n={n}: {value} <= {actual}",
                                "PASS" if value <= actual else "FAIL"))
            upper, _ = bound.grid_upper_bound(m, n)
            grid_actual = oracle.brute_count(cell(Family.GRID, m, n))
            checks.append(Check("grid-upper-direction",
                                f"m={m} n={n}: {upper} >= {grid_actual}",
                                "PASS" if upper >= grid_actual else "FAIL"))

    # N(n) - 2 N(n-1) + N(n-2) telescopes the placement weights down to
    # the spanning count at n.
    for family in (Family.CLIQUE, Family.GRID):
        for m in range(1, min(m_max, PROFILE_MAX_ROWS) + 1):
            for n in range(3, n_max + 1):
                where = f"{family.value} {m}x{n}"
                totals = [oracle.profile_count(cell(family, m, j)) for j in (n - 2, n - 1, n)]
                span = oracle.profile_count(cell(family, m, n), spanning=True)
                _compare(checks, "placement-convolution", where,
                         totals[2] - 2 * totals[1] + totals[0], span)
    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    checks = run_verification(args.m_max, args.n_max, args.deep)
    failed = 0
    for check in checks:
        print(f"{check.status} {check.name} ({check.detail})")
        if check.status == "FAIL":
            failed += 1
    counts = {"PASS": 0, "FAIL": 0, "SKIP": 0}
    for check in checks:
        counts[check.status] += 1
    print(f"{counts['PASS']} passed, {counts['FAIL']} failed, {counts['SKIP']} skipped")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridsets",
        description="Count connected vertex subsets of clique-column and grid strips.")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count one strip")
    count.add_argument("--family", choices=sorted(FAMILIES), required=True)
    count.add_argument("--m", type=int, required=True, help="rows")
    count.add_argument("--n", type=int, required=True, help="columns")
    count.add_argument("--method", choices=METHODS, required=True)
    count.add_argument("--spanning", action="store_true",
                       help="only sets touching every column")
    count.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    count.set_defaults(func=cmd_count)

    table = sub.add_parser("table", help="counts for n = 1 .. n-max")
    table.add_argument("--family", choices=sorted(FAMILIES), required=True)
    table.add_argument("--m", type=int, required=True, help="rows")
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--method", choices=METHODS, required=True)
    table.add_argument("--spanning", action="store_true")
    table.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="cross-check all routes")
    verify.add_argument("--m-max", type=int, default=4)
    verify.add_argument("--n-max", type=int, default=4)
    verify.add_argument("--deep", action="store_true", help="extend n by two")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BudgetExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
