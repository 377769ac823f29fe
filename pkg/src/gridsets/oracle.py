"""Independent enumeration oracles: brute force and a profile sweep.

Two deliberately different algorithms compute the same quantities so
every faster route in the package can be cross-checked against both.
The brute force enumerates flat bitmasks (budgeted by total cell count,
override with the GRIDSETS_BUDGET environment variable); the profile
sweep runs column by column and is exact for any length, budgeted only
by row count.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from gridsets import _scan
from gridsets.grids import Family, GridSpec, column_runs

DEFAULT_BUDGET = 28
PROFILE_MAX_ROWS = 12
_WORD_LIMIT = 60  # flat masks live in an int64 inside the kernels

BUDGET_ENV = "GRIDSETS_BUDGET"


class BudgetExceededError(ValueError):
    """Requested enumeration is over the configured budget."""


def enumeration_budget() -> int:
    """Cell-count cap for the brute force; GRIDSETS_BUDGET overrides."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}")
    return value


@dataclass(frozen=True)
class RestrictionPattern:
    """Exact column pins: (column, mask) pairs, masks nonzero.

    A pinned column is held at exactly the given mask; only unpinned
    columns are enumerated.
    """

    pins: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        cols = [col for col, _ in self.pins]
        if len(set(cols)) != len(cols):
            raise ValueError("duplicate pinned column")
        if any(mask <= 0 for _, mask in self.pins):
            raise ValueError("pinned masks must be nonzero")

    @classmethod
    def pin(cls, pins: Mapping[int, int]) -> "RestrictionPattern":
        return cls(tuple(sorted(pins.items())))

    def arrays(self, m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
        """Per-column flag/mask arrays for the kernels; validates bounds."""
        flags = np.zeros(n, dtype=np.int64)
        masks = np.zeros(n, dtype=np.int64)
        full = (1 << m) - 1
        for col, mask in self.pins:
            if not 0 <= col < n:
                raise ValueError(f"pinned column {col} outside 0..{n - 1}")
            if mask > full:
                raise ValueError(f"pinned mask {mask:#b} uses rows outside the strip")
            flags[col] = 1
            masks[col] = mask
        return flags, masks


_NO_PINS = RestrictionPattern(())


def _check_budget(bits: int, budget: int | None) -> None:
    limit = enumeration_budget() if budget is None else budget
    if bits > limit:
        raise BudgetExceededError(
            f"{bits} cells is too large for brute force (budget {limit}; "
            f"set {BUDGET_ENV} to raise it)")
    if bits > _WORD_LIMIT:
        raise BudgetExceededError(f"flat masks beyond {_WORD_LIMIT} bits are not supported")


def brute_count(spec: GridSpec, *, budget: int | None = None) -> int:
    """All connected vertex subsets of the strip, by direct enumeration."""
    _check_budget(spec.vertex_count, budget)
    flags, masks = _NO_PINS.arrays(spec.m, spec.n)
    clique = spec.family is Family.CLIQUE
    return int(_scan.scan_connected(spec.m, spec.n, clique, False, flags, masks))


def brute_count_spanning(spec: GridSpec, pattern: RestrictionPattern | None = None,
                         *, budget: int | None = None) -> int:
    """Connected subsets touching every column, optionally with pins."""
    _check_budget(spec.vertex_count, budget)
    flags, masks = (pattern or _NO_PINS).arrays(spec.m, spec.n)
    clique = spec.family is Family.CLIQUE
    return int(_scan.scan_connected(spec.m, spec.n, clique, True, flags, masks))


def brute_excess(m: int, n: int, pattern: RestrictionPattern | None = None,
                 *, budget: int | None = None) -> int:
    """Column-spanning subsets connected under the clique rule but
    disconnected on the plain grid, optionally with pins."""
    GridSpec(m, n, Family.CLIQUE)  # shape validation
    _check_budget(m * n, budget)
    flags, masks = (pattern or _NO_PINS).arrays(m, n)
    return int(_scan.scan_excess(m, n, flags, masks))


# ----- profile sweep ---------------------------------------------------

def _uf_find(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def _advance(classes: tuple[int, ...], seeds: tuple[int, ...]):
    """Push the open components one column to the right.

    classes are the previous column's rows grouped by component, seeds
    the new column's rows grouped by within-column adjacency. Returns
    the new class tuple, or None when some component seals while the
    new column is nonempty (the set would end up disconnected).
    """
    nc = len(classes)
    parent = list(range(nc + len(seeds)))
    for ci, cmask in enumerate(classes):
        touched = False
        for si, smask in enumerate(seeds):
            if cmask & smask:
                ra = _uf_find(parent, ci)
                rb = _uf_find(parent, nc + si)
                if ra != rb:
                    parent[rb] = ra
                touched = True
        if not touched:
            return None
    merged: dict[int, int] = {}
    for si, smask in enumerate(seeds):
        root = _uf_find(parent, nc + si)
        merged[root] = merged.get(root, 0) | smask
    return tuple(sorted(merged.values()))


@lru_cache(maxsize=None)
def _profile_pair(spec: GridSpec) -> tuple[int, int]:
    """(all connected sets, connected sets touching every column).

    One sweep produces both: each live state carries a flag telling
    whether the set started in column 0 and never skipped a column.
    """
    m, n = spec.m, spec.n
    full = (1 << m) - 1
    if spec.family is Family.CLIQUE:
        seeds_for = [(mask,) if mask else () for mask in range(full + 1)]
    else:
        seeds_for = [column_runs(mask) for mask in range(full + 1)]

    live: dict[tuple[tuple[int, ...], bool], int] = {}
    idle = 1  # nothing chosen yet
    done = 0  # one component closed; later columns must stay empty
    for j in range(n):
        nxt: dict[tuple[tuple[int, ...], bool], int] = {}
        nxt_done = done
        step: dict[tuple[tuple[int, ...], int], tuple[int, ...] | None] = {}
        for (classes, pristine), ways in live.items():
            if len(classes) == 1:
                nxt_done += ways  # empty column closes the set
            for mask in range(1, full + 1):
                key = (classes, mask)
                if key in step:
                    out = step[key]
                else:
                    out = step[key] = _advance(classes, seeds_for[mask])
                if out is not None:
                    nkey = (out, pristine)
                    nxt[nkey] = nxt.get(nkey, 0) + ways
        if idle:
            for mask in range(1, full + 1):
                nkey = (seeds_for[mask], j == 0)
                nxt[nkey] = nxt.get(nkey, 0) + idle
        live, done = nxt, nxt_done
    total = done + sum(w for (cl, _), w in live.items() if len(cl) == 1)
    spanning = sum(w for (cl, p), w in live.items() if len(cl) == 1 and p)
    return total, spanning


def profile_count(spec: GridSpec, spanning: bool = False) -> int:
    """Connected subsets via the column-profile sweep; exact for any n."""
    if spec.m > PROFILE_MAX_ROWS:
        raise BudgetExceededError(
            f"m={spec.m} is over budget for the profile sweep (max {PROFILE_MAX_ROWS})")
    total, spanning_total = _profile_pair(spec)
    return spanning_total if spanning else total
