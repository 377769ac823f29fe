"""Recursive lower bounds for excess counts at any row count.

The pinned-suffix expansion behind the closed 3- and 4-row systems
works for any m. With the final column pinned, classifying how it acts
on the column before it gives three cases: a run of the final column
detaches (every clique-connected completion counts), the pair changes
nothing structural (recurse on a shorter strip), or the final column
merges separate runs of the previous one. Merge states expand over the
next column in turn; merge patterns whose regrouped runs form
contiguous blocks collapse back to a pinned pair with a fictitious
filled final column, while interleaved patterns cannot be re-encoded
and are dropped. Dropped branches only ever undercount, so the result
is a certified lower bound, and it is exact whenever no drop occurred.
Interleaving needs three runs in one column plus a gap, i.e. at least
five rows, which is why three and four rows are always exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from gridsets.grids import column_runs, reflect_mask
from gridsets.transfer import pinned_counts, spanning_count


class PairCase(Enum):
    """How a pinned final column acts on the column before it."""

    DETACHED = "detached"
    SAME_COMPONENTS = "same_components"
    MERGING = "merging"


def window_components(masks: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Components of a few pinned columns, as per-column row masks.

    masks[0] is the leftmost column. Only grid adjacency counts here:
    vertical runs within a column, equal rows across adjacent columns.
    """
    items: list[tuple[int, int]] = []
    for j, mask in enumerate(masks):
        items.extend((j, run) for run in column_runs(mask))
    parent = list(range(len(items)))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, (ja, ra) in enumerate(items):
        for b in range(a + 1, len(items)):
            jb, rb = items[b]
            if jb == ja + 1 and ra & rb:
                root_a, root_b = find(a), find(b)
                if root_a != root_b:
                    parent[root_b] = root_a
    groups: dict[int, list[int]] = {}
    for idx, (j, run) in enumerate(items):
        acc = groups.setdefault(find(idx), [0] * len(masks))
        acc[j] |= run
    return tuple(tuple(acc) for acc in groups.values())


def classify_pair(s: int, t: int) -> PairCase:
    """Classify a pinned pair; s is the final column, t the one before."""
    comps = window_components((t, s))
    if any(part[0] == 0 for part in comps):
        return PairCase.DETACHED
    if len(comps) == len(column_runs(t)):
        return PairCase.SAME_COMPONENTS
    return PairCase.MERGING


@dataclass(frozen=True)
class RunLabels:
    """Merge intervals of an expansion column next to a merging pair.

    For each run of x, low/high are the extreme x-rows of the component
    the run belongs to in the (x, t, s) window. Runs sharing a
    component carry equal labels; contiguous means equal labels sit
    next to each other in row order, and fill is the union of the
    closed row intervals [low, high].
    """

    lows: tuple[int, ...]
    highs: tuple[int, ...]
    contiguous: bool
    fill: int


def run_labels(x: int, t: int, s: int) -> RunLabels:
    comps = window_components((x, t, s))
    runs = column_runs(x)
    comp_ids = []
    for run in runs:
        for ci, part in enumerate(comps):
            if part[0] & run:
                comp_ids.append(ci)
                break
    lows, highs = [], []
    for ci in comp_ids:
        xrows = comps[ci][0]
        lows.append((xrows & -xrows).bit_length() - 1)
        highs.append(xrows.bit_length() - 1)
    contiguous = True
    for i in range(len(comp_ids)):
        for j in range(i + 2, len(comp_ids)):
            if comp_ids[i] == comp_ids[j] and any(
                    comp_ids[h] != comp_ids[i] for h in range(i + 1, j)):
                contiguous = False
    fill = 0
    for low, high in zip(lows, highs):
        fill |= ((1 << (high + 1)) - 1) & ~((1 << low) - 1)
    return RunLabels(tuple(lows), tuple(highs), contiguous, fill)


class BoundEngine:
    """Memoized pinned-suffix expansion for one row count.

    States are (depth, final column) and (depth, final pair); values
    carry an exactness flag that goes False once any interleaved merge
    had to be dropped below that state. Mirror folding halves the memo
    by identifying row-reflected states; disable it to test the
    symmetry. Not thread-safe: memo tables mutate during evaluation.
    """

    def __init__(self, m: int, *, fold_mirror: bool = True) -> None:
        if m < 1:
            raise ValueError(f"need m >= 1, got {m}")
        self.m = m
        self.fold_mirror = fold_mirror
        self._one: dict[tuple[int, int], tuple[int, bool]] = {}
        self._pair: dict[tuple[int, int, int], tuple[int, bool]] = {}
        self.interleaved_drops = 0  # branches no pair state can encode

    def excess_lower_bound(self, n: int) -> tuple[int, bool]:
        """(value, exact) for the excess sets of the m x n strip.

        Sums the single-column states over every possible final column.
        exact=False certifies only a lower bound.
        """
        if n < 1:
            raise ValueError(f"need at least one column, got {n}")
        total, exact = 0, True
        for s in range(1, 1 << self.m):
            value, state_exact = self._one_column(n, s)
            total += value
            exact = exact and state_exact
        return total, exact

    def memo_sizes(self) -> tuple[int, int]:
        return len(self._one), len(self._pair)

    # ----- states --------------------------------------------------

    def _one_column(self, depth: int, s: int) -> tuple[int, bool]:
        """Excess sets of given depth whose final column is exactly s."""
        if self.fold_mirror:
            s = min(s, reflect_mask(s, self.m))
        key = (depth, s)
        hit = self._one.get(key)
        if hit is not None:
            return hit
        if depth == 1:
            out = (1 if len(column_runs(s)) > 1 else 0, True)
        else:
            total, exact = 0, True
            for x in range(1, 1 << self.m):
                if x & s == 0:
                    continue  # no shared row: not clique-connected
                value, state_exact = self._pair_state(depth, s, x)
                total += value
                exact = exact and state_exact
            out = (total, exact)
        self._one[key] = out
        return out

    def _pair_state(self, depth: int, s: int, t: int) -> tuple[int, bool]:
        """Excess sets whose final two columns are exactly (t, s).

        Callers guarantee s & t != 0.
        """
        if self.fold_mirror:
            rs, rt = reflect_mask(s, self.m), reflect_mask(t, self.m)
            if (rs, rt) < (s, t):
                s, t = rs, rt
        key = (depth, s, t)
        hit = self._pair.get(key)
        if hit is not None:
            return hit
        if depth == 2:
            out = (1 if len(window_components((t, s))) > 1 else 0, True)
        else:
            case = classify_pair(s, t)
            if case is PairCase.DETACHED:
                # A detached run can never reattach: every clique-valid
                # completion of the first depth-1 columns counts.
                out = (pinned_counts(self.m, depth - 1)[t.bit_count() - 1], True)
            elif case is PairCase.SAME_COMPONENTS:
                out = self._one_column(depth - 1, t)
            else:
                out = self._expand_merging(depth, s, t)
        self._pair[key] = out
        return out

    def _expand_merging(self, depth: int, s: int, t: int) -> tuple[int, bool]:
        comps_pair = window_components((t, s))
        total, exact = 0, True
        for x in range(1, 1 << self.m):
            if x & t == 0:
                continue
            if any(part[0] & x == 0 for part in comps_pair):
                # Some settled component cannot be reached from the
                # left, so every clique-valid completion counts.
                total += pinned_counts(self.m, depth - 2)[x.bit_count() - 1]
                continue
            comps = window_components((x, t, s))
            if len(comps) == len(column_runs(x)):
                value, state_exact = self._one_column(depth - 2, x)
            else:
                labels = run_labels(x, t, s)
                if labels.contiguous:
                    value, state_exact = self._pair_state(depth - 1, labels.fill, x)
                else:
                    self.interleaved_drops += 1
                    value, state_exact = 0, False
            total += value
            exact = exact and state_exact
        return total, exact


@lru_cache(maxsize=None)
def _engine(m: int) -> BoundEngine:
    return BoundEngine(m)


def excess_lower_bound(m: int, n: int) -> tuple[int, bool]:
    """(value, exact) lower bound on the excess sets of the m x n strip."""
    return _engine(m).excess_lower_bound(n)


def grid_upper_bound(m: int, n: int) -> tuple[int, bool]:
    """(value, exact) upper bound on the connected sets of the m x n grid.

    Clique totals minus the excess lower bounds; undercounting the
    excess can only overcount the grid.
    """
    if n < 1:
        raise ValueError(f"need at least one column, got {n}")
    total, exact = 0, True
    for k in range(1, n + 1):
        excess, k_exact = excess_lower_bound(m, k)
        total += (n - k + 1) * (spanning_count(m, k) - excess)
        exact = exact and k_exact
    return total, exact
