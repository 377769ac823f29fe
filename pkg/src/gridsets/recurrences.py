"""Closed recurrences for excess sets at three and four rows.

An "excess set" is a column-spanning vertex set that is connected under
the clique-column rule yet disconnected on the plain grid. Subtracting
excess counts from the clique-column spanning counts turns the clique
totals into grid totals.

Each tracked sequence pins the final column of the set to a fixed row
subset; three pair sequences (d at three rows, r/t/k at four) pin the
final two columns, for the suffixes where the last column merges
separate runs of the one before. Appending a column rewrites every pin
in terms of the previous pins plus the clique-family pinned spanning
counts, so the whole system advances one column at a time with exact
integer arithmetic.

Masks are 0-based row sets: {0} is the mask 0b001.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gridsets.transfer import pinned_counts, spanning_count


@dataclass(frozen=True)
class Row3:
    """Pinned excess counts for 3-row strips of one length.

    Final-column pins: a1 -> {0} (mirror {2}), a2 -> {1},
    b1 -> {0,1} (mirror {1,2}), b3 -> {0,2}, c -> {0,1,2}.
    d pins the final two columns to ({0,2}, {0,1,2}), older column
    first: the full last column merges the two runs of {0,2}.
    """

    a1: int
    a2: int
    b1: int
    b3: int
    c: int
    d: int


class ExcessSystem3:
    """Iterative pinned-count table for 3-row strips."""

    def __init__(self) -> None:
        # Length 1: only {0,2} is disconnected on the grid. The pair
        # pin d needs two columns and starts at 0 for length 2.
        self._rows: list[Row3] = [Row3(0, 0, 0, 1, 0, 0)]

    def row(self, n: int) -> Row3:
        if n < 1:
            raise ValueError(f"need at least one column, got {n}")
        while len(self._rows) < n:
            self._rows.append(self._advance())
        return self._rows[n - 1]

    def _advance(self) -> Row3:
        n = len(self._rows) + 1
        p = self._rows[-1]
        if n == 2:
            d = 0
        else:
            q = self._rows[-2]
            d = 2 * q.a1 + 2 * q.b1 + q.c + p.d
        f1, f2, _ = pinned_counts(3, n - 1)
        a1 = p.a1 + p.b1 + p.b3 + p.c
        a2 = p.a2 + 2 * p.b1 + p.c
        b1 = p.a1 + p.a2 + 2 * p.b1 + p.b3 + p.c
        b3 = 2 * f1 + 2 * f2 + p.b3 + p.c
        # c consumes the pair pin at the new length, so d comes first.
        c = 2 * p.a1 + p.a2 + 2 * p.b1 + d + p.c
        return Row3(a1, a2, b1, b3, c, d)

    def excess(self, n: int) -> int:
        r = self.row(n)
        return 2 * r.a1 + r.a2 + 2 * r.b1 + r.b3 + r.c


@dataclass(frozen=True)
class Row4:
    """Pinned excess counts for 4-row strips of one length.

    Final-column pins: a1 -> {0} (mirror {3}), a2 -> {1} (mirror {2}),
    b1 -> {0,1} (mirror {2,3}), b2 -> {1,2}, b4 -> {0,2} (mirror
    {1,3}), b6 -> {0,3}, c1 -> {0,1,2} (mirror {1,2,3}), c3 -> {0,1,3}
    (mirror {0,2,3}), g -> {0,1,2,3}. Mirrored pins share a count, so
    only one of each pair is stored.

    Pair pins (older column first): r -> ({0,2}, {0,1,2}),
    t -> ({0,2,3}, {0,1,2}), k -> ({0,3}, {0,1,2,3}). Every other
    run-merging pair equals one of these; see MERGE_PAIR_SEQUENCES.
    """

    a1: int
    a2: int
    b1: int
    b2: int
    b4: int
    b6: int
    c1: int
    c3: int
    g: int
    r: int
    t: int
    k: int


class ExcessSystem4:
    """Iterative pinned-count table for 4-row strips."""

    def __init__(self) -> None:
        # Length 1: {0,2}, {1,3}, {0,3}, {0,1,3}, {0,2,3} are the
        # grid-disconnected columns, i.e. b4, b6 and c3 start at 1.
        self._rows: list[Row4] = [Row4(0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0)]

    def row(self, n: int) -> Row4:
        if n < 1:
            raise ValueError(f"need at least one column, got {n}")
        while len(self._rows) < n:
            self._rows.append(self._advance())
        return self._rows[n - 1]

    def _advance(self) -> Row4:
        n = len(self._rows) + 1
        p = self._rows[-1]
        if n == 2:
            # Each pair pin is grid-connected on two columns alone.
            r = t = k = 0
        else:
            q = self._rows[-2]
            r = (q.a1 + q.a2 + 2 * q.b1 + q.b2 + q.b6 + 2 * q.c1 + q.c3 + q.g
                 + p.r + p.t)
            t = (2 * q.a1 + q.a2 + 2 * q.b1 + q.b2 + q.b4 + 2 * q.c1 + q.g
                 + p.r + p.k + 2 * p.t)
            k = (2 * q.a1 + 2 * q.b1 + 2 * q.b4 + 2 * q.c1 + q.g
                 + p.k + 2 * p.t)
        f1, f2, f3, _ = pinned_counts(4, n - 1)
        a1 = p.a1 + p.b1 + p.b4 + p.b6 + p.c1 + 2 * p.c3 + p.g
        a2 = p.a2 + p.b1 + p.b2 + p.b4 + 2 * p.c1 + p.c3 + p.g
        b1 = p.a1 + p.a2 + p.b1 + p.b2 + 2 * p.b4 + p.b6 + 2 * p.c1 + 2 * p.c3 + p.g
        b2 = 2 * p.a2 + 2 * p.b1 + p.b2 + 2 * p.b4 + 2 * p.c1 + 2 * p.c3 + p.g
        b4 = 2 * f1 + 4 * f2 + 2 * f3 + p.b4 + p.c1 + p.c3 + p.g
        b6 = 2 * f1 + 4 * f2 + 2 * f3 + p.b6 + 2 * p.c3 + p.g
        # c1 and g consume pair pins at the new length: r/t/k come first.
        c1 = (p.a1 + 2 * p.a2 + 2 * p.b1 + p.b2 + p.b4 + p.b6 + 2 * p.c1 + p.c3 + p.g
              + r + t)
        c3 = 3 * f1 + 4 * f2 + f3 + p.b4 + p.b6 + p.c1 + 2 * p.c3 + p.g
        g = (2 * p.a1 + 2 * p.a2 + 2 * p.b1 + p.b2 + 2 * p.c1 + p.g
             + 2 * r + k + 2 * t)
        return Row4(a1, a2, b1, b2, b4, b6, c1, c3, g, r, t, k)

    def excess(self, n: int) -> int:
        w = self.row(n)
        return (2 * w.a1 + 2 * w.a2 + 2 * w.b1 + w.b2 + 2 * w.b4 + w.b6
                + 2 * w.c1 + 2 * w.c3 + w.g)


# Final-column pin mask -> stored sequence name, for cross-checks
# against the pinned brute force.
PIN_SEQUENCES_3 = {
    0b001: "a1", 0b100: "a1", 0b010: "a2",
    0b011: "b1", 0b110: "b1", 0b101: "b3", 0b111: "c",
}
PIN_SEQUENCES_4 = {
    0b0001: "a1", 0b1000: "a1", 0b0010: "a2", 0b0100: "a2",
    0b0011: "b1", 0b1100: "b1", 0b0110: "b2",
    0b0101: "b4", 0b1010: "b4", 0b1001: "b6",
    0b0111: "c1", 0b1110: "c1", 0b1011: "c3", 0b1101: "c3",
    0b1111: "g",
}

# (final column, column before it) -> pair sequence. These are exactly
# the suffixes where the final column merges separate runs of the
# previous one; pairs differing only in which rows the merge spans
# share a sequence.
MERGE_PAIR_SEQUENCES_3 = {
    (0b111, 0b101): "d",
}
MERGE_PAIR_SEQUENCES_4 = {
    (0b0111, 0b0101): "r",
    (0b0111, 0b1101): "t",
    (0b1110, 0b1010): "r",
    (0b1110, 0b1011): "t",
    (0b1111, 0b0101): "r",
    (0b1111, 0b1001): "k",
    (0b1111, 0b1010): "r",
    (0b1111, 0b1011): "t",
    (0b1111, 0b1101): "t",
}


@lru_cache(maxsize=None)
def _system(m: int) -> ExcessSystem3 | ExcessSystem4:
    if m == 3:
        return ExcessSystem3()
    if m == 4:
        return ExcessSystem4()
    raise ValueError(
        f"closed excess recurrences exist for m in {{3, 4}}, got m={m}; "
        f"use the bound engine for other row counts")


def excess_count(m: int, n: int) -> int:
    """Excess sets of the m x n strip (clique-connected, grid-split)."""
    return _system(m).excess(n)


def grid_spanning_count(m: int, n: int) -> int:
    """Connected sets of the m x n grid touching every column."""
    return spanning_count(m, n) - excess_count(m, n)


def grid_count(m: int, n: int) -> int:
    """All connected sets of the m x n grid, m in {3, 4}.

    A set spanning k consecutive columns fits at n - k + 1 positions.
    """
    _system(m)  # row-count validation
    if n < 1:
        raise ValueError(f"need at least one column, got {n}")
    return sum((n - k + 1) * grid_spanning_count(m, k) for k in range(1, n + 1))
