"""Linear recursion for connected sets in clique-column strips.

Pin the final column of a column-spanning connected set to an exact
row subset. Appending a fresh column multiplies the vector of pinned
counts by a fixed step matrix, because any nonzero new column keeps the
set connected exactly when it shares a row with the pinned subset (the
old column is a clique, the rest of the set hangs off it). Totals
follow by weighting spans with their number of placements.

Everything uses plain Python integers, so results are exact at any size.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


def _validate(m: int, k: int = 1) -> None:
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if k < 1:
        raise ValueError(f"need at least one column, got {k}")


@lru_cache(maxsize=None)
def transfer_matrix(m: int) -> tuple[tuple[int, ...], ...]:
    """Column-append step matrix.

    Entry [i][j] counts the (j+1)-row choices for a fresh column next
    to a pinned (i+1)-row subset, keeping at least one shared row:
    C(m, j+1) - C(m-i-1, j+1), the second term removing the choices
    that miss every pinned row.
    """
    _validate(m)
    return tuple(
        tuple(comb(m, j + 1) - comb(m - i - 1, j + 1) for j in range(m))
        for i in range(m)
    )


_PINNED: dict[int, list[tuple[int, ...]]] = {}


def pinned_counts(m: int, k: int) -> tuple[int, ...]:
    """Connected-set counts with the final column pinned exactly.

    Entry i-1: clique-column sets spanning k columns whose final column
    equals one fixed choice of i rows. Row symmetry makes every choice
    of the same size count the same. k=1 is all ones (the pinned rows
    alone).
    """
    _validate(m, k)
    table = _PINNED.setdefault(m, [(1,) * m])
    step = transfer_matrix(m)
    while len(table) < k:
        prev = table[-1]
        table.append(tuple(sum(row[j] * prev[j] for j in range(m)) for row in step))
    return table[k - 1]


def spanning_count(m: int, k: int) -> int:
    """Connected sets of the clique-column strip touching all k columns."""
    vec = pinned_counts(m, k)
    return sum(comb(m, i + 1) * vec[i] for i in range(m))


def total_count(m: int, n: int) -> int:
    """All connected sets of the m-row, n-column clique strip.

    A set spanning k consecutive columns fits at n - k + 1 positions.
    """
    _validate(m, n)
    return sum((n - k + 1) * spanning_count(m, k) for k in range(1, n + 1))
