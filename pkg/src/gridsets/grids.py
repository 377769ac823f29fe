"""Strip graphs and connectivity of induced vertex subsets.

A strip has m rows and n columns. Horizontal edges always join equal
rows of consecutive columns. Vertical structure depends on the family:
clique columns make every pair of rows within a column adjacent, path
columns only vertically consecutive rows (the ordinary grid graph).

Rows and columns are 0-based everywhere. A column subset is an m-bit
mask with bit i standing for row i.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

# Flat masks used by the brute-force oracle must fit one machine word.
MAX_ROWS = 60


class Family(Enum):
    """Vertical adjacency rule of a strip."""

    CLIQUE = "k"
    GRID = "grid"


@dataclass(frozen=True)
class GridSpec:
    """Shape of one strip: rows, columns, vertical rule."""

    m: int
    n: int
    family: Family

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"need m >= 1 and n >= 1, got m={self.m}, n={self.n}")
        if self.m > MAX_ROWS:
            raise ValueError(f"m={self.m} exceeds the supported maximum of {MAX_ROWS} rows")

    @property
    def vertex_count(self) -> int:
        return self.m * self.n

    @property
    def full_column(self) -> int:
        return (1 << self.m) - 1


@dataclass(frozen=True)
class VertexSet:
    """Vertex subset of a strip, stored as one mask per column."""

    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(mask < 0 for mask in self.masks):
            raise ValueError("column masks must be non-negative")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[tuple[int, int]]) -> "VertexSet":
        """Build from (row, column) pairs on an n-column strip."""
        masks = [0] * n
        for row, col in vertices:
            masks[col] |= 1 << row
        return cls(tuple(masks))

    @property
    def size(self) -> int:
        return sum(mask.bit_count() for mask in self.masks)

    def is_empty(self) -> bool:
        return all(mask == 0 for mask in self.masks)

    def spans_all_columns(self) -> bool:
        return all(mask != 0 for mask in self.masks)

    def vertices(self) -> Iterator[tuple[int, int]]:
        for col, mask in enumerate(self.masks):
            rest = mask
            while rest:
                low = rest & -rest
                yield low.bit_length() - 1, col
                rest ^= low


@lru_cache(maxsize=None)
def column_runs(mask: int) -> tuple[int, ...]:
    """Maximal blocks of consecutive set bits, lowest first, as masks."""
    runs = []
    rest = mask
    while rest:
        bit = rest & -rest
        run = 0
        while rest & bit:
            run |= bit
            rest ^= bit
            bit <<= 1
        runs.append(run)
    return tuple(runs)


def reflect_mask(mask: int, m: int) -> int:
    """Reverse the bit order of an m-bit mask (row i goes to row m-1-i)."""
    out = 0
    for i in range(m):
        if (mask >> i) & 1:
            out |= 1 << (m - 1 - i)
    return out


def _neighbors(spec: GridSpec, vset: VertexSet, row: int, col: int) -> Iterator[tuple[int, int]]:
    mask = vset.masks[col]
    if spec.family is Family.CLIQUE:
        rest = mask & ~(1 << row)
        while rest:
            low = rest & -rest
            yield low.bit_length() - 1, col
            rest ^= low
    else:
        for other in (row - 1, row + 1):
            if 0 <= other < spec.m and (mask >> other) & 1:
                yield other, col
    for other_col in (col - 1, col + 1):
        if 0 <= other_col < spec.n and (vset.masks[other_col] >> row) & 1:
            yield row, other_col


def components(spec: GridSpec, vset: VertexSet) -> tuple[frozenset[tuple[int, int]], ...]:
    """Connected components of the induced subgraph, as (row, col) sets."""
    if len(vset.masks) != spec.n:
        raise ValueError("vertex set does not match the strip's column count")
    if any(mask > spec.full_column for mask in vset.masks):
        raise ValueError("a column mask uses rows outside the strip")
    seen: set[tuple[int, int]] = set()
    out = []
    for start in vset.vertices():
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            row, col = frontier.pop()
            for nb in _neighbors(spec, vset, row, col):
                if nb not in comp:
                    comp.add(nb)
                    frontier.append(nb)
        seen |= comp
        out.append(frozenset(comp))
    return tuple(out)


def component_count(spec: GridSpec, vset: VertexSet) -> int:
    return len(components(spec, vset))


def is_connected(spec: GridSpec, vset: VertexSet) -> bool:
    """True when the induced subgraph is connected. The empty set is not."""
    return len(components(spec, vset)) == 1
