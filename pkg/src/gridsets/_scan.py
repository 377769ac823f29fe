"""Bit-scan kernels behind the brute-force oracle.

Subsets of an m x n strip are enumerated as flat (m*n)-bit integers,
column-major: bit j*m + i is row i of column j. Connectivity is checked
with a union-find over vertex indices. Pinned columns are fixed up
front and only the remaining bits are enumerated.

The functions are written in nopython-friendly style; when numba is
available they are compiled in place, otherwise the plain definitions
run as-is (much slower, same results). All masks must fit in an int64,
so m*n stays below 61 bits; enforced by the caller.
"""

from __future__ import annotations

import numpy as np


def _find(parent: np.ndarray, v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def _union(parent: np.ndarray, a: int, b: int) -> None:
    ra = _find(parent, a)
    rb = _find(parent, b)
    if ra != rb:
        parent[rb] = ra


def _component_count(parent: np.ndarray, s: int, m: int, n: int, clique: bool) -> int:
    col_full = (1 << m) - 1
    for v in range(m * n):
        if (s >> v) & 1:
            parent[v] = v
    for j in range(n):
        base = j * m
        col = (s >> base) & col_full
        if col == 0:
            continue
        if clique:
            first = -1
            for i in range(m):
                if (col >> i) & 1:
                    if first < 0:
                        first = base + i
                    else:
                        _union(parent, first, base + i)
        else:
            for i in range(m - 1):
                if ((col >> i) & 3) == 3:
                    _union(parent, base + i, base + i + 1)
        if j + 1 < n:
            shared = col & ((s >> (base + m)) & col_full)
            for i in range(m):
                if (shared >> i) & 1:
                    _union(parent, base + i, base + m + i)
    roots = 0
    for v in range(m * n):
        if (s >> v) & 1 and _find(parent, v) == v:
            roots += 1
    return roots


def scan_connected(m: int, n: int, clique: bool, spanning: bool,
                   pin_flags: np.ndarray, pin_masks: np.ndarray) -> int:
    """Count connected subsets; pinned columns are held at their masks."""
    total = m * n
    col_full = (1 << m) - 1
    base_bits = 0
    free = np.empty(total, np.int64)
    nfree = 0
    for j in range(n):
        if pin_flags[j]:
            base_bits |= pin_masks[j] << (m * j)
        else:
            for i in range(m):
                free[nfree] = m * j + i
                nfree += 1
    parent = np.empty(total, np.int64)
    count = 0
    for choice in range(1 << nfree):
        s = base_bits
        c = choice
        k = 0
        while c:
            if c & 1:
                s |= 1 << free[k]
            c >>= 1
            k += 1
        if s == 0:
            continue
        if spanning:
            ok = True
            for j in range(n):
                if ((s >> (m * j)) & col_full) == 0:
                    ok = False
                    break
            if not ok:
                continue
        if _component_count(parent, s, m, n, clique) == 1:
            count += 1
    return count


def scan_excess(m: int, n: int, pin_flags: np.ndarray, pin_masks: np.ndarray) -> int:
    """Count column-spanning subsets connected under the clique rule but
    disconnected on the plain grid; pinned columns held at their masks."""
    total = m * n
    col_full = (1 << m) - 1
    base_bits = 0
    free = np.empty(total, np.int64)
    nfree = 0
    for j in range(n):
        if pin_flags[j]:
            base_bits |= pin_masks[j] << (m * j)
        else:
            for i in range(m):
                free[nfree] = m * j + i
                nfree += 1
    parent = np.empty(total, np.int64)
    count = 0
    for choice in range(1 << nfree):
        s = base_bits
        c = choice
        k = 0
        while c:
            if c & 1:
                s |= 1 << free[k]
            c >>= 1
            k += 1
        ok = True
        for j in range(n):
            if ((s >> (m * j)) & col_full) == 0:
                ok = False
                break
        if not ok:
            continue
        if _component_count(parent, s, m, n, True) != 1:
            continue
        if _component_count(parent, s, m, n, False) > 1:
            count += 1
    return count


try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is an install dependency
    njit = None

HAVE_NUMBA = njit is not None

if HAVE_NUMBA:
    _find = njit(cache=True)(_find)
    _union = njit(cache=True)(_union)
    _component_count = njit(cache=True)(_component_count)
    scan_connected = njit(cache=True)(scan_connected)
    scan_excess = njit(cache=True)(scan_excess)
