"""The clique-column linear recursion against oracles and known rows."""

from __future__ import annotations

from math import comb

import pytest

from gridsets.grids import Family, GridSpec
from gridsets.oracle import RestrictionPattern, brute_count, brute_count_spanning
from gridsets.transfer import pinned_counts, spanning_count, total_count, transfer_matrix


def test_step_matrix_three_rows():
    assert transfer_matrix(3) == (
        (1, 2, 1),
        (2, 3, 1),
        (3, 3, 1),
    )


def test_step_matrix_four_rows():
    assert transfer_matrix(4) == (
        (1, 3, 3, 1),
        (2, 5, 4, 1),
        (3, 6, 4, 1),
        (4, 6, 4, 1),
    )


@pytest.mark.parametrize("m", range(1, 9))
def test_step_matrix_structure(m):
    step = transfer_matrix(m)
    for i in range(m):
        # Final entry: the full column always connects.
        assert step[i][m - 1] == 1
        for j in range(m):
            assert step[i][j] == comb(m, j + 1) - comb(m - i - 1, j + 1)
            # More pinned rows never shrink the choices.
            if i + 1 < m:
                assert step[i][j] <= step[i + 1][j]
            # Saturation: overlap is forced once the sizes cover m rows.
            if (i + 1) + (j + 1) > m:
                assert step[i][j] == comb(m, j + 1)


def test_pinned_vectors_small():
    assert pinned_counts(3, 1) == (1, 1, 1)
    assert pinned_counts(3, 2) == (4, 6, 7)
    assert pinned_counts(3, 3) == (23, 33, 37)
    assert pinned_counts(4, 2) == (8, 12, 14, 15)


def test_spanning_rows():
    assert [spanning_count(3, k) for k in range(1, 5)] == [7, 37, 205, 1129]
    assert [spanning_count(4, k) for k in range(1, 5)] == [15, 175, 2129, 25793]


def test_single_column_total():
    # One clique column: every nonempty subset is connected.
    for m in range(1, 7):
        assert spanning_count(m, 1) == 2 ** m - 1
        assert total_count(m, 1) == 2 ** m - 1


def test_total_three_by_three():
    # 3*7 + 2*37 + 1*205, confirmed against both oracles.
    assert total_count(3, 3) == 300


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 6) for n in range(1, 6) if m * n <= 20])
def test_totals_match_brute(m, n):
    spec = GridSpec(m, n, Family.CLIQUE)
    assert total_count(m, n) == brute_count(spec)
    assert spanning_count(m, n) == brute_count_spanning(spec)


@pytest.mark.parametrize("m,k", [(3, 2), (3, 3), (4, 2), (4, 3)])
def test_pinned_counts_match_pinned_brute(m, k):
    # Every final-column mask of the same size gives the same count.
    spec = GridSpec(m, k, Family.CLIQUE)
    vec = pinned_counts(m, k)
    for mask in range(1, 1 << m):
        got = brute_count_spanning(spec, RestrictionPattern.pin({k - 1: mask}))
        assert got == vec[mask.bit_count() - 1]


def test_pinned_counts_assemble_spanning():
    # Weighting by the number of same-size masks recovers the total.
    for m, k in ((3, 4), (4, 3), (5, 3)):
        vec = pinned_counts(m, k)
        assert spanning_count(m, k) == sum(
            comb(m, i + 1) * vec[i] for i in range(m))


def test_validation():
    with pytest.raises(ValueError):
        transfer_matrix(0)
    with pytest.raises(ValueError):
        pinned_counts(3, 0)
    with pytest.raises(ValueError):
        total_count(0, 2)
