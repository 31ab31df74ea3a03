"""Exact integer rank via fraction-free (Bareiss) elimination.

Python ints never overflow, and the Bareiss update keeps every intermediate
entry integral, so rank decisions here are exact; no floating point anywhere.
"""

from __future__ import annotations

from typing import Sequence


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    if any(len(r) != n_cols for r in m):
        raise ValueError("ragged matrix")
    rank = 0
    prev_pivot = 1
    row = 0
    for col in range(n_cols):
        pivot_row = next((i for i in range(row, n_rows) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != row:
            m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for i in range(row + 1, n_rows):
            factor = m[i][col]
            for j in range(col, n_cols):
                # Bareiss step: exact division by the previous pivot.
                m[i][j] = (m[i][j] * pivot - factor * m[row][j]) // prev_pivot
        prev_pivot = pivot
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank
