"""Longest increasing subsequences: DP table, single-row bumping, bisection."""

from __future__ import annotations

from bisect import bisect_left
from typing import List, Sequence, Tuple

from .perm_core import PartialPermutation


def lis_table(p: Sequence[int]) -> List[int]:
    """L_i = 1 + max{L_j : j < i, p_j < p_i}, or 1 if no such j.  Quadratic."""
    table: List[int] = []
    for i, v in enumerate(p):
        best = 0
        for j in range(i):
            if p[j] < v and table[j] > best:
                best = table[j]
        table.append(best + 1)
    return table


def row_bump_trace(p: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Single-row bumping.  Returns (final word, 1-based insertion position per card)."""
    w: List[int] = []
    positions: List[int] = []
    for v in p:
        # left-most entry larger than v gets bumped; otherwise append
        k = 0
        while k < len(w) and w[k] < v:
            k += 1
        if k == len(w):
            w.append(v)
        else:
            w[k] = v
        positions.append(k + 1)
    return w, positions


def row_bump_word(p: Sequence[int]) -> PartialPermutation:
    w, _ = row_bump_trace(p)
    return PartialPermutation(tuple(w), len(p))


def lis_length(p: Sequence[int]) -> int:
    """O(n log n) length via binary search over the bumping word."""
    w: List[int] = []
    for v in p:
        k = bisect_left(w, v)
        if k == len(w):
            w.append(v)
        else:
            w[k] = v
    return len(w)
