"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from patiencesort.perm_core import Permutation


def perms(min_n: int = 0, max_n: int = 9):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation))


def decks(max_n: int = 60):
    return perms(0, max_n)
