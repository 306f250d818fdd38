import itertools
import random
import time

import pytest
from hypothesis import given

from patiencesort.lis import lis_length, lis_table, row_bump_trace, row_bump_word
from patiencesort.perm_core import enumerate_permutations, parse_permutation

from strategies import perms


def brute_lis(p) -> int:
    for k in range(len(p), 0, -1):
        if any(all(a < b for a, b in zip(c, c[1:])) for c in itertools.combinations(p, k)):
            return k
    return 0


def test_lis_table_examples():
    assert lis_table(parse_permutation("364827159")) == [1, 2, 2, 3, 1, 3, 1, 3, 4]
    assert lis_table((5, 4, 3, 2, 1)) == [1] * 5
    assert lis_table((1, 2, 3, 4, 5)) == [1, 2, 3, 4, 5]


def test_row_bump_word_examples():
    assert row_bump_word(parse_permutation("364827159")).values == (1, 4, 5, 9)
    assert row_bump_word((4, 3, 2, 1)).values == (1,)
    assert row_bump_word(parse_permutation("64518723")).values == (1, 2, 3)


def test_lis_length_examples():
    assert lis_length(parse_permutation("364827159")) == 4
    assert lis_length((1, 2, 3, 4, 5)) == 5
    assert lis_length(parse_permutation("64518723")) == 3
    assert lis_length(()) == 0


@given(perms(0, 9))
def test_three_ways_agree_with_brute_force(p):
    b = brute_lis(p)
    assert lis_length(p) == b
    assert max(lis_table(p), default=0) == b
    w = row_bump_word(p).values
    assert len(w) == b and list(w) == sorted(w)


@pytest.mark.parametrize("n", range(9))
def test_three_ways_exhaustive(n):
    for p in enumerate_permutations(n):
        t = lis_table(p)
        assert lis_length(p) == max(t, default=0) == len(row_bump_word(p))
        assert all(1 <= v <= i + 1 for i, v in enumerate(t))


@pytest.mark.parametrize("n", range(7))
def test_bump_position_equals_table_entry(n):
    for p in enumerate_permutations(n):
        _, pos = row_bump_trace(p)
        assert pos == lis_table(p)


def test_large_input_smoke():
    rng = random.Random(5)
    p = list(range(1, 200001))
    rng.shuffle(p)
    t = time.perf_counter()
    k = lis_length(p)
    assert time.perf_counter() - t < 5
    # random permutations have LIS close to 2 sqrt(n)
    assert 700 < k < 1000
