import itertools

import pytest
from hypothesis import given, strategies as st

from patiencesort.enumeration import bell, involution_count
from patiencesort.patience import patience_sort, rpw
from patiencesort.patterns import (
    PatternSpec, avoidance_set, avoids, contains, contains_barred, find_occurrences,
    layered_pattern, parse_pattern, parse_pattern_list,
)
from patiencesort.perm_core import ParseError, compositions, enumerate_permutations, parse_permutation

from strategies import perms

EX = parse_permutation("364827159")


# -- an independent, deliberately slow matcher ----------------------------

def _order_iso(vals, entries) -> bool:
    return all((vals[i] < vals[j]) == (entries[i] < entries[j])
               for i in range(len(vals)) for j in range(i + 1, len(vals)))


def _parse(text):
    """(entries, gap_free, barred): gap_free[j] means entries j, j+1 abut."""
    entries, gap_free, barred = [], [], []
    dash = bar = False
    for ch in text:
        if ch == "-":
            dash = True
        elif ch == "~":
            bar = True
        else:
            if entries:
                gap_free.append(not dash)
            entries.append(int(ch))
            barred.append(bar)
            dash = bar = False
    return entries, gap_free, barred


def _matches(p, entries, gap_free):
    n, m = len(p), len(entries)
    for pos in itertools.combinations(range(n), m):
        if all(not g or pos[j + 1] == pos[j] + 1 for j, g in enumerate(gap_free)):
            if _order_iso([p[i] for i in pos], entries):
                yield pos


def oracle_contains(p, text) -> bool:
    entries, gap_free, barred = _parse(text)
    if not any(barred):
        return any(True for _ in _matches(p, entries, gap_free))
    keep = [j for j, b in enumerate(barred) if not b]
    sub_entries = [entries[j] for j in keep]
    sub_free = [keep[g + 1] == keep[g] + 1 and gap_free[keep[g]] for g in range(len(keep) - 1)]
    full = list(_matches(p, entries, gap_free))
    for occ in _matches(p, sub_entries, sub_free):
        if not any(all(f[j] == o for j, o in zip(keep, occ)) for f in full):
            return True
    return False


PATTERNS = ["21", "2-31", "31-2", "3-1-2", "231", "3-~1-42", "3-~1-24", "31-~4-2", "~2-41-3",
            "2-41-~3", "3-~1-4-2", "1-~3-2", "~1-32", "2-~1-3", "1~2", "~3-12", "4-1-~3-5-2"]


@pytest.mark.parametrize("text", PATTERNS)
def test_matches_oracle_exhaustively(text):
    for n in range(7):
        for p in enumerate_permutations(n):
            assert contains(p, text) == oracle_contains(p, text), (p, text)


@given(perms(0, 11), st.sampled_from(PATTERNS))
def test_matches_oracle_on_random_perms(p, text):
    assert contains(p, text) == oracle_contains(p, text)


def test_parse_examples():
    s = parse_pattern("3-~1-42")
    assert (s.entries, set(s.dashes), set(s.bars)) == ((3, 1, 4, 2), {1, 2}, {2})
    s = parse_pattern("2-31")
    assert (s.entries, set(s.dashes), set(s.bars)) == ((2, 3, 1), {1}, set())
    s = parse_pattern("231")
    assert (s.entries, set(s.dashes), set(s.bars)) == ((2, 3, 1), set(), set())
    assert parse_pattern("1-2-3").is_classical
    assert parse_pattern("3-~1-42").text() == "3-~1-42"


@pytest.mark.parametrize("text", ["", "-12", "12-", "1--2", "~", "112", "13", "1~-2", "a1", "~1~2"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_pattern(text)


def test_parse_pattern_list():
    assert [s.text() for s in parse_pattern_list("3-~1-42, 3-~1-24")] == ["3-~1-42", "3-~1-24"]


@pytest.mark.parametrize("text,red", [
    ("3-~1-42", "2-31"), ("31-~4-2", "31-2"), ("~2-41-3", "31-2"), ("2-41-~3", "2-31"),
    ("3-1-~4-2", "3-1-2"), ("~2-4-1-3", "3-1-2"), ("3~142", "2-31"), ("~1-32", "21"),
])
def test_reduced(text, red):
    assert parse_pattern(text).reduced().text() == red


def test_find_occurrences_examples():
    vals = {tuple(EX[i - 1] for i in occ) for occ in find_occurrences(EX, "2-31")}
    assert {(2, 7, 1), (3, 7, 1)} <= vals
    assert find_occurrences(EX, "3-1-42") == []
    assert find_occurrences((1, 2, 3, 4, 5), "21") == []
    with pytest.raises(ValueError):
        find_occurrences(EX, "3-~1-42")


def test_reduced_occurrences_of_barred_example():
    # exactly these seven 2-31 occurrences fail to extend to 3-1-42
    full = {occ for occ in find_occurrences(EX, "3-1-42")}
    assert not full
    vals = sorted(tuple(EX[i - 1] for i in occ) for occ in find_occurrences(EX, "2-31"))
    assert vals == sorted([(3, 8, 2), (3, 7, 1), (6, 8, 2), (6, 7, 1), (4, 8, 2), (4, 7, 1), (2, 7, 1)])


def test_contains_barred_examples():
    assert contains_barred(EX, "3-~1-42")
    assert not contains_barred((1, 2, 3, 4, 5), "3-~1-42")
    assert not contains_barred(parse_permutation("3142"), "3-~1-42")
    with pytest.raises(ValueError):
        contains_barred(EX, "2-31")


def test_dash_semantics():
    assert contains(parse_permutation("25314"), "2-3-1")
    assert not contains(parse_permutation("25314"), "231")
    assert contains(parse_permutation("25314"), "3-1-2")
    assert not contains(parse_permutation("25314"), "312")
    assert contains(parse_permutation("25314"), "31-2")


@given(perms(0, 9), st.sampled_from(["1-2", "2-1", "1-3-2", "2-1-3", "3-2-1"]))
def test_classical_equals_subsequence_search(p, text):
    entries = [int(c) for c in text.split("-")]
    brute = any(_order_iso(c, entries) for c in itertools.combinations(p, len(entries)))
    assert contains(p, text) == brute


@given(perms(0, 9), st.sampled_from(["21", "132", "231", "321"]))
def test_block_equals_window_search(p, text):
    entries = [int(c) for c in text]
    m = len(entries)
    brute = any(_order_iso(p[i:i + m], entries) for i in range(len(p) - m + 1))
    assert contains(p, text) == brute


def test_avoids_examples():
    assert not avoids((2, 3, 1), ["3-~1-42"])
    assert avoids((1, 2, 3, 4), ["21"])
    assert avoids(parse_permutation("64152873"), ["3-~1-42"])
    assert avoids((1, 2), "21")


def test_avoidance_set_examples():
    s3 = avoidance_set(3, ["3-~1-42"])
    assert len(s3) == 5 and (2, 3, 1) not in s3
    assert len(avoidance_set(4, ["3-~1-42", "3-~1-24"])) == 9
    assert len(avoidance_set(5, ["31-2", "32-1"])) == 16


def test_avoidance_set_cap():
    with pytest.raises(ValueError, match="12"):
        avoidance_set(13, ["21"])


@pytest.mark.parametrize("n", range(8))
def test_bell_and_rpw_image(n):
    av = avoidance_set(n, "3-~1-42")
    assert len(av) == bell(n)
    if n <= 7:
        assert av == {rpw(patience_sort(p)) for p in enumerate_permutations(n)}


@pytest.mark.parametrize("n", range(1, 8))
def test_chains_one_and_two(n):
    for chain in (["3-~1-42", "3-~1-4-2", "23-1"], ["31-~4-2", "3-1-~4-2", "3-12"]):
        sets = [avoidance_set(n, s) for s in chain]
        assert sets[0] == sets[1] == sets[2]
        assert len(sets[0]) == bell(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_classical_barred_chain_three_halves(n):
    # each classical form in the third chain is Bell-counted
    for s in ("~2-4-1-3", "2-4-1-~3"):
        assert len(avoidance_set(n, s)) == bell(n)


def test_third_chain_dashed_forms_are_not_bell():
    # Under the barred reading used here, ~2-41-3 admits 25134 (its only
    # 41-3 occurrences 513 and 514 extend through the 2) while ~2-4-1-3 does
    # not (534 has no witness), and the counts run 1, 2, 5, 15, 53, 217.
    p = parse_permutation("25134")
    assert avoids(p, "~2-41-3") and not avoids(p, "~2-4-1-3")
    assert [len(avoidance_set(n, "~2-41-3")) for n in range(1, 7)] == [1, 2, 5, 15, 53, 217]
    # and the chain's two halves are reverse-complement images, so they
    # already part at n = 3
    assert avoids((2, 3, 1), "~2-41-3") and not avoids((2, 3, 1), "2-41-~3")


@pytest.mark.parametrize("n", range(1, 9))
def test_layered(n):
    want = {layered_pattern(g) for g in compositions(n)}
    assert len(want) == 2 ** (n - 1)
    assert avoidance_set(n, ["3-~1-42", "~2-41-3"]) == want
    assert avoidance_set(n, ["23-1", "31-2"]) == want


def test_layered_examples():
    assert layered_pattern((3, 2, 3)) == parse_permutation("32154876")
    assert layered_pattern((4,)) == (4, 3, 2, 1)
    assert layered_pattern((1, 1, 1)) == (1, 2, 3)


@pytest.mark.parametrize("n", range(1, 8))
def test_claesson_mansour_counts(n):
    assert len(avoidance_set(n, ["3-12", "3-21"])) == involution_count(n)
    assert len(avoidance_set(n, ["31-2", "32-1"])) == 2 ** (n - 1)


def test_spec_invariants():
    with pytest.raises(ParseError):
        PatternSpec((1, 2), frozenset(), frozenset({1, 2}))
    with pytest.raises(ParseError):
        PatternSpec((1, 3))
