"""Exhaustive verifier: one check per acceptance criterion, scaled by max_n."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, List, Optional, Tuple

from . import enumeration as en
from . import games, geometry, patience, patterns, tableaux
from .config import VerifyConfig
from .lis import lis_length
from .perm_core import compositions, enumerate_permutations, format_permutation, inverse, parse_permutation

EXPECTED_F = [1, 1, 2, 4, 9, 23, 66, 209, 718, 2645, 10373, 43090, 188803, 869191, 4189511]

EXPECTED_A = [
    [0],
    [0, 0],
    [1, 0, 0],
    [1, 1, 0, 0],
    [2, 2, 1, 0, 0],
    [3, 5, 3, 1, 0, 0],
    [5, 10, 9, 4, 1, 0, 0],
    [8, 20, 22, 14, 5, 1, 0, 0],
]

EXPECTED_INVERSE = [
    [1],
    [0, 1],
    [1, 0, 1],
    [1, 1, 0, 1],
    [3, 2, 1, 0, 1],
    [7, 6, 3, 1, 0, 1],
    [21, 16, 10, 4, 1, 0, 1],
    [66, 50, 30, 15, 5, 1, 0, 1],
]


class CheckFailure(AssertionError):
    pass


def expect(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailure(msg)


@dataclass
class CheckRecord:
    name: str
    n_range: str
    status: str
    checked: int
    elapsed: float
    detail: str = ""


@dataclass
class VerifyReport:
    records: List[CheckRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status == "pass" for r in self.records)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [asdict(r) for r in self.records]}


def _perms(lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from enumerate_permutations(n)


def _fmt(p) -> str:
    return format_permutation(p)


# -- individual checks: each returns (count checked, n-range text) ---------

def check_f_sequence(cfg: VerifyConfig) -> Tuple[int, str]:
    expect(en.f_sequence(14) == EXPECTED_F, f"f_table(14) = {en.f_sequence(14)}")
    top = min(9, cfg.max_n)
    count = 0
    for n in range(top + 1):
        got = len(patterns.avoidance_set(n, ["3-~1-42", "3-~1-24"]))
        expect(got == EXPECTED_F[n], f"|S_{n}(3-~1-42, 3-~1-24)| = {got} != {EXPECTED_F[n]}")
        count += 1
    return count, f"n=0..{top}"


def check_bell(cfg: VerifyConfig) -> Tuple[int, str]:
    top = min(9, cfg.max_n)
    count = 0
    for n in range(top + 1):
        av = patterns.avoidance_set(n, ["3-~1-42"])
        expect(len(av) == en.bell(n), f"|S_{n}(3-~1-42)| = {len(av)} != B_{n} = {en.bell(n)}")
        if n <= 7:
            words = {patience.rpw(patience.patience_sort(p)) for p in enumerate_permutations(n)}
            diff = sorted(av ^ words)
            expect(not diff, f"S_{n}(3-~1-42) differs from RPWs at {_fmt(diff[0]) if diff else ''}")
        count += 1
    return count, f"n=0..{top}"


def check_matrices(cfg: VerifyConfig) -> Tuple[int, str]:
    A = en.matrix_A(8)
    inv = en.neumann_inverse(A)
    for i in range(8):
        expect(A[i][: i + 1] == EXPECTED_A[i], f"row {i} of A is {A[i][: i + 1]}")
        expect(inv[i][: i + 1] == EXPECTED_INVERSE[i], f"row {i} of (I-A)^-1 is {inv[i][: i + 1]}")
    expect(en.f_via_matrix(14) == en.f_sequence(14), "matrix form disagrees with f_table at N = 14")
    return 2 * 8 + 1, "N=14"


def check_xps(cfg: VerifyConfig) -> Tuple[int, str]:
    ex = patience.extended_patience_sort(parse_permutation("64518723"))
    expect(ex.to_json() == {"R": [[6, 4, 1], [5, 2], [8, 7, 3]], "S": [[4, 2, 1], [7, 3], [8, 6, 5]]},
           f"XPS(64518723) = {ex.to_json()}")
    top = min(7, cfg.max_n)
    count = 0
    for p in _perms(0, top):
        pair = patience.extended_patience_sort(p)
        expect(patience.xps_inverse(pair) == p, f"round trip fails at {_fmt(p)}")
        sym = patience.extended_patience_sort(inverse(p))
        expect(sym.R.piles == pair.S.piles and sym.S.piles == pair.R.piles, f"symmetry fails at {_fmt(p)}")
        count += 1
    return count, f"n=0..{top}"


def check_rsk(cfg: VerifyConfig) -> Tuple[int, str]:
    P, Q = tableaux.rsk(parse_permutation("364827159"))
    expect(P.rows == ((1, 4, 5, 9), (2, 7), (3, 8), (6,)), f"P(364827159) = {P.rows}")
    expect(Q.rows == ((1, 2, 4, 9), (3, 6), (5, 8), (7,)), f"Q(364827159) = {Q.rows}")
    top = min(6, cfg.max_n)
    count = 0
    for p in _perms(0, top):
        P, Q = tableaux.rsk(p)
        expect(tableaux.rsk_inverse(P, Q) == p, f"RSK round trip fails at {_fmt(p)}")
        expect(tableaux.rsk(inverse(p)) == (Q, P), f"Schutzenberger symmetry fails at {_fmt(p)}")
        count += 1
    expect(tableaux.syt_count((4, 2, 2, 1)) == 216, "hook length formula for (4,2,2,1)")
    if cfg.max_n >= 9:
        target = tableaux.schensted(parse_permutation("632187459"))
        size = sum(1 for p in enumerate_permutations(9) if tableaux.schensted(p) == target)
        expect(size == 216, f"Knuth class of 632187459 has {size} members")
        count += 1
    else:
        # class sizes versus the hook formula at the largest n in range
        sizes = {}
        for p in enumerate_permutations(top):
            P = tableaux.schensted(p)
            sizes[P] = sizes.get(P, 0) + 1
        for P, c in sizes.items():
            expect(c == tableaux.syt_count(P.shape), f"class of {P.rows} has {c} members")
    return count, f"n=0..{top}"


def check_geometry(cfg: VerifyConfig) -> Tuple[int, str]:
    p = parse_permutation("64518723")
    ne = geometry.ne_iterates(p)
    expect([tuple(q) for q in ne[0].salient_points()] == [(2, 6), (4, 4), (7, 5), (6, 8), (8, 7)],
           "NE iterate-0 salient points of 64518723")
    sw = geometry.sw_iterates(p)
    expect([tuple(q) for q in sw[0].salient_points()] == [(1, 4), (2, 1), (3, 2), (5, 7), (6, 3)],
           "SW iterate-0 salient points of 64518723")
    expect([tuple(q) for q in sw[1].salient_points()] == [(1, 1), (5, 3)], "SW iterate-1 salient points")
    P, Q = geometry.geometric_rsk(p)
    expect(P.rows == ((1, 2, 3), (4, 5, 7), (6, 8)) and Q.rows == ((1, 3, 5), (2, 6, 8), (4, 7)),
           "geometric RSK of 64518723")
    count = 0
    for p in _perms(0, min(6, cfg.max_n)):
        expect(geometry.geometric_rsk(p) == tableaux.rsk(p), f"geometric RSK differs at {_fmt(p)}")
        count += 1
    top = min(7, cfg.max_n)
    for p in _perms(0, top):
        expect(geometry.geometric_ps(p) == patience.extended_patience_sort(p),
               f"geometric PS differs at {_fmt(p)}")
        count += 1
    return count, f"n=0..{top}"


def check_crossings(cfg: VerifyConfig) -> Tuple[int, str]:
    def kinds(w: str):
        return [(c.iterate, c.kind) for c in geometry.classify_crossings(parse_permutation(w)).records]

    expect(kinds("312") == [(0, "horizontal")], f"312: {kinds('312')}")
    expect(kinds("231") == [(0, "vertical")], f"231: {kinds('231')}")
    expect(kinds("4231") == [(0, "polygonal")], f"4231: {kinds('4231')}")
    expect(kinds("45312") == [(0, "polygonal"), (1, "polygonal")], f"45312: {kinds('45312')}")
    top = min(7, cfg.max_n)
    count = 0
    witness = None
    for p in _perms(1, top):
        pair = patience.extended_patience_sort(p)
        rep = geometry.classify_crossings(p)
        inc = geometry.rows_increasing(pair.R) and geometry.rows_increasing(pair.S)
        expect(inc or bool(rep), f"crossing-free iterates but a row decreases at {_fmt(p)}")
        if bool(rep) and inc and witness is None:
            witness = p
        in_av = patterns.avoids(p, ["3-~1-42", "31-~4-2"])
        is_rpw = patience.rpw(pair.R) == p
        expect(in_av == (is_rpw and not rep.at(0)), f"zeroth-iterate set identity fails at {_fmt(p)}")
        if in_av:
            expect(all(r0[i] < r0[i + 1] for r0 in (pair.R.rows()[0], pair.S.rows()[0])
                       for i in range(len(r0) - 1)), f"bottom rows not increasing at {_fmt(p)}")
        count += 1
    # converse: increasing rows should force crossing-free iterates
    expect(witness is None, f"rows all increase but iterates cross at {_fmt(witness) if witness else ''}")
    return count, f"n=1..{top}"


CHAIN = ("~2-41-3", "~2-4-1-3", "2-4-1-~3", "2-41-~3")


def check_pattern_identities(cfg: VerifyConfig) -> Tuple[int, str]:
    top = min(8, cfg.max_n)
    groups = [
        ["3-~1-42", "3-~1-4-2", "23-1"],
        ["31-~4-2", "3-1-~4-2", "3-12"],
    ]
    count = 0
    for n in range(1, top + 1):
        perms = list(enumerate_permutations(n))
        for g in groups:
            sets = [frozenset(p for p in perms if patterns.avoids(p, [s])) for s in g]
            expect(all(s == sets[0] for s in sets), f"S_{n} avoidance sets differ within {g}")
        for s in ("31-~4-2", "3-~1-42"):
            c = sum(1 for p in perms if patterns.avoids(p, [s]))
            expect(c == en.bell(n), f"|S_{n}({s})| = {c}")
        layered = {p for p in perms if patterns.avoids(p, ["3-~1-42", "~2-41-3"])}
        want = {patterns.layered_pattern(g) for g in compositions(n)}
        expect(layered == want and len(want) == 2 ** (n - 1), f"layered corollary fails at n = {n}")
        inv = sum(1 for p in perms if patterns.avoids(p, ["3-12", "3-21"]))
        expect(inv == en.involution_count(n), f"|S_{n}(3-12, 3-21)| = {inv}")
        two = sum(1 for p in perms if patterns.avoids(p, ["31-2", "32-1"]))
        expect(two == 2 ** (n - 1), f"|S_{n}(31-2, 32-1)| = {two}")
        if n <= 7:
            img = {patience.patience_sort(p) for p in perms if patterns.avoids(p, ["3-1-2"])}
            expect(img == patience.noncrossing_pile_configurations(n), f"non-crossing image differs at n = {n}")
        count += len(perms)
    # The chain through ~2-41-3 fails from n = 3 on (see the test suite);
    # run it last so every other identity has been exercised first.
    for n in range(1, top + 1):
        perms = list(enumerate_permutations(n))
        for p in perms:
            got = [patterns.avoids(p, [s]) for s in CHAIN]
            expect(len(set(got)) == 1, f"{_fmt(p)}: avoidance of {CHAIN} is {got}")
        c = sum(1 for p in perms if patterns.avoids(p, [CHAIN[0]]))
        expect(c == en.bell(n), f"|S_{n}({CHAIN[0]})| = {c} != {en.bell(n)}")
    return count, f"n=1..{top}"


def check_strategies(cfg: VerifyConfig) -> Tuple[int, str]:
    top = min(7, cfg.max_n)
    count = 0

    def same(p) -> None:
        a = games.play_greedy(p).piles
        b = games.play_simplified_greedy(p).piles
        c = games.play_lookahead_from_right(p).piles
        expect(a == b == c, f"strategies disagree at {_fmt(p)}")
        expect(len(a) == lis_length(p), f"pile count != LIS at {_fmt(p)}")

    for p in _perms(0, top):
        same(p)
        count += 1
    rng = random.Random(cfg.seed)
    for _ in range(cfg.random_decks):
        d = list(range(1, cfg.deck_size + 1))
        rng.shuffle(d)
        same(d)
        count += 1
    w1 = games.parse_two_permutation("~3 ~2 3 ~1 1 2")
    expect(games.tcps_play_naive(w1).pile_count == 4, "TCPS naive example")
    expect(games.tcps_play_greedy(w1).pile_count == 3, "TCPS greedy example")
    w2 = games.parse_two_permutation("2 ~3 ~1 4 3 ~2 ~4 1")
    expect(games.tcps_play_greedy(w2).pile_count == 5, "TCPS five-pile example")
    for _ in range(cfg.tcps_trials):
        n = rng.randint(1, cfg.tcps_max_n)
        w = games.random_two_permutation(n, rng)
        g = games.tcps_play_greedy(w).pile_count
        expect(g >= games.weakly_increasing_lis([t[0] for t in w]), f"TCPS lower bound fails on {w}")
        expect(g <= games.tcps_play_naive(w).pile_count, f"greedy worse than naive on {w}")
        count += 1
    return count, f"n=0..{top}"


def check_performance(cfg: VerifyConfig) -> Tuple[int, str]:
    rng = random.Random(cfg.seed)
    p = list(range(1, cfg.lis_perf_size + 1))
    rng.shuffle(p)
    t = time.perf_counter()
    lis_length(p)
    dt = time.perf_counter() - t
    expect(dt < 5.0, f"lis_length took {dt:.2f} s")
    return 1, f"size={cfg.lis_perf_size}"


CHECKS: List[Tuple[str, Callable[[VerifyConfig], Tuple[int, str]]]] = [
    ("f-sequence", check_f_sequence),
    ("bell-counts", check_bell),
    ("matrix-identity", check_matrices),
    ("xps-bijection", check_xps),
    ("rsk-suite", check_rsk),
    ("geometric-equivalences", check_geometry),
    ("crossing-theorems", check_crossings),
    ("pattern-identities", check_pattern_identities),
    ("strategies", check_strategies),
    ("performance", check_performance),
]


def _run_one(name: str, cfg: VerifyConfig) -> CheckRecord:
    fn = dict(CHECKS)[name]
    t = time.perf_counter()
    try:
        count, rng = fn(cfg)
        status, detail = "pass", ""
    except CheckFailure as e:
        count, rng, status, detail = 0, "-", "fail", str(e)
    return CheckRecord(name, rng, status, count, round(time.perf_counter() - t, 3), detail)


def run_verify(cfg: Optional[VerifyConfig] = None, only: Optional[List[str]] = None,
               workers: int = 1) -> VerifyReport:
    """Checks run in a process pool when workers > 1; the report keeps the
    fixed check order either way."""
    cfg = cfg or VerifyConfig()
    names = [name for name, _ in CHECKS if not only or name in only]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_one, names, [cfg] * len(names)))
    else:
        records = [_run_one(name, cfg) for name in names]
    return VerifyReport(records)
