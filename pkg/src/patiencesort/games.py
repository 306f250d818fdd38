"""Floyd's Game strategies and Two-color Patience Sorting.

Piles are lists written bottom to top, as in the patience module.
"""

from __future__ import annotations

import random
from bisect import bisect_right, insort
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .perm_core import ParseError


@dataclass
class PlayTrace:
    """steps: (card, pile index, created new pile) in play order."""

    steps: List[Tuple[object, int, bool]] = field(default_factory=list)
    piles: List[List[object]] = field(default_factory=list)

    @property
    def pile_count(self) -> int:
        return len(self.piles)

    def replay(self) -> List[List[object]]:
        piles: List[List[object]] = []
        for card, j, new in self.steps:
            if new:
                piles.insert(j, [card])
            else:
                piles[j].append(card)
        return piles

    def play(self, card, j: Optional[int]) -> None:
        if j is None:
            self.piles.append([card])
            self.steps.append((card, len(self.piles) - 1, True))
        else:
            self.piles[j].append(card)
            self.steps.append((card, j, False))


def play_greedy(deck: Sequence[int]) -> PlayTrace:
    """Each card goes on the pile with the smallest top larger than it."""
    trace = PlayTrace()
    tops: List[int] = []  # sorted top values
    where = {}
    for c in deck:
        k = bisect_right(tops, c)
        if k == len(tops):
            trace.play(c, None)
            j = len(trace.piles) - 1
        else:
            top = tops.pop(k)
            j = where.pop(top)
            trace.play(c, j)
        insort(tops, c)
        where[c] = j
    return trace


def play_simplified_greedy(deck: Sequence[int]) -> PlayTrace:
    """Each card goes on the left-most pile whose top is larger."""
    trace = PlayTrace()
    tops: List[int] = []
    for c in deck:
        j = next((i for i, t in enumerate(tops) if t > c), None)
        trace.play(c, j)
        if j is None:
            tops.append(c)
        else:
            tops[j] = c
    return trace


def mex_plus(E: Iterable[int]) -> int:
    s = set(E)
    m = 1
    while m in s:
        m += 1
    return m


@dataclass
class LookaheadTrace(PlayTrace):
    """steps hold merges: (bottom card of the moved pile, target pile id,
    False), a pile id being the deck position of its original bottom card;
    E_history records E after each value of m has been processed."""

    E_history: List[frozenset] = field(default_factory=list)

    def replay(self) -> List[List[object]]:
        raise NotImplementedError("look-ahead traces record merges, not plays")


def play_lookahead_from_right(deck: Sequence[int]) -> LookaheadTrace:
    """Start from singleton piles and, for m = mex+(E) = 1, 2, ..., slide
    the pile holding m leftwards onto earlier piles.

    Piles live in a doubly linked list keyed by their starting position, so
    a merge is O(1) and only the scanned stretch costs time."""
    n = len(deck)
    cards: List[List[int]] = [[c] for c in deck]
    bottom = list(deck)
    top = list(deck)
    prev = list(range(-1, n - 1))
    nxt = list(range(1, n + 1))
    home = {c: i for i, c in enumerate(deck)}  # singleton pile holding c
    trace = LookaheadTrace()
    E: set = set()
    m = 1
    while m <= n:
        l = home[m]
        while True:
            b = bottom[l]
            # Scan left for t, the right-most pile whose bottom is below b,
            # collecting the smallest top above b strictly between t and l.
            # When every top to the left is below b no candidate turns up,
            # which is the strategy's first stopping rule; t just left of l
            # is the second one.
            target = -1
            best = n + 1
            i = prev[l]
            while i >= 0 and bottom[i] > b:
                tp = top[i]
                if b < tp < best:
                    target, best = i, tp
                i = prev[i]
            if target < 0:
                break
            cards[target].extend(cards[l])
            top[target] = top[l]
            p, q = prev[l], nxt[l]
            nxt[p] = q
            if q < n:
                prev[q] = p
            trace.steps.append((b, target, False))
            l = target
        E.update(cards[l])
        trace.E_history.append(frozenset(E))
        while m in E:
            m += 1
    # position 0 is never merged away since nothing lies to its left
    piles: List[List[int]] = []
    i = 0
    while i < n:
        piles.append(cards[i])
        i = nxt[i]
    trace.piles = piles
    return trace


# -- Two-color Patience Sorting ------------------------------------------

Token = Tuple[int, bool]  # (magnitude, barred)


def format_token(t: Token) -> str:
    return ("~" if t[1] else "") + str(t[0])


def parse_two_permutation(text: str) -> List[Token]:
    toks: List[Token] = []
    for raw in text.replace(",", " ").split():
        barred = raw.startswith("~")
        body = raw[1:] if barred else raw
        if not body.isdigit() or int(body) < 1:
            raise ParseError(f"bad token {raw!r}")
        toks.append((int(body), barred))
    validate_two_permutation(toks, partial=True)
    return toks


def validate_two_permutation(tokens: Sequence[Token], partial: bool = False) -> None:
    """A full 2-permutation has each of 1..n once in each colour; partial
    decks (such as the worked examples) only need distinct tokens."""
    if len(set(tokens)) != len(tokens):
        raise ParseError("repeated token")
    if not partial:
        n = len(tokens) // 2
        want = {(v, c) for v in range(1, n + 1) for c in (False, True)}
        if set(tokens) != want:
            raise ParseError("not a 2-permutation of [n] and its barred copy")


def random_two_permutation(n: int, rng: random.Random) -> List[Token]:
    toks = [(v, c) for v in range(1, n + 1) for c in (False, True)]
    rng.shuffle(toks)
    return toks


def _can_stack(card: Token, top: Token) -> bool:
    return card[1] != top[1] and top[0] > card[0]


def tcps_play_naive(w: Sequence[Token]) -> PlayTrace:
    """Left-most pile with an opposite-colour top of larger magnitude."""
    trace = PlayTrace()
    for c in w:
        j = next((i for i, p in enumerate(trace.piles) if _can_stack(c, p[-1])), None)
        trace.play(c, j)
    return trace


def tcps_play_greedy(w: Sequence[Token]) -> PlayTrace:
    """Opposite-colour pile whose top magnitude is smallest among those larger."""
    trace = PlayTrace()
    for c in w:
        j = None
        for i, p in enumerate(trace.piles):
            if _can_stack(c, p[-1]) and (j is None or p[-1][0] < trace.piles[j][-1][0]):
                j = i
        trace.play(c, j)
    return trace


def tcps_min_piles_bruteforce(w: Sequence[Token]) -> int:
    """Fewest piles over every legal play sequence (exponential; tiny decks)."""
    best = [len(w) + 1]

    def rec(k: int, tops: Tuple[Token, ...]) -> None:
        if len(tops) >= best[0]:
            return
        if k == len(w):
            best[0] = len(tops)
            return
        c = w[k]
        tried = set()
        for i, t in enumerate(tops):
            if _can_stack(c, t):
                nxt = tops[:i] + (c,) + tops[i + 1:]
                key = tuple(sorted(nxt))
                if key not in tried:
                    tried.add(key)
                    rec(k + 1, nxt)
        rec(k + 1, tops + (c,))

    rec(0, ())
    return best[0]


def weakly_increasing_lis(values: Sequence[int]) -> int:
    """Longest weakly increasing subsequence, via bisect_right."""
    w: List[int] = []
    for v in values:
        k = bisect_right(w, v)
        if k == len(w):
            w.append(v)
        else:
            w[k] = v
    return len(w)


STRATEGIES: dict = {
    "greedy": play_greedy,
    "simple": play_simplified_greedy,
    "lookahead": play_lookahead_from_right,
}

TCPS_STRATEGIES: dict = {
    "tcps-naive": tcps_play_naive,
    "tcps-greedy": tcps_play_greedy,
}
