"""Pile configurations, Patience Sorting and its extension to pairs of piles.

Piles are stored bottom-to-top, so every pile is a strictly decreasing tuple.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Set, Tuple

from .patterns import contains, find_occurrences
from .perm_core import Composition, Permutation, SetPartition, check_cap, compositions


class PileError(ValueError):
    pass


def _check_piles(piles: Tuple[Tuple[int, ...], ...]) -> None:
    for pile in piles:
        if not pile:
            raise PileError("empty pile")
        if any(pile[i] <= pile[i + 1] for i in range(len(pile) - 1)):
            raise PileError(f"pile {list(pile)} is not decreasing bottom to top")
    cards = sorted(c for pile in piles for c in pile)
    if cards != list(range(1, len(cards) + 1)):
        raise PileError("cards are not exactly 1..n")


@dataclass(frozen=True)
class PileConfiguration:
    piles: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, piles, validate: bool = True):
        obj = cls(tuple(tuple(p) for p in piles))
        if validate:
            obj.validate()
        return obj

    def validate(self) -> None:
        _check_piles(self.piles)
        tops = [p[-1] for p in self.piles]
        if any(tops[i] >= tops[i + 1] for i in range(len(tops) - 1)):
            raise PileError("top cards do not increase left to right")

    @property
    def size(self) -> int:
        return sum(len(p) for p in self.piles)

    def __len__(self) -> int:
        return len(self.piles)

    def rows(self) -> List[List[int]]:
        """Rows numbered from the bottom (row 0 holds the pile bottoms)."""
        h = max((len(p) for p in self.piles), default=0)
        return [[p[r] for p in self.piles if len(p) > r] for r in range(h)]

    def as_set_partition(self) -> SetPartition:
        return SetPartition(tuple(frozenset(p) for p in self.piles))

    def to_json(self) -> List[List[int]]:
        return [list(p) for p in self.piles]

    def pretty(self) -> str:
        """Bottom-justified columns, top cards on the first line."""
        if not self.piles:
            return ""
        w = len(str(self.size))
        h = max(len(p) for p in self.piles)
        lines = []
        for r in range(h - 1, -1, -1):
            cells = [str(p[r]).rjust(w) if len(p) > r else " " * w for p in self.piles]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


class RecordingPiles(PileConfiguration):
    """Recording piles: same layout, indices pushed in at pile bottoms."""

    def validate(self) -> None:
        _check_piles(self.piles)


@dataclass(frozen=True)
class StablePair:
    insertion: PileConfiguration
    recording: RecordingPiles

    def validate(self) -> None:
        self.insertion.validate()
        self.recording.validate()
        bad = stability_violations(self.insertion, self.recording)
        if bad:
            raise PileError(bad[0])

    @property
    def R(self) -> PileConfiguration:
        return self.insertion

    @property
    def S(self) -> RecordingPiles:
        return self.recording

    def to_json(self) -> Dict[str, List[List[int]]]:
        return {"R": self.insertion.to_json(), "S": self.recording.to_json()}


def patience_sort(p: Sequence[int]) -> PileConfiguration:
    """Each card goes on the left-most pile whose top is larger."""
    piles: List[List[int]] = []
    tops: List[int] = []
    for v in p:
        j = bisect_left(tops, v)
        if j == len(piles):
            piles.append([v])
            tops.append(v)
        else:
            piles[j].append(v)
            tops[j] = v
    return PileConfiguration(tuple(map(tuple, piles)))


def extended_patience_sort(p: Sequence[int]) -> StablePair:
    piles: List[List[int]] = []
    rec: List[List[int]] = []
    tops: List[int] = []
    for i, v in enumerate(p, start=1):
        j = bisect_left(tops, v)
        if j == len(piles):
            piles.append([v])
            rec.append([i])
            tops.append(v)
        else:
            piles[j].append(v)
            rec[j].insert(0, i)
            tops[j] = v
    return StablePair(PileConfiguration(tuple(map(tuple, piles))),
                      RecordingPiles(tuple(map(tuple, rec))))


def rpw(R: PileConfiguration) -> Permutation:
    """Reverse patience word: piles concatenated, each read bottom to top."""
    R.validate()
    return Permutation(c for pile in R.piles for c in pile)


def rpw_reflected(S: PileConfiguration) -> Permutation:
    """RPW of the vertically reflected piles S'."""
    S.validate()
    return Permutation(c for pile in S.piles for c in reversed(pile))


def shape(R: PileConfiguration) -> Composition:
    return Composition(tuple(len(p) for p in R.piles))


# pattern pairs (on RPW(R), on RPW(S')) that may not occur at the same positions
FORBIDDEN_PAIRS = (("31-2", "13-2"), ("31-2", "32-1"), ("32-1", "13-2"))


def stability_violations(R: PileConfiguration, S: PileConfiguration) -> List[str]:
    if shape(R) != shape(S):
        return [f"shape mismatch {shape(R).parts} vs {shape(S).parts}"]
    u = rpw(R)
    w = rpw_reflected(S)
    out = []
    for pu, pw in FORBIDDEN_PAIRS:
        common = set(find_occurrences(u, pu)) & set(find_occurrences(w, pw))
        for occ in sorted(common):
            out.append(f"pattern pair ({pu}, {pw}) at positions {occ}")
    return out


def is_stable_pair(R: PileConfiguration, S: PileConfiguration) -> bool:
    return not stability_violations(R, S)


def xps_inverse(pair: StablePair) -> Permutation:
    """Sort the two-line array RPW(S') over RPW(R) by its top row."""
    bad = stability_violations(pair.insertion, pair.recording)
    if bad:
        raise PileError("unstable pair: " + "; ".join(bad))
    top = rpw_reflected(pair.recording)
    bottom = rpw(pair.insertion)
    out = [0] * len(top)
    for t, b in zip(top, bottom):
        out[t - 1] = b
    return Permutation(out)


def ps_equivalent(p: Sequence[int], q: Sequence[int]) -> bool:
    if len(p) != len(q):
        raise ValueError("permutations have different lengths")
    return patience_sort(p) == patience_sort(q)


def unique_preimage(R: PileConfiguration) -> bool:
    w = rpw(R)
    return not contains(w, "3-~1-42") and not contains(w, "3-~1-24")


def ps_moves(p: Sequence[int]) -> Set[Permutation]:
    """Swap an adjacent pair (b, b+1) that serves as the '42' of a 3-~1-42
    occurrence or the '24' of a 3-~1-24 occurrence."""
    out: Set[Permutation] = set()
    n = len(p)
    for b in range(1, n - 1):
        lo, hi = sorted((p[b], p[b + 1]))
        smallest = n + 1  # min of entries strictly between a and b
        for a in range(b - 1, -1, -1):
            if lo < p[a] < hi and smallest > lo:
                q = list(p)
                q[b], q[b + 1] = q[b + 1], q[b]
                out.add(Permutation(q))
                break
            smallest = min(smallest, p[a])
            if smallest < lo:
                break
    return out


def _set_partitions(n: int) -> Iterator[List[List[int]]]:
    if n == 0:
        yield []
        return
    for part in _set_partitions(n - 1):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [n]] + part[i + 1:]
        yield part + [[n]]


def all_pile_configurations(n: int) -> List[PileConfiguration]:
    """Every pile configuration on [n]: set partitions, blocks decreasing,
    ordered by their minima."""
    check_cap(n)
    out = []
    for part in _set_partitions(n):
        blocks = sorted((sorted(b, reverse=True) for b in part), key=lambda b: b[-1])
        out.append(PileConfiguration(tuple(map(tuple, blocks))))
    return out


def stable_pairs(n: int) -> List[StablePair]:
    """Brute-force Sigma(n) by filtering shape-matched pairs.  n <= 5 only."""
    if n > 5:
        raise ValueError("stable pair enumeration is limited to n <= 5")
    by_shape: Dict[Tuple[int, ...], List[PileConfiguration]] = {}
    for R in all_pile_configurations(n):
        by_shape.setdefault(shape(R).parts, []).append(R)
    out = []
    for group in by_shape.values():
        for R in group:
            for S in group:
                if is_stable_pair(R, S):
                    out.append(StablePair(R, RecordingPiles(S.piles)))
    return out


def noncrossing_pile_configurations(n: int) -> Set[PileConfiguration]:
    """One configuration per composition of n, built from consecutive blocks."""
    if n < 1:
        raise ValueError("n must be at least 1")
    check_cap(n)
    out = set()
    for gamma in compositions(n):
        piles = []
        base = 0
        for g in gamma:
            piles.append(tuple(range(base + g, base, -1)))
            base += g
        out.add(PileConfiguration(tuple(piles)))
    return out
