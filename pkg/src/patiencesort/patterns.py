"""Classical, dashed (generalized) and barred permutation patterns.

Pattern text: digits 1..9, '-' between two entries that may be far apart,
juxtaposition for entries that must be adjacent, '~' before a barred entry.
So "3-~1-42" is the pattern 3142 with the 1 barred and the 4, 2 adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Set, Tuple, Union

from .perm_core import (
    ParseError,
    Permutation,
    check_cap,
    enumerate_permutations,
    standardize,
)


@dataclass(frozen=True)
class PatternSpec:
    """entries: permutation of [m]; dashes: gaps j (1..m-1) between entries
    j and j+1 that carry a dash; bars: barred entry indices (1..m)."""

    entries: Tuple[int, ...]
    dashes: frozenset = frozenset()
    bars: frozenset = frozenset()

    def __post_init__(self) -> None:
        m = len(self.entries)
        if sorted(self.entries) != list(range(1, m + 1)):
            raise ParseError(f"pattern entries {self.entries} are not a permutation")
        if any(not 1 <= d <= m - 1 for d in self.dashes):
            raise ParseError("dash index out of range")
        if any(not 1 <= b <= m for b in self.bars):
            raise ParseError("bar index out of range")
        if m and len(self.bars) == m:
            raise ParseError("every entry is barred")

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def is_classical(self) -> bool:
        return set(self.dashes) == set(range(1, self.length))

    @property
    def is_barred(self) -> bool:
        return bool(self.bars)

    def text(self) -> str:
        out = []
        for j, e in enumerate(self.entries, start=1):
            if j > 1 and (j - 1) in self.dashes:
                out.append("-")
            if j in self.bars:
                out.append("~")
            out.append(str(e))
        return "".join(out)

    def __str__(self) -> str:
        return self.text()

    def adjacent_gaps(self) -> Tuple[bool, ...]:
        """adjacent[j] for j in 0..m-2: entries j+1, j+2 must sit side by side."""
        return tuple((j + 1) not in self.dashes for j in range(self.length - 1))

    def reduced(self) -> "PatternSpec":
        """Drop barred entries.  A gap in the reduct forces adjacency only when
        the two kept entries were neighbours in the full pattern and joined
        without a dash; gaps that swallowed a barred entry become free."""
        keep = [j for j in range(1, self.length + 1) if j not in self.bars]
        entries = tuple(standardize([self.entries[j - 1] for j in keep]))
        dashes = set()
        for g in range(len(keep) - 1):
            a, b = keep[g], keep[g + 1]
            if b != a + 1 or a in self.dashes:
                dashes.add(g + 1)
        return PatternSpec(entries, frozenset(dashes), frozenset())


SpecLike = Union[str, PatternSpec]


@lru_cache(maxsize=None)
def parse_pattern(text: str) -> PatternSpec:
    s = text.strip()
    entries: List[int] = []
    dashes = set()
    bars = set()
    pending_dash = False
    pending_bar = False
    for ch in s:
        if ch == "-":
            if not entries or pending_dash or pending_bar:
                raise ParseError(f"misplaced '-' in {text!r}")
            pending_dash = True
        elif ch == "~":
            if pending_bar:
                raise ParseError(f"double '~' in {text!r}")
            pending_bar = True
        elif ch.isdigit() and ch != "0":
            if pending_dash:
                dashes.add(len(entries))
            entries.append(int(ch))
            if pending_bar:
                bars.add(len(entries))
            pending_dash = pending_bar = False
        else:
            raise ParseError(f"bad character {ch!r} in pattern {text!r}")
    if pending_dash or pending_bar or not entries:
        raise ParseError(f"pattern {text!r} ends abruptly or is empty")
    return PatternSpec(tuple(entries), frozenset(dashes), frozenset(bars))


def as_spec(spec: SpecLike) -> PatternSpec:
    return parse_pattern(spec) if isinstance(spec, str) else spec


@lru_cache(maxsize=None)
def _plan(entries: Tuple[int, ...]) -> Tuple[Tuple[int, int], ...]:
    """For each slot t, the earlier slots holding the nearest smaller and
    nearest larger entry (or -1).  Checking only these two keeps the partial
    match order-isomorphic."""
    plan = []
    for t, e in enumerate(entries):
        lo = hi = -1
        for s in range(t):
            es = entries[s]
            if es < e and (lo < 0 or es > entries[lo]):
                lo = s
            if es > e and (hi < 0 or es < entries[hi]):
                hi = s
        plan.append((lo, hi))
    return tuple(plan)


def _occurrences(p: Sequence[int], entries: Tuple[int, ...], adjacent: Tuple[bool, ...]) -> Iterator[Tuple[int, ...]]:
    """0-based position tuples of occurrences of an unbarred pattern."""
    n, m = len(p), len(entries)
    if m == 0:
        yield ()
        return
    if m > n:
        return
    plan = _plan(entries)
    pos = [0] * m
    vals = [0] * m

    def rec(t: int, start: int) -> Iterator[Tuple[int, ...]]:
        lo, hi = plan[t]
        last = n - (m - t)
        if t > 0 and adjacent[t - 1]:
            rng = range(start, min(start, last) + 1)
        else:
            rng = range(start, last + 1)
        for i in rng:
            v = p[i]
            if lo >= 0 and v < vals[lo]:
                continue
            if hi >= 0 and v > vals[hi]:
                continue
            pos[t] = i
            vals[t] = v
            if t + 1 == m:
                yield tuple(pos)
            else:
                yield from rec(t + 1, i + 1)

    yield from rec(0, 0)


def find_occurrences(p: Sequence[int], spec: SpecLike) -> List[Tuple[int, ...]]:
    """All occurrences of an unbarred pattern as 1-based position tuples."""
    spec = as_spec(spec)
    if spec.is_barred:
        raise ValueError("find_occurrences takes unbarred patterns; use contains_barred")
    return [tuple(i + 1 for i in occ) for occ in _occurrences(p, spec.entries, spec.adjacent_gaps())]


def contains_unbarred(p: Sequence[int], spec: SpecLike) -> bool:
    spec = as_spec(spec)
    for _ in _occurrences(p, spec.entries, spec.adjacent_gaps()):
        return True
    return False


def _extends(p: Sequence[int], spec: PatternSpec, kept: List[int], fixed: Tuple[int, ...]) -> bool:
    """Can the barred slots be filled so the whole pattern occurs, with the
    kept slots pinned at the given 0-based positions?"""
    m = spec.length
    n = len(p)
    entries = spec.entries
    adjacent = spec.adjacent_gaps()
    pos: List[Optional[int]] = [None] * m
    for slot, i in zip(kept, fixed):
        pos[slot] = i
    barred = [t for t in range(m) if pos[t] is None]

    def ok_positions(t: int) -> bool:
        # adjacency and strict increase with every already-known neighbour
        if t > 0 and pos[t - 1] is not None:
            if pos[t] <= pos[t - 1] or (adjacent[t - 1] and pos[t] != pos[t - 1] + 1):
                return False
        if t < m - 1 and pos[t + 1] is not None:
            if pos[t + 1] <= pos[t] or (adjacent[t] and pos[t + 1] != pos[t] + 1):
                return False
        return True

    def rec(k: int) -> bool:
        if k == len(barred):
            return True
        t = barred[k]
        lo = 0
        for s in range(t - 1, -1, -1):
            if pos[s] is not None:
                lo = pos[s] + 1
                break
        hi = n - 1
        for s in range(t + 1, m):
            if pos[s] is not None:
                hi = pos[s] - 1
                break
        for i in range(lo, hi + 1):
            v = p[i]
            good = True
            for s in range(m):
                if s != t and pos[s] is not None and (v < p[pos[s]]) != (entries[t] < entries[s]):
                    good = False
                    break
            if not good:
                continue
            pos[t] = i
            if ok_positions(t) and rec(k + 1):
                pos[t] = None
                return True
            pos[t] = None
        return False

    # kept slots may already violate adjacency with each other only through
    # barred gaps; those are checked once the barred slot is placed
    return rec(0)


def contains_barred(p: Sequence[int], spec: SpecLike) -> bool:
    """True iff some occurrence of the reduced pattern fails to extend to an
    occurrence of the full pattern."""
    spec = as_spec(spec)
    if not spec.is_barred:
        raise ValueError("contains_barred needs a pattern with at least one barred entry")
    red = spec.reduced()
    kept = [t for t in range(spec.length) if (t + 1) not in spec.bars]
    for occ in _occurrences(p, red.entries, red.adjacent_gaps()):
        if not _extends(p, spec, kept, occ):
            return True
    return False


def contains(p: Sequence[int], spec: SpecLike) -> bool:
    spec = as_spec(spec)
    return contains_barred(p, spec) if spec.is_barred else contains_unbarred(p, spec)


def avoids(p: Sequence[int], specs) -> bool:
    if isinstance(specs, (str, PatternSpec)):
        specs = [specs]
    return not any(contains(p, s) for s in specs)


def parse_pattern_list(text: str) -> List[PatternSpec]:
    return [parse_pattern(t) for t in text.split(",") if t.strip()]


def avoidance_set(n: int, specs, allow_large: bool = False) -> Set[Permutation]:
    check_cap(n, allow_large)
    if isinstance(specs, (str, PatternSpec)):
        specs = [specs]
    specs = [as_spec(s) for s in specs]
    return {p for p in enumerate_permutations(n, allow_large) if avoids(p, specs)}


def layered_pattern(gamma: Sequence[int]) -> Permutation:
    parts = getattr(gamma, "parts", gamma)
    out: List[int] = []
    base = 0
    for g in parts:
        if g < 1:
            raise ValueError("composition parts must be positive")
        out.extend(range(base + g, base, -1))
        base += g
    return Permutation(out)
