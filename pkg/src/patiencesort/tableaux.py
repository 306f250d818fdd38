"""Standard Young tableaux, Schensted insertion, RSK and Knuth relations.

Tableaux use English notation: row 0 is the top (longest) row.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from math import factorial
from typing import Iterable, List, Sequence, Set, Tuple

from .perm_core import Permutation, as_perm, standardize


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class PartitionShape:
    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        ps = self.parts
        if any(p < 1 for p in ps) or any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise TableauError(f"not a partition: {ps}")

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class StandardYoungTableau:
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]], validate: bool = True) -> "StandardYoungTableau":
        t = cls(tuple(tuple(r) for r in rows))
        if validate:
            t.validate()
        return t

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def validate(self) -> None:
        rows = self.rows
        PartitionShape(self.shape)
        entries = sorted(v for r in rows for v in r)
        if entries != list(range(1, len(entries) + 1)):
            raise TableauError("entries are not exactly 1..n")
        for r in rows:
            if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
                raise TableauError(f"row {r} not increasing")
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                if rows[i][j] >= rows[i + 1][j]:
                    raise TableauError(f"column {j} not increasing")

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    def pretty(self) -> str:
        width = len(str(self.size)) if self.rows else 1
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)


def _insert(rows: List[List[int]], v: int) -> int:
    """Row-insert v; returns index of the row that grew."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([v])
            return r
        row = rows[r]
        k = bisect_left(row, v)
        if k == len(row):
            row.append(v)
            return r
        row[k], v = v, row[k]
        r += 1


def rsk(p: Sequence[int]) -> Tuple[StandardYoungTableau, StandardYoungTableau]:
    P: List[List[int]] = []
    Q: List[List[int]] = []
    for i, v in enumerate(p, start=1):
        r = _insert(P, v)
        if r == len(Q):
            Q.append([])
        Q[r].append(i)
    return (StandardYoungTableau(tuple(map(tuple, P))),
            StandardYoungTableau(tuple(map(tuple, Q))))


def schensted(p: Sequence[int]) -> StandardYoungTableau:
    P: List[List[int]] = []
    for v in p:
        _insert(P, v)
    return StandardYoungTableau(tuple(map(tuple, P)))


def rsk_inverse(P: StandardYoungTableau, Q: StandardYoungTableau) -> Permutation:
    """Undo RSK by reverse bumping, removing the boxes of Q in order n..1."""
    P.validate()
    Q.validate()
    if P.shape != Q.shape:
        raise TableauError(f"shape mismatch: {P.shape} vs {Q.shape}")
    prow = [list(r) for r in P.rows]
    where = {}
    for r, row in enumerate(Q.rows):
        for v in row:
            where[v] = r
    n = P.size
    out = [0] * n
    for k in range(n, 0, -1):
        r = where[k]
        x = prow[r].pop()
        if not prow[r]:
            prow.pop()
        for rr in range(r - 1, -1, -1):
            row = prow[rr]
            j = bisect_left(row, x) - 1
            row[j], x = x, row[j]
        out[k - 1] = x
    return Permutation(out)


def column_word(P: StandardYoungTableau) -> Permutation:
    """Read each column bottom to top, columns left to right."""
    rows = P.rows
    word: List[int] = []
    for j in range(len(rows[0]) if rows else 0):
        col = [rows[i][j] for i in range(len(rows)) if j < len(rows[i])]
        word.extend(reversed(col))
    return Permutation(word)


_KNUTH_SWAPS = {
    (2, 1, 3): (0, 2, 1),  # 213 -> 231
    (2, 3, 1): (0, 2, 1),  # 231 -> 213
    (1, 3, 2): (1, 0, 2),  # 132 -> 312
    (3, 1, 2): (1, 0, 2),  # 312 -> 132
}


def knuth_neighbors(p: Sequence[int]) -> Set[Permutation]:
    """Single K1/K2 moves on contiguous windows of length 3."""
    p = list(p)
    out: Set[Permutation] = set()
    for i in range(len(p) - 2):
        window = p[i:i + 3]
        swap = _KNUTH_SWAPS.get(tuple(standardize(window)))
        if swap is None:
            continue
        q = p[:]
        q[i:i + 3] = [window[k] for k in swap]
        out.add(Permutation(q))
    return out


def knuth_closure(p: Sequence[int]) -> Set[Permutation]:
    """BFS closure under knuth_neighbors.  Only sensible for small n."""
    start = as_perm(p)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for q in frontier:
            for r in knuth_neighbors(q):
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def knuth_equivalent(p: Sequence[int], q: Sequence[int]) -> bool:
    if len(p) != len(q):
        raise ValueError("permutations have different lengths")
    return schensted(p) == schensted(q)


def hook_lengths(shape: Sequence[int]) -> List[List[int]]:
    conj = [sum(1 for part in shape if part > j) for j in range(shape[0])] if shape else []
    return [[shape[i] - j + conj[j] - i - 1 for j in range(shape[i])] for i in range(len(shape))]


def syt_count(shape) -> int:
    """Hook length formula."""
    parts = tuple(shape.parts if isinstance(shape, PartitionShape) else shape)
    PartitionShape(parts)
    prod = 1
    for row in hook_lengths(parts):
        for h in row:
            prod *= h
    return factorial(sum(parts)) // prod
