"""Permutation values, text parsing and a few structural decompositions."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

ENUMERATION_CAP = 12


class ParseError(ValueError):
    """Raised for malformed permutation or pattern text."""


class CapError(ValueError):
    """Raised when a brute-force request exceeds the enumeration cap."""


class Permutation(tuple):
    """A bijection on [n] in one-line form, values 1-based.

    Behaves as a plain tuple of ints; construction validates the values.
    """

    def __new__(cls, values: Iterable[int] = ()) -> "Permutation":
        vals = tuple(int(v) for v in values)
        n = len(vals)
        seen = [False] * (n + 1)
        for v in vals:
            if v < 1 or v > n:
                raise ValueError(f"value {v} out of range 1..{n}")
            if seen[v]:
                raise ValueError(f"duplicate value {v}")
            seen[v] = True
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)!r})"


@dataclass(frozen=True)
class PartialPermutation:
    """Distinct values drawn from [ambient_n], kept in the given order."""

    values: Tuple[int, ...]
    ambient_n: int

    def __post_init__(self) -> None:
        if len(set(self.values)) != len(self.values):
            raise ValueError("partial permutation has repeated values")
        for v in self.values:
            if not 1 <= v <= self.ambient_n:
                raise ValueError(f"value {v} outside 1..{self.ambient_n}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return _format_values(self.values, compact=self.ambient_n <= 9)


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError("composition parts must be positive")

    @property
    def total(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class SetPartition:
    blocks: Tuple[frozenset, ...]

    def __post_init__(self) -> None:
        union: set = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if union & b:
                raise ValueError("blocks overlap")
            union |= b
        if union != set(range(1, len(union) + 1)):
            raise ValueError("blocks do not cover [n]")


_SEPARATORS = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse compact digits ("64518723") or separated integers ("3 10 1 ...")."""
    s = text.strip()
    if not s:
        return Permutation(())
    if _SEPARATORS.search(s):
        tokens = [t for t in _SEPARATORS.split(s) if t]
    else:
        tokens = list(s)
    values: List[int] = []
    for tok in tokens:
        if not tok.isdigit():
            raise ParseError(f"non-numeric token {tok!r}")
        values.append(int(tok))
    n = len(values)
    if not _SEPARATORS.search(s) and n > 9:
        raise ParseError(f"compact form only allowed for n <= 9; got {n} digits in {s!r}")
    seen = set()
    for tok, v in zip(tokens, values):
        if v < 1 or v > n:
            raise ParseError(f"token {tok!r} out of range 1..{n}")
        if v in seen:
            raise ParseError(f"duplicate token {tok!r}")
        seen.add(v)
    return Permutation(values)


def _format_values(values: Sequence[int], compact: bool) -> str:
    if compact:
        return "".join(str(v) for v in values)
    return " ".join(str(v) for v in values)


def format_permutation(p: Sequence[int]) -> str:
    """Compact digits iff n <= 9, otherwise space separated."""
    return _format_values(p, compact=len(p) <= 9)


def as_perm(p) -> Permutation:
    """Coerce strings, sequences and Permutations to a Permutation."""
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        return parse_permutation(p)
    return Permutation(p)


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def inverse(p: Sequence[int]) -> Permutation:
    q = [0] * len(p)
    for i, v in enumerate(p, start=1):
        q[v - 1] = i
    return Permutation(q)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """(p o q)(i) = p(q(i))."""
    return Permutation(p[v - 1] for v in q)


def reverse_complement(p: Sequence[int]) -> Permutation:
    n = len(p)
    return Permutation(n + 1 - v for v in reversed(p))


def standardize(values: Sequence[int]) -> Permutation:
    """Order-isomorphic permutation of [len(values)] for distinct values."""
    ranks = {v: r for r, v in enumerate(sorted(values), start=1)}
    return Permutation(ranks[v] for v in values)


def left_to_right_minima(values: Sequence[int]) -> List[int]:
    out: List[int] = []
    for v in values:
        if not out or v < out[-1]:
            out.append(v)
    return out


def left_to_right_minima_decomposition(p: Sequence[int]) -> List[PartialPermutation]:
    """Peel off successive left-to-right minima subsequences s1, s2, ..."""
    n = len(p)
    rest = list(p)
    blocks: List[PartialPermutation] = []
    while rest:
        s = left_to_right_minima(rest)
        taken = set(s)
        blocks.append(PartialPermutation(tuple(s), n))
        rest = [v for v in rest if v not in taken]
    return blocks


def check_cap(n: int, allow_large: bool = False, cap: int = ENUMERATION_CAP) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap and not allow_large:
        raise CapError(f"n={n} exceeds the enumeration cap of {cap}; pass allow_large=True to override")


def enumerate_permutations(n: int, allow_large: bool = False) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    check_cap(n, allow_large)
    for t in itertools.permutations(range(1, n + 1)):
        yield tuple.__new__(Permutation, t)


def compositions(n: int) -> Iterator[Tuple[int, ...]]:
    """All compositions of n, via the 2^(n-1) cut sets."""
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        parts = []
        run = 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)
