"""Tabulate |S_n(patterns)| for several avoidance sets, n = 1..N."""

import argparse
import time

from patiencesort.enumeration import bell, f_sequence, involution_count
from patiencesort.patterns import avoids, parse_pattern_list
from patiencesort.perm_core import enumerate_permutations

DEFAULT_SETS = [
    "3-~1-42",
    "3-~1-42,3-~1-24",
    "31-~4-2",
    "~2-41-3",
    "~2-4-1-3",
    "2-41-~3",
    "3-~1-42,~2-41-3",
    "3-12,3-21",
    "31-2,32-1",
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--sets", nargs="*", default=DEFAULT_SETS)
    args = ap.parse_args()

    specs = [parse_pattern_list(s) for s in args.sets]
    counts = {s: [] for s in args.sets}
    t = time.perf_counter()
    for n in range(1, args.max_n + 1):
        perms = list(enumerate_permutations(n))
        for s, sp in zip(args.sets, specs):
            counts[s].append(sum(1 for p in perms if avoids(p, sp)))
    width = max(len(s) for s in args.sets)
    print(f"{'patterns':{width}}  counts for n = 1..{args.max_n}")
    for s in args.sets:
        print(f"{s:{width}}  {counts[s]}")
    print()
    print(f"{'Bell':{width}}  {[bell(n) for n in range(1, args.max_n + 1)]}")
    print(f"{'f(n)':{width}}  {f_sequence(args.max_n)[1:]}")
    print(f"{'involutions':{width}}  {[involution_count(n) for n in range(1, args.max_n + 1)]}")
    print(f"\n{time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
