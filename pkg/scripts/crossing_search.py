"""Search S_n for permutations where crossing-freeness and row monotonicity
disagree, under the segment test and under the domination test."""

import argparse

from patiencesort.geometry import classify_crossings, diagram_crossings, rows_increasing, sw_iterates, undominated_pairs
from patiencesort.patience import extended_patience_sort
from patiencesort.perm_core import enumerate_permutations, format_permutation


def suffix_mismatch(p, test):
    pair = extended_patience_sort(p)
    its = sw_iterates(p)
    for m in range(len(its) + 1):
        rows = rows_increasing(pair.R, m) and rows_increasing(pair.S, m)
        free = all(not test(d) for d in its[m:])
        if rows != free:
            return m, rows, free
    return None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--show", type=int, default=5, help="examples to print per n")
    args = ap.parse_args()

    tests = {"segments": diagram_crossings, "domination": undominated_pairs}
    for n in range(1, args.max_n + 1):
        for name, test in tests.items():
            hits = []
            for p in enumerate_permutations(n):
                r = suffix_mismatch(p, test)
                if r:
                    hits.append((p, r))
            print(f"n={n} {name:10} mismatches: {len(hits)}")
            for p, (m, rows, free) in hits[: args.show]:
                pair = extended_patience_sort(p)
                kinds = [(c.iterate, c.kind) for c in classify_crossings(p).records]
                print(f"    {format_permutation(p)} from iterate {m}: rows increasing {rows}, "
                      f"crossing-free {free}; R={pair.R.to_json()} S={pair.S.to_json()} crossings={kinds}")


if __name__ == "__main__":
    main()
