"""Compare two-colour greedy against the exhaustive minimum over all play
sequences, for every 2-permutation of a given size."""

import argparse
import itertools
import time

from patiencesort.games import tcps_min_piles_bruteforce, tcps_play_greedy, tcps_play_naive


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        t = time.perf_counter()
        toks = [(v, c) for v in range(1, n + 1) for c in (False, True)]
        total = worse = naive_worse = 0
        for w in itertools.permutations(toks):
            best = tcps_min_piles_bruteforce(w)
            worse += tcps_play_greedy(w).pile_count > best
            naive_worse += tcps_play_naive(w).pile_count > best
            total += 1
        print(f"n={n}: {total} decks, greedy above optimum on {worse}, naive on {naive_worse} "
              f"({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    main()
