"""Monte Carlo pile counts for the Floyd's Game and two-colour strategies."""

import argparse
import math
import random
import statistics
import time

from patiencesort.config import MonteCarloConfig
from patiencesort.games import STRATEGIES, TCPS_STRATEGIES, random_two_permutation, weakly_increasing_lis
from patiencesort.lis import lis_length


def run_floyd(cfg: MonteCarloConfig) -> None:
    rng = random.Random(cfg.seed)
    decks = []
    for _ in range(cfg.trials):
        d = list(range(1, cfg.n + 1))
        rng.shuffle(d)
        decks.append(d)
    lis = [lis_length(d) for d in decks]
    print(f"Floyd's Game, n={cfg.n}, trials={cfg.trials}; 2 sqrt(n) = {2 * math.sqrt(cfg.n):.1f}")
    for name, play in STRATEGIES.items():
        t = time.perf_counter()
        counts = [play(d).pile_count for d in decks]
        agree = sum(c == k for c, k in zip(counts, lis))
        print(f"  {name:10} mean {statistics.mean(counts):7.2f}  sd {statistics.pstdev(counts):5.2f}  "
              f"= LIS on {agree}/{cfg.trials}  ({time.perf_counter() - t:.1f}s)")


def run_tcps(cfg: MonteCarloConfig) -> None:
    rng = random.Random(cfg.seed)
    decks = [random_two_permutation(cfg.n, rng) for _ in range(cfg.trials)]
    bound = [weakly_increasing_lis([t[0] for t in w]) for w in decks]
    print(f"Two-colour, n={cfg.n}, trials={cfg.trials}; mean lower bound {statistics.mean(bound):.2f}")
    for name, play in TCPS_STRATEGIES.items():
        counts = [play(w).pile_count for w in decks]
        tight = sum(c == b for c, b in zip(counts, bound))
        print(f"  {name:12} mean {statistics.mean(counts):7.2f}  at the bound on {tight}/{cfg.trials}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=MonteCarloConfig.trials)
    ap.add_argument("--n", type=int, default=MonteCarloConfig.n)
    ap.add_argument("--tcps-n", type=int, default=50)
    ap.add_argument("--seed", type=int, default=MonteCarloConfig.seed)
    args = ap.parse_args()
    run_floyd(MonteCarloConfig(args.trials, args.n, args.seed))
    run_tcps(MonteCarloConfig(args.trials, args.tcps_n, args.seed))


if __name__ == "__main__":
    main()
