"""Run configurations for the verifier and the Monte Carlo game runs."""

from __future__ import annotations

from dataclasses import dataclass

from .perm_core import ENUMERATION_CAP


@dataclass(frozen=True)
class EnumerationLimits:
    cap: int = ENUMERATION_CAP
    allow_large: bool = False


@dataclass(frozen=True)
class MonteCarloConfig:
    trials: int = 1000
    n: int = 1000
    seed: int = 0


@dataclass(frozen=True)
class VerifyConfig:
    """max_n caps every exhaustive S_n sweep (each check also has its own
    natural ceiling, taken from the acceptance criteria)."""

    max_n: int = 6
    seed: int = 0
    random_decks: int = 50
    deck_size: int = 1000
    tcps_trials: int = 2000
    tcps_max_n: int = 8
    lis_perf_size: int = 10**6
