"""Patience Sorting, RSK, shadow diagrams and barred pattern avoidance."""

from .lis import lis_length, lis_table, row_bump_word
from .patience import (
    PileConfiguration,
    StablePair,
    extended_patience_sort,
    patience_sort,
    rpw,
    xps_inverse,
)
from .patterns import avoidance_set, avoids, contains, parse_pattern
from .perm_core import Permutation, enumerate_permutations, parse_permutation
from .tableaux import StandardYoungTableau, rsk, rsk_inverse, syt_count

__all__ = [
    "Permutation", "parse_permutation", "enumerate_permutations",
    "lis_length", "lis_table", "row_bump_word",
    "PileConfiguration", "StablePair", "patience_sort", "extended_patience_sort", "rpw", "xps_inverse",
    "StandardYoungTableau", "rsk", "rsk_inverse", "syt_count",
    "parse_pattern", "contains", "avoids", "avoidance_set",
]
