"""Bi-rotary maps with negative prime-power Euler characteristic.

Permutation groups, map invariants, the p-core quotient classifiers and a
census scanner.  Most users start from ``make_map`` and ``classify``.
"""
from .classify import classify, classify_nonsolvable, classify_solvable, num_membership, reduce_by_pcore
from .errors import BirotaryError, CapExceeded
from .maps import BiRotaryMap, RotaryPair, make_map
from .perm import Permutation, PermutationGroup, generate, set_default_cap

__all__ = [
    "BiRotaryMap", "BirotaryError", "CapExceeded", "Permutation", "PermutationGroup", "RotaryPair",
    "classify", "classify_nonsolvable", "classify_solvable", "generate", "make_map", "num_membership",
    "reduce_by_pcore", "set_default_cap",
]

__version__ = "0.1.0"
