"""Deciding and enumerating pushall sortings with two stacks in series.

The decision procedure runs in quadratic time and returns a linear-size
description of every way to sort the input by pushing all values into the
stacks before emitting any output.  Brute-force deciders for small sizes
live in :mod:`pushall.oracle` and exist to cross-check everything else.
"""

from .coloring import (
    ColoredPatternWitness,
    NotTotal,
    col_of,
    conf_of,
    forbidden_pattern_check,
    is_valid_coloring,
    push_to_configuration,
    sorting_word,
)
from .enumeration import (
    ColoringSetProduct,
    NotIndecomposable,
    c_gr,
    c_rg,
    c_rooted,
    c_star,
    count_colorings,
    enumerate_colorings,
    enumerate_indecomposable,
    enumerate_indecomposable_naive,
    is_pushall_sortable,
    propagate_gr,
    propagate_rg,
)
from .machine import (
    IllegalMove,
    StackConfiguration,
    StackPatternWitness,
    apply_word,
    find_unsortable_pattern,
    is_pushall_word,
    is_valid_word,
    parse_configuration,
    parse_word,
    pop_out,
)
from .oracle import (
    BudgetExceeded,
    SearchBudget,
    brute_colorings,
    brute_pushall,
    brute_two_stack,
    mine_basis,
)
from .permutations import (
    ArityMismatch,
    Decomposition,
    Interval,
    NotAPermutation,
    ParseError,
    Perm,
    avoids,
    contains_pattern,
    decompose,
    direct_sum,
    inflate,
    intervals,
    is_simple,
    parse,
    skew_sum,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
