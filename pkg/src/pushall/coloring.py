"""Colorings of permutation points and the sorting words they induce.

A coloring is a string over "RG", one character per position: 'R' points
end up in stack H, 'G' points in stack V.  Its target configuration puts
the green values in V in decreasing order and the red values in H in input
order.  A coloring is valid iff that configuration is reachable and can be
popped out in increasing order; gluing the push word to the pop word then
yields a complete sorting word that moves every value into the stacks
before the first output.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from . import _kernels as K
from .machine import LAMBDA, MU, RHO, StackConfiguration, pop_out
from .permutations import Perm

RED = "R"
GREEN = "G"


class NotTotal(ValueError):
    """The configuration does not hold each of 1..n exactly once."""


def check_coloring(coloring: str, n: int) -> str:
    if len(coloring) != n or any(c not in "RG" for c in coloring):
        raise ValueError(f"{coloring!r} is not an RG-coloring of length {n}")
    return coloring


def conf_of(sigma: Perm, coloring: str) -> StackConfiguration:
    """Target configuration of a coloring: V gets the green values in
    decreasing order, H the red values in input order (bottom-to-top)."""
    check_coloring(coloring, len(sigma))
    v = tuple(sorted((x for x, c in zip(sigma, coloring) if c == GREEN), reverse=True))
    h = tuple(x for x, c in zip(sigma, coloring) if c == RED)
    return StackConfiguration(v, h)


def col_of(config: StackConfiguration, sigma: Perm) -> str:
    """Read a coloring off a total configuration of sigma.

    H members become 'R', V members 'G'.  Raises NotTotal unless the
    configuration holds each value 1..n exactly once.  (The permutation is
    needed to place values back at their positions.)
    """
    n = len(sigma)
    members = list(config.v) + list(config.h)
    if sorted(members) != list(range(1, n + 1)):
        raise NotTotal(f"configuration {config} is not total for n={n}")
    greens = set(config.v)
    return "".join(GREEN if x in greens else RED for x in sigma)


def _push_moves(sigma: Perm, coloring: str) -> tuple[Optional[str], int]:
    """Run the push strategy; returns (word or None, loop steps taken)."""
    n = len(sigma)
    check_coloring(coloring, n)
    hstack: list[int] = []  # positions, 0-based
    vtop = 0  # sentinel: empty V accepts anything
    word = []
    steps = 0
    i = 0
    while i < n:
        steps += 1
        if not hstack or coloring[hstack[-1]] == RED:
            hstack.append(i)
            word.append(RHO)
            i += 1
        else:
            hv = sigma[hstack[-1]]
            if coloring[i] == RED or sigma[i] < hv:
                if vtop == 0 or hv < vtop:
                    vtop = hv
                    hstack.pop()
                    word.append(LAMBDA)
                else:
                    return None, steps
            else:
                hstack.append(i)
                word.append(RHO)
                i += 1
    while hstack and coloring[hstack[-1]] == GREEN:
        steps += 1
        hv = sigma[hstack[-1]]
        if vtop == 0 or hv < vtop:
            vtop = hv
            hstack.pop()
            word.append(LAMBDA)
        else:
            return None, steps
    return "".join(word), steps


def push_to_configuration(sigma: Perm, coloring: str) -> Optional[str]:
    """The r/l word that reaches the coloring's target configuration.

    None when that configuration is not reachable for sigma; on success the
    word ends exactly in conf_of(sigma, coloring).
    """
    word, _ = _push_moves(sigma, coloring)
    return word


def is_valid_coloring(sigma: Perm, coloring: str) -> bool:
    """Linear validity test: the target configuration is reachable and
    pops out in increasing order."""
    check_coloring(coloring, len(sigma))
    vals = np.asarray(sigma, dtype=np.int64)
    colors = np.frombuffer(coloring.encode(), dtype=np.uint8).copy()
    # ASCII 'R' = 82 -> 1, 'G' = 71 -> 2
    colors = np.where(colors == 82, K.RED, K.GREEN).astype(np.uint8)
    return bool(K.coloring_is_valid(vals, colors))


class ColoredPatternWitness(NamedTuple):
    """A forbidden colored pattern: kind plus the positions (1-based) and
    values of the offending points."""

    kind: str
    positions: tuple[int, ...]
    values: tuple[int, ...]


def forbidden_pattern_check(
    sigma: Perm, coloring: str
) -> Optional[ColoredPatternWitness]:
    """Direct search for the four forbidden colored patterns.

    Checked in order "R-132", "G-213", "G1-Rx-G2" (a red point between the
    positions of a green ascent), "G-between-R12" (a green value between
    the values of a red ascent); within each kind the lexicographically
    smallest position triple wins.  None iff the coloring is valid.
    """
    n = len(sigma)
    check_coloring(coloring, n)

    def witness(kind, triple):
        return ColoredPatternWitness(
            kind,
            tuple(p + 1 for p in triple),
            tuple(sigma[p] for p in triple),
        )

    reds = [p for p in range(n) if coloring[p] == RED]
    greens = [p for p in range(n) if coloring[p] == GREEN]
    for triple in _triples(reds):
        a, b, c = (sigma[p] for p in triple)
        if a < c < b:
            return witness("R-132", triple)
    for triple in _triples(greens):
        a, b, c = (sigma[p] for p in triple)
        if b < a < c:
            return witness("G-213", triple)
    best = None
    for i in greens:
        for j in greens:
            if i < j and sigma[i] < sigma[j]:
                for k in reds:
                    if i < k < j:
                        triple = (i, k, j)
                        if best is None or triple < best:
                            best = triple
                        break
    if best is not None:
        return witness("G1-Rx-G2", best)
    for i in reds:
        for j in reds:
            if i < j and sigma[i] < sigma[j]:
                for k in greens:
                    if sigma[i] < sigma[k] < sigma[j]:
                        triple = tuple(sorted((i, j, k)))
                        if best is None or triple < best:
                            best = triple
    if best is not None:
        return witness("G-between-R12", best)
    return None


def _triples(positions):
    m = len(positions)
    for x in range(m - 2):
        for y in range(x + 1, m - 1):
            for z in range(y + 1, m):
                yield positions[x], positions[y], positions[z]


def sorting_word(sigma: Perm, coloring: str) -> Optional[str]:
    """Complete 3n-letter sorting word realizing a valid coloring.

    Concatenates the push word with the greedy pop-out of the target
    configuration; None when the coloring is not valid.  Every value enters
    the stacks before the first output letter.
    """
    push = push_to_configuration(sigma, coloring)
    if push is None:
        return None
    pop = pop_out(conf_of(sigma, coloring), len(sigma))
    if pop is None:
        return None
    return push + pop
