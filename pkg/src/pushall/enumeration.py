"""Enumeration of the valid colorings of a permutation.

A coloring assigns each point to 'R' (it will wait in stack H) or 'G' (it
will wait in stack V); the valid ones are exactly the colorings whose
target configuration is reachable and can be popped out in increasing
order.  A skew-indecomposable permutation of size n has at most 9n+2 valid
colorings, found by rooting a small family of forced shapes at every
point; for a skew-decomposable permutation the colorings are the cartesian
product of the blockwise ones, which is what this module returns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import _kernels as K
from .permutations import Perm, minus_blocks

PartialColoring = list  # entries 'R', 'G' or None


class NotIndecomposable(ValueError):
    """The operation needs a skew-indecomposable permutation."""


_COLOR_CHAR = {K.RED: "R", K.GREEN: "G"}


def _as_vals(sigma: Perm) -> np.ndarray:
    return np.asarray(sigma, dtype=np.int64)


def _partial_from(colors: np.ndarray) -> PartialColoring:
    return [_COLOR_CHAR.get(int(c)) for c in colors]


def _string_from(colors) -> str:
    return "".join(_COLOR_CHAR[int(c)] for c in colors)


def _check_ascent(sigma: Perm, i: int, j: int) -> None:
    n = len(sigma)
    if not (1 <= i < j <= n and sigma[i - 1] < sigma[j - 1]):
        raise ValueError(f"positions ({i}, {j}) are not an ascent of {sigma}")


def propagate_rg(sigma: Perm, ascent: tuple[int, int]) -> Optional[PartialColoring]:
    """Colors forced by painting an ascent red-green (1-based positions).

    Every point left of i or above sigma_j receives its color; points in
    the remaining quadrant stay None.  Returns None when the forced colors
    contradict each other or the walk strands part of its region, which on
    a skew-indecomposable permutation means no valid coloring paints this
    ascent red-green.
    """
    i, j = ascent
    _check_ascent(sigma, i, j)
    vals = _as_vals(sigma)
    _, suffix_max, first_pos_leq, _ = K.build_tables(vals)
    colors = np.zeros(len(sigma), dtype=np.uint8)
    if not K.staircase_rg(vals, suffix_max, first_pos_leq, i - 1, j - 1, colors):
        return None
    return _partial_from(colors)


def propagate_gr(sigma: Perm, ascent: tuple[int, int]) -> Optional[PartialColoring]:
    """Mirror of propagate_rg for an ascent painted green-red: forced
    region is everything right of j or below sigma_i."""
    i, j = ascent
    _check_ascent(sigma, i, j)
    vals = _as_vals(sigma)
    prefix_min, _, _, last_pos_geq = K.build_tables(vals)
    colors = np.zeros(len(sigma), dtype=np.uint8)
    if not K.staircase_gr(vals, prefix_min, last_pos_geq, i - 1, j - 1, colors):
        return None
    return _partial_from(colors)


def c_gr(sigma: Perm, i: int, j: int) -> Optional[PartialColoring]:
    """Candidate partial coloring rooted at the green-red ascent (i, j)."""
    _check_ascent(sigma, i, j)
    vals = _as_vals(sigma)
    tables = K.build_tables(vals)
    colors = np.zeros(len(sigma), dtype=np.uint8)
    if K.shape_gr(vals, *tables, i - 1, j - 1, colors) != K.OK:
        return None
    return _partial_from(colors)


def c_rg(sigma: Perm, i: int, j: int) -> Optional[PartialColoring]:
    """Candidate partial coloring rooted at the red-green ascent (i, j)."""
    _check_ascent(sigma, i, j)
    vals = _as_vals(sigma)
    tables = K.build_tables(vals)
    colors = np.zeros(len(sigma), dtype=np.uint8)
    if K.shape_rg(vals, *tables, i - 1, j - 1, colors) != K.OK:
        return None
    return _partial_from(colors)


def c_star(sigma: Perm, i: int, j: int, k: int, l: int) -> Optional[PartialColoring]:
    """Candidate rooted at a red-green ascent (i, j) and a green-red ascent
    (k, l).

    When the four points do not sit in one of the four recognized relative
    positions the result is the all-uncolored partial coloring; None
    signals a forced contradiction.
    """
    _check_ascent(sigma, i, j)
    _check_ascent(sigma, k, l)
    vals = _as_vals(sigma)
    tables = K.build_tables(vals)
    colors = np.zeros(len(sigma), dtype=np.uint8)
    status = K.shape_star(vals, *tables, i - 1, j - 1, k - 1, l - 1, colors)
    if status == K.DEAD:
        return None
    if status == K.NO_MATCH:
        return [None] * len(sigma)
    return _partial_from(colors)


def c_rooted(sigma: Perm, s: int, m: int) -> Optional[str]:
    """The m-th coloring rooted at position s (s 1-based, m in 1..9).

    Returns a total valid coloring or None (companion point missing, a
    point left uncolored, or the candidate fails the validity check).
    Meant for skew-indecomposable permutations.
    """
    if not 1 <= m <= 9:
        raise ValueError("m must be in 1..9")
    n = len(sigma)
    if not 1 <= s <= n:
        raise ValueError(f"position {s} out of range")
    vals = _as_vals(sigma)
    tables = K.build_tables(vals)
    colors = np.zeros(n, dtype=np.uint8)
    if K.rooted(vals, *tables, s - 1, m, colors) != K.OK:
        return None
    if 0 in colors:
        return None
    if not K.coloring_is_valid(vals, colors):
        return None
    return _string_from(colors)


def _check_indecomposable(sigma: Perm) -> None:
    if len(minus_blocks(sigma)) > 1:
        raise NotIndecomposable(f"{sigma} is a nontrivial skew sum")


def _enumerate_block(sigma: Perm) -> list[str]:
    n = len(sigma)
    if n == 0:
        return [""]
    vals = _as_vals(sigma)
    out = np.empty((9 * n + 2, n), dtype=np.uint8)
    count = K.enumerate_block(vals, out)
    found = {bytes(out[r]) for r in range(count)}
    return sorted(_string_from(row) for row in found)


def enumerate_indecomposable(sigma: Perm) -> list[str]:
    """All valid colorings of a skew-indecomposable permutation.

    Deduplicated and in lexicographic order; at most 9n+2 of them.
    """
    _check_indecomposable(sigma)
    return _enumerate_block(sigma)


def enumerate_indecomposable_naive(sigma: Perm) -> list[str]:
    """Reference enumeration trying every rooted shape at every ascent
    pair (and every pair of ascent pairs), rather than deriving the
    companion points.  Same result set as enumerate_indecomposable."""
    _check_indecomposable(sigma)
    n = len(sigma)
    if n == 0:
        return [""]
    vals = _as_vals(sigma)
    tables = K.build_tables(vals)
    found = set()

    def consider(colors) -> None:
        if 0 not in colors and K.coloring_is_valid(vals, colors):
            found.add(bytes(colors))

    for mono in (K.RED, K.GREEN):
        consider(np.full(n, mono, dtype=np.uint8))
    ascents = [
        (i, j) for i in range(n) for j in range(i + 1, n) if vals[i] < vals[j]
    ]
    for i, j in ascents:
        colors = np.zeros(n, dtype=np.uint8)
        if K.shape_gr(vals, *tables, i, j, colors) == K.OK:
            consider(colors)
        colors = np.zeros(n, dtype=np.uint8)
        if K.shape_rg(vals, *tables, i, j, colors) == K.OK:
            consider(colors)
    for i, j in ascents:
        for k, l in ascents:
            colors = np.zeros(n, dtype=np.uint8)
            if K.shape_star(vals, *tables, i, j, k, l, colors) == K.OK:
                consider(colors)
    return sorted(_string_from(np.frombuffer(b, dtype=np.uint8)) for b in found)


@dataclass(frozen=True)
class ColoringSetProduct:
    """Valid colorings of a permutation, block by block.

    ``blocks`` pairs each skew-sum block with its own sorted coloring list;
    the full coloring set is their cartesian product, so the description
    stays linear even when the product is exponential.
    """

    blocks: tuple[tuple[Perm, tuple[str, ...]], ...]

    @property
    def count(self) -> int:
        total = 1
        for _, colorings in self.blocks:
            total *= len(colorings)
        return total

    @property
    def sortable(self) -> bool:
        return all(self.blocks_nonempty())

    def blocks_nonempty(self) -> list[bool]:
        return [bool(colorings) for _, colorings in self.blocks]

    def materialize(self) -> Iterator[str]:
        """Yield every full coloring, blocks concatenated, in product order."""
        lists = [colorings for _, colorings in self.blocks]
        for combo in itertools.product(*lists):
            yield "".join(combo)

    def to_json_dict(self) -> dict:
        return {
            "blocks": [
                {"perm": list(perm), "colorings": list(colorings)}
                for perm, colorings in self.blocks
            ],
            "count": str(self.count),
        }


def enumerate_colorings(sigma: Perm) -> ColoringSetProduct:
    """Blockwise description of every valid coloring of sigma."""
    if len(sigma) == 0:
        return ColoringSetProduct(())
    return ColoringSetProduct(
        tuple(
            (block, tuple(_enumerate_block(block)))
            for block in minus_blocks(sigma)
        )
    )


def is_pushall_sortable(sigma: Perm) -> bool:
    """Decide sortability by pushing everything before the first output."""
    return enumerate_colorings(sigma).sortable


def count_colorings(sigma: Perm) -> int:
    """Number of valid colorings (exact, as a Python integer)."""
    return enumerate_colorings(sigma).count
