"""Permutations in one-line notation.

A permutation of size n is a tuple of the integers 1..n; entry k (0-based)
is the image of position k+1.  All public functions speak 1-based positions
and values.  The empty permutation ``()`` is accepted everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

Perm = tuple[int, ...]


class NotAPermutation(ValueError):
    """The values are not a bijection of 1..n."""


class ParseError(ValueError):
    """The text cannot be read as a permutation at all."""


class ArityMismatch(ValueError):
    """inflate() received a number of parts different from the skeleton size."""


def check_permutation(values: Iterable[int]) -> Perm:
    """Validate one-line notation and return it as a tuple.

    Raises NotAPermutation on duplicates, gaps, or values outside 1..n.
    """
    perm = tuple(values)
    n = len(perm)
    seen = [False] * n
    for v in perm:
        if v < 1 or v > n:
            raise NotAPermutation(f"value {v} outside 1..{n} in {perm}")
        if seen[v - 1]:
            raise NotAPermutation(f"duplicate value {v} in {perm}")
        seen[v - 1] = True
    return perm


def parse(text: str) -> Perm:
    """Read a permutation from text.

    Accepts whitespace/comma separated integers ("2 4 3 1", "2,4,3,1") or,
    when every value is a single digit, the compact form "2431".  No
    normalization is applied: the values must already be 1..n.
    """
    s = text.strip()
    if not s:
        return ()
    if re.search(r"[,\s]", s):
        tokens = [t for t in re.split(r"[,\s]+", s) if t]
    elif s.isdigit() and len(s) > 1:
        tokens = list(s)
    else:
        tokens = [s]
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"cannot read permutation from {text!r}") from exc
    return check_permutation(values)


def to_text(perm: Perm) -> str:
    """One-line notation, space separated."""
    return " ".join(str(v) for v in perm)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def pattern_of(perm: Perm, positions: Iterable[int]) -> Perm:
    """Normalize the subsequence at the given 1-based positions to a permutation."""
    sub = [perm[p - 1] for p in positions]
    ranks = {v: r for r, v in enumerate(sorted(sub), start=1)}
    return tuple(ranks[v] for v in sub)


def delete(perm: Perm, position: int) -> Perm:
    """One-point deletion at a 1-based position, renormalized."""
    v = perm[position - 1]
    return tuple(x - (x > v) for i, x in enumerate(perm) if i != position - 1)


def contains_pattern(sigma: Perm, pattern: Perm) -> bool:
    """True iff some subsequence of sigma is order-isomorphic to pattern."""
    k = len(pattern)
    n = len(sigma)
    if k == 0:
        return True
    if k > n:
        return False
    chosen: list[int] = []

    def extend(start: int) -> bool:
        t = len(chosen)
        if t == k:
            return True
        pt = pattern[t]
        for p in range(start, n - (k - t) + 1):
            x = sigma[p]
            for u in range(t):
                if (pattern[u] < pt) != (chosen[u] < x):
                    break
            else:
                chosen.append(x)
                if extend(p + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def avoids(sigma: Perm, patterns: Iterable[Perm]) -> bool:
    """True iff sigma contains none of the given patterns."""
    for pattern in sorted(patterns, key=len):
        if contains_pattern(sigma, pattern):
            return False
    return True


class Interval(NamedTuple):
    """A block: positions start..end (1-based, inclusive) holding contiguous values."""

    start: int
    end: int


def intervals(sigma: Perm) -> list[Interval]:
    """All intervals of length >= 2 and < n, sorted by (start, end)."""
    n = len(sigma)
    found = []
    for start in range(n - 1):
        lo = hi = sigma[start]
        for end in range(start + 1, n):
            v = sigma[end]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if end - start + 1 < n and hi - lo == end - start:
                found.append(Interval(start + 1, end + 1))
    return found


def is_simple(sigma: Perm) -> bool:
    """True iff every interval is trivial.

    Sizes 0, 1 and 2 are not counted simple; the smallest simple
    permutations are 2413 and 3142.
    """
    return len(sigma) > 2 and not intervals(sigma)


def inflate(tau: Perm, parts: list[Perm]) -> Perm:
    """Replace each point of tau by a block order-isomorphic to the given part."""
    k = len(tau)
    if len(parts) != k:
        raise ArityMismatch(f"skeleton has {k} points but {len(parts)} parts given")
    offsets = [0] * k
    running = 0
    for q in sorted(range(k), key=lambda q: tau[q]):
        offsets[q] = running
        running += len(parts[q])
    out: list[int] = []
    for q in range(k):
        out.extend(offsets[q] + v for v in parts[q])
    return tuple(out)


def direct_sum(*parts: Perm) -> Perm:
    return inflate(identity(len(parts)), list(parts))


def skew_sum(*parts: Perm) -> Perm:
    return inflate(decreasing(len(parts)), list(parts))


def plus_blocks(sigma: Perm) -> list[Perm]:
    """Maximal chain of direct-sum blocks ([sigma] when indecomposable)."""
    return _blocks(sigma, lambda prefix_count, running_max: running_max == prefix_count)


def minus_blocks(sigma: Perm) -> list[Perm]:
    """Maximal chain of skew-sum blocks ([sigma] when indecomposable)."""
    n = len(sigma)
    blocks = []
    start = 0
    lo = n + 1
    for i, v in enumerate(sigma):
        if v < lo:
            lo = v
        if lo == n - i:
            blocks.append(tuple(x - (lo - 1) for x in sigma[start : i + 1]))
            start = i + 1
            lo = n + 1
    return blocks if blocks else [sigma]


def _blocks(sigma: Perm, is_cut: Callable[[int, int], bool]) -> list[Perm]:
    blocks = []
    start = 0
    hi = 0
    for i, v in enumerate(sigma):
        if v > hi:
            hi = v
        if is_cut(i + 1, hi):
            blocks.append(tuple(x - start for x in sigma[start : i + 1]))
            start = i + 1
    return blocks if blocks else [sigma]


def is_plus_decomposable(sigma: Perm) -> bool:
    return len(plus_blocks(sigma)) > 1


def is_minus_decomposable(sigma: Perm) -> bool:
    return len(minus_blocks(sigma)) > 1


@dataclass(frozen=True)
class Decomposition:
    """First-level block structure: kind is "leaf", "plus" or "minus".

    For "plus"/"minus" the blocks are the maximal chain of indecomposable
    summands; reassembling them with direct_sum/skew_sum gives back the
    permutation.  "leaf" covers sizes <= 1 and permutations that are neither
    a direct nor a skew sum (in particular inflations of simple skeletons,
    which this module does not expand further).
    """

    kind: str
    blocks: tuple[Perm, ...]


def decompose(sigma: Perm) -> Decomposition:
    """Unique maximal first-level direct- or skew-sum chain, or a leaf."""
    if len(sigma) <= 1:
        return Decomposition("leaf", ())
    pb = plus_blocks(sigma)
    if len(pb) > 1:
        return Decomposition("plus", tuple(pb))
    mb = minus_blocks(sigma)
    if len(mb) > 1:
        return Decomposition("minus", tuple(mb))
    return Decomposition("leaf", ())
