"""Exhaustive ground truth at small sizes.

Everything here is deliberately independent of the coloring machinery: the
deciders walk the raw move graph of the two-stack machine and check final
configurations against the three stack obstructions directly.  A state
during the push phase is (number of values consumed, set of positions still
sitting in H): H keeps input order, and V must stay decreasing bottom-to-
top in any run that can still succeed, so V is determined by its content.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from . import _kernels as K
from .machine import StackConfiguration
from .permutations import Perm, delete


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the exhaustive searches."""

    max_n: int = 12
    max_states: int = 2_000_000


class BudgetExceeded(ValueError):
    """The input is larger than the search budget allows."""


DEFAULT_BUDGET = SearchBudget()
TWO_STACK_BUDGET = SearchBudget(max_n=9)


def all_permutations(n: int) -> Iterator[Perm]:
    return itertools.permutations(range(1, n + 1))


def permutations_up_to(max_n: int, min_n: int = 0) -> Iterator[Perm]:
    for n in range(min_n, max_n + 1):
        yield from all_permutations(n)


def all_total_configurations(n: int) -> Iterator[StackConfiguration]:
    """Every total configuration: each split of each arrangement of 1..n."""
    for arrangement in all_permutations(n):
        for cut in range(n + 1):
            yield StackConfiguration(arrangement[:cut], arrangement[cut:])


@lru_cache(maxsize=None)
def _push_phase_hmasks(perm: Perm) -> frozenset[int]:
    """Bitmasks over positions of every reachable final H content.

    Depth-first search over push moves ('r') and transfers ('l'),
    discarding branches that would stack an ascent in V (such a run can
    never pop out in increasing order).  H's set bits, in position order,
    are the stack bottom-to-top; V holds the remaining consumed values in
    decreasing order.
    """
    n = len(perm)
    totals: set[int] = set()
    seen: set[tuple[int, int]] = set()

    def walk(k: int, hmask: int, vmin: int) -> None:
        key = (k, hmask)
        if key in seen:
            return
        seen.add(key)
        if k == n:
            totals.add(hmask)
        else:
            walk(k + 1, hmask | (1 << k), vmin)
        if hmask:
            top = hmask.bit_length() - 1
            x = perm[top]
            if x < vmin:
                walk(k, hmask & ~(1 << top), x)

    walk(0, 0, n + 1)
    return frozenset(totals)


def _mask_config(perm: Perm, hmask: int) -> StackConfiguration:
    h = tuple(perm[p] for p in range(len(perm)) if hmask >> p & 1)
    v = tuple(sorted(set(perm) - set(h), reverse=True))
    return StackConfiguration(v, h)


def _final_config_ok(perm: Perm, hmask: int) -> bool:
    """No 132 inside H bottom-to-top, and no V value strictly between an H
    value and a larger H value above it.  V is decreasing by construction."""
    h = [perm[p] for p in range(len(perm)) if hmask >> p & 1]
    for t in range(2, len(h)):
        x = h[t]
        lo = h[0]
        for j in range(1, t):
            if h[j] > x and lo < x:
                return False
            if h[j] < lo:
                lo = h[j]
    vsorted = sorted(set(perm) - set(h))
    if vsorted and len(h) >= 2:
        lo = h[0]
        for c in h[1:]:
            if c > lo:
                t = bisect.bisect_right(vsorted, lo)
                if t < len(vsorted) and vsorted[t] < c:
                    return False
            else:
                lo = c
    return True


def reachable_total_configurations(perm: Perm) -> list[StackConfiguration]:
    """Reachable total configurations whose V holds no ascent."""
    return [_mask_config(perm, mask) for mask in sorted(_push_phase_hmasks(perm))]


def _check_budget(perm: Perm, budget: SearchBudget | None, default: SearchBudget):
    budget = budget or default
    n = len(perm)
    if n > budget.max_n:
        raise BudgetExceeded(f"size {n} exceeds max_n={budget.max_n}")
    if (n + 1) << (n + 1) > budget.max_states:
        raise BudgetExceeded(f"size {n} may exceed max_states={budget.max_states}")
    return budget


@lru_cache(maxsize=None)
def _pushall_cached(perm: Perm) -> bool:
    return any(_final_config_ok(perm, mask) for mask in _push_phase_hmasks(perm))


def brute_pushall(sigma: Perm, budget: SearchBudget | None = None) -> bool:
    """True iff some reachable total configuration has no obstruction."""
    _check_budget(sigma, budget, DEFAULT_BUDGET)
    return _pushall_cached(tuple(sigma))


def brute_colorings(sigma: Perm, budget: SearchBudget | None = None) -> list[str]:
    """All 2^n colorings filtered by the linear validity test, sorted."""
    _check_budget(sigma, budget, DEFAULT_BUDGET)
    n = len(sigma)
    if n == 0:
        return [""]
    vals = np.asarray(sigma, dtype=np.int64)
    masks = K.valid_coloring_masks(vals)
    out = [
        "".join("G" if mask >> p & 1 else "R" for p in range(n))
        for mask in map(int, masks)
    ]
    return sorted(out)


@lru_cache(maxsize=None)
def _two_stack_cached(perm: Perm) -> bool:
    n = len(perm)
    if n == 0:
        return True
    seen: set[tuple[int, int, int]] = set()

    def vmin_of(k: int, hmask: int, emitted: int) -> int:
        best = n + 1
        for p in range(k):
            if not hmask >> p & 1:
                x = perm[p]
                if emitted < x < best:
                    best = x
        return best

    def walk(k: int, hmask: int, emitted: int) -> bool:
        while True:
            vmin = vmin_of(k, hmask, emitted)
            if vmin <= n and vmin == emitted + 1:
                emitted += 1  # the output move is forced and always safe
            else:
                break
        if emitted == n:
            return True
        key = (k, hmask, emitted)
        if key in seen:
            return False
        seen.add(key)
        if k < n and walk(k + 1, hmask | (1 << k), emitted):
            return True
        if hmask:
            top = hmask.bit_length() - 1
            if perm[top] < vmin and walk(k, hmask & ~(1 << top), emitted):
                return True
        return False

    return walk(0, 0, 0)


def brute_two_stack(sigma: Perm, budget: SearchBudget | None = None) -> bool:
    """General two-stack sortability by exhaustive search (small n only).

    States are (input position, H, values output so far); V is forced to
    stay decreasing, and the output move fires whenever the next needed
    value tops V.
    """
    _check_budget(sigma, budget, TWO_STACK_BUDGET)
    return _two_stack_cached(tuple(sigma))


def mine_basis(member: Callable[[Perm], bool], max_n: int) -> list[Perm]:
    """Minimal non-members of a class: member(sigma) is false while every
    one-point deletion is a member.

    The predicate must define a pattern-closed class; the search simply
    scans every permutation of size up to max_n.
    """
    found = []
    for n in range(1, max_n + 1):
        for perm in all_permutations(n):
            if member(perm):
                continue
            if all(member(delete(perm, p)) for p in range(1, n + 1)):
                found.append(perm)
    return sorted(found, key=lambda p: (len(p), p))


def clear_caches() -> None:
    _push_phase_hmasks.cache_clear()
    _pushall_cached.cache_clear()
    _two_stack_cached.cache_clear()
