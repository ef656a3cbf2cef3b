"""Two stacks in series.

The machine reads a permutation from the input and moves values with three
operations: 'r' pushes the next input value onto stack H, 'l' pops H onto
stack V, 'm' pops V to the output.  Words are plain strings over "rlm";
Greek spellings of the three letters are accepted on input.  Stack contents
are written bottom-to-top.
"""

from __future__ import annotations

import bisect
from typing import NamedTuple, Optional

from .permutations import ParseError, Perm

RHO = "r"
LAMBDA = "l"
MU = "m"
MOVES = "rlm"

_LETTERS = {"r": "r", "l": "l", "m": "m", "ρ": "r", "λ": "l", "μ": "m"}


class IllegalMove(ValueError):
    """A move was applied in a state where it is not available."""


class StackConfiguration(NamedTuple):
    """Contents of stacks V and H, bottom-to-top."""

    v: Perm
    h: Perm


EMPTY_CONFIGURATION = StackConfiguration((), ())


def parse_word(text: str) -> str:
    """Read a stack word; accepts "rlm" letters or their Greek spellings."""
    out = []
    for ch in text.strip():
        if ch.isspace():
            continue
        try:
            out.append(_LETTERS[ch])
        except KeyError:
            raise ParseError(f"bad stack-word letter {ch!r}") from None
    return "".join(out)


def parse_configuration(text: str) -> StackConfiguration:
    """Read "V:2,1|H:3" (bottom-to-top, either side may be empty)."""
    try:
        vpart, hpart = text.strip().split("|")
        vname, vvals = vpart.split(":")
        hname, hvals = hpart.split(":")
        if vname.strip().upper() != "V" or hname.strip().upper() != "H":
            raise ValueError
        v = tuple(int(t) for t in vvals.replace(",", " ").split())
        h = tuple(int(t) for t in hvals.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"cannot read configuration from {text!r}") from exc
    return StackConfiguration(v, h)


def format_configuration(config: StackConfiguration) -> str:
    return "V:{}|H:{}".format(
        ",".join(map(str, config.v)), ",".join(map(str, config.h))
    )


def apply_word(sigma: Perm, word: str) -> tuple[Perm, list[StackConfiguration]]:
    """Run the moves left to right.

    Returns the emitted output and the trace of configurations, starting
    with the empty one (len(word) + 1 entries).  Raises IllegalMove when a
    move is not available ('r' with no input left, 'l' with H empty, 'm'
    with V empty).
    """
    v: list[int] = []
    h: list[int] = []
    out: list[int] = []
    k = 0
    trace = [EMPTY_CONFIGURATION]
    for step, move in enumerate(word):
        if move == RHO:
            if k == len(sigma):
                raise IllegalMove(f"'r' at step {step + 1} with empty input")
            h.append(sigma[k])
            k += 1
        elif move == LAMBDA:
            if not h:
                raise IllegalMove(f"'l' at step {step + 1} with empty H")
            v.append(h.pop())
        elif move == MU:
            if not v:
                raise IllegalMove(f"'m' at step {step + 1} with empty V")
            out.append(v.pop())
        else:
            raise ParseError(f"bad stack-word letter {move!r}")
        trace.append(StackConfiguration(tuple(v), tuple(h)))
    return tuple(out), trace


def is_complete_word(word: str, n: int) -> bool:
    """n of each letter, and every prefix has #r >= #l >= #m."""
    r = l = m = 0
    for move in word:
        if move == RHO:
            r += 1
        elif move == LAMBDA:
            l += 1
        else:
            m += 1
        if not (r >= l >= m):
            return False
    return r == n and l == n and m == n


def is_valid_word(sigma: Perm, word: str) -> bool:
    """True iff word is complete for |sigma|, legal, and sorts sigma."""
    if not is_complete_word(word, len(sigma)):
        return False
    try:
        out, _ = apply_word(sigma, word)
    except IllegalMove:
        return False
    return out == tuple(range(1, len(sigma) + 1))


def is_pushall_word(word: str) -> bool:
    """True iff no 'r' occurs after the first 'm'."""
    first_m = word.find(MU)
    return first_m < 0 or RHO not in word[first_m:]


class StackPatternWitness(NamedTuple):
    """An obstruction inside a configuration: kind and the offending values."""

    kind: str
    values: tuple[int, ...]


def find_unsortable_pattern(config: StackConfiguration) -> Optional[StackPatternWitness]:
    """First obstruction to popping out in increasing order, if any.

    Checked in order: "V12" (an ascent inside V, bottom-to-top), "H132"
    (inside H: a value with a larger one below it and a smaller one further
    below), "SPLIT213" (a < b < c with b in V and a, c in H, c above a).
    """
    v, h = config
    for i in range(len(v) - 1):
        for j in range(i + 1, len(v)):
            if v[i] < v[j]:
                return StackPatternWitness("V12", (v[i], v[j]))
    for i in range(len(h) - 2):
        for j in range(i + 1, len(h) - 1):
            if h[i] < h[j]:
                for k in range(j + 1, len(h)):
                    if h[i] < h[k] < h[j]:
                        return StackPatternWitness("H132", (h[i], h[j], h[k]))
    vsorted = sorted(v)
    if vsorted and len(h) >= 2:
        lo = h[0]
        for j in range(1, len(h)):
            if h[j] > lo:
                t = bisect.bisect_right(vsorted, lo)
                if t < len(vsorted) and vsorted[t] < h[j]:
                    return StackPatternWitness("SPLIT213", (lo, vsorted[t], h[j]))
            else:
                lo = h[j]
    return None


def pop_out(config: StackConfiguration, n: int) -> Optional[str]:
    """Greedy pop-out of a total configuration in increasing order.

    Returns the unique word over "lm" that empties the stacks onto the
    output in increasing order, or None when the configuration is stuck.
    An empty V lets any H value transfer.
    """
    v = list(config.v)
    h = list(config.h)
    word = []
    nxt = 1
    while nxt <= n:
        if v and v[-1] == nxt:
            v.pop()
            word.append(MU)
            nxt += 1
        elif h and (not v or h[-1] < v[-1]):
            v.append(h.pop())
            word.append(LAMBDA)
        else:
            return None
    return "".join(word)
