"""Pattern bases and avoidance characterizations of pushall sortability.

The finite bases listed here characterize pushall sortability on restricted
shapes of input (direct sums, separable permutations, sums with singleton
end blocks).  They are stored as data and regenerated from the brute-force
decider by the test suite, which treats the mined sets as authoritative.
"""

from __future__ import annotations

from typing import Optional

from .oracle import brute_pushall
from .permutations import (
    Perm,
    avoids,
    contains_pattern,
    is_plus_decomposable,
    parse,
)


def _ps(*texts: str) -> tuple[Perm, ...]:
    return tuple(parse(t) for t in texts)


# Direct-sum inputs: a plus-decomposable permutation is pushall sortable
# iff it avoids every pattern below.
B_PLUS = _ps(
    "132465", "135246", "142536", "142635", "143625", "153624", "213546",
    "214365", "214635", "215364", "241365", "314265", "315246", "315426",
    "351426", "1354627", "1365724", "1436527", "1473526", "1546273",
    "1573246", "1624357", "1627354", "1632547", "1632574", "1642573",
    "1657243", "2465137", "2631547", "2635147", "3541627", "4621357",
    "4652137", "5136427", "5162437", "21687435", "54613287",
)

# Plus-decomposable with nontrivial first and last blocks.
B_ONE = _ps(
    "132465", "213546", "214365", "214635", "215364", "241365", "314265",
    "1657243", "4652137", "21687435", "54613287",
)

# sigma such that 1 (+) sigma is pushall sortable: basis of that class.
B_TWO = _ps(
    "21354", "24135", "31425", "31524", "32514", "42513", "243516",
    "254613", "325416", "362415", "435162", "462135", "513246", "516243",
    "521436", "521463", "531462", "546132", "4652137",
)

# sigma such that sigma (+) 1 is pushall sortable: basis of that class.
B_THREE = _ps(
    "13524", "14253", "21354", "31524", "31542", "35142", "135462",
    "143652", "162435", "163254", "246513", "263154", "263514", "354162",
    "462135", "465213", "513642", "516243", "1657243",
)

# Separable inputs.
B_SEPARABLE = _ps(
    "132465", "213546", "214365", "1354627", "1436527", "1624357",
    "1632547", "1657243", "4652137", "21687435", "54613287",
)

SEPARABILITY_BASIS = _ps("2413", "3142")

# Minimal permutations containing both 132 and 213.
MINIMAL_BOTH_132_213 = _ps("1324", "2143", "2413", "3142", "465213", "546132")

P132 = (1, 3, 2)
P213 = (2, 1, 3)


def is_separable(sigma: Perm) -> bool:
    """True iff sigma avoids 2413 and 3142."""
    return avoids(sigma, SEPARABILITY_BASIS)


def pushall_by_patterns_plus(sigma: Perm) -> Optional[bool]:
    """Pattern-based sortability test for plus-decomposable inputs.

    Returns avoids(sigma, B_PLUS) when sigma is plus-decomposable, None
    otherwise (the characterization does not apply).
    """
    if not is_plus_decomposable(sigma):
        return None
    return avoids(sigma, B_PLUS)


def pushall_by_patterns_separable(sigma: Perm) -> Optional[bool]:
    """Pattern-based sortability test for separable inputs."""
    if not is_separable(sigma):
        return None
    return avoids(sigma, B_SEPARABLE)


def in_plus_of_avoiders(sigma: Perm, left: Perm, right: Perm) -> bool:
    """Membership in the direct sums of an avoider of ``left`` with an
    avoider of ``right``, allowing either part to be empty."""
    hi = 0
    cuts = [0]
    for i, v in enumerate(sigma):
        hi = max(hi, v)
        if hi == i + 1:
            cuts.append(i + 1)
    for c in cuts:
        prefix = sigma[:c]
        suffix = tuple(v - c for v in sigma[c:])
        if not contains_pattern(prefix, left) and not contains_pattern(suffix, right):
            return True
    return False


def sufficient_pushall_cs(sigma: Perm) -> bool:
    """A sufficient (not necessary) one-look test for sortability:
    sigma avoids 132, or avoids 213, or is a direct sum of a 132-avoider
    followed by a 213-avoider, or of a 213-avoider followed by a
    132-avoider."""
    return in_plus_of_avoiders(sigma, P132, P213) or in_plus_of_avoiders(
        sigma, P213, P132
    )


def one_plus(sigma: Perm) -> Perm:
    """1 (+) sigma."""
    return (1,) + tuple(v + 1 for v in sigma)


def plus_one(sigma: Perm) -> Perm:
    """sigma (+) 1."""
    return tuple(sigma) + (len(sigma) + 1,)


def member_one_plus(sigma: Perm) -> bool:
    """Class predicate behind B_TWO: is 1 (+) sigma pushall sortable."""
    return brute_pushall(one_plus(sigma))


def member_plus_one(sigma: Perm) -> bool:
    """Class predicate behind B_THREE: is sigma (+) 1 pushall sortable."""
    return brute_pushall(plus_one(sigma))


def antichain_perm(k: int) -> Perm:
    """The k-th member (k >= 3, size 2k) of the incomparable family of
    simple permutations that are not pushall sortable while every one-point
    deletion is: 351624, 57381624, 7 9 5 10 3 8 1 6 2 4, ..."""
    if k < 3:
        raise ValueError("the family starts at k = 3")
    m = 2 * k
    out = [m - 3, m - 1]
    for x in range(m - 5, 0, -2):
        out.extend((x, x + 5))
    out.extend((2, 4))
    return tuple(out)


def many_sortings_perm(k: int) -> Perm:
    """The k-th member (k >= 3, size 2k) of the family of simple
    permutations with at least 2k-3 valid colorings: 536142, 75836142,
    9 7 10 5 8 3 6 1 4 2, ..."""
    if k < 3:
        raise ValueError("the family starts at k = 3")
    m = 2 * k
    out = [m - 1]
    for x in range(m - 3, 0, -2):
        out.extend((x, x + 3))
    out.append(2)
    return tuple(out)
