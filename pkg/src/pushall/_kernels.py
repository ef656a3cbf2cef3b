"""Integer kernels behind coloring validity and the rooted-coloring search.

All functions here work on numpy arrays: ``vals`` holds a permutation as
int64 values 1..n at 0-based positions, and ``colors`` is a uint8 array
with 0 = uncolored, 1 = red (stack H), 2 = green (stack V).  The kernels
are JIT-compiled when numba is importable and run as plain Python
otherwise; the logic is the same either way.

Two propagation walks do the heavy lifting.  Coloring an ascent red-then-
green forces every point left of it or above it; coloring it green-then-red
forces every point right of it or below it.  Each walk grows a corner
(boundary position, boundary value) by jumping to the first position whose
value is under the boundary and to the extreme value beyond it, then
classifies the remaining quadrant points against the corner path.  A point
that fits neither side of the path kills the candidate.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is normally installed
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


RED = 1
GREEN = 2

# status codes for shape builders
DEAD = 0
OK = 1
NO_MATCH = 2


@njit(cache=True)
def build_tables(vals):
    """Prefix minima, suffix maxima, and first/last position tables.

    first_pos_leq[v] is the leftmost position holding a value <= v;
    last_pos_geq[v] the rightmost position holding a value >= v (both
    indexed by value, with out-of-range sentinels n and -1).
    """
    n = vals.shape[0]
    prefix_min = np.empty(n, np.int64)
    suffix_max = np.empty(n, np.int64)
    lo = np.int64(n + 1)
    for p in range(n):
        if vals[p] < lo:
            lo = vals[p]
        prefix_min[p] = lo
    hi = np.int64(0)
    for p in range(n - 1, -1, -1):
        if vals[p] > hi:
            hi = vals[p]
        suffix_max[p] = hi
    pos_of = np.empty(n + 1, np.int64)
    for p in range(n):
        pos_of[vals[p]] = p
    first_pos_leq = np.empty(n + 1, np.int64)
    first_pos_leq[0] = n
    for v in range(1, n + 1):
        p = pos_of[v]
        q = first_pos_leq[v - 1]
        first_pos_leq[v] = p if p < q else q
    last_pos_geq = np.empty(n + 2, np.int64)
    last_pos_geq[n + 1] = -1
    for v in range(n, 0, -1):
        p = pos_of[v]
        q = last_pos_geq[v + 1]
        last_pos_geq[v] = p if p > q else q
    return prefix_min, suffix_max, first_pos_leq, last_pos_geq


@njit(cache=True)
def _paint(colors, p, c):
    old = colors[p]
    if old == 0:
        colors[p] = c
        return True
    return old == c


@njit(cache=True)
def staircase_rg(vals, suffix_max, first_pos_leq, i, j, colors):
    """Color the region forced by the ascent (i red, j green): everything
    left of i or above vals[j].  False on any forced contradiction."""
    n = vals.shape[0]
    vj = vals[j]
    for p in range(i + 1):
        if vals[p] <= vj and not _paint(colors, p, RED):
            return False
    for p in range(i, n):
        if vals[p] >= vj and not _paint(colors, p, GREEN):
            return False
    # corner path: positions shrink, boundary values grow
    c_pos = np.empty(2 * n + 2, np.int64)
    c_top = np.empty(2 * n + 2, np.int64)
    c_pos[0] = i
    c_top[0] = vj
    ncor = 1
    while True:
        left = first_pos_leq[c_top[ncor - 1]]
        top = suffix_max[c_pos[ncor - 1]]
        if left == c_pos[ncor - 1] and top == c_top[ncor - 1]:
            break
        c_pos[ncor] = left
        c_top[ncor] = top
        ncor += 1
    ci = 0
    for p in range(i - 1, -1, -1):
        v = vals[p]
        if v < vj:
            continue
        while ci + 1 < ncor and c_pos[ci + 1] >= p:
            ci += 1
        if v <= c_top[ci]:
            if not _paint(colors, p, RED):
                return False
        elif ci + 1 < ncor and v >= c_top[ci + 1]:
            if not _paint(colors, p, GREEN):
                return False
        else:
            return False
    return True


@njit(cache=True)
def staircase_gr(vals, prefix_min, last_pos_geq, i, j, colors):
    """Mirror walk for the ascent colored (i green, j red): everything
    right of j or below vals[i] is forced."""
    n = vals.shape[0]
    vi = vals[i]
    for p in range(j + 1):
        if vals[p] <= vi and not _paint(colors, p, GREEN):
            return False
    for p in range(j, n):
        if vals[p] >= vi and not _paint(colors, p, RED):
            return False
    c_pos = np.empty(2 * n + 2, np.int64)
    c_bot = np.empty(2 * n + 2, np.int64)
    c_pos[0] = j
    c_bot[0] = vi
    ncor = 1
    while True:
        right = last_pos_geq[c_bot[ncor - 1]]
        bot = prefix_min[c_pos[ncor - 1]]
        if right == c_pos[ncor - 1] and bot == c_bot[ncor - 1]:
            break
        c_pos[ncor] = right
        c_bot[ncor] = bot
        ncor += 1
    ci = 0
    for p in range(j + 1, n):
        v = vals[p]
        if v > vi:
            continue
        while ci + 1 < ncor and c_pos[ci + 1] <= p:
            ci += 1
        if v >= c_bot[ci]:
            if not _paint(colors, p, RED):
                return False
        elif ci + 1 < ncor and v <= c_bot[ci + 1]:
            if not _paint(colors, p, GREEN):
                return False
        else:
            return False
    return True


@njit(cache=True)
def shape_gr(vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq, i, j, colors):
    """Candidate coloring rooted at a green-red ascent (i, j).

    On top of the forced lower-right region: red column left of the first
    position under vals[i], green row above the top value right of j.
    Points between those frames stay uncolored.
    """
    if not (i < j and vals[i] < vals[j]):
        return DEAD
    if not staircase_gr(vals, prefix_min, last_pos_geq, i, j, colors):
        return DEAD
    a = first_pos_leq[vals[i]]
    bval = suffix_max[j]
    for p in range(a):
        # every value left of a exceeds vals[i]
        if vals[p] < bval:
            if not _paint(colors, p, RED):
                return DEAD
    for p in range(a, j + 1):
        if vals[p] > bval:
            if not _paint(colors, p, GREEN):
                return DEAD
    return OK


@njit(cache=True)
def shape_rg(vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq, i, j, colors):
    """Candidate coloring rooted at a red-green ascent (i, j).

    Beyond the forced upper-left region: red band right of the last
    position above vals[j], green band under the lowest value left of i,
    and a conditional corner colored only when exactly one band is
    inhabited.
    """
    if not (i < j and vals[i] < vals[j]):
        return DEAD
    if not staircase_rg(vals, suffix_max, first_pos_leq, i, j, colors):
        return DEAD
    n = vals.shape[0]
    a = last_pos_geq[vals[j]]
    bval = prefix_min[i]
    zone1 = False
    zone2 = False
    for p in range(a + 1, n):
        v = vals[p]
        if bval < v < vals[j]:
            zone1 = True
            if not _paint(colors, p, RED):
                return DEAD
    for p in range(i, a + 1):
        if vals[p] < bval:
            zone2 = True
            if not _paint(colors, p, GREEN):
                return DEAD
    if zone1 != zone2:
        fill = RED if zone1 else GREEN
        for p in range(a + 1, n):
            if vals[p] < bval:
                if not _paint(colors, p, fill):
                    return DEAD
    return OK


@njit(cache=True)
def shape_star(
    vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq, i, j, k, l, colors
):
    """Candidate coloring rooted at a red-green ascent (i, j) and a
    green-red ascent (k, l) in one of four relative positions.

    Returns NO_MATCH (nothing colored) when the four points do not sit in
    any of the recognized positions, DEAD on a forced contradiction.
    """
    if not (i < j and vals[i] < vals[j] and k < l and vals[k] < vals[l]):
        return NO_MATCH
    if not (i < k and vals[k] < vals[i] and j < l and vals[l] < vals[j]):
        return NO_MATCH
    if not staircase_rg(vals, suffix_max, first_pos_leq, i, j, colors):
        return DEAD
    if not staircase_gr(vals, prefix_min, last_pos_geq, k, l, colors):
        return DEAD
    n = vals.shape[0]
    vi = vals[i]
    vj = vals[j]
    vk = vals[k]
    vl = vals[l]
    interleaved = k < j  # else i < j < k < l
    if vi < vl:
        if not interleaved:
            # middle column between j and k is red
            for p in range(j + 1, k):
                if vk < vals[p] < vj:
                    if not _paint(colors, p, RED):
                        return DEAD
    else:
        if interleaved:
            # middle row between vals[l] and vals[i] is green
            for p in range(i + 1, l):
                if vl < vals[p] < vi:
                    if not _paint(colors, p, GREEN):
                        return DEAD
        else:
            for p in range(j + 1, k):
                v = vals[p]
                if vk < v < vl or vi < v < vj:
                    if not _paint(colors, p, RED):
                        return DEAD
            for p in range(i + 1, j):
                if vl < vals[p] < vi:
                    if not _paint(colors, p, GREEN):
                        return DEAD
            for p in range(k + 1, l):
                if vl < vals[p] < vi:
                    if not _paint(colors, p, GREEN):
                        return DEAD
            has_a = False
            for p in range(l + 1, n):
                if vi < vals[p] < vj:
                    has_a = True
                    break
            has_b = False
            for p in range(i + 1, j):
                if vals[p] < vk:
                    has_b = True
                    break
            center = False
            for p in range(j + 1, k):
                if vl < vals[p] < vi:
                    center = True
                    break
            if center:
                if has_a and has_b:
                    return DEAD
                if has_a or has_b:
                    fill = RED if has_a else GREEN
                    for p in range(j + 1, k):
                        if vl < vals[p] < vi:
                            if not _paint(colors, p, fill):
                                return DEAD
    return OK


@njit(cache=True)
def rooted(vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq, s, m, colors):
    """Build the m-th coloring rooted at position s (m in 1..9).

    Derives the companion points by the scans below and delegates to the
    matching shape; returns DEAD when a companion does not exist.  The gate
    (every point colored) and the validity check are the caller's job.
    """
    n = vals.shape[0]
    vs = vals[s]
    if m == 1:
        t = -1
        for q in range(s + 1, n):
            if vals[q] > vs:
                t = q
                break
        if t < 0:
            return DEAD
        return shape_gr(
            vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq, s, t, colors
        )
    if m == 2:
        t = -1
        best = 0
        for q in range(s):
            if vals[q] < vs and vals[q] > best:
                best = vals[q]
                t = q
        if t < 0:
            return DEAD
        return shape_gr(
            vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq, t, s, colors
        )
    if m == 3:
        t = -1
        best = n + 1
        for q in range(s + 1, n):
            if vals[q] > vs and vals[q] < best:
                best = vals[q]
                t = q
        if t < 0:
            return DEAD
        return shape_rg(
            vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq, s, t, colors
        )
    if m == 4:
        t = -1
        for q in range(s - 1, -1, -1):
            if vals[q] < vs:
                t = q
                break
        if t < 0:
            return DEAD
        return shape_rg(
            vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq, t, s, colors
        )
    if m == 5:
        u = -1
        for q in range(s - 1, -1, -1):
            if vals[q] > vs:
                u = q
                break
        if u < 0:
            return DEAD
        t = -1
        for q in range(u - 1, -1, -1):
            if vals[q] < vs:
                t = q
                break
        if t < 0:
            return DEAD
        p = -1
        for q in range(t - 1, -1, -1):
            if vals[t] < vals[q] < vs:
                p = q
                break
        if p < 0:
            return DEAD
        qq = -1
        best = n + 1
        for q in range(t + 1, u + 1):
            if vals[q] < best:
                best = vals[q]
                qq = q
        if qq < 0:
            return DEAD
        return shape_star(
            vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq,
            p, qq, t, s, colors,
        )
    if m == 6:
        t = -1
        for q in range(s + 1, n):
            if vals[q] > vs:
                t = q
                break
        if t < 0:
            return DEAD
        u = -1
        for q in range(t - 1, -1, -1):
            if vals[q] > vals[t]:
                u = q
                break
        if u < 0:
            return DEAD
        p = -1
        for q in range(u - 1, -1, -1):
            if vs < vals[q] < vals[t]:
                p = q
                break
        if p < 0:
            return DEAD
        qq = -1
        best = n + 1
        for q in range(p + 1, u + 1):
            if vals[q] > vals[t] and vals[q] < best:
                best = vals[q]
                qq = q
        if qq < 0:
            return DEAD
        return shape_star(
            vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq,
            p, qq, s, t, colors,
        )
    if m == 7:
        t = -1
        best = 0
        for q in range(s):
            if vals[q] < vs and vals[q] > best:
                best = vals[q]
                t = q
        if t < 0:
            return DEAD
        u = -1
        best = n + 1
        for q in range(t):
            if vals[q] > vals[t] and vals[q] < best:
                best = vals[q]
                u = q
        if u < 0:
            return DEAD
        p = -1
        best = n + 1
        for q in range(t + 1, s):
            if vals[q] > vals[u] and vals[q] < best:
                best = vals[q]
                p = q
        if p < 0:
            return DEAD
        qq = -1
        for q in range(p - 1, -1, -1):
            if vals[u] <= vals[q] < vals[p]:
                qq = q
                break
        if qq < 0:
            return DEAD
        return shape_star(
            vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq,
            qq, p, t, s, colors,
        )
    if m == 8:
        t = -1
        for q in range(s + 1, n):
            if vals[q] > vs:
                t = q
                break
        if t < 0:
            return DEAD
        u = -1
        best = 0
        for q in range(t + 1, n):
            if vals[q] > vals[t] and vals[q] > best:
                best = vals[q]
                u = q
        if u < 0:
            return DEAD
        v = -1
        for q in range(u - 1, -1, -1):
            if vals[q] > vals[u]:
                v = q
                break
        if v < 0:
            return DEAD
        p = -1
        for q in range(v - 1, -1, -1):
            if vals[t] < vals[q] < vals[u]:
                p = q
                break
        if p < 0:
            return DEAD
        qq = -1
        best = n + 1
        for q in range(p + 1, v + 1):
            if vals[q] > vals[u] and vals[q] < best:
                best = vals[q]
                qq = q
        if qq < 0:
            return DEAD
        return shape_star(
            vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq,
            p, qq, s, t, colors,
        )
    # m == 9
    t = -1
    best = 0
    for q in range(s):
        if vals[q] < vs and vals[q] > best:
            best = vals[q]
            t = q
    if t < 0:
        return DEAD
    u = -1
    for q in range(t):
        if vals[q] < vals[t]:
            u = q
            break
    if u < 0:
        return DEAD
    v = -1
    best = n + 1
    for q in range(u):
        if vals[q] > vals[u] and vals[q] < best:
            best = vals[q]
            v = q
    if v < 0:
        return DEAD
    p = -1
    best = n + 1
    for q in range(u + 1, t):
        if vals[q] > vals[v] and vals[q] < best:
            best = vals[q]
            p = q
    if p < 0:
        return DEAD
    qq = -1
    for q in range(p - 1, -1, -1):
        if vals[v] <= vals[q] < vals[p]:
            qq = q
            break
    if qq < 0:
        return DEAD
    return shape_star(
        vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq,
        qq, p, t, s, colors,
    )


@njit(cache=True)
def coloring_is_valid(vals, colors):
    """Linear validity test for a total coloring.

    Simulates the push strategy that tries to reach the configuration where
    red points sit in H in input order and green points sit in V in
    decreasing order, then greedily pops everything out in increasing
    order.  True iff both phases succeed.
    """
    n = vals.shape[0]
    hstack = np.empty(n, np.int64)  # positions
    vstack = np.empty(n, np.int64)  # values
    hn = 0
    vn = 0
    i = 0
    while i < n:
        if hn == 0 or colors[hstack[hn - 1]] == RED:
            hstack[hn] = i
            hn += 1
            i += 1
        else:
            hv = vals[hstack[hn - 1]]
            if colors[i] == RED or vals[i] < hv:
                if vn == 0 or hv < vstack[vn - 1]:
                    vstack[vn] = hv
                    vn += 1
                    hn -= 1
                else:
                    return False
            else:
                hstack[hn] = i
                hn += 1
                i += 1
    while hn > 0 and colors[hstack[hn - 1]] == GREEN:
        hv = vals[hstack[hn - 1]]
        if vn == 0 or hv < vstack[vn - 1]:
            vstack[vn] = hv
            vn += 1
            hn -= 1
        else:
            return False
    nxt = 1
    while nxt <= n:
        if vn > 0 and vstack[vn - 1] == nxt:
            vn -= 1
            nxt += 1
        elif hn > 0 and (vn == 0 or vals[hstack[hn - 1]] < vstack[vn - 1]):
            vstack[vn] = vals[hstack[hn - 1]]
            vn += 1
            hn -= 1
        else:
            return False
    return True


@njit(cache=True)
def enumerate_block(vals, out):
    """All valid colorings of a skew-indecomposable permutation.

    Tries the two monochromatic colorings plus the nine rooted shapes at
    every position, keeping candidates that color every point and pass the
    validity check.  Rows of ``out`` (shape (9n+2, n)) receive the
    survivors, duplicates included; returns the row count.
    """
    n = vals.shape[0]
    prefix_min, suffix_max, first_pos_leq, last_pos_geq = build_tables(vals)
    count = 0
    for mono in (RED, GREEN):
        for p in range(n):
            out[count, p] = mono
        if coloring_is_valid(vals, out[count]):
            count += 1
    colors = np.empty(n, np.uint8)
    for s in range(n):
        for m in range(1, 10):
            for p in range(n):
                colors[p] = 0
            status = rooted(
                vals, prefix_min, suffix_max, first_pos_leq, last_pos_geq,
                s, m, colors,
            )
            if status != OK:
                continue
            total = True
            for p in range(n):
                if colors[p] == 0:
                    total = False
                    break
            if not total:
                continue
            if coloring_is_valid(vals, colors):
                for p in range(n):
                    out[count, p] = colors[p]
                count += 1
    return count


@njit(cache=True)
def valid_coloring_masks(vals):
    """Bitmask enumeration of all valid colorings (bit p set = green).

    Exhaustive over the 2^n colorings; meant for small n only.
    """
    n = vals.shape[0]
    colors = np.empty(n, np.uint8)
    out = np.empty(1 << n, np.int64)
    count = 0
    for mask in range(1 << n):
        for p in range(n):
            colors[p] = GREEN if (mask >> p) & 1 else RED
        if coloring_is_valid(vals, colors):
            out[count] = mask
            count += 1
    return out[:count]
