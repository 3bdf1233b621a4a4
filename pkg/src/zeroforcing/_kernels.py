"""Compiled inner loops for graphs with at most 64 vertices.

Vertex sets are int64 bitmasks (bit 63 is usable: only bitwise operations are
applied to masks).  All kernels release the GIL so a thread pool can run
independent subset ranges concurrently.
"""

import numpy as np
from numba import njit

ONE = np.int64(1)


@njit(cache=True, nogil=True)
def closure(nbr, n, black):
    changed = True
    while changed:
        changed = False
        for u in range(n):
            if (black >> u) & ONE:
                w = nbr[u] & ~black
                if w != 0 and (w & (w - ONE)) == 0:
                    black |= w
                    changed = True
    return black


@njit(cache=True, nogil=True)
def global_steps(nbr, n, black):
    """Number of simultaneous color-change steps until nothing changes, and the fixpoint."""
    steps = 0
    while True:
        new = black
        for u in range(n):
            if (black >> u) & ONE:
                w = nbr[u] & ~black
                if w != 0 and (w & (w - ONE)) == 0:
                    new |= w
        if new == black:
            return steps, black
        black = new
        steps += 1


@njit(cache=True, nogil=True)
def scan(nbr, n, full, prefix, r, limit, first_only):
    """Test prefix | S for every r-subset S of {0..limit-1}, in colex order.

    Colex order over subsets of equal size is ascending order of the bitmask.
    Returns (subsets tested, forcing masks, their global step counts).  With
    ``first_only`` the scan stops at the first forcing subset.
    """
    cap = 16
    masks = np.empty(cap, np.int64)
    iters = np.empty(cap, np.int64)
    found = 0
    tested = 0
    if r > limit:
        return tested, masks[:0], iters[:0]
    c = np.arange(r)
    while True:
        m = prefix
        for i in range(r):
            m |= ONE << c[i]
        tested += 1
        if closure(nbr, n, m) == full:
            if found == cap:
                cap *= 2
                grown = np.empty(cap, np.int64)
                grown[:found] = masks[:found]
                masks = grown
                grown = np.empty(cap, np.int64)
                grown[:found] = iters[:found]
                iters = grown
            masks[found] = m
            steps, _ = global_steps(nbr, n, m)
            iters[found] = steps
            found += 1
            if first_only:
                break
        j = 0
        while j < r:
            nxt = c[j + 1] if j + 1 < r else limit
            if c[j] + 1 < nxt:
                break
            j += 1
        if j == r:
            break
        c[j] += 1
        for i in range(j):
            c[i] = i
    return tested, masks[:found], iters[:found]


@njit(cache=True, nogil=True)
def path_cover(nbr, n):
    """Minimum number of vertex-disjoint paths covering all n vertices.

    best[S, v] is the fewest paths covering exactly S when the last path ends at v;
    a cover is built path by path, each path walked from one end.
    """
    size = ONE << n
    inf = n + 1
    best = np.full((size, n), inf, np.int8)
    for v in range(n):
        best[ONE << v, v] = 1
    for s in range(1, size):
        for v in range(n):
            b = best[s, v]
            if b == inf:
                continue
            for u in range(n):
                if (s >> u) & ONE:
                    continue
                t = s | (ONE << u)
                cost = b if (nbr[v] >> u) & ONE else b + 1
                if cost < best[t, u]:
                    best[t, u] = cost
    out = inf
    for v in range(n):
        if best[size - 1, v] < out:
            out = best[size - 1, v]
    return out
