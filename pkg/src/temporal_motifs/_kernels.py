"""Numba kernels for the three counting engines.

All kernels take parallel int64 arrays sorted ascending by (timestamp,
ingestion order) and an int64 window width ``delta``.  Window comparisons
are written in subtraction form (``t_b - t_a > delta``) so the "no window"
sentinel, the largest int64, never overflows.  Direction bits follow one
rule everywhere: 1 means the edge points away from the reference node
(outgoing), 0 means toward it.

The kernels release the GIL, so independent runs may execute concurrently
from worker threads.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def windowed_counts(keys, times, alphabet, length, delta):
    """Count ordered subsequences of every key pattern with span <= delta.

    Returns one flat int64 array holding counter blocks for key lengths
    1..length; the block for length r starts at sum(alphabet**i, i<r) and
    has alphabet**r slots with radix-``alphabet`` key encoding.  Blocks
    shorter than ``length`` hold live window counts; the final block
    accumulates and is never decremented.
    """
    pows = np.empty(length + 1, dtype=np.int64)
    pows[0] = 1
    for r in range(1, length + 1):
        pows[r] = pows[r - 1] * alphabet
    off = np.empty(length, dtype=np.int64)
    size = np.int64(0)
    for r in range(1, length + 1):
        off[r - 1] = size
        size += pows[r]
    counts = np.zeros(size, dtype=np.int64)

    if length == 1:
        for i in range(len(keys)):
            counts[keys[i]] += 1
        return counts

    start = 0
    for end in range(len(keys)):
        te = times[end]
        while te - times[start] > delta:
            # evict the oldest edge; shorter keys first so longer updates
            # subtract already-corrected suffix counts
            e = keys[start]
            counts[off[0] + e] -= 1
            for r in range(1, length - 1):
                src = off[r - 1]
                base = off[r] + e * pows[r]
                for s in range(pows[r]):
                    counts[base + s] -= counts[src + s]
            start += 1
        # append the newest edge; longest prefixes first so shorter counts
        # do not yet include this edge
        e = keys[end]
        for r in range(length - 1, 0, -1):
            src = off[r - 1]
            dst = off[r]
            for p in range(pows[r]):
                counts[dst + p * alphabet + e] += counts[src + p]
        counts[off[0] + e] += 1
    return counts


@njit(cache=True, nogil=True)
def star_center_counts(nbrs, dirs, times, n_nbrs, delta):
    """Star-motif counts for one center node in a single pass.

    ``nbrs`` holds dense neighbour ids of each incident edge and ``dirs``
    the direction bit relative to the center.  Returns the (first, second,
    third)-direction count cubes for the three positional classes: the
    lone-neighbour edge last (pre), first (post) or in the middle (mid).
    Triples whose edges all touch one neighbour are included and must be
    cancelled by the caller with per-pair counts.
    """
    pre_nodes = np.zeros((2, n_nbrs), dtype=np.int64)
    post_nodes = np.zeros((2, n_nbrs), dtype=np.int64)
    pre_sum = np.zeros((2, 2), dtype=np.int64)
    post_sum = np.zeros((2, 2), dtype=np.int64)
    mid_sum = np.zeros((2, 2), dtype=np.int64)
    count_pre = np.zeros((2, 2, 2), dtype=np.int64)
    count_post = np.zeros((2, 2, 2), dtype=np.int64)
    count_mid = np.zeros((2, 2, 2), dtype=np.int64)

    L = len(nbrs)
    start = 0
    end = 0
    for j in range(L):
        tj = times[j]
        while tj - times[start] > delta:
            # pop expired edge from the trailing window
            v = nbrs[start]
            d = dirs[start]
            pre_nodes[d, v] -= 1
            for i in range(2):
                pre_sum[d, i] -= pre_nodes[i, v]
            start += 1
        while end < L and times[end] - tj <= delta:
            # push upcoming edge into the leading window
            v = nbrs[end]
            d = dirs[end]
            for i in range(2):
                post_sum[i, d] += post_nodes[i, v]
            post_nodes[d, v] += 1
            end += 1

        v = nbrs[j]
        d = dirs[j]
        # the current edge must not pair with itself: pop it from the
        # leading window before counting, push to trailing after
        post_nodes[d, v] -= 1
        for i in range(2):
            post_sum[d, i] -= post_nodes[i, v]

        for i in range(2):
            mid_sum[i, d] -= pre_nodes[i, v]
        for i in range(2):
            for k in range(2):
                count_pre[i, k, d] += pre_sum[i, k]
                count_post[d, i, k] += post_sum[i, k]
                count_mid[i, d, k] += mid_sum[i, k]
        for i in range(2):
            mid_sum[d, i] += post_nodes[i, v]

        for i in range(2):
            pre_sum[i, d] += pre_nodes[i, v]
        pre_nodes[d, v] += 1

    return count_pre, count_post, count_mid


@njit(cache=True, nogil=True)
def star_baseline_center(dirs, times, nbr_starts, nbr_pos, delta, pattern_cell, out_cells):
    """Neighbour-pair star counting for one center (quadratic baseline).

    ``nbr_starts``/``nbr_pos`` give, per dense neighbour id, the ascending
    event positions of that neighbour's edges.  For every unordered
    neighbour pair the two position lists are merged and fed to the
    3-edge window counter over the 4-letter alphabet ``slot*2 + dir``;
    length-3 pattern counts are routed through ``pattern_cell`` (64 slots,
    cell id 0..35 or -1 for patterns that do not use both neighbours).
    Returns (runs, edges_fed).
    """
    L = len(dirs)
    d_count = len(nbr_starts) - 1
    merged_keys = np.empty(L, dtype=np.int64)
    merged_times = np.empty(L, dtype=np.int64)
    c1 = np.empty(4, dtype=np.int64)
    c2 = np.empty(16, dtype=np.int64)
    c3 = np.empty(64, dtype=np.int64)
    runs = np.int64(0)
    edges_fed = np.int64(0)

    for a in range(d_count):
        for b in range(a + 1, d_count):
            ia = nbr_starts[a]
            ea = nbr_starts[a + 1]
            ib = nbr_starts[b]
            eb = nbr_starts[b + 1]
            n = 0
            while ia < ea or ib < eb:
                if ib >= eb or (ia < ea and nbr_pos[ia] < nbr_pos[ib]):
                    p = nbr_pos[ia]
                    ia += 1
                    merged_keys[n] = dirs[p]
                else:
                    p = nbr_pos[ib]
                    ib += 1
                    merged_keys[n] = 2 + dirs[p]
                merged_times[n] = times[p]
                n += 1

            for i in range(4):
                c1[i] = 0
            for i in range(16):
                c2[i] = 0
            for i in range(64):
                c3[i] = 0
            win_start = 0
            for end in range(n):
                te = merged_times[end]
                while te - merged_times[win_start] > delta:
                    e = merged_keys[win_start]
                    c1[e] -= 1
                    for s in range(4):
                        c2[e * 4 + s] -= c1[s]
                    win_start += 1
                e = merged_keys[end]
                for p in range(16):
                    c3[p * 4 + e] += c2[p]
                for p in range(4):
                    c2[p * 4 + e] += c1[p]
                c1[e] += 1

            for key in range(64):
                cell = pattern_cell[key]
                if cell >= 0:
                    out_cells[cell] += c3[key]
            runs += 1
            edges_fed += n

    return runs, edges_fed


@njit(cache=True, nogil=True)
def triangle_pair_counts(wings, dirs, uorvs, times, n_wings, delta):
    """Triangle-motif counts for every third node sharing one anchor pair.

    Events are edges incident to the anchor pair {u, v}: wing edges carry a
    dense third-node id in ``wings``, a direction bit (away from the pair
    endpoint = 1) and ``uorvs`` = 0/1 for the u or v side; edges on the
    pair itself carry ``wings`` = -1 and their u->v orientation bit in
    ``dirs``.  Counting fires only at pair edges, combining same-wing
    opposite-side ordered pairs from the trailing, straddling and leading
    windows.  Returns the 2x2x2 count cube keyed by edge-orientation bits.
    """
    pre_nodes = np.zeros((2, 2, n_wings), dtype=np.int64)
    post_nodes = np.zeros((2, 2, n_wings), dtype=np.int64)
    # sums are keyed [side of earlier edge, dir of earlier, dir of later]
    pre_sum = np.zeros((2, 2, 2), dtype=np.int64)
    post_sum = np.zeros((2, 2, 2), dtype=np.int64)
    mid_sum = np.zeros((2, 2, 2), dtype=np.int64)
    count = np.zeros((2, 2, 2), dtype=np.int64)

    L = len(wings)
    start = 0
    end = 0
    for j in range(L):
        tj = times[j]
        while tj - times[start] > delta:
            w = wings[start]
            if w >= 0:
                d = dirs[start]
                a = uorvs[start]
                pre_nodes[a, d, w] -= 1
                for i in range(2):
                    pre_sum[a, d, i] -= pre_nodes[1 - a, i, w]
            start += 1
        while end < L and times[end] - tj <= delta:
            w = wings[end]
            if w >= 0:
                d = dirs[end]
                a = uorvs[end]
                for i in range(2):
                    post_sum[1 - a, i, d] += post_nodes[1 - a, i, w]
                post_nodes[a, d, w] += 1
            end += 1

        w = wings[j]
        if w >= 0:
            d = dirs[j]
            a = uorvs[j]
            post_nodes[a, d, w] -= 1
            for i in range(2):
                post_sum[a, d, i] -= post_nodes[1 - a, i, w]
            for i in range(2):
                mid_sum[1 - a, i, d] -= pre_nodes[1 - a, i, w]
                mid_sum[a, d, i] += post_nodes[1 - a, i, w]
            for i in range(2):
                pre_sum[1 - a, i, d] += pre_nodes[1 - a, i, w]
            pre_nodes[a, d, w] += 1
        else:
            utov = dirs[j]
            for i in range(2):
                for jj in range(2):
                    for k in range(2):
                        count[i, jj, k] += (
                            mid_sum[jj ^ utov, i, k]
                            + post_sum[i ^ utov, jj, 1 - k]
                            + pre_sum[(1 - k) ^ utov, 1 - i, 1 - jj]
                        )
    return count
