"""Compiled depth-first search kernels for path enumeration.

Both kernels run an iterative backtracking search with explicit stacks so
numba can compile them to tight loops.  All inputs are read-only arrays
prepared by `enumeration`; every piece of mutable search state is allocated
inside the call, which together with nogil=True makes concurrent calls from
several threads safe.

Moves are tried in increasing direction code, so completed paths appear in
lexicographic digit order.  A search can be restricted to the subtree below
a digit prefix: the prefix is replayed through the same acceptance checks
and pruning, and a rejected prefix simply yields an empty subtree.

Pruning (sound: only subtrees without any valid completion are cut):
  * the goal vertex, and for tilings the tile touching the goal corner, is
    refused before the final step because the path may not pass through it;
  * Hamiltonian search keeps per-vertex counts of unvisited neighbours; an
    unvisited non-goal vertex with count 0 is unreachable, and when the
    previous position turns interior its unvisited neighbours off the new
    frontier need a way in and a way out (count 2, or 1 for the goal);
  * the tiling search keeps per-tile counts of free sides (sides with a
    strictly visited endpoint can no longer consume the tile), and because
    consecutive edges share a vertex, consumed tiles form a Hamiltonian
    path on the tile adjacency graph, so the same two degree checks apply
    to tiles as well.

The 64-bit adjacency masks only exist for grids of at most 64 vertices or
tiles; `use_mask` disables the frontier checks beyond that size (orders
where exhaustive search is hopeless anyway).
"""

import numpy as np
from numba import njit

__all__ = ["ham_search", "tiling_search"]


@njit(cache=True, nogil=True)
def ham_search(nbr, adjmask, pair_ok, last_ok, start, goal, target, use_mask, prefix, out):
    """Count Hamiltonian A-to-B paths below a digit prefix.

    Returns (count, rows).  When out has capacity, the digit strings are
    also written into it (uint8 codes, one path per row) and rows reports
    how many were stored; with a zero-capacity out the call only counts.
    """
    npoints = nbr.shape[0]
    visited = np.zeros(npoints, np.uint8)
    unv = np.zeros(npoints, np.int8)
    for p in range(npoints):
        c = 0
        for j in range(6):
            if nbr[p, j] >= 0:
                c += 1
        unv[p] = c
    pos_stack = np.empty(target + 2, np.int16)
    dir_stack = np.empty(target + 2, np.int8)
    try_stack = np.empty(target + 2, np.int8)
    visited[start] = 1
    for j in range(6):
        w = nbr[start, j]
        if w >= 0:
            unv[w] -= 1
    pos_stack[0] = start
    # Sentinel last direction 0 at depth 0: the leading zero of the
    # supplemented string for W; for H and S it only blocks moves that
    # leave the grid at corner A anyway.
    dir_stack[0] = 0
    try_stack[0] = 0
    base = prefix.shape[0]
    cap = out.shape[0]
    count = 0
    rows = 0

    for i in range(base):
        p = pos_stack[i]
        ld = dir_stack[i]
        d = prefix[i]
        u = nbr[p, d]
        if u < 0 or visited[u] == 1 or pair_ok[ld, d] == 0:
            return 0, 0
        nd = i + 1
        if nd == target:
            if u != goal or last_ok[d] == 0:
                return 0, 0
        elif u == goal:
            return 0, 0
        visited[u] = 1
        for j in range(6):
            w = nbr[u, j]
            if w >= 0 and visited[w] == 0:
                unv[w] -= 1
                if unv[w] == 0 and w != goal:
                    return 0, 0
        if use_mask == 1 and nd < target:
            am = adjmask[u]
            for j in range(6):
                w = nbr[p, j]
                if w >= 0 and visited[w] == 0 and (am >> np.uint64(w)) & np.uint64(1) == np.uint64(0):
                    if w == goal:
                        if unv[w] < 1:
                            return 0, 0
                    elif unv[w] < 2:
                        return 0, 0
        pos_stack[nd] = u
        dir_stack[nd] = d
        try_stack[nd] = 0

    depth = base
    while depth >= base:
        if depth == target:
            count += 1
            if rows < cap:
                for i in range(target):
                    out[rows, i] = dir_stack[i + 1]
                rows += 1
            depth -= 1
            if depth < base:
                break
            u = pos_stack[depth + 1]
            for j in range(6):
                w = nbr[u, j]
                if w >= 0 and visited[w] == 0:
                    unv[w] += 1
            visited[u] = 0
            continue
        p = pos_stack[depth]
        ld = dir_stack[depth]
        moved = False
        d = try_stack[depth]
        while d < 6:
            u = nbr[p, d]
            if u < 0 or visited[u] == 1 or pair_ok[ld, d] == 0:
                d += 1
                continue
            nd = depth + 1
            if nd == target:
                if u != goal or last_ok[d] == 0:
                    d += 1
                    continue
            elif u == goal:
                d += 1
                continue
            visited[u] = 1
            fail = False
            for j in range(6):
                w = nbr[u, j]
                if w >= 0 and visited[w] == 0:
                    unv[w] -= 1
                    if unv[w] == 0 and w != goal:
                        fail = True
            if use_mask == 1 and not fail and nd < target:
                am = adjmask[u]
                for j in range(6):
                    w = nbr[p, j]
                    if w >= 0 and visited[w] == 0 and (am >> np.uint64(w)) & np.uint64(1) == np.uint64(0):
                        if w == goal:
                            if unv[w] < 1:
                                fail = True
                        elif unv[w] < 2:
                            fail = True
            if fail:
                for j in range(6):
                    w = nbr[u, j]
                    if w >= 0 and visited[w] == 0:
                        unv[w] += 1
                visited[u] = 0
                d += 1
                continue
            try_stack[depth] = d + 1
            depth = nd
            pos_stack[depth] = u
            dir_stack[depth] = d
            try_stack[depth] = 0
            moved = True
            break
        if not moved:
            depth -= 1
            if depth >= base:
                u = pos_stack[depth + 1]
                for j in range(6):
                    w = nbr[u, j]
                    if w >= 0 and visited[w] == 0:
                        unv[w] += 1
                visited[u] = 0
    return count, rows


@njit(cache=True, nogil=True)
def tiling_search(nbr, etile, tnbr, tmask, pair_ok, start, goal, goal_tile, use_mask, prefix, out):
    """Count tile-covering A-to-B paths below a digit prefix.

    Same contract as ham_search.  etile maps (vertex, direction) to the
    tile the edge lies on, tnbr is the tile adjacency, and the number of
    tiles equals the path length.
    """
    npoints = nbr.shape[0]
    ntiles = tnbr.shape[0]
    target = ntiles
    visited = np.zeros(npoints, np.uint8)
    used = np.zeros(ntiles, np.uint8)
    fs = np.full(ntiles, 3, np.int8)
    tdeg = np.zeros(ntiles, np.int8)
    for t in range(ntiles):
        c = 0
        for j in range(6):
            if tnbr[t, j] >= 0:
                c += 1
        tdeg[t] = c
    pos_stack = np.empty(target + 2, np.int16)
    dir_stack = np.empty(target + 2, np.int8)
    try_stack = np.empty(target + 2, np.int8)
    tile_stack = np.empty(target + 2, np.int16)
    visited[start] = 1
    pos_stack[0] = start
    dir_stack[0] = 0
    try_stack[0] = 0
    tile_stack[0] = -1
    base = prefix.shape[0]
    cap = out.shape[0]
    count = 0
    rows = 0

    for i in range(base):
        p = pos_stack[i]
        ld = dir_stack[i]
        tprev = tile_stack[i]
        d = prefix[i]
        u = nbr[p, d]
        if u < 0 or visited[u] == 1 or pair_ok[ld, d] == 0:
            return 0, 0
        t0 = etile[p, d]
        if used[t0] == 1:
            return 0, 0
        nd = i + 1
        if nd == target:
            if u != goal:
                return 0, 0
        elif u == goal or t0 == goal_tile:
            return 0, 0
        used[t0] = 1
        for j in range(6):
            tt = tnbr[t0, j]
            if tt >= 0 and used[tt] == 0:
                tdeg[tt] -= 1
                if tdeg[tt] == 0 and tt != goal_tile:
                    return 0, 0
        if use_mask == 1 and tprev >= 0:
            m0 = tmask[t0]
            for j in range(6):
                tt = tnbr[tprev, j]
                if (
                    tt >= 0
                    and used[tt] == 0
                    and tdeg[tt] <= 1
                    and tt != goal_tile
                    and (m0 >> np.uint64(tt)) & np.uint64(1) == np.uint64(0)
                ):
                    return 0, 0
        for j in range(6):
            q = nbr[p, j]
            if q >= 0 and visited[q] == 0:
                t = etile[p, j]
                if used[t] == 0:
                    fs[t] -= 1
                    if fs[t] == 0:
                        return 0, 0
        visited[u] = 1
        pos_stack[nd] = u
        dir_stack[nd] = d
        try_stack[nd] = 0
        tile_stack[nd] = t0

    depth = base
    while depth >= base:
        if depth == target:
            count += 1
            if rows < cap:
                for i in range(target):
                    out[rows, i] = dir_stack[i + 1]
                rows += 1
            depth -= 1
            if depth < base:
                break
            u = pos_stack[depth + 1]
            p = pos_stack[depth]
            visited[u] = 0
            t0 = tile_stack[depth + 1]
            for j in range(6):
                q = nbr[p, j]
                if q >= 0 and visited[q] == 0:
                    t = etile[p, j]
                    if used[t] == 0:
                        fs[t] += 1
            for j in range(6):
                tt = tnbr[t0, j]
                if tt >= 0 and used[tt] == 0:
                    tdeg[tt] += 1
            used[t0] = 0
            continue
        p = pos_stack[depth]
        ld = dir_stack[depth]
        tprev = tile_stack[depth]
        moved = False
        d = try_stack[depth]
        while d < 6:
            u = nbr[p, d]
            if u < 0 or visited[u] == 1 or pair_ok[ld, d] == 0:
                d += 1
                continue
            t0 = etile[p, d]
            if used[t0] == 1:
                d += 1
                continue
            nd = depth + 1
            if nd == target:
                if u != goal:
                    d += 1
                    continue
            elif u == goal or t0 == goal_tile:
                d += 1
                continue
            used[t0] = 1
            fail = False
            for j in range(6):
                tt = tnbr[t0, j]
                if tt >= 0 and used[tt] == 0:
                    tdeg[tt] -= 1
                    if tdeg[tt] == 0 and tt != goal_tile:
                        fail = True
            if use_mask == 1 and not fail and tprev >= 0:
                m0 = tmask[t0]
                for j in range(6):
                    tt = tnbr[tprev, j]
                    if (
                        tt >= 0
                        and used[tt] == 0
                        and tdeg[tt] <= 1
                        and tt != goal_tile
                        and (m0 >> np.uint64(tt)) & np.uint64(1) == np.uint64(0)
                    ):
                        fail = True
                        break
            if not fail:
                for j in range(6):
                    q = nbr[p, j]
                    if q >= 0 and visited[q] == 0:
                        t = etile[p, j]
                        if used[t] == 0:
                            fs[t] -= 1
                            if fs[t] == 0:
                                fail = True
                if fail:
                    for j in range(6):
                        q = nbr[p, j]
                        if q >= 0 and visited[q] == 0:
                            t = etile[p, j]
                            if used[t] == 0:
                                fs[t] += 1
            if fail:
                for j in range(6):
                    tt = tnbr[t0, j]
                    if tt >= 0 and used[tt] == 0:
                        tdeg[tt] += 1
                used[t0] = 0
                d += 1
                continue
            visited[u] = 1
            try_stack[depth] = d + 1
            depth = nd
            pos_stack[depth] = u
            dir_stack[depth] = d
            try_stack[depth] = 0
            tile_stack[depth] = t0
            moved = True
            break
        if not moved:
            depth -= 1
            if depth >= base:
                u = pos_stack[depth + 1]
                p = pos_stack[depth]
                visited[u] = 0
                t0 = tile_stack[depth + 1]
                for j in range(6):
                    q = nbr[p, j]
                    if q >= 0 and visited[q] == 0:
                        t = etile[p, j]
                        if used[t] == 0:
                            fs[t] += 1
                for j in range(6):
                    tt = tnbr[t0, j]
                    if tt >= 0 and used[tt] == 0:
                        tdeg[tt] += 1
                used[t0] = 0
    return count, rows
