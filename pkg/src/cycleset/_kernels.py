"""Compiled kernels for the census engine (0-based tables as int8 arrays).

The search is a depth-first assignment of whole rows with three sound prunes:
the diagonal i -> t[i][i] must stay injective, the pair map
(a,b) -> (t[a][b], t[b][a]) must stay injective, and every law constraint
whose four rows are assigned must already hold.  A row whose value is forced
by an already-assigned constraint is not branched on.  Emission order is the
lexicographic order of the flattened table, matching the pure-Python
reference in census.py exactly.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def search(n, perms, out, limit):  # pragma: no cover - exercised via census
    nperm = perms.shape[0]
    rows = np.full((n, n), -1, np.int8)
    diag_used = np.zeros(n, np.uint8)
    pair_used = np.zeros((n, n), np.uint8)
    cand_idx = np.zeros(n + 1, np.int64)
    forced = np.full((n, n), -1, np.int8)
    has_forced = np.zeros(n + 1, np.uint8)
    added = np.zeros((n, 2 * n + 1, 2), np.int8)
    n_added = np.zeros(n + 1, np.int64)
    placed = np.zeros(n + 1, np.uint8)
    count = 0

    k = 0
    entering = True
    while k >= 0:
        if k == n:
            if count < limit:
                for i in range(n):
                    for j in range(n):
                        out[count, i, j] = rows[i, j]
            count += 1
            k -= 1
            entering = False
            continue
        if entering:
            # pairs sending both images to row k force psi_a == psi_b
            dead = False
            for a in range(k):
                if dead:
                    break
                for b in range(a + 1, k):
                    if rows[a, b] == k and rows[b, a] == k:
                        for u in range(n):
                            if rows[a, u] != rows[b, u]:
                                dead = True
                                break
                        if dead:
                            break
            has_forced[k] = 0
            if not dead:
                found = False
                for a in range(k):
                    if found:
                        break
                    for b in range(k):
                        if a == b:
                            continue
                        c = rows[a, b]
                        e = rows[b, a]
                        if c == k and e < k:
                            # psi_k o psi_a = psi_e o psi_b
                            for i in range(n):
                                forced[k, rows[a, i]] = rows[e, rows[b, i]]
                            has_forced[k] = 1
                            found = True
                            break
                        if e == k and c < k:
                            for i in range(n):
                                forced[k, rows[b, i]] = rows[c, rows[a, i]]
                            has_forced[k] = 1
                            found = True
                            break
            cand_idx[k] = 0
            placed[k] = 0
            if dead:
                k -= 1
                entering = False
                continue
        else:
            if placed[k]:
                for t in range(n_added[k]):
                    pair_used[added[k, t, 0], added[k, t, 1]] = 0
                diag_used[rows[k, k]] = 0
                placed[k] = 0

        advanced = False
        while True:
            if has_forced[k]:
                if cand_idx[k] >= 1:
                    break
                cand = forced[k]
                cand_idx[k] += 1
            else:
                if cand_idx[k] >= nperm:
                    break
                cand = perms[cand_idx[k]]
                cand_idx[k] += 1
            if diag_used[cand[k]]:
                continue
            for j in range(n):
                rows[k, j] = cand[j]
            ok = True
            na = 0
            for a in range(k + 1):
                x = rows[a, k]
                y = rows[k, a]
                if pair_used[x, y]:
                    ok = False
                    break
                pair_used[x, y] = 1
                added[k, na, 0] = x
                added[k, na, 1] = y
                na += 1
                if a < k:
                    if pair_used[y, x]:
                        ok = False
                        break
                    pair_used[y, x] = 1
                    added[k, na, 0] = y
                    added[k, na, 1] = x
                    na += 1
            if ok:
                for a in range(k + 1):
                    if not ok:
                        break
                    for b in range(k + 1):
                        c = rows[a, b]
                        e = rows[b, a]
                        if c > k or e > k:
                            continue
                        if a < k and b < k and c < k and e < k:
                            continue
                        for u in range(n):
                            if rows[c, rows[a, u]] != rows[e, rows[b, u]]:
                                ok = False
                                break
                        if not ok:
                            break
            if not ok:
                for t in range(na):
                    pair_used[added[k, t, 0], added[k, t, 1]] = 0
                continue
            n_added[k] = na
            diag_used[rows[k, k]] = 1
            placed[k] = 1
            advanced = True
            break

        if advanced:
            k += 1
            entering = True
        else:
            k -= 1
            entering = False
    return count


@njit(cache=True)
def canonical_mask(tables, perms, mask):  # pragma: no cover
    """mask[t] = 1 iff table t is lexicographically minimal among its
    simultaneous relabelings tau o psi_{tau^-1(i)} o tau^-1."""
    count = tables.shape[0]
    n = tables.shape[1]
    nperm = perms.shape[0]
    inv = np.empty(n, np.int8)
    for t in range(count):
        tbl = tables[t]
        canonical = True
        for p in range(nperm):
            tau = perms[p]
            for i in range(n):
                inv[tau[i]] = i
            smaller = False
            bigger = False
            for i in range(n):
                row = tbl[inv[i]]
                for j in range(n):
                    v = tau[row[inv[j]]]
                    w = tbl[i, j]
                    if v < w:
                        smaller = True
                        break
                    if v > w:
                        bigger = True
                        break
                if smaller or bigger:
                    break
            if smaller:
                canonical = False
                break
        mask[t] = 1 if canonical else 0


@njit(cache=True)
def _gcd(a, b):  # pragma: no cover
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def table_stats(tables, stats):  # pragma: no cover
    """Per-table invariants: columns are
    [class d, group order, order of T, orbit count, abelian, square_free]."""
    count = tables.shape[0]
    n = tables.shape[1]
    npow = 1
    for _ in range(n):
        npow *= n
    maxg = 1
    for i in range(2, n + 1):
        maxg *= i
    seen = np.zeros(npow, np.uint8)
    buf = np.empty((maxg, n), np.int8)
    keys = np.empty(maxg, np.int64)
    comp = np.empty(n, np.int8)
    powers = np.empty(n, np.int64)
    powers[0] = 1
    for i in range(1, n):
        powers[i] = powers[i - 1] * n
    visited = np.empty(n, np.uint8)

    for t in range(count):
        tbl = tables[t]
        # diagonal map
        square_free = 1
        for i in range(n):
            if tbl[i, i] != i:
                square_free = 0
                break
        o_T = 1
        for i in range(n):
            visited[i] = 0
        for i in range(n):
            if visited[i]:
                continue
            ln = 0
            j = i
            while not visited[j]:
                visited[j] = 1
                j = tbl[j, j]
                ln += 1
            o_T = o_T // _gcd(o_T, ln) * ln
        # orbit count under the rows
        for i in range(n):
            visited[i] = 0
        orbits = 0
        for i in range(n):
            if visited[i]:
                continue
            orbits += 1
            stack_top = 0
            keys[0] = i
            visited[i] = 1
            stack_top = 1
            while stack_top > 0:
                stack_top -= 1
                x = keys[stack_top]
                for r in range(n):
                    y = tbl[r, x]
                    if not visited[y]:
                        visited[y] = 1
                        keys[stack_top] = y
                        stack_top += 1
        # abelian on generators
        abelian = 1
        for a in range(n):
            if not abelian:
                break
            for b in range(a + 1, n):
                for x in range(n):
                    if tbl[a, tbl[b, x]] != tbl[b, tbl[a, x]]:
                        abelian = 0
                        break
                if not abelian:
                    break
        # class: per-generator minimal diagonal power, lcm
        d = 1
        for s in range(n):
            for x in range(n):
                comp[x] = tbl[s, x]
            tt = tbl[s, s]
            k = 1
            while True:
                is_id = True
                for x in range(n):
                    if comp[x] != x:
                        is_id = False
                        break
                if is_id:
                    break
                for x in range(n):
                    comp[x] = tbl[tt, comp[x]]
                tt = tbl[tt, tt]
                k += 1
            d = d // _gcd(d, k) * k
        # group order: closure of the rows
        size = 0
        key = 0
        for x in range(n):
            key += x * powers[x]
        seen[key] = 1
        for x in range(n):
            buf[0, x] = x
        keys[0] = key
        size = 1
        head = 0
        while head < size:
            g = buf[head]
            head += 1
            for r in range(n):
                key = 0
                for x in range(n):
                    key += tbl[r, g[x]] * powers[x]
                if not seen[key]:
                    seen[key] = 1
                    for x in range(n):
                        buf[size, x] = tbl[r, g[x]]
                    keys[size] = key
                    size += 1
        for i in range(size):
            seen[keys[i]] = 0
        stats[t, 0] = d
        stats[t, 1] = size
        stats[t, 2] = o_T
        stats[t, 3] = orbits
        stats[t, 4] = abelian
        stats[t, 5] = square_free
