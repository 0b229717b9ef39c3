"""Hot loops over bitset graphs.

A graph of order n (n <= 62) is a numpy ``uint64[n]`` array of row bitsets:
bit j of ``rows[i]`` is 1 iff ij is an edge.  Everything here is written in
nopython-compatible Python and compiled through :func:`turan._jit.hot`;
with ``TURAN_NO_NUMBA=1`` the same source runs interpreted.

Only xor/shift arithmetic is used for hashing and RNG state so that the
interpreted path never trips numpy overflow warnings.
"""

from __future__ import annotations

import numpy as np

from ._jit import NUMBA_ACTIVE, hot

USING_NUMBA = NUMBA_ACTIVE

U0 = np.uint64(0)
U1 = np.uint64(1)
U2 = np.uint64(2)
U4 = np.uint64(4)
U7 = np.uint64(7)
U8 = np.uint64(8)
U11 = np.uint64(11)
U13 = np.uint64(13)
U16 = np.uint64(16)
U17 = np.uint64(17)
U32 = np.uint64(32)
U127 = np.uint64(127)
ALL64 = np.uint64(0xFFFFFFFFFFFFFFFF)
M1 = np.uint64(0x5555555555555555)
M2 = np.uint64(0x3333333333333333)
M4 = np.uint64(0x0F0F0F0F0F0F0F0F)

INV_2_53 = 1.0 / 9007199254740992.0

# Filter / pattern codes shared by the enumeration and annealing kernels.
PAT_NONE = 0
PAT_STAR = 1
PAT_BOOK = 2
PAT_C4 = 3
PAT_TRIANGLE = 4
PAT_LINEAR_FOREST = 5  # the {triangle, 4-vertex path, 3-star} family
PAT_GENERIC = 6


def _build_binom(limit: int = 63) -> np.ndarray:
    table = np.zeros((limit, limit), dtype=np.int64)
    for i in range(limit):
        table[i, 0] = 1
        for k in range(1, i + 1):
            table[i, k] = table[i - 1, k - 1] + table[i - 1, k]
    return table


# C(a, k) for 0 <= a <= 62; the largest entry C(62, 31) fits in int64.
BINOM = _build_binom()


@hot
def popcount(x):
    x = x - ((x >> U1) & M1)
    x = (x & M2) + ((x >> U2) & M2)
    x = (x + (x >> U4)) & M4
    x = x + (x >> U8)
    x = x + (x >> U16)
    x = x + (x >> U32)
    return np.int64(x & U127)


@hot
def bit(v):
    return U1 << np.uint64(v)


@hot
def binom(a, k):
    if k < 0 or k > a or a < 0:
        return np.int64(0)
    return BINOM[a, k]


@hot
def degree_array(rows, n):
    deg = np.empty(n, np.int64)
    for v in range(n):
        deg[v] = popcount(rows[v])
    return deg


@hot
def edge_count(rows, n):
    total = np.int64(0)
    for v in range(n):
        total += popcount(rows[v])
    return total // 2


@hot
def max_degree(rows, n):
    best = np.int64(0)
    for v in range(n):
        d = popcount(rows[v])
        if d > best:
            best = d
    return best


@hot
def codegree(rows, u, v):
    return popcount(rows[u] & rows[v])


# ---------------------------------------------------------------------------
# Copy counters (closed forms over degrees / codegrees).


@hot
def count_star(rows, n, p):
    total = np.int64(0)
    for v in range(n):
        total += binom(popcount(rows[v]), p)
    return total


@hot
def count_book(rows, n, p):
    total = np.int64(0)
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            if ((ru >> np.uint64(v)) & U1) != U0:
                total += binom(popcount(ru & rows[v]), p)
    return total


@hot
def count_c4_raw(rows, n):
    # sum over unordered pairs of C(codegree, 2); every 4-cycle is counted
    # once per diagonal pair, i.e. twice in total.
    total = np.int64(0)
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            total += binom(popcount(ru & rows[v]), 2)
    return total


@hot
def count_triangles_raw(rows, n):
    # sum over edges of the codegree; every triangle is counted three times.
    total = np.int64(0)
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            if ((ru >> np.uint64(v)) & U1) != U0:
                total += popcount(ru & rows[v])
    return total


# ---------------------------------------------------------------------------
# Containment predicates used to prune enumeration subtrees.


@hot
def has_star(rows, n, p):
    for v in range(n):
        if popcount(rows[v]) >= p:
            return True
    return False


@hot
def has_book(rows, n, p):
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            if ((ru >> np.uint64(v)) & U1) != U0:
                if popcount(ru & rows[v]) >= p:
                    return True
    return False


@hot
def has_c4(rows, n):
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            if popcount(ru & rows[v]) >= 2:
                return True
    return False


@hot
def has_triangle(rows, n):
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            if ((ru >> np.uint64(v)) & U1) != U0:
                if popcount(ru & rows[v]) > 0:
                    return True
    return False


@hot
def has_p4(rows, n):
    # a 4-vertex path x-u-v-y exists iff some edge uv has neighbours
    # x != y outside the edge on both sides.
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            if ((ru >> np.uint64(v)) & U1) == U0:
                continue
            mu = ru & (bit(v) ^ ALL64)
            mv = rows[v] & (bit(u) ^ ALL64)
            if mu == U0 or mv == U0:
                continue
            if popcount(mu) >= 2 or popcount(mv) >= 2:
                return True
            if mu != mv:
                return True
    return False


@hot
def filter_hits(rows, n, code, param):
    if code == 1:
        return has_star(rows, n, param)
    if code == 2:
        return has_book(rows, n, param)
    if code == 3:
        return has_c4(rows, n)
    if code == 4:
        return has_triangle(rows, n)
    if code == 5:
        if has_triangle(rows, n):
            return True
        if has_star(rows, n, 3):
            return True
        return has_p4(rows, n)
    return False


# ---------------------------------------------------------------------------
# Generic subgraph embedding counter (backtracking with an explicit stack).


@hot
def _emb_ok(grows, gdeg, used, c, hdeg_c, assign, earlier, nearl, depth):
    if ((used >> np.uint64(c)) & U1) != U0:
        return False
    if gdeg[c] < hdeg_c:
        return False
    for t in range(nearl[depth]):
        j = earlier[depth, t]
        if ((grows[assign[j]] >> np.uint64(c)) & U1) == U0:
            return False
    return True


@hot
def count_embeddings(grows, gn, hrows, hn, order):
    """Number of injective maps V(h) -> V(g) sending h-edges to g-edges.

    ``order`` lists h's vertices in assignment order; it should place each
    vertex after at least one neighbour whenever possible.
    """
    hdeg = np.empty(hn, np.int64)
    for i in range(hn):
        hdeg[i] = popcount(hrows[i])
    gdeg = degree_array(grows, gn)
    earlier = np.zeros((hn, hn), np.int64)
    nearl = np.zeros(hn, np.int64)
    for i in range(hn):
        hv = order[i]
        for j in range(i):
            hu = order[j]
            if ((hrows[hv] >> np.uint64(hu)) & U1) != U0:
                earlier[i, nearl[i]] = j
                nearl[i] += 1
    assign = np.zeros(hn, np.int64)
    cand = np.zeros(hn, np.int64)
    used = U0
    depth = 0
    total = np.int64(0)
    while depth >= 0:
        hdeg_c = hdeg[order[depth]]
        if depth == hn - 1:
            c = cand[depth]
            while c < gn:
                if _emb_ok(grows, gdeg, used, c, hdeg_c, assign, earlier, nearl, depth):
                    total += 1
                c += 1
            depth -= 1
            if depth >= 0:
                used &= bit(assign[depth]) ^ ALL64
            continue
        c = cand[depth]
        placed = False
        while c < gn:
            if _emb_ok(grows, gdeg, used, c, hdeg_c, assign, earlier, nearl, depth):
                assign[depth] = c
                used |= bit(c)
                cand[depth] = c + 1
                depth += 1
                cand[depth] = 0
                placed = True
                break
            c += 1
        if not placed:
            depth -= 1
            if depth >= 0:
                used &= bit(assign[depth]) ^ ALL64
    return total


# ---------------------------------------------------------------------------
# Canonical labelling: iterative colour refinement plus backtracking over
# the first non-singleton cell, minimising the packed adjacency bit string.


@hot
def _dense_rank(colors, hashes, n, idx, out):
    for i in range(n):
        idx[i] = i
    for i in range(1, n):
        t = idx[i]
        j = i - 1
        while j >= 0 and (
            colors[idx[j]] > colors[t]
            or (colors[idx[j]] == colors[t] and hashes[idx[j]] > hashes[t])
        ):
            idx[j + 1] = idx[j]
            j -= 1
        idx[j + 1] = t
    rank = np.int64(0)
    out[idx[0]] = 0
    for i in range(1, n):
        a = idx[i - 1]
        b = idx[i]
        if colors[a] != colors[b] or hashes[a] != hashes[b]:
            rank += 1
        out[b] = rank
    return rank + 1


@hot
def refine(rows, n, placedpos, deg, colors):
    """Equitable-partition colouring given individualised vertices.

    Vertices with ``placedpos >= 0`` become singleton cells 0..k-1 in
    placement order; the rest split by degree and then by iterated
    neighbour-count signatures.  Same colour implies identical adjacency
    to every placed vertex.  Returns the number of colours.
    """
    raw = np.empty(n, np.int64)
    for v in range(n):
        if placedpos[v] >= 0:
            raw[v] = placedpos[v]
        else:
            raw[v] = n + deg[v]
    hashes = np.zeros(n, np.uint64)
    idx = np.empty(n, np.int64)
    ncol = _dense_rank(raw, hashes, n, idx, colors)
    masks = np.zeros(n, np.uint64)
    tmp = np.empty(n, np.int64)
    while ncol < n:
        for c in range(ncol):
            masks[c] = U0
        for v in range(n):
            masks[colors[v]] |= bit(v)
        for v in range(n):
            h = np.uint64(colors[v])
            for c in range(ncol):
                h = h ^ np.uint64(popcount(rows[v] & masks[c]) + 1)
                h ^= h << U13
                h ^= h >> U7
                h ^= h << U17
            hashes[v] = h
        newcol = _dense_rank(colors, hashes, n, idx, tmp)
        if newcol == ncol:
            break
        for v in range(n):
            colors[v] = tmp[v]
        ncol = newcol
    return ncol


@hot
def canonical(rows, n, out_perm, out_vals):
    """Fill a canonical labelling of the graph.

    ``out_perm[k]`` is the original vertex at canonical position k and
    ``out_vals[k]`` holds position k's adjacency bits to positions 0..k-1
    (bit for position t sits at offset k-1-t, so position 0 is the most
    significant).  The concatenated bit string is minimal over the
    refinement-guided search tree, which makes it a label invariant:
    isomorphic graphs get identical ``out_vals``.
    """
    if n == 1:
        out_perm[0] = 0
        out_vals[0] = U0
        return
    deg = degree_array(rows, n)
    placedpos = np.full(n, -1, np.int64)
    perm = np.empty(n, np.int64)
    acc = np.zeros(n, np.uint64)
    colors = np.empty(n, np.int64)
    cand = np.zeros((n, n), np.int64)
    candn = np.zeros(n, np.int64)
    cidx = np.zeros(n, np.int64)
    state = np.zeros(n, np.uint8)  # per depth: 0 equal to best so far, 1 smaller
    curvals = np.zeros(n, np.uint64)
    have_best = False
    depth = 0
    expand_here = True
    while depth >= 0:
        if expand_here:
            refine(rows, n, placedpos, deg, colors)
            m = 0
            for v in range(n):
                if placedpos[v] < 0 and colors[v] == depth:
                    # drop v if swapping it with a kept candidate is an
                    # automorphism (equal rows away from the pair)
                    keep = True
                    for t in range(m):
                        u = cand[depth, t]
                        if ((rows[u] ^ rows[v]) & ((bit(u) | bit(v)) ^ ALL64)) == U0:
                            keep = False
                            break
                    if keep:
                        cand[depth, m] = v
                        m += 1
            candn[depth] = m
            cidx[depth] = 0
            expand_here = False
        if cidx[depth] >= candn[depth]:
            depth -= 1
            if depth >= 0:
                v = perm[depth]
                for u in range(n):
                    if placedpos[u] < 0:
                        acc[u] = acc[u] >> U1
                placedpos[v] = -1
            continue
        v = cand[depth, cidx[depth]]
        cidx[depth] += 1
        r = acc[v]
        prev = state[depth - 1] if depth > 0 else np.uint8(0)
        if have_best and prev == 0:
            if r > out_vals[depth]:
                continue
            st = np.uint8(0) if r == out_vals[depth] else np.uint8(1)
        else:
            st = np.uint8(1)
        perm[depth] = v
        placedpos[v] = depth
        curvals[depth] = r
        state[depth] = st
        if depth == n - 1:
            if (not have_best) or st == 1:
                for k in range(n):
                    out_vals[k] = curvals[k]
                    out_perm[k] = perm[k]
                    state[k] = 0
                have_best = True
            placedpos[v] = -1
            continue
        for u in range(n):
            if placedpos[u] < 0:
                acc[u] = (acc[u] << U1) | ((rows[u] >> np.uint64(v)) & U1)
        depth += 1
        expand_here = True


# ---------------------------------------------------------------------------
# Canonical augmentation: accepted one-edge extensions of a parent class.


@hot
def expand(rows, n, parent_vals, fcode, fparam):
    """One-edge extensions of ``rows`` surviving the parent rule.

    A child is kept iff deleting the final edge of its canonical bit
    string lands back in the parent's isomorphism class; children
    isomorphic to an earlier sibling are dropped.  Every isomorphism
    class with one more edge is therefore produced by exactly one parent
    class, exactly once.  Children hitting the pattern filter ``fcode``
    are skipped before any canonical work.

    Returns ``(m, child_rows, child_vals)``; only the first m slots of
    the output arrays are meaningful.
    """
    maxm = (n * (n - 1)) // 2
    out_rows = np.zeros((maxm, n), np.uint64)
    out_vals = np.zeros((maxm, n), np.uint64)
    m = 0
    child = np.empty(n, np.uint64)
    pchild = np.empty(n, np.uint64)
    perm = np.empty(n, np.int64)
    vals = np.empty(n, np.uint64)
    perm2 = np.empty(n, np.int64)
    vals2 = np.empty(n, np.uint64)
    for i in range(n):
        for j in range(i + 1, n):
            if ((rows[i] >> np.uint64(j)) & U1) != U0:
                continue
            for t in range(n):
                child[t] = rows[t]
            child[i] |= bit(j)
            child[j] |= bit(i)
            if fcode != 0 and filter_hits(child, n, fcode, fparam):
                continue
            canonical(child, n, perm, vals)
            dup = False
            for t in range(m):
                same = True
                for k in range(n):
                    if out_vals[t, k] != vals[k]:
                        same = False
                        break
                if same:
                    dup = True
                    break
            if dup:
                continue
            kk = n - 1
            while vals[kk] == U0:
                kk -= 1
            x = vals[kk]
            tz = 0
            while ((x >> np.uint64(tz)) & U1) == U0:
                tz += 1
            tt = kk - 1 - tz
            a = perm[tt]
            b = perm[kk]
            accept = False
            if (a == i and b == j) or (a == j and b == i):
                accept = True
            else:
                for t in range(n):
                    pchild[t] = child[t]
                pchild[a] &= bit(b) ^ ALL64
                pchild[b] &= bit(a) ^ ALL64
                canonical(pchild, n, perm2, vals2)
                accept = True
                for k in range(n):
                    if vals2[k] != parent_vals[k]:
                        accept = False
                        break
            if accept:
                for t in range(n):
                    out_rows[m, t] = child[t]
                for k in range(n):
                    out_vals[m, k] = vals[k]
                m += 1
    return m, out_rows, out_vals


# ---------------------------------------------------------------------------
# Simulated annealing on fixed order and size via single edge swaps.


@hot
def xorshift64(x):
    x ^= x << U13
    x ^= x >> U7
    x ^= x << U17
    return x


@hot
def count_pattern(rows, n, code, param, hrows, hn, horder, haut):
    if code == 1:
        return count_star(rows, n, param)
    if code == 2:
        return count_book(rows, n, param)
    if code == 3:
        return count_c4_raw(rows, n) // 2
    if code == 4:
        return count_triangles_raw(rows, n) // 3
    return count_embeddings(rows, n, hrows, hn, horder) // haut


@hot
def anneal(rows0, n, steps, t0, decay, rng0, code, param, hrows, hn, horder, haut, stop_at):
    """One annealing run; returns (best_rows, best_count, best_raw_pairs).

    Moves delete one edge and add one non-edge (size preserving).
    Acceptance is Metropolis on the copy-count delta, with probability 1/2
    on plateaus.  The best graph is tracked by (copy count, sum over pairs
    of C(codegree, 2)); the run stops early once ``stop_at`` (if >= 0) is
    reached.
    """
    rows = rows0.copy()
    maxm = (n * (n - 1)) // 2
    eu = np.zeros(maxm, np.int64)
    ev = np.zeros(maxm, np.int64)
    nu = np.zeros(maxm, np.int64)
    nv = np.zeros(maxm, np.int64)
    ec = 0
    nc = 0
    for i in range(n):
        for j in range(i + 1, n):
            if ((rows[i] >> np.uint64(j)) & U1) != U0:
                eu[ec] = i
                ev[ec] = j
                ec += 1
            else:
                nu[nc] = i
                nv[nc] = j
                nc += 1
    cur = count_pattern(rows, n, code, param, hrows, hn, horder, haut)
    curpot = count_c4_raw(rows, n)
    best = np.empty(n, np.uint64)
    for t in range(n):
        best[t] = rows[t]
    bestc = cur
    bestpot = curpot
    x = rng0
    T = t0
    if ec == 0 or nc == 0:
        return best, bestc, bestpot
    step = 0
    while step < steps:
        if stop_at >= 0 and bestc <= stop_at:
            break
        x = xorshift64(np.uint64(x))
        ei = np.int64(x % np.uint64(ec))
        x = xorshift64(np.uint64(x))
        ni = np.int64(x % np.uint64(nc))
        a = eu[ei]
        b = ev[ei]
        c = nu[ni]
        d = nv[ni]
        rows[a] &= bit(b) ^ ALL64
        rows[b] &= bit(a) ^ ALL64
        rows[c] |= bit(d)
        rows[d] |= bit(c)
        newc = count_pattern(rows, n, code, param, hrows, hn, horder, haut)
        delta = newc - cur
        x = xorshift64(np.uint64(x))
        if delta < 0:
            ok = True
        elif delta == 0:
            ok = (x & U1) != U0
        else:
            u = np.float64(x >> U11) * INV_2_53
            ok = u < np.exp(-np.float64(delta) / T)
        if ok:
            eu[ei] = c
            ev[ei] = d
            nu[ni] = a
            nv[ni] = b
            cur = newc
            curpot = count_c4_raw(rows, n)
            if cur < bestc or (cur == bestc and curpot < bestpot):
                bestc = cur
                bestpot = curpot
                for t in range(n):
                    best[t] = rows[t]
        else:
            rows[c] &= bit(d) ^ ALL64
            rows[d] &= bit(c) ^ ALL64
            rows[a] |= bit(b)
            rows[b] |= bit(a)
        T *= decay
        step += 1
    return best, bestc, bestpot


# ---------------------------------------------------------------------------
# Vectorized numpy variants of the counters; these back the public counting
# functions when numba is disabled so the fallback stays usable.


def _popcount_array(a: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a).astype(np.int64)
    x = a.copy()
    x = x - ((x >> U1) & M1)
    x = (x & M2) + ((x >> U2) & M2)
    x = (x + (x >> U4)) & M4
    x = x + (x >> U8)
    x = x + (x >> U16)
    x = x + (x >> U32)
    return (x & U127).astype(np.int64)


def codegree_matrix_numpy(rows: np.ndarray, n: int) -> np.ndarray:
    return _popcount_array(rows[:, None] & rows[None, :])


def adjacency_bool_numpy(rows: np.ndarray, n: int) -> np.ndarray:
    shifts = np.arange(n, dtype=np.uint64)
    return ((rows[:, None] >> shifts[None, :]) & U1).astype(bool)


def count_star_numpy(rows: np.ndarray, n: int, p: int) -> int:
    deg = _popcount_array(rows)
    return int(BINOM[deg, p].sum())


def count_book_numpy(rows: np.ndarray, n: int, p: int) -> int:
    adj = adjacency_bool_numpy(rows, n)
    cod = codegree_matrix_numpy(rows, n)
    iu = np.triu_indices(n, 1)
    sel = adj[iu]
    return int(BINOM[cod[iu][sel], p].sum())


def count_c4_raw_numpy(rows: np.ndarray, n: int) -> int:
    cod = codegree_matrix_numpy(rows, n)
    iu = np.triu_indices(n, 1)
    return int(BINOM[cod[iu], 2].sum())


def count_triangles_raw_numpy(rows: np.ndarray, n: int) -> int:
    adj = adjacency_bool_numpy(rows, n)
    cod = codegree_matrix_numpy(rows, n)
    iu = np.triu_indices(n, 1)
    sel = adj[iu]
    return int(cod[iu][sel].sum())
