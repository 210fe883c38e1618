"""Bitset kernels behind the exact solvers and the enumeration engine.

Graphs enter kernels as length-n ``uint64`` arrays: bit ``v`` of row ``u``
is the edge u~v (n <= 64, one machine word per row).  Every kernel is
written in the numba-compatible subset of numpy, so the same source runs
JIT-compiled when numba is available and interpreted otherwise.

Set ``REEDCHECK_JIT=0`` to force the interpreted path (the pure-numpy
fallback); ``REEDCHECK_JIT=1`` errors out if numba cannot be imported.
``benchmarks/bench_kernels.py`` times the two paths against each other.

Care inside kernels: uint64 values are only combined with uint64
operands (``U0``, ``U1``, ``u64(i)``) -- mixing in plain int literals
would promote to float64 under both numpy and numba.
"""

import os

import numpy as np

u64 = np.uint64
U0 = np.uint64(0)
U1 = np.uint64(1)
UFULL = np.uint64(0xFFFFFFFFFFFFFFFF)


def _jit_requested() -> bool:
    flag = os.environ.get("REEDCHECK_JIT", "auto").strip().lower()
    if flag in ("0", "false", "off", "no"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        if flag in ("1", "true", "on", "yes"):
            raise RuntimeError("REEDCHECK_JIT=1 but numba is not importable")
        return False
    return True


USING_NUMBA = _jit_requested()

if USING_NUMBA:
    from numba import njit

    def _jit(fn):
        return njit(cache=True)(fn)
else:
    def _jit(fn):
        return fn


@_jit
def full_mask(n):
    """Bitmask of the n low bits, n <= 64."""
    if n >= 64:
        return UFULL
    return (U1 << u64(n)) - U1


@_jit
def popcount(m):
    c = 0
    while m != U0:
        m &= m - U1
        c += 1
    return c


@_jit
def lowest_bit(m):
    """Index of the least significant set bit (m must be nonzero)."""
    v = 0
    while (m & U1) == U0:
        m >>= U1
        v += 1
    return v


@_jit
def _color_sort(adj, cands, order, colors):
    """Greedy-color the candidate set, filling order/colors in place.

    Returns the candidate count.  Within ``order``, color values are
    nondecreasing, so ``size + colors[i]`` bounds every clique that
    extends the current one through order[0..i].
    """
    cnt = 0
    color = 0
    rest = cands
    while rest != U0:
        color += 1
        q = rest
        while q != U0:
            v = lowest_bit(q)
            bit = U1 << u64(v)
            order[cnt] = v
            colors[cnt] = color
            cnt += 1
            rest &= ~bit
            q &= ~bit
            q &= ~adj[v]
    return cnt


@_jit
def max_clique(adj, n, budget):
    """Exact maximum-clique size by branch and bound.

    Candidates are expanded in reverse greedy-color order with the color
    count as upper bound.  Returns -1 once more than ``budget`` nodes
    have been expanded (never a wrong answer).
    """
    if n == 0:
        return 0
    best = 0
    maxd = n + 1
    p_stack = np.zeros(maxd, dtype=np.uint64)
    size_stack = np.zeros(maxd, dtype=np.int64)
    order_stack = np.zeros((maxd, n), dtype=np.int64)
    color_stack = np.zeros((maxd, n), dtype=np.int64)
    idx_stack = np.zeros(maxd, dtype=np.int64)
    nodes = 0

    p_stack[0] = full_mask(n)
    size_stack[0] = 0
    cnt = _color_sort(adj, p_stack[0], order_stack[0], color_stack[0])
    idx_stack[0] = cnt - 1
    depth = 0
    while depth >= 0:
        descended = False
        while idx_stack[depth] >= 0:
            i = idx_stack[depth]
            if size_stack[depth] + color_stack[depth, i] <= best:
                idx_stack[depth] = -1
                break
            v = order_stack[depth, i]
            idx_stack[depth] = i - 1
            nodes += 1
            if nodes > budget:
                return -1
            child = p_stack[depth] & adj[v]
            p_stack[depth] &= ~(U1 << u64(v))
            if child == U0:
                if size_stack[depth] + 1 > best:
                    best = size_stack[depth] + 1
            else:
                depth += 1
                size_stack[depth] = size_stack[depth - 1] + 1
                p_stack[depth] = child
                cnt = _color_sort(adj, child, order_stack[depth], color_stack[depth])
                idx_stack[depth] = cnt - 1
                descended = True
                break
        if not descended:
            depth -= 1
    return best


@_jit
def k_color(adj, deg, n, k, budget, out):
    """Search for a proper coloring with colors 1..k.

    Backtracking over a dynamic most-constrained (max saturation, then
    max degree, then min index) vertex order; a vertex may only
    introduce color ``max used so far + 1`` (first-use symmetry
    breaking, which also pins the first-picked max-degree vertex to
    color 1).  Fills ``out`` and returns 1 when a coloring exists, 0
    when none does, -1 when the node budget is exhausted.
    """
    for i in range(n):
        out[i] = 0
    if n == 0:
        return 1
    if k <= 0:
        return 0
    if k >= n:
        for i in range(n):
            out[i] = i + 1
        return 1
    order = np.zeros(n, dtype=np.int64)
    tried = np.zeros(n, dtype=np.int64)
    fresh = np.zeros(n, dtype=np.uint8)
    mu = np.zeros(n + 1, dtype=np.int64)
    nodes = 0
    depth = 0
    while True:
        if depth == n:
            return 1
        if fresh[depth] == 0:
            best_v = -1
            best_sat = -1
            best_deg = -1
            for v in range(n):
                if out[v] != 0:
                    continue
                satm = U0
                m = adj[v]
                while m != U0:
                    w = lowest_bit(m)
                    m &= m - U1
                    if out[w] != 0:
                        satm |= U1 << u64(out[w] - 1)
                sat = popcount(satm)
                if sat > best_sat or (sat == best_sat and deg[v] > best_deg):
                    best_v = v
                    best_sat = sat
                    best_deg = deg[v]
            order[depth] = best_v
            tried[depth] = 0
            fresh[depth] = 1
        v = order[depth]
        conf = U0
        m = adj[v]
        while m != U0:
            w = lowest_bit(m)
            m &= m - U1
            if out[w] != 0:
                conf |= U1 << u64(out[w] - 1)
        limit = mu[depth] + 1
        if limit > k:
            limit = k
        c = tried[depth] + 1
        chosen = 0
        while c <= limit:
            if ((conf >> u64(c - 1)) & U1) == U0:
                chosen = c
                break
            c += 1
        if chosen != 0:
            nodes += 1
            if nodes > budget:
                for i in range(n):
                    out[i] = 0
                return -1
            tried[depth] = chosen
            out[v] = chosen
            if chosen > mu[depth]:
                mu[depth + 1] = chosen
            else:
                mu[depth + 1] = mu[depth]
            depth += 1
            if depth < n:
                fresh[depth] = 0
        else:
            fresh[depth] = 0
            depth -= 1
            if depth < 0:
                return 0
            out[order[depth]] = 0


@_jit
def canon_search(adj, n, early_exit, perm_out):
    """Minimal-encoding search over vertex permutations.

    The encoding of a labeling is the upper-triangle bit string read
    column by column (the graph6 bit order), compared lexicographically.
    Column d under a partial placement p0..pd is the d-bit word whose
    bit i (from the top) is the edge p_i ~ p_d, so the encoding of a
    prefix is a prefix of the encoding: branches compare column by
    column against the best known reference and are cut as soon as they
    exceed it.

    early_exit=1: reference is the identity labeling; returns 0 as soon
    as any strictly smaller labeling exists, else 1 (the graph is its
    own canonical representative).  perm_out is untouched.

    early_exit=0: full minimization; fills perm_out with the placement
    (perm_out[i] = original vertex at canonical position i) and
    returns 1.
    """
    if n <= 1:
        if early_exit == 0:
            for i in range(n):
                perm_out[i] = i
        return 1
    best = np.zeros(n, dtype=np.uint64)
    for d in range(1, n):
        col = U0
        for i in range(d):
            col = (col << U1) | ((adj[i] >> u64(d)) & U1)
        best[d] = col
    perm = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=np.uint8)
    cand = np.zeros(n, dtype=np.int64)
    if early_exit == 0:
        for i in range(n):
            perm_out[i] = i
    depth = 0
    cand[0] = -1
    while depth >= 0:
        v = cand[depth] + 1
        while v < n and used[v] == 1:
            v += 1
        if v >= n:
            depth -= 1
            if depth >= 0:
                used[perm[depth]] = 0
            continue
        cand[depth] = v
        if depth == 0:
            perm[0] = v
            used[v] = 1
            depth = 1
            cand[1] = -1
            continue
        col = U0
        for i in range(depth):
            col = (col << U1) | ((adj[perm[i]] >> u64(v)) & U1)
        if col > best[depth]:
            continue
        if col < best[depth]:
            if early_exit == 1:
                return 0
            best[depth] = col
            for j in range(depth + 1, n):
                best[j] = UFULL
        perm[depth] = v
        used[v] = 1
        if depth == n - 1:
            if early_exit == 0:
                for i in range(n):
                    perm_out[i] = perm[i]
            used[v] = 0
            continue
        depth += 1
        cand[depth] = -1
    return 1


@_jit
def canonical_child_masks(parent, m, flags):
    """Orderly augmentation step: flag the canonical one-vertex extensions.

    ``parent`` is a canonical graph on m-1 vertices; a child attaches
    vertex m-1 with neighborhood ``mask``.  flags[mask] = 1 iff the
    child is its own canonical representative.  Column-major encodings
    compose by prefix, so deleting the last vertex of a canonical graph
    leaves a canonical graph; every isomorphism class on m vertices is
    therefore flagged exactly once across all canonical parents.
    """
    child = np.zeros(m, dtype=np.uint64)
    dummy = np.zeros(1, dtype=np.int64)
    total = 1 << (m - 1)
    for mask in range(total):
        for v in range(m - 1):
            row = parent[v]
            if ((mask >> v) & 1) == 1:
                row |= U1 << u64(m - 1)
            child[v] = row
        child[m - 1] = u64(mask)
        flags[mask] = canon_search(child, m, 1, dummy)
