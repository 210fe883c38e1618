"""Independent brute-force oracles used by the test suite.

These deliberately avoid the package's solver/search code paths: the
chromatic oracle enumerates every k^n assignment, the clique oracle
scans every vertex subset, the containment oracle enumerates subsets
and candidate bijections with no degree filtering anywhere, and the
isomorphism-class counter canonicalizes labeled graphs by taking orbit
minima under the full symmetric group.
"""

from __future__ import annotations

import itertools

import numpy as np

from reedcheck.graph import Graph, build


def naive_chromatic(g: Graph) -> int:
    """Least k such that some of the k^n total assignments is proper."""
    n = g.n
    if n == 0:
        return 0
    edges = g.edges()
    if not edges:
        return 1
    for k in range(1, n + 1):
        total = k ** n
        codes = np.arange(total, dtype=np.int64)
        cols = np.empty((total, n), dtype=np.int16)
        for v in range(n):
            cols[:, v] = (codes // (k ** v)) % k
        ok = np.ones(total, dtype=bool)
        for u, v in edges:
            ok &= cols[:, u] != cols[:, v]
        if ok.any():
            return k
    return n


def naive_k_colorable(g: Graph, k: int) -> bool:
    if g.n == 0:
        return True
    if k <= 0:
        return False
    return naive_chromatic(g) <= k


def naive_clique(g: Graph) -> int:
    """Max size over all vertex subsets inducing a complete graph."""
    best = 0
    for s in range(1 << g.n):
        vs = [v for v in range(g.n) if (s >> v) & 1]
        if len(vs) <= best:
            continue
        if all(g.has_edge(u, w) for u, w in itertools.combinations(vs, 2)):
            best = len(vs)
    return best


def naive_independence(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        vs = [v for v in range(g.n) if (s >> v) & 1]
        if len(vs) <= best:
            continue
        if all(not g.has_edge(u, w) for u, w in itertools.combinations(vs, 2)):
            best = len(vs)
    return best


def _iso_no_prefilter(host: Graph, subset: tuple[int, ...], pat: Graph) -> bool:
    """Bijection search pattern -> subset with no degree information."""
    k = pat.n
    mapping = [-1] * k
    used = [False] * len(subset)

    def place(i: int) -> bool:
        if i == k:
            return True
        for si, w in enumerate(subset):
            if used[si]:
                continue
            if all(pat.has_edge(i, j) == host.has_edge(w, mapping[j]) for j in range(i)):
                mapping[i] = w
                used[si] = True
                if place(i + 1):
                    return True
                used[si] = False
                mapping[i] = -1
        return False

    return place(0)


def naive_contains_induced(host: Graph, pat: Graph) -> bool:
    """Subset enumeration with no prefiltering of any kind."""
    k = pat.n
    if k > host.n:
        return False
    for subset in itertools.combinations(range(host.n), k):
        if _iso_no_prefilter(host, subset, pat):
            return True
    return False


def labeled_orbit_count(n: int) -> int:
    """Number of isomorphism classes on n vertices by labeled dedup.

    Every labeled graph is a bitmask over the C(n,2) vertex pairs; the
    symmetric group permutes the bit positions, and each orbit is
    identified by its minimal member.
    """
    pairs = list(itertools.combinations(range(n), 2))
    m = len(pairs)
    index = {p: i for i, p in enumerate(pairs)}
    codes = np.arange(1 << m, dtype=np.int64)
    minima = codes.copy()
    for perm in itertools.permutations(range(n)):
        mapped = np.zeros_like(codes)
        for i, (u, v) in enumerate(pairs):
            pu, pv = perm[u], perm[v]
            j = index[(pu, pv) if pu < pv else (pv, pu)]
            mapped |= ((codes >> i) & 1) << j
        np.minimum(minima, mapped, out=minima)
    return int(np.unique(minima).size)


def proper_colorings_first_use(g: Graph, k: int):
    """All proper colorings with colors 1..k, one per color-permutation
    class: colors are introduced in first-use order, so every proper
    coloring is a palette permutation of exactly one yielded tuple."""
    n = g.n
    if n == 0:
        if k >= 0:
            yield ()
        return
    assign = [0] * n

    def rec(v: int, mu: int):
        if v == n:
            yield tuple(assign)
            return
        limit = min(k, mu + 1)
        for c in range(1, limit + 1):
            if all(assign[w] != c for w in range(v) if g.has_edge(v, w)):
                assign[v] = c
                yield from rec(v + 1, max(mu, c))
        assign[v] = 0

    yield from rec(0, 0)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + ((i + 2) % 5)) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return build(10, edges)
