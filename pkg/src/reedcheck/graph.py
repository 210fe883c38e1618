"""Immutable simple-graph value type and structural primitives.

Vertices are dense labels 0..n-1 with n <= 64; adjacency is stored as
one Python-int bitmask per vertex, so the type is hashable, cheap to
copy and trivially convertible to the uint64 rows the kernels consume.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._kernels import canon_search

MAX_ORDER = 64

# Minimal-permutation canonicalization explores the whole symmetry group
# of the graph; past this order it stops being a desk-scale operation.
MAX_CANON_ORDER = 12


class GraphError(ValueError):
    """Invalid graph construction or operation input."""


class Graph6Error(GraphError):
    """Malformed graph6 text; ``offset`` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitmask of v.  Construction enforces
    symmetry, irreflexivity and the label range, so every Graph in the
    system satisfies the representation invariants.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside supported range 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for order {self.n}")
        allowed = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~allowed:
                raise GraphError(f"vertex {v} adjacent to out-of-range vertex")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            m = row
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if not (self.adj[w] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    # -- structural accessors ------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def masks(self) -> np.ndarray:
        """Adjacency rows as a uint64 array (kernel input)."""
        return np.array(self.adj, dtype=np.uint64)


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices of some graph, stored as a frozenset."""

    members: frozenset[int] = field(default_factory=frozenset)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of a Python-int mask, ascending."""
    while mask:
        v = (mask & -mask).bit_length() - 1
        yield v
        mask &= mask - 1


def _vertex_iterable(s: "VertexSet | Iterable[int]") -> list[int]:
    if isinstance(s, VertexSet):
        return sorted(s.members)
    return sorted(set(s))


# -- construction -------------------------------------------------------------


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph from an explicit edge list; duplicate edges collapse."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside supported range 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop ({u},{v}) rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for order {n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_masks(n: int, masks: Sequence[int]) -> Graph:
    """Graph from per-vertex neighbor bitmasks (validated)."""
    return Graph(n, tuple(int(m) for m in masks))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# -- graph6 codec --------------------------------------------------------------
#
# Standard encoding: header 63+n for n <= 62, '~' plus three 6-bit bytes for
# larger n; body packs the upper triangle column by column (columns 1..n-1,
# rows 0..j-1), six bits per byte, each byte offset by 63, zero padding.


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + ((n >> 12) & 63)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    bits_out = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits_out.append((col >> i) & 1)
    body = []
    for i in range(0, len(bits_out), 6):
        group = bits_out[i:i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        body.append(chr(63 + val))
    return head + "".join(body)


def from_graph6(text: str) -> Graph:
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    data = text.strip()
    pos = 0
    first = ord(data[0])
    if first == 126:  # '~' long-form header
        if len(data) < 4:
            raise Graph6Error("truncated long-form header", len(data))
        vals = []
        for i in (1, 2, 3):
            b = ord(data[i])
            if not 63 <= b <= 126:
                raise Graph6Error(f"invalid header byte {data[i]!r}", i)
            vals.append(b - 63)
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        pos = 4
    else:
        if not 63 <= first <= 125:
            raise Graph6Error(f"invalid header byte {data[0]!r}", 0)
        n = first - 63
        pos = 1
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds supported maximum {MAX_ORDER}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error("truncated bit body", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing data after bit body", pos + nbytes)
    bitstream = []
    for i in range(nbytes):
        b = ord(data[pos + i])
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid body byte {data[pos + i]!r}", pos + i)
        val = b - 63
        for shift in range(5, -1, -1):
            bitstream.append((val >> shift) & 1)
    for i in range(nbits, len(bitstream)):
        if bitstream[i]:
            raise Graph6Error("nonzero padding bits", pos + i // 6)
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


# -- structural operations -----------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: "VertexSet | Iterable[int]") -> Graph:
    """Subgraph induced by s, relabeled by ascending original label."""
    verts = _vertex_iterable(s)
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for order {g.n}")
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        for w in bits(g.adj[v]):
            j = index.get(w)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(len(verts), tuple(adj))


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for order {g.n}")
    return g.degree(v)


def max_degree(g: Graph) -> int:
    """Maximum vertex degree; 0 for the empty graph by convention."""
    return max((g.degree(v) for v in range(g.n)), default=0)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted descending."""
    return tuple(sorted((g.degree(v) for v in range(g.n)), reverse=True))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Adjacency-preserving bijection test (degree prefilter, then
    backtracking); meant for order <= 10."""
    if g1.n != g2.n:
        return False
    if g1.edge_count() != g2.edge_count():
        return False
    if degree_sequence(g1) != degree_sequence(g2):
        return False
    n = g1.n
    if n == 0:
        return True
    # place g1 vertices in descending-degree order; candidates must match
    # degree and adjacency to everything already placed
    order = sorted(range(n), key=lambda v: (-g1.degree(v), v))
    deg2 = [g2.degree(v) for v in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def place(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        dv = g1.degree(v)
        for w in range(n):
            if used[w] or deg2[w] != dv:
                continue
            ok = True
            for j in range(k):
                u = order[j]
                if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if place(k + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return place(0)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex i is g's vertex perm[i]."""
    n = g.n
    adj = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and g.has_edge(perm[i], perm[j]):
                adj[i] |= 1 << j
    return Graph(n, tuple(adj))


def canonical_form(g: Graph) -> str:
    """graph6 string of the lexicographically minimal labeling.

    Equal canonical forms characterize isomorphism.  Cost grows with the
    automorphism group; capped at order 12 (enumeration scale).
    """
    if g.n > MAX_CANON_ORDER:
        raise GraphError(f"canonical_form supports order <= {MAX_CANON_ORDER}, got {g.n}")
    if g.n <= 1:
        return to_graph6(g)
    perm = np.zeros(g.n, dtype=np.int64)
    canon_search(g.masks(), g.n, 0, perm)
    return to_graph6(relabel(g, [int(p) for p in perm]))


def is_canonical(g: Graph) -> bool:
    """True iff g is the minimal labeling of its isomorphism class."""
    if g.n <= 1:
        return True
    dummy = np.zeros(1, dtype=np.int64)
    return bool(canon_search(g.masks(), g.n, 1, dummy))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices (2^C(n,2) of them); test scale."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield build(n, [pairs[i] for i in range(len(pairs)) if (code >> i) & 1])
