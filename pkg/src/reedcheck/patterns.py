"""Catalog of small named graphs and induced-subgraph detection.

The four built-in hereditary classes are each defined by forbidding two
catalog patterns as induced subgraphs.  Detection enumerates vertex
subsets of the host with a degree-multiset prefilter, then searches for
an adjacency-preserving bijection; at catalog scale (patterns of order
<= 6, hosts of desk size) this single audited code path beats a zoo of
per-pattern detectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, build, complement, is_isomorphic


@dataclass(frozen=True)
class Pattern:
    """A named forbidden graph of order 2..6."""

    name: str
    graph: Graph

    def __post_init__(self) -> None:
        if not 2 <= self.graph.n <= 6:
            raise ValueError(f"pattern {self.name!r} has order {self.graph.n}, need 2..6")


@dataclass(frozen=True)
class ClassSpec:
    """Hereditary class defined by a set of forbidden induced patterns.

    An empty ``forbidden`` tuple is permitted and denotes the class of
    all graphs (useful for unrestricted searches).
    """

    name: str
    forbidden: tuple[Pattern, ...]


@dataclass(frozen=True)
class Embedding:
    """Witness for induced containment: pattern vertex i sits at map[i]."""

    map: tuple[int, ...]

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def verifies(self, host: Graph, p: Pattern) -> bool:
        k = p.graph.n
        if len(self.map) != k or len(set(self.map)) != k:
            return False
        if any(not 0 <= v < host.n for v in self.map):
            return False
        return all(
            p.graph.has_edge(i, j) == host.has_edge(self.map[i], self.map[j])
            for i in range(k)
            for j in range(i + 1, k)
        )


def _pattern(name: str, n: int, edges: list[tuple[int, int]]) -> Pattern:
    return Pattern(name, build(n, edges))


# Catalog.  House is the 5-cycle 0-1-2-3-4 with chord 1-3; M is an apex
# vertex joined to every House vertex; H is the 9-edge graph on six
# vertices with degree sequence (4,4,4,2,2,2) pinned by the edge list
# below (the reconstruction tests cross-check both H and M against
# independently transcribed adjacency constraints).
_CATALOG: tuple[Pattern, ...] = (
    _pattern("P4", 4, [(0, 1), (1, 2), (2, 3)]),
    _pattern("P4uK1", 5, [(0, 1), (1, 2), (2, 3)]),
    _pattern("2K2", 4, [(0, 1), (2, 3)]),
    _pattern("K2uK2bar", 4, [(0, 1)]),
    _pattern("Chair", 5, [(0, 1), (1, 2), (2, 3), (1, 4)]),
    _pattern("Kite", 5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]),
    _pattern("House", 5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]),
    _pattern("H", 6, [(0, 1), (0, 2), (1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (3, 5), (4, 5)]),
    _pattern(
        "M",
        6,
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3),
         (0, 5), (1, 5), (2, 5), (3, 5), (4, 5)],
    ),
)

_BY_NAME = {p.name: p for p in _CATALOG}


def catalog() -> tuple[Pattern, ...]:
    """All built-in patterns, in registry order."""
    return _CATALOG


def pattern_by_name(name: str) -> Pattern:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown pattern {name!r}; known: {', '.join(_BY_NAME)}") from None


# The four built-in classes, each barring two patterns.
_CLASSES: tuple[ClassSpec, ...] = (
    ClassSpec("class1", (_BY_NAME["P4uK1"], _BY_NAME["Kite"])),
    ClassSpec("class2", (_BY_NAME["Chair"], _BY_NAME["Kite"])),
    ClassSpec("class3", (_BY_NAME["K2uK2bar"], _BY_NAME["H"])),
    ClassSpec("class4", (_BY_NAME["2K2"], _BY_NAME["M"])),
)

_CLASS_ALIASES = {
    "class1": "class1",
    "p4k1-kite": "class1",
    "class2": "class2",
    "chair-kite": "class2",
    "class3": "class3",
    "k2k2bar-h": "class3",
    "class4": "class4",
    "2k2-m": "class4",
}


def class_registry() -> tuple[ClassSpec, ...]:
    return _CLASSES


def class_by_name(name: str) -> ClassSpec:
    """Resolve a class by canonical name or alias (case-insensitive)."""
    key = _CLASS_ALIASES.get(name.strip().lower())
    if key is None:
        known = "class1 (P4K1-Kite), class2 (Chair-Kite), class3 (K2K2bar-H), class4 (2K2-M)"
        raise KeyError(f"unknown class {name!r}; known: {known}")
    for c in _CLASSES:
        if c.name == key:
            return c
    raise AssertionError("registry out of sync")


# -- detection -----------------------------------------------------------------


def _match_on_subset(host: Graph, p: Graph, subset: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Bijection pattern -> subset preserving adjacency and non-adjacency."""
    k = p.n
    sub_deg = {}
    for v in subset:
        sub_deg[v] = sum(1 for w in subset if host.has_edge(v, w))
    pat_deg = [p.degree(i) for i in range(k)]
    mapping = [-1] * k
    used = set()

    def place(i: int) -> bool:
        if i == k:
            return True
        for w in subset:
            if w in used or sub_deg[w] != pat_deg[i]:
                continue
            ok = True
            for j in range(i):
                if p.has_edge(i, j) != host.has_edge(w, mapping[j]):
                    ok = False
                    break
            if ok:
                mapping[i] = w
                used.add(w)
                if place(i + 1):
                    return True
                used.remove(w)
                mapping[i] = -1
        return False

    if place(0):
        return tuple(mapping)
    return None


def find_induced(host: Graph, p: Pattern) -> Optional[Embedding]:
    """Some embedding of p as an induced subgraph of host, else None.

    Subsets whose induced degree multiset cannot match the pattern are
    rejected before any bijection is attempted.
    """
    k = p.graph.n
    if k > host.n:
        return None
    pat_degs = tuple(sorted(p.graph.degree(i) for i in range(k)))
    adj = host.adj
    for subset in itertools.combinations(range(host.n), k):
        smask = 0
        for v in subset:
            smask |= 1 << v
        degs = sorted((adj[v] & smask).bit_count() for v in subset)
        if tuple(degs) != pat_degs:
            continue
        m = _match_on_subset(host, p.graph, subset)
        if m is not None:
            return Embedding(m)
    return None


def contains_induced(host: Graph, p: Pattern) -> bool:
    """True iff some vertex subset of host induces a copy of p."""
    return find_induced(host, p) is not None


def is_in_class(g: Graph, c: ClassSpec) -> bool:
    """True iff g avoids every forbidden pattern of c."""
    return all(not contains_induced(g, p) for p in c.forbidden)


def is_self_complementary(g: Graph) -> bool:
    """True iff g is isomorphic to its own complement (order <= 10 scale)."""
    return is_isomorphic(g, complement(g))


def membership(g: Graph) -> tuple[str, ...]:
    """Names of the built-in classes containing g, in registry order."""
    return tuple(c.name for c in _CLASSES if is_in_class(g, c))


__all__ = [
    "Pattern",
    "ClassSpec",
    "Embedding",
    "catalog",
    "pattern_by_name",
    "class_registry",
    "class_by_name",
    "find_induced",
    "contains_induced",
    "is_in_class",
    "is_self_complementary",
    "membership",
]
