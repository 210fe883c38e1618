"""Isomorphism-free exhaustive generation, G(n,p) sampling, and
counterexample search over the built-in classes.

Generation is by orderly augmentation: every canonical graph on m-1
vertices is extended by a new last vertex with every possible
neighborhood, and a child survives iff it is its own canonical
representative (see ``_kernels.canonical_child_masks``).  Because
deleting the last vertex of a canonical graph leaves a canonical graph,
each isomorphism class appears exactly once.  Class pruning cuts a
subtree as soon as its root violates the class, which is sound because
the classes are closed under induced subgraphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from . import _kernels
from .graph import Graph, GraphError, from_masks, to_graph6
from .invariants import BudgetExhaustedError
from .patterns import ClassSpec, is_in_class
from .reed import ReedReport, check_reed

MAX_ENUM_ORDER = 9

# Isomorphism-class counts for n = 1..9, used as a cross-check by the
# test suite (re-derived there for n <= 6 by labeled-graph dedup).
KNOWN_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346, 274668)


def _augment(parents: list[np.ndarray], m: int, prune: Optional[ClassSpec]) -> list[np.ndarray]:
    """Canonical m-vertex extensions of canonical (m-1)-vertex parents."""
    out = []
    nmasks = 1 << (m - 1)
    flags = np.zeros(nmasks, dtype=np.uint8)
    for parent in parents:
        _kernels.canonical_child_masks(parent, m, flags)
        for mask in np.nonzero(flags)[0]:
            child = np.zeros(m, dtype=np.uint64)
            child[: m - 1] = parent
            mm = int(mask)
            for v in range(m - 1):
                if (mm >> v) & 1:
                    child[v] |= np.uint64(1) << np.uint64(m - 1)
            child[m - 1] = np.uint64(mm)
            if prune is not None and not is_in_class(from_masks(m, child), prune):
                continue
            out.append(child)
    return out


def _levels(n_max: int, prune: Optional[ClassSpec]) -> Iterator[tuple[int, list[np.ndarray]]]:
    """Yield (order, canonical members) for every order 1..n_max."""
    if n_max < 1:
        return
    level = [np.zeros(1, dtype=np.uint64)]
    yield 1, level
    for m in range(2, n_max + 1):
        level = _augment(level, m, prune)
        yield m, level


def _check_range(n: int) -> None:
    if n > MAX_ENUM_ORDER:
        raise GraphError(
            f"exhaustive enumeration supports order <= {MAX_ENUM_ORDER}, got {n}"
        )
    if n < 1:
        raise GraphError("enumeration order must be >= 1")


def enumerate_graphs(n: int, prune: Optional[ClassSpec] = None) -> Iterator[Graph]:
    """One representative per isomorphism class of order n, in sorted
    canonical-graph6 order; with ``prune``, class members only."""
    _check_range(n)
    for order, level in _levels(n, prune):
        if order == n:
            graphs = [from_masks(n, masks) for masks in level]
            graphs.sort(key=to_graph6)
            yield from graphs


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n,p) with a deterministic seeded generator: identical
    (n, p, seed) always gives the identical graph."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    if not 0 <= n <= 64:
        raise GraphError(f"order {n} outside supported range 0..64")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    from .graph import build

    return build(n, edges)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a counterexample search over one class."""

    class_name: str
    n_max: int
    graphs_checked: int
    counterexample: Optional[tuple[str, ReedReport]] = None
    budget_failure: Optional[str] = None
    checked_per_order: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "class": self.class_name,
            "n_max": self.n_max,
            "graphs_checked": self.graphs_checked,
            "checked_per_order": list(self.checked_per_order),
            "counterexample": (
                None
                if self.counterexample is None
                else {"graph6": self.counterexample[0], "report": self.counterexample[1].to_json()}
            ),
            "budget_failure": self.budget_failure,
        }


def counterexample_search(c: ClassSpec, n_max: int, budget: Optional[int] = None) -> SearchResult:
    """Check the bound on every class member of order <= n_max.

    Stops at the first violation.  A solver budget failure aborts the
    search with the offending graph recorded (a skipped graph would
    invalidate the universal claim), flagged via ``budget_failure``.
    """
    _check_range(n_max)
    checked = 0
    per_order = []
    for order, level in _levels(n_max, c):
        graphs = [from_masks(order, masks) for masks in level]
        graphs.sort(key=to_graph6)
        per_order.append(len(graphs))
        for g in graphs:
            try:
                report = check_reed(g, budget)
            except BudgetExhaustedError:
                return SearchResult(
                    class_name=c.name,
                    n_max=n_max,
                    graphs_checked=checked,
                    budget_failure=to_graph6(g),
                    checked_per_order=tuple(per_order),
                )
            checked += 1
            if not report.holds:
                return SearchResult(
                    class_name=c.name,
                    n_max=n_max,
                    graphs_checked=checked,
                    counterexample=(report.graph6, report),
                    checked_per_order=tuple(per_order),
                )
    return SearchResult(
        class_name=c.name,
        n_max=n_max,
        graphs_checked=checked,
        checked_per_order=tuple(per_order),
    )


__all__ = [
    "MAX_ENUM_ORDER",
    "KNOWN_COUNTS",
    "enumerate_graphs",
    "sample_gnp",
    "SearchResult",
    "counterexample_search",
]
