"""Exact clique number, chromatic number and k-colorability.

All searches are budgeted by node expansions: exceeding the budget
raises ``BudgetExhaustedError`` rather than ever returning a wrong
answer.  The default budget is generous enough that instances of order
<= 12 always complete; REEDCHECK_BUDGET overrides it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .graph import Graph, bits

DEFAULT_NODE_BUDGET = 5_000_000


class BudgetExhaustedError(RuntimeError):
    """An exact solver exceeded its node-expansion cap."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: node budget {budget} exhausted")
        self.budget = budget


def resolve_budget(budget: Optional[int] = None) -> int:
    if budget is not None:
        if budget <= 0:
            raise ValueError("budget must be positive")
        return budget
    env = os.environ.get("REEDCHECK_BUDGET", "").strip()
    if env:
        value = int(env)
        if value <= 0:
            raise ValueError(f"REEDCHECK_BUDGET={env!r} must be positive")
        return value
    return DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class Coloring:
    """Total assignment vertex -> color in 1..palette_size.

    Not every color of the palette need be used.  Properness is checked
    at the points a Coloring is produced for a concrete graph.
    """

    palette_size: int
    assign: tuple[int, ...]

    def __post_init__(self) -> None:
        for v, c in enumerate(self.assign):
            if not 1 <= c <= self.palette_size:
                raise ValueError(
                    f"vertex {v} colored {c}, outside palette 1..{self.palette_size}"
                )

    def colors_used(self) -> int:
        return len(set(self.assign))


def is_proper(g: Graph, coloring: Coloring) -> bool:
    if len(coloring.assign) != g.n:
        return False
    for v in range(g.n):
        for w in bits(g.adj[v] >> (v + 1)):
            if coloring.assign[v] == coloring.assign[w + v + 1]:
                return False
    return True


def clique_number(g: Graph, budget: Optional[int] = None) -> int:
    """Exact maximum-clique size (0 for the empty graph)."""
    b = resolve_budget(budget)
    result = int(_kernels.max_clique(g.masks(), g.n, b))
    if result < 0:
        raise BudgetExhaustedError("clique_number", b)
    return result


def is_k_colorable(g: Graph, k: int, budget: Optional[int] = None) -> Optional[Coloring]:
    """A proper Coloring with palette k when one exists, else None."""
    if k < 0:
        raise ValueError("palette size must be >= 0")
    if g.n == 0:
        return Coloring(k, ())
    if k == 0:
        return None
    b = resolve_budget(budget)
    out = np.zeros(g.n, dtype=np.int64)
    deg = np.array([g.degree(v) for v in range(g.n)], dtype=np.int64)
    status = int(_kernels.k_color(g.masks(), deg, g.n, k, b, out))
    if status < 0:
        raise BudgetExhaustedError(f"is_k_colorable(k={k})", b)
    if status == 0:
        return None
    coloring = Coloring(k, tuple(int(c) for c in out))
    assert is_proper(g, coloring)
    return coloring


def greedy_bound(g: Graph) -> int:
    """Palette size of a saturation-degree greedy coloring.

    Always between the chromatic number and max degree + 1.
    """
    n = g.n
    if n == 0:
        return 0
    colors = [0] * n
    for _ in range(n):
        best_v, best_sat, best_deg = -1, -1, -1
        for v in range(n):
            if colors[v]:
                continue
            sat = len({colors[w] for w in bits(g.adj[v]) if colors[w]})
            d = g.degree(v)
            if sat > best_sat or (sat == best_sat and d > best_deg):
                best_v, best_sat, best_deg = v, sat, d
        taken = {colors[w] for w in bits(g.adj[best_v])}
        c = 1
        while c in taken:
            c += 1
        colors[best_v] = c
    return max(colors)


def chromatic_number(g: Graph, budget: Optional[int] = None) -> int:
    """Exact chromatic number; 0 for the empty graph, 1 if edgeless."""
    if g.n == 0:
        return 0
    lo = clique_number(g, budget)
    hi = greedy_bound(g)
    # k-colorability is monotone in k: walk down from the greedy bound
    # until the first failure.
    k = hi - 1
    while k >= lo:
        if is_k_colorable(g, k, budget) is None:
            return k + 1
        hi = k
        k -= 1
    return hi


def independence_number(g: Graph, budget: Optional[int] = None) -> int:
    """Maximum independent-set size, via the complement's clique number."""
    from .graph import complement

    return clique_number(complement(g), budget)


__all__ = [
    "Coloring",
    "BudgetExhaustedError",
    "DEFAULT_NODE_BUDGET",
    "resolve_budget",
    "is_proper",
    "clique_number",
    "is_k_colorable",
    "greedy_bound",
    "chromatic_number",
    "independence_number",
]
