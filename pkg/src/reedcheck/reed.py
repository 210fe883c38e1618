"""Reed's bound chi <= ceil((Delta + omega + 1) / 2) and per-graph verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, max_degree, to_graph6
from .invariants import chromatic_number, clique_number
from .patterns import membership


def reed_bound(delta: int, omega: int) -> int:
    """ceil((delta + omega + 1) / 2) in exact integer arithmetic.

    Written as (delta + omega + 2) // 2 to keep the ceiling explicit.
    """
    if delta < 0 or omega < 0:
        raise ValueError("delta and omega must be nonnegative")
    return (delta + omega + 2) // 2


@dataclass(frozen=True)
class ReedReport:
    """Per-graph record of the bound check.

    ``vacuous`` marks the empty graph, where the bound degenerates to
    ceil(1/2) = 1 against chi = 0.
    """

    n: int
    graph6: str
    delta: int
    omega: int
    chi: int
    bound: int
    holds: bool
    tight: bool
    classes: tuple[str, ...]
    vacuous: bool = False

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "graph6": self.graph6,
            "delta": self.delta,
            "omega": self.omega,
            "chi": self.chi,
            "bound": self.bound,
            "holds": self.holds,
            "tight": self.tight,
            "classes": list(self.classes),
        }


def classify(g: Graph) -> tuple[str, ...]:
    """Built-in class names containing g."""
    return membership(g)


def check_reed(g: Graph, budget: Optional[int] = None) -> ReedReport:
    """Compute Delta, omega, chi exactly and evaluate the bound.

    Propagates BudgetExhaustedError from the exact solvers.
    """
    delta = max_degree(g)
    omega = clique_number(g, budget)
    chi = chromatic_number(g, budget)
    bound = reed_bound(delta, omega)
    return ReedReport(
        n=g.n,
        graph6=to_graph6(g),
        delta=delta,
        omega=omega,
        chi=chi,
        bound=bound,
        holds=chi <= bound,
        tight=chi == bound,
        classes=classify(g),
        vacuous=g.n == 0,
    )


__all__ = ["reed_bound", "ReedReport", "classify", "check_reed"]
