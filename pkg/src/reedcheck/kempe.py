"""Kempe-chain recoloring engine.

Mechanizes the recoloring moves used in minimal-counterexample
arguments: the set R of neighbors of u holding a color unique in N(u),
bi-color components and their swaps, extension of a coloring of G - u
to all of G by chained swaps, and the saturation/counting audit
(deg u >= r + 2(k - r), r >= omega + 1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, VertexSet, bits, induced_subgraph, max_degree
from .invariants import Coloring, clique_number, is_proper

# One or two chained swaps cover the recoloring arguments at desk
# scale; below this order a failed bounded search falls back to the
# exhaustive one.
DEFAULT_SWAP_DEPTH = 2
EXHAUSTIVE_ORDER_LIMIT = 8


@dataclass(frozen=True)
class ExtensionProblem:
    """Extend a proper k-coloring of g - u to all of g.

    ``base`` colors the vertices of g - u in ascending original label
    (vertex w of g sits at index w, or w - 1 when w > u).
    """

    g: Graph
    u: int
    base: Coloring
    k: int

    def __post_init__(self) -> None:
        if not 0 <= self.u < self.g.n:
            raise ValueError(f"vertex {self.u} out of range for order {self.g.n}")
        if len(self.base.assign) != self.g.n - 1:
            raise ValueError("base coloring must cover exactly the vertices of g - u")
        if self.k != self.base.palette_size:
            raise ValueError("palette size mismatch between problem and base coloring")
        rest = [v for v in range(self.g.n) if v != self.u]
        sub = induced_subgraph(self.g, rest)
        if not is_proper(sub, self.base):
            raise ValueError("base coloring is not proper on g - u")

    def rest(self) -> list[int]:
        return [v for v in range(self.g.n) if v != self.u]

    def index_of(self, w: int) -> int:
        """Index of g-vertex w (!= u) within the base coloring."""
        return w if w < self.u else w - 1

    def neighbor_colors(self) -> list[int]:
        return [self.base.assign[self.index_of(w)] for w in bits(self.g.adj[self.u])]


@dataclass(frozen=True)
class AuditFacts:
    """Counting audit of an extension problem.

    In a genuine minimal-counterexample configuration N(u) is saturated
    and both inequalities hold; on ordinary inputs ``failed`` names the
    context conditions that break.
    """

    saturated: bool
    deg_u: int
    r: int
    colors_in_n: int
    omega: int
    delta: int
    k: int
    ineq_degree: bool
    ineq_r: bool
    failed: tuple[str, ...]


def unique_color_neighbors(p: ExtensionProblem) -> VertexSet:
    """Neighbors of u whose base color occurs exactly once in N(u)."""
    counts: dict[int, int] = {}
    for w in bits(p.g.adj[p.u]):
        c = p.base.assign[p.index_of(w)]
        counts[c] = counts.get(c, 0) + 1
    members = {
        w
        for w in bits(p.g.adj[p.u])
        if counts[p.base.assign[p.index_of(w)]] == 1
    }
    return VertexSet(frozenset(members))


def bicolor_component(g: Graph, col: Coloring, v: int, i: int, j: int) -> VertexSet:
    """Connected component of v in the subgraph induced by colors i, j."""
    if i == j:
        raise ValueError("bi-color component needs two distinct colors")
    if len(col.assign) != g.n:
        raise ValueError("coloring does not cover the graph")
    if col.assign[v] not in (i, j):
        raise ValueError(f"vertex {v} is colored {col.assign[v]}, not {i} or {j}")
    pair = (i, j)
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for w in bits(g.adj[x]):
            if w not in seen and col.assign[w] in pair:
                seen.add(w)
                queue.append(w)
    return VertexSet(frozenset(seen))


def kempe_swap(g: Graph, col: Coloring, comp: VertexSet, i: int, j: int) -> Coloring:
    """Exchange colors i and j on a full bi-color component.

    Rejects a ``comp`` that is not a maximal i/j component: swapping a
    partial chain can put color i next to color i.
    """
    if len(comp) == 0:
        raise ValueError("empty component")
    anchor = min(comp.members)
    full = bicolor_component(g, col, anchor, i, j)
    if full.members != comp.members:
        raise ValueError("not a maximal bi-color component; swap rejected")
    assign = list(col.assign)
    for v in comp:
        if assign[v] == i:
            assign[v] = j
        elif assign[v] == j:
            assign[v] = i
        else:
            raise ValueError(f"component vertex {v} carries color {assign[v]}, not {i}/{j}")
    swapped = Coloring(col.palette_size, tuple(assign))
    assert is_proper(g, swapped)
    return swapped


def _components_of_pair(
    sub_adj: list[int], state: tuple[int, ...], i: int, j: int
) -> list[list[int]]:
    """Maximal i/j bi-color components of g - u under ``state``."""
    pending = {v for v, c in enumerate(state) if c == i or c == j}
    comps = []
    while pending:
        start = min(pending)
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for w in bits(sub_adj[x]):
                if w in pending and w not in seen:
                    seen.add(w)
                    queue.append(w)
        pending -= seen
        comps.append(sorted(seen))
    return comps


def extend_coloring(
    p: ExtensionProblem,
    max_swaps: Optional[int] = DEFAULT_SWAP_DEPTH,
    exhaustive_order_limit: int = EXHAUSTIVE_ORDER_LIMIT,
) -> Optional[Coloring]:
    """Proper k-coloring of all of g reached by swapping the base.

    Search order: a color absent from N(u) is assigned directly;
    otherwise breadth-first over chained Kempe swaps of the base, color
    pairs in ascending order and components meeting fewer N(u) vertices
    first.  ``max_swaps=None`` removes the depth bound; with the default
    bound, a failed search retries exhaustively when g has at most
    ``exhaustive_order_limit`` vertices.  Returning None does NOT prove
    chi(g) > k.
    """
    found = _swap_search(p, max_swaps)
    if found is None and max_swaps is not None and p.g.n <= exhaustive_order_limit:
        found = _swap_search(p, None)
    return found


def _swap_search(p: ExtensionProblem, max_swaps: Optional[int]) -> Optional[Coloring]:
    g, u, k = p.g, p.u, p.k
    rest = p.rest()
    sub_adj = []
    for v in rest:
        m = 0
        for w in bits(g.adj[v]):
            if w != u:
                m |= 1 << p.index_of(w)
        sub_adj.append(m)
    nbr_idx = [p.index_of(w) for w in bits(g.adj[u])]

    def freed_color(state: tuple[int, ...]) -> Optional[int]:
        used = {state[i] for i in nbr_idx}
        for c in range(1, k + 1):
            if c not in used:
                return c
        return None

    def finish(state: tuple[int, ...], c: int) -> Coloring:
        assign = [0] * g.n
        for idx, v in enumerate(rest):
            assign[v] = state[idx]
        assign[u] = c
        coloring = Coloring(k, tuple(assign))
        assert is_proper(g, coloring)
        return coloring

    start = tuple(p.base.assign)
    c = freed_color(start)
    if c is not None:
        return finish(start, c)
    if max_swaps is not None and max_swaps <= 0:
        return None
    visited = {start}
    queue = deque([(start, 0)])
    while queue:
        state, depth = queue.popleft()
        if max_swaps is not None and depth >= max_swaps:
            continue
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                comps = _components_of_pair(sub_adj, state, i, j)
                comps.sort(key=lambda comp: (sum(1 for v in comp if v in nbr_idx), comp[0]))
                for comp in comps:
                    nxt = list(state)
                    for v in comp:
                        nxt[v] = j if state[v] == i else i
                    nxt_t = tuple(nxt)
                    if nxt_t in visited:
                        continue
                    visited.add(nxt_t)
                    c = freed_color(nxt_t)
                    if c is not None:
                        return finish(nxt_t, c)
                    queue.append((nxt_t, depth + 1))
    return None


def audit_facts(p: ExtensionProblem) -> AuditFacts:
    """Evaluate the saturation counting facts for an extension problem.

    ``ineq_degree`` uses the problem's own palette size k in place of
    the bound value: the two coincide exactly when k equals the bound,
    and the counting statement stays true as written for every
    saturated input.
    """
    neighbor_colors = p.neighbor_colors()
    deg_u = len(neighbor_colors)
    counts: dict[int, int] = {}
    for c in neighbor_colors:
        counts[c] = counts.get(c, 0) + 1
    colors_in_n = len(counts)
    r = sum(1 for c in counts.values() if c == 1)
    saturated = colors_in_n == p.k
    omega = clique_number(p.g)
    delta = max_degree(p.g)
    ineq_degree = deg_u >= r + 2 * (p.k - r)
    ineq_r = r >= omega + 1
    failed = []
    if not saturated:
        failed.append(f"not saturated: {colors_in_n} of {p.k} colors in N(u)")
    if not ineq_degree:
        failed.append(f"ineq_degree fails: deg_u={deg_u} < r + 2(k - r) = {r + 2 * (p.k - r)}")
    if not ineq_r:
        failed.append(f"ineq_r fails: r={r} < omega + 1 = {omega + 1}")
    facts = AuditFacts(
        saturated=saturated,
        deg_u=deg_u,
        r=r,
        colors_in_n=colors_in_n,
        omega=omega,
        delta=delta,
        k=p.k,
        ineq_degree=ineq_degree,
        ineq_r=ineq_r,
        failed=tuple(failed),
    )
    assert facts.r <= facts.colors_in_n <= facts.k
    assert facts.r <= facts.deg_u
    return facts


def _degeneracy_insertion_order(g: Graph) -> list[int]:
    """Reverse of repeated minimum-degree removal (ties: lowest label)."""
    remaining = set(range(g.n))
    removal = []
    while remaining:
        v = min(remaining, key=lambda x: (sum(1 for w in bits(g.adj[x]) if w in remaining), x))
        removal.append(v)
        remaining.remove(v)
    removal.reverse()
    return removal


def reed_color(g: Graph) -> tuple[Coloring, int]:
    """Heuristic coloring by degeneracy-order insertion with swap rescue.

    The palette grows only when extension fails, so it never exceeds
    max degree + 1; it is not guaranteed to reach the chromatic number.
    """
    n = g.n
    if n == 0:
        return Coloring(0, ()), 0
    order = _degeneracy_insertion_order(g)
    colors: dict[int, int] = {}
    k = 0
    inserted: list[int] = []
    for u in order:
        if not inserted:
            k = 1
            colors[u] = 1
            inserted.append(u)
            continue
        taken = {colors[w] for w in bits(g.adj[u]) if w in colors}
        free = next((c for c in range(1, k + 1) if c not in taken), None)
        if free is not None:
            colors[u] = free
            inserted.append(u)
            continue
        sub_vertices = sorted(inserted + [u])
        sub = induced_subgraph(g, sub_vertices)
        u_idx = sub_vertices.index(u)
        base = Coloring(k, tuple(colors[w] for w in sub_vertices if w != u))
        problem = ExtensionProblem(sub, u_idx, base, k)
        extended = extend_coloring(problem)
        if extended is not None:
            for idx, w in enumerate(sub_vertices):
                colors[w] = extended.assign[idx]
        else:
            k += 1
            colors[u] = k
        inserted.append(u)
    coloring = Coloring(k, tuple(colors[v] for v in range(n)))
    assert is_proper(g, coloring)
    return coloring, k


__all__ = [
    "ExtensionProblem",
    "AuditFacts",
    "unique_color_neighbors",
    "bicolor_component",
    "kempe_swap",
    "extend_coloring",
    "audit_facts",
    "reed_color",
    "DEFAULT_SWAP_DEPTH",
    "EXHAUSTIVE_ORDER_LIMIT",
]
