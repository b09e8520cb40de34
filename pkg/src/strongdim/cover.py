"""Minimum vertex cover: validity checking, a matching-based 2-approximation
with a certified lower bound, and an exact branch-and-bound solver.

The greedy maximal matching scans edges in sorted ``(u, v)`` order, so every
solution and lower bound is reproducible across platforms. The exact solver
is deliberately simple (isolated-node and degree-1 reductions, branch on a
maximum-degree node); its fixed search trace is part of the test contract.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph

__all__ = [
    "CoverCertificate",
    "CoverSolution",
    "exact_min_cover",
    "is_vertex_cover",
    "matching_cover_2approx",
    "matching_lower_bound",
]


@dataclass(frozen=True)
class CoverCertificate:
    valid: bool
    witness_edge: tuple[int, int] | None = None


@dataclass(frozen=True)
class CoverSolution:
    """A vertex cover plus the lower bound that certifies its quality.

    ``lower_bound <= optimum <= len(nodes)`` always holds; when ``exact`` is
    true the three coincide.
    """

    nodes: tuple[int, ...]
    lower_bound: int
    exact: bool

    @property
    def size(self) -> int:
        return len(self.nodes)


def is_vertex_cover(g: Graph, s: Iterable[int]) -> CoverCertificate:
    """Check that every edge of ``g`` has an endpoint in ``s``.

    On failure the witness is the first uncovered edge in sorted order.
    """
    members = set(s)
    for x in members:
        if not 0 <= x < g.n:
            raise ValueError(f"node {x} out of range for {g.n} nodes")
    for u, v in g.edges:
        if u not in members and v not in members:
            return CoverCertificate(valid=False, witness_edge=(u, v))
    return CoverCertificate(valid=True)


def _greedy_matching(edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    matched: set[int] = set()
    matching: list[tuple[int, int]] = []
    for u, v in edges:
        if u not in matched and v not in matched:
            matched.add(u)
            matched.add(v)
            matching.append((u, v))
    return matching


def matching_lower_bound(g: Graph) -> int:
    """Size of the greedy maximal matching; never exceeds the optimal cover."""
    return len(_greedy_matching(g.edges))


def matching_cover_2approx(g: Graph) -> CoverSolution:
    """Take both endpoints of a greedy maximal matching.

    The matching size is a lower bound on any cover, so the result is within
    a factor 2 of optimal; it is exact only in the trivial edgeless case.
    """
    matching = _greedy_matching(g.edges)
    nodes = tuple(sorted({x for edge in matching for x in edge}))
    return CoverSolution(
        nodes=nodes, lower_bound=len(matching), exact=not matching
    )


def exact_min_cover(g: Graph, budget_ms: int | None = None) -> CoverSolution:
    """Optimal vertex cover by branch and bound.

    Reductions: isolated nodes are dropped; for the smallest-id degree-1
    node, its neighbor joins the cover. Branching picks a maximum-degree
    node ``v`` (smallest id on ties) and explores ``v`` in the cover before
    ``Nbr(v)`` in the cover, pruning with the greedy matching bound. The
    trace is deterministic, so the returned witness is reproducible.

    With ``budget_ms`` set, a timed-out search returns the best cover found
    so far flagged ``exact=False`` (falling back to the 2-approximation if
    nothing better was completed), with the root matching bound as the
    certified lower bound.
    """
    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
    adjacency = {u: set(g.adjacency[u]) for u in range(g.n) if g.adjacency[u]}
    state: dict = {"best": None, "timed_out": False}
    _branch(adjacency, [], state, deadline)
    if state["best"] is None or state["timed_out"]:
        fallback = matching_cover_2approx(g)
        best = state["best"]
        if best is None or fallback.size < len(best):
            best = list(fallback.nodes)
        return CoverSolution(
            nodes=tuple(best),
            lower_bound=matching_lower_bound(g),
            exact=False,
        )
    best = state["best"]
    return CoverSolution(nodes=tuple(best), lower_bound=len(best), exact=True)


def _remove_node(adjacency: dict[int, set[int]], v: int) -> None:
    for w in adjacency.pop(v, ()):
        adjacency[w].discard(v)


def _reduce(adjacency: dict[int, set[int]], chosen: list[int]) -> None:
    while True:
        for u in [u for u, ns in adjacency.items() if not ns]:
            del adjacency[u]
        degree_one = sorted(u for u, ns in adjacency.items() if len(ns) == 1)
        if not degree_one:
            return
        u = degree_one[0]
        neighbor = next(iter(adjacency[u]))
        chosen.append(neighbor)
        _remove_node(adjacency, neighbor)


def _remaining_matching_bound(adjacency: dict[int, set[int]]) -> int:
    edges = sorted(
        (u, v) for u, ns in adjacency.items() for v in ns if u < v
    )
    return len(_greedy_matching(edges))


def _branch(
    adjacency: dict[int, set[int]],
    chosen: list[int],
    state: dict,
    deadline: float | None,
) -> None:
    if deadline is not None and time.monotonic() > deadline:
        state["timed_out"] = True
        return
    adjacency = {u: set(ns) for u, ns in adjacency.items()}
    chosen = list(chosen)
    _reduce(adjacency, chosen)
    if not adjacency:
        if state["best"] is None or len(chosen) < len(state["best"]):
            state["best"] = sorted(chosen)
        return
    best = state["best"]
    if best is not None and len(chosen) + _remaining_matching_bound(adjacency) >= len(best):
        return
    v = max(adjacency, key=lambda u: (len(adjacency[u]), -u))
    in_cover = {u: set(ns) for u, ns in adjacency.items()}
    _remove_node(in_cover, v)
    _branch(in_cover, chosen + [v], state, deadline)
    neighbors = sorted(adjacency[v])
    around = {u: set(ns) for u, ns in adjacency.items()}
    for w in neighbors:
        _remove_node(around, w)
    _branch(around, chosen + neighbors, state, deadline)
