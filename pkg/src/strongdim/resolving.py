"""Strong resolution predicates, the strong resolving graph, and a
brute-force minimum oracle.

A node ``x`` strongly resolves a pair ``{u, v}`` when one of the two lies on
a shortest path between ``x`` and the other; a set is strongly resolving
when every distinct pair is resolved by some member. The strong resolving
graph connects exactly the mutually maximally distant (MMD) pairs: pairs
whose shortest path is not properly contained in any longer shortest path.
Vertex covers of that graph are precisely the strong resolving sets of the
source graph, which is what the solvers in :mod:`strongdim.reports` exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import DistanceMatrix, Graph, apsp

__all__ = [
    "NodeSet",
    "OracleLimitError",
    "ResolutionCertificate",
    "StrongResolvingGraph",
    "VerificationFailure",
    "brute_force_sdim",
    "is_mmd_pair",
    "is_strong_resolving_set",
    "strong_resolving_graph",
    "strongly_resolves",
]


class OracleLimitError(ValueError):
    """Instance exceeds the brute-force oracle's node limit."""


class VerificationFailure(RuntimeError):
    """A certified claim failed independent re-verification.

    Covers of the strong resolving graph are strong resolving sets by
    construction; seeing this error means the library itself is broken,
    so callers must not swallow it.
    """


@dataclass(frozen=True)
class StrongResolvingGraph:
    """Graph on the source's nodes whose edges are the MMD pairs."""

    base_n: int
    graph: Graph


@dataclass(frozen=True)
class ResolutionCertificate:
    """Outcome of a strong-resolving-set check.

    When ``valid`` is false, ``witness_failure`` is the lexicographically
    first pair no candidate member resolves; it re-verifies independently
    via :func:`strongly_resolves`.
    """

    valid: bool
    witness_failure: tuple[int, int] | None = None


@dataclass(frozen=True)
class NodeSet:
    """A node set with its role and the certificate it was validated with."""

    nodes: tuple[int, ...]
    role: str  # "strong-resolving-set" | "vertex-cover"
    certificate: ResolutionCertificate | None = None

    @property
    def size(self) -> int:
        return len(self.nodes)


def is_mmd_pair(dm: DistanceMatrix, g: Graph, u: int, v: int) -> bool:
    """Whether ``u`` and ``v`` are mutually maximally distant.

    True when no neighbor of either endpoint is farther from the other
    endpoint than the endpoints are from each other.
    """
    if u == v:
        raise ValueError("a pair must consist of two distinct nodes")
    duv = dm.d[u][v]
    row_v = dm.d[v]
    if any(row_v[x] > duv for x in g.adjacency[u]):
        return False
    row_u = dm.d[u]
    return all(row_u[y] <= duv for y in g.adjacency[v])


def strong_resolving_graph(g: Graph, dm: DistanceMatrix | None = None) -> StrongResolvingGraph:
    """Collect every MMD pair of a connected graph into a new edge set."""
    if g.n < 2:
        raise ValueError("needs at least 2 nodes")
    if dm is None:
        dm = apsp(g)
    edges = [
        (u, v) for u, v in combinations(range(g.n), 2) if is_mmd_pair(dm, g, u, v)
    ]
    return StrongResolvingGraph(g.n, Graph.from_edges(g.n, edges))


def strongly_resolves(dm: DistanceMatrix, x: int, u: int, v: int) -> bool:
    """Whether ``x`` strongly resolves the pair ``{u, v}``.

    Exact integer test: ``v`` lies on a shortest x-u path or ``u`` lies on a
    shortest x-v path. ``x`` equal to ``u`` or ``v`` resolves the pair
    degenerately (an endpoint lies on every shortest path it starts).
    """
    if u == v:
        raise ValueError("a pair must consist of two distinct nodes")
    row_x = dm.d[x]
    duv = dm.d[u][v]
    return row_x[u] == row_x[v] + duv or row_x[v] == row_x[u] + duv


def is_strong_resolving_set(
    g: Graph, s: Iterable[int], dm: DistanceMatrix | None = None
) -> ResolutionCertificate:
    """Check whether ``s`` strongly resolves every distinct pair of nodes."""
    members = sorted(set(s))
    for x in members:
        if not 0 <= x < g.n:
            raise ValueError(f"node {x} out of range for {g.n} nodes")
    if dm is None:
        dm = apsp(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not any(strongly_resolves(dm, x, u, v) for x in members):
                return ResolutionCertificate(valid=False, witness_failure=(u, v))
    return ResolutionCertificate(valid=True)


def brute_force_sdim(g: Graph, node_limit: int = 20) -> NodeSet:
    """Smallest strong resolving set by exhaustive subset enumeration.

    Subsets are scanned by increasing size and, within a size, in
    lexicographic order of the sorted node tuple, so the returned witness is
    the lexicographically first minimum. This is the ground-truth oracle the
    test suite measures everything else against; ``node_limit`` (override
    explicitly for larger instances) keeps its exponential cost in check.
    """
    if g.n > node_limit:
        raise OracleLimitError(
            f"{g.n} nodes exceeds the oracle limit of {node_limit}"
        )
    if g.n <= 1:
        return NodeSet((), "strong-resolving-set", ResolutionCertificate(valid=True))
    dm = apsp(g)
    pairs = list(combinations(range(g.n), 2))
    full = (1 << len(pairs)) - 1
    masks = []
    for x in range(g.n):
        mask = 0
        for idx, (u, v) in enumerate(pairs):
            if strongly_resolves(dm, x, u, v):
                mask |= 1 << idx
        masks.append(mask)
    # suffix[i] = union of coverage available from nodes i..n-1; lets the
    # scan skip subtrees that provably cannot complete, without changing
    # which subset is found first.
    suffix = [0] * (g.n + 1)
    for i in range(g.n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]
    for size in range(1, g.n + 1):
        witness = _first_covering_subset(masks, suffix, full, size)
        if witness is not None:
            return NodeSet(
                tuple(witness),
                "strong-resolving-set",
                ResolutionCertificate(valid=True),
            )
    raise AssertionError("the full node set resolves every pair")


def _first_covering_subset(
    masks: list[int], suffix: list[int], full: int, size: int
) -> list[int] | None:
    """First ``size``-subset (lexicographic order) whose masks cover ``full``."""
    n = len(masks)
    chosen: list[int] = []

    def scan(start: int, acc: int, remaining: int) -> bool:
        if remaining == 0:
            return acc == full
        for i in range(start, n - remaining + 1):
            if acc | suffix[i] != full:
                # suffix unions only shrink as i grows; nothing later works.
                return False
            chosen.append(i)
            if scan(i + 1, acc | masks[i], remaining - 1):
                return True
            chosen.pop()
        return False

    return list(chosen) if scan(0, 0, size) else None
