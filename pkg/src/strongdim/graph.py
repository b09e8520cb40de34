"""Immutable simple undirected graphs: construction, file formats, distances,
and the structural predicates the rest of the library is built on.

Nodes are dense integer identifiers ``0..n-1``. External formats that use
1-based ids (DIMACS) are shifted on ingest. Graphs and distance matrices are
frozen after construction and safe to share across threads.
"""

from __future__ import annotations

import random
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

__all__ = [
    "DisconnectedGraphError",
    "DistanceMatrix",
    "GenerationFailed",
    "Graph",
    "GraphParseError",
    "GraphProperties",
    "TwinReport",
    "apsp",
    "complement",
    "diameter",
    "find_twins",
    "gen_random_connected",
    "graph_properties",
    "parse_graph",
    "serialize_graph",
]


class GraphParseError(ValueError):
    """Malformed graph input; ``line`` is the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DisconnectedGraphError(ValueError):
    """Raised by operations that are only defined on connected graphs."""


class GenerationFailed(RuntimeError):
    """Random generation exhausted its retry bound without a connected sample."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes ``0..n-1``.

    ``edges`` is the canonical edge list: sorted tuples ``(u, v)`` with
    ``u < v``, no duplicates, no self-loops. ``adjacency[u]`` is the
    ascending tuple of neighbors of ``u`` and is derived from ``edges``.
    Use :meth:`from_edges` rather than the raw constructor.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    _pair_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_pair_set", frozenset(self.edges))

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an iterable of node pairs.

        Pairs may appear in either orientation and repeatedly; duplicates are
        dropped. Self-loops and out-of-range endpoints are rejected.
        """
        if n < 0:
            raise ValueError("node count must be non-negative")
        canonical: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} nodes")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            canonical.add((u, v) if u < v else (v, u))
        edge_tuple = tuple(sorted(canonical))
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_tuple:
            neighbors[u].append(v)
            neighbors[v].append(u)
        adjacency = tuple(tuple(sorted(ns)) for ns in neighbors)
        return Graph(n, edge_tuple, adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._pair_set


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph.

    ``d[u][v]`` is the number of edges on a shortest path; every entry is
    finite, ``d[u][u] == 0``, and the matrix is symmetric.
    """

    n: int
    d: tuple[tuple[int, ...], ...]

    def dist(self, u: int, v: int) -> int:
        return self.d[u][v]


@dataclass(frozen=True)
class GraphProperties:
    connected: bool
    bipartite: bool
    n: int
    m: int


@dataclass(frozen=True)
class TwinReport:
    """Partition of the nodes by open neighborhood.

    ``classes`` groups nodes with identical neighbor sets (each class sorted,
    classes ordered by smallest member). ``twin_nodes`` lists, in ascending
    order, every node whose class has size at least two; ``kappa`` counts
    them. ``partners`` pairs each twin node with one other member of its
    class (the smallest).
    """

    classes: tuple[tuple[int, ...], ...]
    twin_nodes: tuple[int, ...]
    kappa: int
    partners: tuple[tuple[int, int], ...]


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    """Parse a graph from ``text`` in ``edgelist`` or ``dimacs`` format.

    Duplicate edges are silently deduplicated; self-loops are rejected with
    the offending line number.
    """
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format: {fmt!r}")


def _parse_two_ints(parts: list[str], lineno: int, what: str) -> tuple[int, int]:
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"{what} must be two integers", lineno) from None


def _parse_edgelist(text: str) -> Graph:
    n = m = -1
    header_seen = False
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if not header_seen:
            if len(parts) != 2:
                raise GraphParseError("expected header 'n m'", lineno)
            n, m = _parse_two_ints(parts, lineno, "header")
            if n < 0 or m < 0:
                raise GraphParseError("header counts must be non-negative", lineno)
            header_seen = True
            continue
        if len(parts) != 2:
            raise GraphParseError("expected edge 'u v'", lineno)
        u, v = _parse_two_ints(parts, lineno, "edge")
        if len(edges) == m:
            raise GraphParseError(f"more edge lines than the declared {m}", lineno)
        _check_edge(u, v, n, lineno)
        edges.append((u, v))
    if not header_seen:
        raise GraphParseError("missing header 'n m'")
    if len(edges) != m:
        raise GraphParseError(f"declared {m} edges but found {len(edges)}")
    return Graph.from_edges(n, edges)


def _parse_dimacs(text: str) -> Graph:
    n = m = -1
    header_seen = False
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header_seen:
                raise GraphParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError("expected problem line 'p edge n m'", lineno)
            n, m = _parse_two_ints(parts[2:], lineno, "problem line")
            if n < 0 or m < 0:
                raise GraphParseError("problem line counts must be non-negative", lineno)
            header_seen = True
            continue
        if parts[0] == "e":
            if not header_seen:
                raise GraphParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise GraphParseError("expected edge line 'e u v'", lineno)
            u, v = _parse_two_ints(parts[1:], lineno, "edge")
            if len(edges) == m:
                raise GraphParseError(f"more edge lines than the declared {m}", lineno)
            # DIMACS is 1-based.
            _check_edge(u - 1, v - 1, n, lineno)
            edges.append((u - 1, v - 1))
            continue
        raise GraphParseError(f"unexpected line type {parts[0]!r}", lineno)
    if not header_seen:
        raise GraphParseError("missing problem line 'p edge n m'")
    if len(edges) != m:
        raise GraphParseError(f"declared {m} edges but found {len(edges)}")
    return Graph.from_edges(n, edges)


def _check_edge(u: int, v: int, n: int, lineno: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphParseError(f"node index out of range in edge ({u}, {v})", lineno)
    if u == v:
        raise GraphParseError(f"self-loop at node {u}", lineno)


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    """Serialize ``g`` canonically: edges sorted ascending with ``u < v``.

    ``parse_graph(serialize_graph(g, fmt), fmt)`` is the identity.
    """
    if fmt == "edgelist":
        lines = [f"{g.n} {g.m}"]
        lines += [f"{u} {v}" for u, v in g.edges]
    elif fmt == "dimacs":
        lines = [f"p edge {g.n} {g.m}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    else:
        raise ValueError(f"unknown graph format: {fmt!r}")
    return "\n".join(lines) + "\n"


def graph_properties(g: Graph) -> GraphProperties:
    """Connectivity (BFS from node 0; vacuously true for n <= 1) and
    bipartiteness (2-coloring BFS over every component)."""
    connected = _is_connected(g)
    color = [-1] * g.n
    bipartite = True
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue and bipartite:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    bipartite = False
                    break
        if not bipartite:
            break
    return GraphProperties(connected=connected, bipartite=bipartite, n=g.n, m=g.m)


def _is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                queue.append(w)
    return reached == g.n


def _bfs_row(adjacency: tuple[tuple[int, ...], ...], source: int) -> tuple[int, ...]:
    n = len(adjacency)
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    if any(x < 0 for x in dist):
        unreached = next(i for i, x in enumerate(dist) if x < 0)
        raise DisconnectedGraphError(
            f"node {unreached} unreachable from node {source}"
        )
    return tuple(dist)


def apsp(g: Graph, workers: int | None = None) -> DistanceMatrix:
    """All-pairs shortest-path hop counts via one BFS per source.

    ``workers`` > 1 runs the per-source passes on a thread pool; rows are
    independent, so the result is bit-identical to the sequential order.
    """
    if g.n == 0:
        return DistanceMatrix(0, ())
    if workers is None or workers <= 1:
        rows = tuple(_bfs_row(g.adjacency, s) for s in range(g.n))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(lambda s: _bfs_row(g.adjacency, s), range(g.n)))
    return DistanceMatrix(g.n, rows)


def diameter(dm: DistanceMatrix) -> int:
    """Largest entry of the distance matrix; 0 for n <= 1."""
    if dm.n == 0:
        return 0
    return max(max(row) for row in dm.d)


def complement(g: Graph) -> Graph:
    """Graph on the same nodes whose edges are exactly the non-edges of ``g``."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph.from_edges(g.n, edges)


def find_twins(g: Graph) -> TwinReport:
    """Group nodes by identical open neighborhoods.

    Two distinct nodes with equal neighbor sets are never adjacent (a shared
    edge would put each in the other's neighborhood but not its own).
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for u in range(g.n):
        groups.setdefault(g.adjacency[u], []).append(u)
    classes = tuple(sorted((tuple(members) for members in groups.values())))
    twin_nodes = tuple(
        sorted(u for members in classes if len(members) >= 2 for u in members)
    )
    class_of = {u: members for members in classes for u in members}
    partners = tuple(
        (u, next(v for v in class_of[u] if v != u)) for u in twin_nodes
    )
    return TwinReport(
        classes=classes,
        twin_nodes=twin_nodes,
        kappa=len(twin_nodes),
        partners=partners,
    )


def gen_random_connected(
    n: int, p: float, seed: int, max_retries: int = 1000
) -> Graph:
    """Sample a connected Erdos-Renyi G(n, p) graph, deterministically.

    The generator is the Mersenne Twister behind ``random.Random(seed)``
    (stable across platforms and CPython versions); pairs are drawn in
    row-major order (0,1), (0,2), ..., (n-2,n-1). Disconnected samples are
    redrawn from the same stream, up to ``max_retries`` times.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    for _ in range(max_retries):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = Graph.from_edges(n, edges)
        if _is_connected(g):
            return g
    raise GenerationFailed(
        f"no connected G({n}, {p}) sample after {max_retries} attempts (seed {seed})"
    )
