"""Shared graph builders and the independent oracles the tests trust."""

from itertools import combinations

from strongdim import (
    GenerationFailed,
    Graph,
    apsp,
    gen_random_connected,
    is_strong_resolving_set,
)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(t: int) -> Graph:
    """Star with center 0 and t leaves."""
    return Graph.from_edges(t + 1, [(0, i) for i in range(1, t + 1)])


def exhaustive_min_cover(g: Graph) -> set[int]:
    """Reference vertex-cover optimum by raw subset enumeration."""
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            chosen = set(combo)
            if all(u in chosen or v in chosen for u, v in g.edges):
                return chosen
    raise AssertionError("the full node set is always a cover")


def naive_sdim(g: Graph) -> tuple[int, ...]:
    """Reference minimum strong resolving set by raw subset enumeration."""
    dm = apsp(g)
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            if is_strong_resolving_set(g, combo, dm).valid:
                return combo
    raise AssertionError("the full node set always resolves")


def shortest_path_node_sets(g: Graph, a: int, b: int) -> list[frozenset[int]]:
    """Node sets of every shortest a-b path, by DFS over the BFS layering."""
    dm = apsp(g)
    paths = []

    def extend(prefix: list[int]) -> None:
        node = prefix[-1]
        if node == b:
            paths.append(frozenset(prefix))
            return
        for w in g.adjacency[node]:
            if dm.d[a][w] == dm.d[a][node] + 1 and dm.d[w][b] == dm.d[node][b] - 1:
                extend(prefix + [w])

    extend([a])
    return paths


def connected_corpus(n_values, p_values, seeds) -> list[Graph]:
    """Deterministic corpus of random connected graphs; failed draws skipped."""
    corpus = []
    for n in n_values:
        for p in p_values:
            for seed in seeds:
                try:
                    corpus.append(gen_random_connected(n, p, seed))
                except GenerationFailed:
                    continue
    return corpus
