"""Shared corpus and independent brute-force oracles.

The oracles deliberately avoid the library's fast paths: subgraph-freeness
is decided by scanning vertex subsets against the adjacency relation, not
via edge-index hyperedge masks, so profile comparisons are a genuine
cross-check.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from trifree import (
    Graph,
    build_graph,
    complete_bipartite,
    complete_graph,
    mantel_plus_one,
    two_extra_edge_candidates,
)


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------


def brute_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles by scanning every vertex triple."""
    return [
        (a, b, c)
        for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    ]


def brute_tf_profile(g: Graph, order: int = 3) -> tuple[int, ...]:
    """K_order-free edge-subset counts by size, by full 2^m enumeration.

    Works over vertex subsets and pair sets, independent of the library's
    edge indexing, hyperedge masks and covered-edge factoring.
    """
    m = g.m
    pair_sets = [
        frozenset((min(u, v), max(u, v)) for u, v in combinations(members, 2))
        for members in combinations(range(g.n), order)
    ]
    counts = [0] * (m + 1)
    for bits in range(1 << m):
        kept = frozenset(g.edges[i] for i in range(m) if (bits >> i) & 1)
        if not any(ps <= kept for ps in pair_sets):
            counts[len(kept)] += 1
    return tuple(counts)


def brute_independence_profile(vertex_count: int, hyperedges) -> tuple[int, ...]:
    counts = [0] * (vertex_count + 1)
    hsets = [set(e) for e in hyperedges]
    for bits in range(1 << vertex_count):
        s = {v for v in range(vertex_count) if (bits >> v) & 1}
        if not any(e <= s for e in hsets):
            counts[len(s)] += 1
    return tuple(counts)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exhaustive permutation check."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    target = set(g2.edges)
    for perm in permutations(range(g1.n)):
        mapped = {
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g1.edges
        }
        if mapped == target:
            return True
    return False


def automorphism_count(g: Graph) -> int:
    edges = set(g.edges)
    total = 0
    for perm in permutations(range(g.n)):
        if all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in edges for u, v in edges
        ):
            total += 1
    return total


def random_graph(n: int, m: int, rng: random.Random) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return build_graph(n, rng.sample(pairs, m))


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return build_graph(10, edges)


def wheel5() -> Graph:
    edges = [(0, k) for k in range(1, 6)]
    edges += [(k, k % 5 + 1) for k in range(1, 6)]
    return build_graph(6, edges)


def octahedron() -> Graph:
    skip = {(0, 1), (2, 3), (4, 5)}
    return build_graph(
        6,
        [(u, v) for u in range(6) for v in range(u + 1, 6) if (u, v) not in skip],
    )


def _build_corpus() -> list[tuple[str, Graph]]:
    star, split, path = two_extra_edge_candidates()
    rng = random.Random(1105)
    corpus = [
        ("K2", complete_graph(2)),
        ("K3", complete_graph(3)),
        ("K4", complete_graph(4)),
        ("K5", complete_graph(5)),
        ("K33", complete_bipartite(3, 3)),
        ("K24", complete_bipartite(2, 4)),
        ("K15", complete_bipartite(1, 5)),
        ("edgeless4", build_graph(4, [])),
        ("P4", build_graph(4, [(0, 1), (1, 2), (2, 3)])),
        ("C5", build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])),
        ("wheel5", wheel5()),
        ("octahedron", octahedron()),
        ("petersen", petersen()),
        ("mantel4", mantel_plus_one(4)),
        ("mantel6", mantel_plus_one(6)),
        ("mantel7", mantel_plus_one(7)),
        ("star6", star),
        ("split6", split),
        ("path6", path),
        ("random7a", random_graph(7, 12, rng)),
        ("random7b", random_graph(7, 12, rng)),
        ("random6", random_graph(6, 9, rng)),
    ]
    return corpus


_CORPUS = _build_corpus()


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, Graph]]:
    return _CORPUS


@pytest.fixture(scope="session")
def small_corpus() -> list[tuple[str, Graph]]:
    """Corpus members small enough for full 2^m enumeration in a tight loop."""
    return [(name, g) for name, g in _CORPUS if g.m <= 13]
