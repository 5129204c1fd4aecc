"""Hypergraphs whose vertices are graph edges and whose hyperedges are cliques.

For a graph G the triangle hypergraph has one vertex per edge of G and one
3-element hyperedge per triangle; the Bernoulli edge-subgraph of G is
triangle-free exactly when the kept edge set is an independent set here.
Two distinct triangles share at most one edge, so triangle hypergraphs are
always linear.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import comb

from .errors import LimitExceededError
from .graphs import Graph, cliques

MAX_COVERED_VERTICES = 30  # exact independence-count limit


@dataclass(frozen=True)
class CliqueHypergraph:
    """Uniform hypergraph on vertices 0..vertex_count-1.

    clique_order is the order k of the source cliques; hyperedges have
    C(k, 2) vertices each (3 for triangles).
    """

    vertex_count: int
    hyperedges: tuple[tuple[int, ...], ...]
    clique_order: int = 3

    def __post_init__(self):
        size = comb(self.clique_order, 2)
        norm = []
        for e in self.hyperedges:
            t = tuple(sorted(e))
            if len(set(t)) != len(t):
                raise ValueError(f"hyperedge {e} has repeated vertices")
            if len(t) != size:
                raise ValueError(
                    f"hyperedge {e} has {len(t)} vertices, expected {size} "
                    f"for clique order {self.clique_order}"
                )
            if t and (t[0] < 0 or t[-1] >= self.vertex_count):
                raise ValueError(f"hyperedge {e} out of range 0..{self.vertex_count - 1}")
            norm.append(t)
        norm.sort()
        object.__setattr__(self, "hyperedges", tuple(norm))

    @property
    def edge_count(self) -> int:
        return len(self.hyperedges)

    def covered_vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.hyperedges for v in e)


@dataclass(frozen=True)
class IndependenceProfile:
    """counts[s] = number of independent vertex subsets of size s."""

    vertex_count: int
    counts: tuple[int, ...] = field(repr=False)


def from_graph(g: Graph, clique_order: int = 3) -> CliqueHypergraph:
    """Hypergraph on the edges of g with one hyperedge per K_k copy."""
    if clique_order < 3:
        raise ValueError("clique order must be at least 3")
    hedges = []
    for members in cliques(g, clique_order):
        idx = tuple(
            sorted(
                g.edge_index(members[i], members[j])
                for i in range(clique_order)
                for j in range(i + 1, clique_order)
            )
        )
        hedges.append(idx)
    return CliqueHypergraph(g.m, tuple(hedges), clique_order)


def is_linear(h: CliqueHypergraph) -> bool:
    """True iff every two hyperedges share at most one vertex."""
    sets = [frozenset(e) for e in h.hyperedges]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if len(sets[i] & sets[j]) > 1:
                return False
    return True


def flower(r: int) -> CliqueHypergraph:
    """r triples through one shared center vertex: {0, 2i+1, 2i+2}.

    The equality case of the linear-hypergraph independence bound, and the
    triangle structure around the single extra edge of the extremal graph.
    """
    if r < 0:
        raise ValueError("edge count must be nonnegative")
    hedges = tuple((0, 2 * i + 1, 2 * i + 2) for i in range(r))
    return CliqueHypergraph(max(2 * r + 1, 1), hedges)


def random_linear_hypergraph(
    vertices: int, r: int, seed: int, max_attempts: int = 10_000
) -> CliqueHypergraph:
    """Seeded random linear 3-uniform hypergraph with exactly r hyperedges.

    Triples are sampled one at a time and rejected when they overlap an
    accepted triple in two or more vertices; raises ValueError when the
    attempt budget runs out (e.g. r too large for the vertex budget).
    """
    if vertices < 3 and r > 0:
        raise ValueError("need at least 3 vertices for a hyperedge")
    rng = random.Random(seed)
    accepted: list[frozenset[int]] = []
    attempts = 0
    while len(accepted) < r:
        if attempts >= max_attempts:
            raise ValueError(
                f"could not place {r} pairwise near-disjoint triples on "
                f"{vertices} vertices after {max_attempts} attempts"
            )
        attempts += 1
        triple = frozenset(rng.sample(range(vertices), 3))
        if triple in accepted:
            continue
        if any(len(triple & prev) > 1 for prev in accepted):
            continue
        accepted.append(triple)
    return CliqueHypergraph(vertices, tuple(tuple(sorted(t)) for t in accepted))


# ---------------------------------------------------------------------------
# exact independence counting
# ---------------------------------------------------------------------------


def _binomial_row(n: int) -> tuple[int, ...]:
    return tuple(comb(n, s) for s in range(n + 1))


def _convolve(a, b) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _pad(profile, length: int) -> tuple[int, ...]:
    return tuple(profile) + (0,) * (length - len(profile))


def _components(hedges: frozenset[tuple[int, ...]]):
    """Partition hyperedges into connected components (shared vertices)."""
    remaining = set(hedges)
    comps = []
    while remaining:
        e = remaining.pop()
        comp = {e}
        verts = set(e)
        grew = True
        while grew:
            grew = False
            for other in list(remaining):
                if verts.intersection(other):
                    remaining.remove(other)
                    comp.add(other)
                    verts.update(other)
                    grew = True
        comps.append(frozenset(comp))
    return comps


def _count_component(hedges: frozenset[tuple[int, ...]], memo: dict) -> tuple[int, ...]:
    """Independent-set counts by size over exactly the vertices covered by
    hedges.  Branches on a highest-degree vertex; vertices freed along the
    way contribute binomial factors."""
    cached = memo.get(hedges)
    if cached is not None:
        return cached

    covered = set()
    degree: dict[int, int] = {}
    for e in hedges:
        for v in e:
            covered.add(v)
            degree[v] = degree.get(v, 0) + 1
    ncov = len(covered)
    pivot = max(degree, key=lambda v: (degree[v], -v))

    # pivot excluded: every hyperedge through it is satisfied
    kept = frozenset(e for e in hedges if pivot not in e)
    sub = _profile_over(kept, memo)
    freed = ncov - 1 - len(set(v for e in kept for v in e))
    excl = _convolve(sub, _binomial_row(freed)) if freed else sub

    # pivot included: hyperedges through it shrink; unit remnants force
    # their last vertex out (excluded vertices satisfy all their hyperedges)
    shrunk: list[frozenset[int]] = []
    dead = False
    for e in hedges:
        s = frozenset(e) - {pivot}
        if not s:
            dead = True
            break
        shrunk.append(s)
    if not dead:
        forced_out: set[int] = set()
        while True:
            units = [e for e in shrunk if len(e) == 1]
            if not units:
                break
            out_vertex = next(iter(units[0]))
            forced_out.add(out_vertex)
            shrunk = [e for e in shrunk if out_vertex not in e]
        remaining = frozenset(tuple(sorted(e)) for e in shrunk)
        sub = _profile_over(remaining, memo)
        freed = ncov - 1 - len(forced_out) - len(set(v for e in remaining for v in e))
        incl = _convolve(sub, _binomial_row(freed)) if freed else sub
        incl = (0,) + tuple(incl)  # shift: pivot itself is in the set
    else:
        incl = (0,)

    total_len = ncov + 1
    result = tuple(
        x + y for x, y in zip(_pad(excl, total_len), _pad(incl, total_len))
    )
    memo[hedges] = result
    return result


def _profile_over(hedges: frozenset[tuple[int, ...]], memo: dict) -> tuple[int, ...]:
    """Counts by size over the covered vertices of hedges (1-profile if none)."""
    if not hedges:
        return (1,)
    comps = _components(hedges)
    profiles = [_count_component(c, memo) for c in comps]
    return reduce(_convolve, profiles)


def independence_profile(h: CliqueHypergraph) -> IndependenceProfile:
    """Exact counts of independent vertex subsets by size.

    Vertices in no hyperedge are factored out as a binomial convolution;
    the covered part is limited to MAX_COVERED_VERTICES vertices.
    """
    covered = h.covered_vertices()
    if len(covered) > MAX_COVERED_VERTICES:
        raise LimitExceededError(
            f"{len(covered)} covered vertices exceeds the exact limit "
            f"{MAX_COVERED_VERTICES}"
        )
    core = _profile_over(frozenset(h.hyperedges), {})
    free = h.vertex_count - len(covered)
    counts = _convolve(core, _binomial_row(free)) if free else tuple(core)
    return IndependenceProfile(h.vertex_count, _pad(counts, h.vertex_count + 1))


def independence_probability(h: CliqueHypergraph, p) -> Fraction:
    """Exact probability that a Bernoulli(p) vertex subset is independent."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    prof = independence_profile(h)
    q = 1 - p
    total = Fraction(0)
    v = h.vertex_count
    for s, c in enumerate(prof.counts):
        if c:
            total += c * p**s * q ** (v - s)
    return total


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def write_hypergraph(h: CliqueHypergraph) -> str:
    """Text form: first line "v r", then one hyperedge per line."""
    lines = [f"{h.vertex_count} {h.edge_count}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.hyperedges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str, clique_order: int = 3) -> CliqueHypergraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty hypergraph text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'v r', got {lines[0]!r}")
    v, r = int(head[0]), int(head[1])
    if len(lines) - 1 != r:
        raise ValueError(f"header promises {r} hyperedges, found {len(lines) - 1}")
    hedges = tuple(tuple(int(x) for x in ln.split()) for ln in lines[1:])
    return CliqueHypergraph(v, hedges, clique_order)
