"""Exact counts of K_k-free edge subsets and the matching probability polynomial.

The keep-probability polynomial of a graph G is

    sum_s tf(G, s) * p^s * (1-p)^(m-s),

where tf(G, s) counts s-edge subsets containing no K_k (triangles by
default).  Only edges lying in some K_k copy matter: an edge outside every
copy can be kept or dropped freely, which multiplies the count profile by
a binomial row and leaves the polynomial untouched.  The covered part is
counted by vectorized enumeration of its subsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .errors import LimitExceededError
from .graphs import Graph, cliques
from .polynomial import Poly

MAX_COVERED_EDGES = 30  # exact-enumeration limit on edges lying in a K_k copy
_CHUNK = 1 << 20


@dataclass(frozen=True)
class TfProfile:
    """counts[s] = number of K_k-free edge subsets of size s (exact ints)."""

    m: int
    counts: tuple[int, ...] = field(repr=False)
    clique_order: int = 3


def _covered_edge_setup(g: Graph, clique_order: int):
    """Edge indices covered by some K_k copy, plus hyperedge bitmasks over
    the covered-edge positions."""
    copies = cliques(g, clique_order)
    covered: set[int] = set()
    edge_sets = []
    for members in copies:
        idx = [
            g.edge_index(members[i], members[j])
            for i in range(clique_order)
            for j in range(i + 1, clique_order)
        ]
        covered.update(idx)
        edge_sets.append(idx)
    order = sorted(covered)
    pos = {e: i for i, e in enumerate(order)}
    masks = []
    for idx in edge_sets:
        mask = 0
        for e in idx:
            mask |= 1 << pos[e]
        masks.append(mask)
    return order, masks


def _covered_profile(c: int, masks: list[int]) -> list[int]:
    """counts[s] over subsets of c covered edges avoiding every mask."""
    if c == 0:
        return [1]
    umasks = np.array(masks, dtype=np.uint64)
    counts = np.zeros(c + 1, dtype=np.int64)
    total = 1 << c
    for base in range(0, total, _CHUNK):
        idx = np.arange(base, min(base + _CHUNK, total), dtype=np.uint64)
        ok = np.ones(idx.shape, dtype=bool)
        for mask in umasks:
            ok &= (idx & mask) != mask
        sizes = np.bitwise_count(idx[ok]).astype(np.int64)
        counts += np.bincount(sizes, minlength=c + 1)
    return [int(x) for x in counts]


def tf_profile(g: Graph, clique_order: int = 3) -> TfProfile:
    """Exact counts of K_k-free edge subsets by size."""
    order, masks = _covered_edge_setup(g, clique_order)
    c = len(order)
    if c > MAX_COVERED_EDGES:
        raise LimitExceededError(
            f"{c} covered edges exceeds the exact limit {MAX_COVERED_EDGES}; "
            "use Monte Carlo estimation instead"
        )
    cov = _covered_profile(c, masks)
    free = g.m - c
    if free:
        counts = [0] * (g.m + 1)
        for j, x in enumerate(cov):
            if x:
                for i in range(free + 1):
                    counts[j + i] += x * comb(free, i)
    else:
        counts = cov + [0] * (g.m - c)
    return TfProfile(g.m, tuple(counts), clique_order)


def tf_poly(g: Graph, clique_order: int = 3) -> Poly:
    """Probability polynomial in p that the Bernoulli(p) edge-subgraph of g
    has no K_k copy.

    Equals sum_s tf(g, s) p^s (1-p)^(m-s); edges outside every copy cancel
    (p + (1-p) = 1), so the degree is at most the covered-edge count.
    """
    order, masks = _covered_edge_setup(g, clique_order)
    c = len(order)
    if c > MAX_COVERED_EDGES:
        raise LimitExceededError(
            f"{c} covered edges exceeds the exact limit {MAX_COVERED_EDGES}; "
            "use Monte Carlo estimation instead"
        )
    cov = _covered_profile(c, masks)
    total = Poly.zero()
    for j, x in enumerate(cov):
        if x:
            total = total + Poly.one_minus_x_power(c - j).scale(x).shift(j)
    return total


def poly_eval(poly: Poly, p) -> Fraction:
    """Exact value at a probability p in [0, 1]."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return poly.eval(p)


def poly_sub(a: Poly, b: Poly) -> Poly:
    """Coefficient-wise difference a - b (may have negative leading sign)."""
    return a - b


def poly_divides_check(a: Poly, b: Poly) -> bool:
    """True iff b divides a exactly (zero remainder over the rationals)."""
    return b.divides(a)
