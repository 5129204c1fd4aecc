"""Closed-form thresholds and certified bounds.

Mantel's edge threshold, the Lovász–Simonovits triangle lower bound, the
exact optimum polynomial one edge above the threshold, and the linear
triple-system independence bound evaluated through a graph's triangle
count.  Everything here is exact: integer polynomials and rational
comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact import tf_poly, tf_profile
from .graphs import Graph, triangle_count
from .polynomial import Poly


@dataclass(frozen=True)
class EdgeBudget:
    """n vertices and floor(n^2/4) + i edges (surplus i >= 1)."""

    n: int
    i: int

    def __post_init__(self):
        if self.i < 1:
            raise ValueError("surplus must be at least 1")
        if self.m > comb(self.n, 2):
            raise ValueError(
                f"floor({self.n}^2/4) + {self.i} exceeds C({self.n},2) edges"
            )

    @property
    def m(self) -> int:
        return self.n * self.n // 4 + self.i


@dataclass(frozen=True)
class LsBound:
    """Triangle lower bound i*floor(n/2); in_range is False when the surplus
    lies outside the proven range i < n/2 (value then extrapolated, not
    asserted)."""

    count: int
    in_range: bool


def mantel_max_edges(n: int) -> int:
    """Maximum edges of a triangle-free graph on n vertices: floor(n^2/4)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return n * n // 4


def ls_min_triangles(n: int, i: int) -> LsBound:
    """Minimum triangles forced by floor(n^2/4) + i edges on n vertices.

    The bound i * floor(n/2) holds for every surplus 1 <= i < n/2 (strict).
    It genuinely fails at the boundary i = n/2: the complete tripartite
    graph with parts of size 2 has floor(36/4) + 3 edges on 6 vertices but
    only 8 < 9 triangles.  Outside the proven range the value is still
    returned, flagged out of range rather than silently extrapolated.
    """
    return LsBound(i * (n // 2), 1 <= i and 2 * i < n)


def one_extra_edge_optimum(n: int) -> Poly:
    """Exact maximum of the triangle-free probability over n-vertex graphs
    with floor(n^2/4) + 1 edges: 1 - p + p * (1 - p^2)^floor(n/2).

    Attained by the complete bipartite graph plus one edge inside the
    larger part (see graphs.mantel_plus_one).
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    return linear_triple_bound(n // 2)


def linear_triple_bound(r: int) -> Poly:
    """Upper bound polynomial 1 - p + p * (1-p^2)^r for the probability that
    a Bernoulli(p) vertex subset of a linear 3-uniform hypergraph with r
    hyperedges is independent.  Equality holds for the flower."""
    if r < 0:
        raise ValueError("edge count must be nonnegative")
    one_minus_p2 = Poly((1, 0, -1))
    return Poly((1, -1)) + (one_minus_p2**r).shift(1)


def tf_upper_bound(g: Graph, p) -> Fraction:
    """Certified upper bound on the triangle-free probability of the
    Bernoulli(p) subgraph: the linear triple bound at r = t(g).

    Valid for every graph because two distinct triangles share at most one
    edge, so the triangle hypergraph is always linear.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return linear_triple_bound(triangle_count(g)).eval(p)


@dataclass(frozen=True)
class CheckReport:
    """One verified claim, JSON-ready: lhs <relation> rhs."""

    claim: str
    lhs: str
    rhs: str
    relation: str
    witness: str
    passed: bool

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "witness": self.witness,
            "pass": self.passed,
        }


def low_order_coefficient_check(g: Graph) -> list[CheckReport]:
    """Check the forced low-order structure of the profile and polynomial.

    tf(g, 3) must be C(m, 3) - t(g) (each triangle kills exactly one
    3-subset), and the polynomial must open as 1 + 0*p + 0*p^2 - t(g)*p^3.
    """
    t = triangle_count(g)
    m = g.m
    reports = []

    prof = tf_profile(g)
    tf3 = prof.counts[3] if m >= 3 else 0
    expected = comb(m, 3) - t
    reports.append(
        CheckReport(
            claim="three-edge subsets avoiding a triangle",
            lhs=str(tf3),
            rhs=f"C({m},3) - t = {expected}",
            relation="==",
            witness=f"m={m}, t={t}",
            passed=tf3 == expected,
        )
    )

    poly = tf_poly(g)
    anchors = (poly[0], poly[1], poly[2], poly[3])
    reports.append(
        CheckReport(
            claim="polynomial opens as 1 - t*p^3",
            lhs=str(anchors),
            rhs=f"(1, 0, 0, {-t})",
            relation="==",
            witness=poly.to_text(),
            passed=anchors == (1, 0, 0, -t),
        )
    )
    return reports
