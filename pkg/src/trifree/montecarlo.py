"""Seeded Monte Carlo estimation of the clique-free probability.

Sampling uses numpy's Philox counter-based generator.  A run is split into
fixed-size lanes of 2^14 samples; lane L draws from Philox with key
(seed mod 2^64, L), so the estimate depends only on (graph, p, samples,
seed) — never on how many workers processed the lanes.  Per sample only
the edges lying in some K_k copy are drawn; the others cannot complete a
copy.  Intervals are Wilson score at 95%, which stays sane when the
empirical mean sits at or near 1.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from .graphs import Graph, cliques

LANE_SIZE = 1 << 14
Z95 = 1.959963984540054  # normal quantile at 0.975
_MASK64 = (1 << 64) - 1


def lane_generator(seed: int, lane: int) -> np.random.Generator:
    """Independent deterministic stream for one lane."""
    key = np.array([seed & _MASK64, lane & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def sample_subgraph(g: Graph, p, rng: np.random.Generator) -> Graph:
    """Keep each edge independently with probability p using rng."""
    p = float(p)
    if not 0 < p < 1:
        raise ValueError(f"p must lie strictly inside (0, 1), got {p}")
    keep = rng.random(g.m) < p
    return g.subgraph_keeping(keep)


def wilson_interval(successes: int, samples: int) -> tuple[float, float]:
    """95% Wilson score interval for a binomial proportion."""
    if samples < 1:
        raise ValueError("need at least one sample")
    phat = successes / samples
    z2 = Z95 * Z95
    denom = 1.0 + z2 / samples
    center = (phat + z2 / (2 * samples)) / denom
    half = (
        Z95
        * sqrt(phat * (1.0 - phat) / samples + z2 / (4.0 * samples * samples))
        / denom
    )
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class Estimate:
    mean: float
    ci_low: float
    ci_high: float
    samples: int
    seed: int
    successes: int
    p: Fraction

    def to_json(self) -> dict:
        return {
            "mean": self.mean,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "samples": self.samples,
            "seed": self.seed,
            "p": str(self.p),
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _lane_successes(
    seed: int, lane: int, count: int, p_float: float, hyper_cols: list[np.ndarray], c: int
) -> int:
    rng = lane_generator(seed, lane)
    keep = rng.random((count, c)) < p_float
    bad = np.zeros(count, dtype=bool)
    for cols in hyper_cols:
        present = keep[:, cols[0]]
        for col in cols[1:]:
            present = present & keep[:, col]
        bad |= present
    return int(count - int(bad.sum()))


def estimate_tf(
    g: Graph,
    p,
    samples: int,
    seed: int,
    clique_order: int = 3,
    jobs: int = 1,
) -> Estimate:
    """Fraction of Bernoulli(p) edge-subgraphs with no K_k copy.

    Fully determined by (g, p, samples, seed, clique_order); jobs only
    controls how lanes are dispatched.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    p_exact = Fraction(p)
    if not 0 < p_exact < 1:
        raise ValueError(f"p must lie strictly inside (0, 1), got {p_exact}")
    p_float = float(p_exact)

    copies = cliques(g, clique_order)
    covered: list[int] = sorted(
        {
            g.edge_index(members[i], members[j])
            for members in copies
            for i in range(clique_order)
            for j in range(i + 1, clique_order)
        }
    )
    if not covered:
        return Estimate(1.0, 1.0, 1.0, samples, seed, samples, p_exact)
    pos = {e: i for i, e in enumerate(covered)}
    hyper_cols = [
        np.array(
            sorted(
                pos[g.edge_index(members[i], members[j])]
                for i in range(clique_order)
                for j in range(i + 1, clique_order)
            ),
            dtype=np.intp,
        )
        for members in copies
    ]
    c = len(covered)

    lanes = [
        (lane, min(LANE_SIZE, samples - lane * LANE_SIZE))
        for lane in range((samples + LANE_SIZE - 1) // LANE_SIZE)
    ]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            per_lane = list(
                pool.map(
                    lambda lc: _lane_successes(seed, lc[0], lc[1], p_float, hyper_cols, c),
                    lanes,
                )
            )
    else:
        per_lane = [
            _lane_successes(seed, lane, count, p_float, hyper_cols, c)
            for lane, count in lanes
        ]
    successes = sum(per_lane)
    low, high = wilson_interval(successes, samples)
    return Estimate(successes / samples, low, high, samples, seed, successes, p_exact)
