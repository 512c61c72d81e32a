"""Seeded generator of random connected P6-free graphs.

Strategy: grow a star core (a dominating biclique K_{1,k}), then attach
each remaining vertex to at least two core vertices.  Attachments that
include the centre keep induced paths short; a rejection loop re-rolls the
graph until the P6-freeness check passes, so every emitted graph is
verified, not merely likely, P6-free.
"""

from __future__ import annotations

import random

from .graph import Graph
from .oracle import find_induced_p6

_MAX_ATTEMPTS = 200


def generate_p6_free(n: int, seed: int, edge_bias: float = 0.35) -> Graph:
    """Random connected P6-free graph on ``n`` vertices, deterministic in
    ``seed``.  ``edge_bias`` tunes how often risky leaf-to-leaf attachments
    are tried before rejection filtering."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    for _ in range(_MAX_ATTEMPTS):
        g = _grow(n, rng, edge_bias)
        if find_induced_p6(g) is None:
            return g
    # fall back to a guaranteed-safe shape: star plus center-anchored pendants
    return _grow(n, rng, 0.0)


def _grow(n: int, rng: random.Random, edge_bias: float) -> Graph:
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    centre = 0
    k = min(n - 1, max(2, rng.randint(2, max(2, n // 4))))
    leaves = list(range(1, k + 1))
    edges = [(centre, leaf) for leaf in leaves]
    core = [centre] + leaves
    for v in range(k + 1, n):
        if edge_bias > 0 and rng.random() < edge_bias and len(leaves) >= 2:
            # leaf-to-leaf attachment; may create long induced paths,
            # the rejection check arbitrates
            picks = rng.sample(leaves, 2)
        else:
            # centre-anchored: a universal-ish centre keeps paths short
            picks = [centre, rng.choice(leaves)]
            if edge_bias > 0 and rng.random() < 0.5 and len(leaves) >= 2:
                extra = rng.choice(leaves)
                if extra not in picks:
                    picks.append(extra)
        for u in picks:
            edges.append((u, v))
    perm = list(range(n))
    rng.shuffle(perm)  # random labels exercise tie-breaking downstream
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])
