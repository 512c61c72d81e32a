"""Shared builders and reference implementations for the test suite."""

from __future__ import annotations

import itertools

from pedsolve import Graph, is_ped


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def all_labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def peds_by_subset_sweep(g: Graph) -> list[frozenset]:
    """Cross-oracle: filter all 2^m edge subsets with is_ped directly."""
    out = []
    for k in range(g.m + 1):
        for combo in itertools.combinations(g.edges, k):
            subset = frozenset(combo)
            if is_ped(g, subset):
                out.append(subset)
    return sorted(out, key=lambda p: (len(p), tuple(sorted(p))))
