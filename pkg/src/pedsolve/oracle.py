"""Brute-force ground truth: enumerate every PED-set of a small graph.

The enumeration runs over total 3-colorings (the certificate bijection),
not over edge subsets: all ``3^n`` assignments are filtered by total
validity and mapped through ``ped_from_coloring``.  Two interchangeable
cores implement that sweep:

* a vectorized filter over the full ``3^n`` table (numpy, small ``n``),
* a depth-first enumerator with incremental pruning (larger ``n``).

Both produce colorings in the same lexicographic order (black < yellow <
white per vertex), so results are deterministic regardless of the core.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .coloring import (
    BLACK,
    WHITE,
    YELLOW,
    Coloring,
    ped_from_coloring,
)
from .errors import OracleBoundError
from .graph import Edge, EdgeWeightMap, Graph, derive_vertex_weights

DEFAULT_ORACLE_BOUND = 20
_VECTOR_LIMIT = 12  # 3^12 rows is the largest table worth materializing


@dataclass(frozen=True)
class OracleReport:
    """Everything the brute force knows about one graph."""

    all_peds: Optional[list[frozenset[Edge]]]
    min_ped: frozenset[Edge]
    min_size: int
    min_weight: Optional[Fraction]
    ped_count: int
    dim_count: int


def _check_bound(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise OracleBoundError(
            f"oracle bound exceeded: n={g.n} > {max_n}"
        )


@lru_cache(maxsize=2)
def _digit_table(n: int):
    """All 3^n rows of base-3 digits (0=black, 1=yellow, 2=white), plus
    cached white/yellow/black indicator matrices."""
    rows = 3 ** n
    idx = np.arange(rows, dtype=np.int64)
    table = np.empty((rows, n), dtype=np.int8)
    for v in range(n - 1, -1, -1):
        table[:, v] = idx % 3
        idx //= 3
    is_w = table == 2
    return table, is_w.astype(np.int8), table == 1, table == 0, is_w


def _valid_rows_vectorized(g: Graph) -> np.ndarray:
    """Digit rows (0=b, 1=y, 2=w) of all valid total colorings, in order."""
    n = g.n
    digits, w_int, is_y, is_b, is_w = _digit_table(n)
    adj = np.zeros((n, n), dtype=np.int8)
    for u, v in g.edges:
        adj[u, v] = 1
        adj[v, u] = 1
    deg = adj.sum(axis=0, dtype=np.int16)
    white_nbrs = w_int @ adj
    nonwhite_nbrs = deg[None, :] - white_nbrs
    bad = (is_w | is_b) & (white_nbrs > 0)
    bad |= is_y & (nonwhite_nbrs != 1)
    bad |= is_b & (deg[None, :] < 2)
    return digits[~bad.any(axis=1)]


def _valid_colorings_backtrack(g: Graph) -> Iterator[tuple[int, ...]]:
    """Depth-first enumeration with pruning; lexicographic output order."""
    n = g.n
    adj_lower = [sorted(u for u in g.adjacency[v] if u < v) for v in range(n)]
    max_nbr = [max(g.adjacency[v], default=-1) for v in range(n)]
    deg = [g.degree(v) for v in range(n)]
    colors = [0] * n
    nonwhite = [0] * n  # colored non-white neighbours seen so far

    def rec(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(colors)
            return
        for c in (BLACK, YELLOW, WHITE):
            if c == BLACK and deg[v] < 2:
                continue
            bad = False
            bumped: list[int] = []
            own_nonwhite = 0
            for u in adj_lower[v]:
                cu = colors[u]
                if cu != WHITE:
                    own_nonwhite += 1
                if c == WHITE:
                    if cu in (WHITE, BLACK):
                        bad = True
                        break
                else:
                    if c == BLACK and cu == WHITE:
                        bad = True
                        break
                    if cu == YELLOW:
                        nonwhite[u] += 1
                        bumped.append(u)
                        if nonwhite[u] > 1:
                            bad = True
                            break
            if not bad:
                # exactness fires once a yellow vertex has no uncolored nbrs
                for u in adj_lower[v]:
                    if max_nbr[u] == v and colors[u] == YELLOW and nonwhite[u] != 1:
                        bad = True
                        break
                if not bad and c == YELLOW:
                    if own_nonwhite > 1:
                        bad = True
                    elif max_nbr[v] < v and own_nonwhite != 1:
                        bad = True
            if not bad:
                colors[v] = c
                nonwhite[v] = own_nonwhite
                yield from rec(v + 1)
                colors[v] = 0
            for u in bumped:
                nonwhite[u] -= 1

    yield from rec(0)


def enumerate_valid_colorings(g: Graph, max_n: int = DEFAULT_ORACLE_BOUND) -> list[Coloring]:
    """All valid total colorings of ``g``, lexicographic order."""
    _check_bound(g, max_n)
    if g.n <= _VECTOR_LIMIT:
        rows = _valid_rows_vectorized(g)
        return [Coloring(tuple(int(d) + 1 for d in row)) for row in rows]
    return [Coloring(t) for t in _valid_colorings_backtrack(g)]


def enumerate_peds(g: Graph, max_n: int = DEFAULT_ORACLE_BOUND) -> list[frozenset[Edge]]:
    """Every PED-set of ``g`` exactly once, sorted by size then edge list."""
    colorings = enumerate_valid_colorings(g, max_n)
    peds = [ped_from_coloring(g, c) for c in colorings]
    return sorted(peds, key=lambda p: (len(p), tuple(sorted(p))))


def oracle_solve(
    g: Graph,
    w: Optional[EdgeWeightMap] = None,
    max_n: int = DEFAULT_ORACLE_BOUND,
    collect: bool = True,
) -> OracleReport:
    """Exact minima and counts by exhaustive coloring enumeration.

    ``collect=False`` skips materializing the PED-set list (the counts and
    minima are unchanged); the exhaustive acceptance sweeps use that mode.
    """
    _check_bound(g, max_n)
    if g.n == 0:
        empty: frozenset[Edge] = frozenset()
        return OracleReport([empty] if collect else None, empty, 0,
                            Fraction(0) if w else None, 1, 1)
    psi = derive_vertex_weights(g, w) if w is not None else None
    m = g.m
    deg = [g.degree(v) for v in range(g.n)]

    if g.n <= _VECTOR_LIMIT:
        rows = _valid_rows_vectorized(g)
        ped_count = int(rows.shape[0])
        dim_count = int((~(rows == 0).any(axis=1)).sum())
        if not collect and w is None:
            # pure counting/minimum run: stay vectorized end to end
            sizes = m - (rows == 2).astype(np.int16) @ np.asarray(deg, dtype=np.int16)
            i = int(np.argmin(sizes))
            colors = tuple(int(d) + 1 for d in rows[i])
            best = frozenset(
                e for e in g.edges
                if colors[e[0]] != WHITE and colors[e[1]] != WHITE
            )
            return OracleReport(None, best, int(sizes[i]), None,
                                ped_count, dim_count)
        all_colors = [tuple(int(d) + 1 for d in row) for row in rows]
    else:
        all_colors = list(_valid_colorings_backtrack(g))
        ped_count = len(all_colors)
        dim_count = sum(1 for t in all_colors if BLACK not in t)

    half_psi = psi.total() / 2 if psi is not None else None
    best_key: Optional[tuple] = None
    best_ped: Optional[frozenset[Edge]] = None
    all_peds: Optional[list[frozenset[Edge]]] = [] if collect else None

    for colors in all_colors:
        whites = [v for v in range(g.n) if colors[v] == WHITE]
        size = m - sum(deg[v] for v in whites)
        weight = half_psi - psi.subset_sum(whites) if psi is not None else size
        ped = frozenset(
            e for e in g.edges
            if colors[e[0]] != WHITE and colors[e[1]] != WHITE
        )
        if collect:
            all_peds.append(ped)
        key = (weight, size, tuple(sorted(ped)))
        if best_key is None or key < best_key:
            best_key = key
            best_ped = ped

    assert best_ped is not None and ped_count >= 1
    if collect:
        all_peds.sort(key=lambda p: (len(p), tuple(sorted(p))))
    return OracleReport(
        all_peds=all_peds,
        min_ped=best_ped,
        min_size=best_key[1],
        min_weight=best_key[0] if w is not None else None,
        ped_count=ped_count,
        dim_count=dim_count,
    )


def find_induced_p6(g: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest induced P6 in path order, or None."""
    return _find_induced_path(g.masks, g.n, 6)


def _find_induced_path(masks, n: int, length: int) -> Optional[tuple[int, ...]]:
    path = [0] * length

    def rec(last: int, used: int, earlier_adj: int, depth: int) -> bool:
        if depth == length:
            return True
        cand = masks[last] & ~used & ~earlier_adj
        new_earlier = earlier_adj | masks[last]
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            cand ^= low
            path[depth] = x
            if rec(x, used | low, new_earlier, depth + 1):
                return True
        return False

    for a in range(n):
        path[0] = a
        if rec(a, 1 << a, 0, 1):
            return tuple(path)
    return None


def is_p6_free(g: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """(True, None) if P6-free, else (False, witness path)."""
    witness = find_induced_p6(g)
    return witness is None, witness
