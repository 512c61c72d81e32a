"""NSF hardness gadget: construction and oracle-checked reduction.

An NSF (neighbourhood star-free) graph has every vertex of degree at least
two on a triangle.  Attaching the thirteen-edge gadget to such a graph
yields a DIM-less graph G' whose non-trivial PED-sets exist exactly when
the host has a DIM.  ``verify_reduction`` re-derives all of that with the
brute-force oracle instead of trusting the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import is_induced_matching
from .graph import Graph, is_connected
from .oracle import oracle_solve

GADGET_VERTEX_NAMES = ("v1", "v2", "v3", "p1", "p2", "k1", "k2", "k3", "k4")


def is_nsf(g: Graph) -> tuple[bool, Optional[int]]:
    """(True, None) if every degree->=2 vertex is on a triangle, else
    (False, smallest violating vertex)."""
    for v in range(g.n):
        nbrs = g.adjacency[v]
        if len(nbrs) < 2:
            continue
        if not any(g.adjacency[u] & nbrs for u in nbrs):
            return False, v
    return True, None


def attach_gadget(g: Graph, anchor: Optional[int] = None) -> Graph:
    """G' = G plus the gadget: a triangle v1 v2 v3, a path v3 p1 p2 k1, a
    K4 on k1..k4, and the connector from the anchor to v1 (13 new edges,
    9 new vertices appended in the order v1, v2, v3, p1, p2, k1..k4).

    The default anchor is the smallest-index maximum-degree vertex.
    """
    if g.n == 0:
        raise ValueError("cannot attach the gadget to an empty graph")
    if not is_connected(g):
        raise ValueError("host graph must be connected")
    if anchor is None:
        anchor = max(range(g.n), key=lambda v: (g.degree(v), -v))
    elif not (0 <= anchor < g.n):
        raise ValueError(f"anchor {anchor} out of range")
    v1, v2, v3, p1, p2, k1, k2, k3, k4 = range(g.n, g.n + 9)
    new_edges = [
        (anchor, v1),
        (v1, v2), (v2, v3), (v1, v3),
        (v3, p1), (p1, p2), (p2, k1),
        (k1, k2), (k1, k3), (k1, k4), (k2, k3), (k2, k4), (k3, k4),
    ]
    return Graph(g.n + 9, list(g.edges) + new_edges)


@dataclass(frozen=True)
class ReductionReport:
    anchor: int
    host_has_dim: bool
    gadget_graph_dimless: bool
    equivalence_holds: bool
    forced_edges_in_every_ped: bool

    @property
    def ok(self) -> bool:
        return (
            self.gadget_graph_dimless
            and self.equivalence_holds
            and self.forced_edges_in_every_ped
        )


def verify_reduction(g: Graph, max_n: int = 20) -> ReductionReport:
    """Oracle-check the reduction on a connected NSF host:

    (i) G' is DIM-less; (ii) the host has a DIM iff G' has a non-trivial
    PED-set; (iii) the K4 edges plus the edge entering the K4 belong to
    every PED-set of G'.
    """
    nsf, witness = is_nsf(g)
    if not nsf:
        raise ValueError(f"host is not an NSF graph (vertex {witness})")
    if not is_connected(g):
        raise ValueError("host graph must be connected")
    anchor = max(range(g.n), key=lambda v: (g.degree(v), -v))
    gp = attach_gadget(g, anchor)
    host = oracle_solve(g, max_n=max_n)
    host_has_dim = any(
        is_induced_matching(g, p) for p in host.all_peds
    )
    prime = oracle_solve(gp, max_n=max_n)
    dimless = prime.dim_count == 0
    nontrivial = [p for p in prime.all_peds if p != gp.edge_set()]
    p2, k1, k2, k3, k4 = range(g.n + 4, g.n + 9)
    forced = {
        (p2, k1),
        (k1, k2), (k1, k3), (k1, k4), (k2, k3), (k2, k4), (k3, k4),
    }
    forced_ok = all(forced <= p for p in prime.all_peds)
    return ReductionReport(
        anchor=anchor,
        host_has_dim=host_has_dim,
        gadget_graph_dimless=dimless,
        equivalence_holds=host_has_dim == bool(nontrivial),
        forced_edges_in_every_ped=forced_ok,
    )
