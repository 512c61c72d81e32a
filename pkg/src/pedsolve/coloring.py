"""The 3-coloring certificate language for perfect edge domination.

A PED-set ``P`` of ``G`` induces a vertex partition: black vertices carry at
least two edges of ``P``, yellow exactly one, white none.  Total valid
colorings are in bijection with PED-sets (``coloring_from_ped`` /
``ped_from_coloring``), which is what the solver and the oracle enumerate.

Serialization: a coloring is a string over ``{b, y, w, u}`` with one
character per vertex in index order; a PED-set is its sorted edge list.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import GraphParseError
from .graph import Edge, EdgeWeightMap, Graph, derive_vertex_weights


class Color(enum.IntEnum):
    UNCOLORED = 0
    BLACK = 1
    YELLOW = 2
    WHITE = 3


UNCOLORED, BLACK, YELLOW, WHITE = Color

_CHAR = {UNCOLORED: "u", BLACK: "b", YELLOW: "y", WHITE: "w"}
_COLOR = {c: k for k, c in _CHAR.items()}


@dataclass(frozen=True)
class Coloring:
    """Per-vertex color assignment; partial iff some vertex is UNCOLORED."""

    colors: tuple[int, ...]

    @property
    def total(self) -> bool:
        return UNCOLORED not in self.colors

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def vertices_of(self, color: int) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.colors) if c == color)

    def to_string(self) -> str:
        return "".join(_CHAR[Color(c)] for c in self.colors)

    @classmethod
    def from_string(cls, s: str) -> "Coloring":
        try:
            return cls(tuple(_COLOR[ch] for ch in s))
        except KeyError as exc:
            raise ValueError(f"bad coloring character {exc.args[0]!r}") from None


class PedClass(enum.Enum):
    TRIVIAL = "trivial"
    DIM = "dim"
    PROPER = "proper"


@dataclass(frozen=True)
class Violation:
    """First violated validity condition, with an index-ascending witness."""

    condition: str
    witness: tuple[int, ...]


def _check_edges(g: Graph, p: Iterable[Edge]) -> frozenset[Edge]:
    edges = frozenset((u, v) if u < v else (v, u) for u, v in p)
    bad = edges - g.edge_set()
    if bad:
        raise ValueError(f"not edges of the host graph: {sorted(bad)[:5]}")
    return edges


def is_ped(g: Graph, p: Iterable[Edge]) -> bool:
    """True iff every edge outside ``p`` shares an endpoint with exactly one
    edge of ``p``."""
    edges = _check_edges(g, p)
    inc = [0] * g.n
    for u, v in edges:
        inc[u] += 1
        inc[v] += 1
    return all(
        inc[u] + inc[v] == 1 for (u, v) in g.edges if (u, v) not in edges
    )


def coloring_from_ped(g: Graph, p: Iterable[Edge]) -> Coloring:
    """Certificate coloring of a PED-set (black >= 2, yellow = 1, white = 0)."""
    edges = _check_edges(g, p)
    if not is_ped(g, edges):
        raise ValueError("edge set is not a perfect edge dominating set")
    inc = [0] * g.n
    for u, v in edges:
        inc[u] += 1
        inc[v] += 1
    colors = tuple(
        BLACK if k >= 2 else YELLOW if k == 1 else WHITE for k in inc
    )
    return Coloring(colors)


def ped_from_coloring(g: Graph, c: Coloring) -> frozenset[Edge]:
    """Edges whose endpoints are both non-white."""
    if not c.total:
        raise ValueError("coloring must be total")
    cols = c.colors
    return frozenset(
        e for e in g.edges if cols[e[0]] != WHITE and cols[e[1]] != WHITE
    )


def validate_total(g: Graph, c: Coloring) -> Optional[Violation]:
    """None if valid, else the first violation in vertex-index order.

    Valid total: whites independent, every yellow vertex has exactly one
    non-white neighbour, no black vertex has a white neighbour and every
    black vertex has degree >= 2.  The degree condition folds in the paper's
    one- and two-vertex special cases.
    """
    if not c.total:
        return Violation("not-total", (c.colors.index(UNCOLORED),))
    cols = c.colors
    for v in range(g.n):
        cv = cols[v]
        if cv == WHITE:
            for u in sorted(g.adjacency[v]):
                if cols[u] == WHITE:
                    return Violation("adjacent-whites", (v, u))
        elif cv == YELLOW:
            k = sum(1 for u in g.adjacency[v] if cols[u] != WHITE)
            if k != 1:
                return Violation("yellow-nonwhite-neighbors", (v, k))
        else:
            for u in sorted(g.adjacency[v]):
                if cols[u] == WHITE:
                    return Violation("black-white-edge", (v, u))
            if g.degree(v) < 2:
                return Violation("black-degree", (v,))
    return None


def is_valid_total(g: Graph, c: Coloring) -> bool:
    return validate_total(g, c) is None


def validate_partial(g: Graph, c: Coloring) -> Optional[Violation]:
    """Partial validity: no adjacent whites, no yellow with more than one
    colored non-white neighbour, no black with a white neighbour."""
    cols = c.colors
    for v in range(g.n):
        cv = cols[v]
        if cv == WHITE:
            for u in sorted(g.adjacency[v]):
                if cols[u] == WHITE:
                    return Violation("adjacent-whites", (v, u))
        elif cv == YELLOW:
            k = sum(
                1 for u in g.adjacency[v]
                if cols[u] not in (WHITE, UNCOLORED)
            )
            if k > 1:
                return Violation("yellow-nonwhite-neighbors", (v, k))
        elif cv == BLACK:
            for u in sorted(g.adjacency[v]):
                if cols[u] == WHITE:
                    return Violation("black-white-edge", (v, u))
    return None


def is_valid_partial(g: Graph, c: Coloring) -> bool:
    return validate_partial(g, c) is None


def is_induced_matching(g: Graph, p: Iterable[Edge]) -> bool:
    """No two edges of ``p`` share an endpoint."""
    edges = _check_edges(g, p)
    inc = [0] * g.n
    for u, v in edges:
        inc[u] += 1
        inc[v] += 1
    return all(k <= 1 for k in inc)


def classify_ped(g: Graph, p: Iterable[Edge]) -> PedClass:
    """Trivial iff p = E(G); else DIM iff p is a matching; else proper."""
    edges = _check_edges(g, p)
    if not is_ped(g, edges):
        raise ValueError("edge set is not a perfect edge dominating set")
    if edges == g.edge_set():
        return PedClass.TRIVIAL
    if is_induced_matching(g, edges):
        return PedClass.DIM
    return PedClass.PROPER


def ped_weight(g: Graph, w: EdgeWeightMap, p: Iterable[Edge]) -> Fraction:
    """Sum of edge weights over ``p``; cross-checked against the identity
    w(P) = psi(V)/2 - psi(W).  A mismatch signals an internal bug."""
    edges = _check_edges(g, p)
    direct = sum((w[e] for e in edges), Fraction(0))
    psi = derive_vertex_weights(g, w)
    whites = coloring_from_ped(g, edges).vertices_of(WHITE)
    via_identity = psi.total() / 2 - psi.subset_sum(whites)
    if direct != via_identity:
        raise RuntimeError(
            f"weight identity violated: sum={direct} identity={via_identity}"
        )
    return direct


def format_ped(p: Iterable[Edge]) -> str:
    """Sorted edge list, one ``u v`` pair per line."""
    return "\n".join(f"{u} {v}" for u, v in sorted(p)) + "\n"


def parse_edge_subset(text: str, g: Graph) -> frozenset[Edge]:
    """Parse ``u v`` lines into an edge subset of ``g``."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: malformed edge line {line!r}")
        if not g.has_edge(u, v):
            raise GraphParseError(f"line {lineno}: ({u}, {v}) is not an edge")
        edges.append((u, v) if u < v else (v, u))
    return frozenset(edges)
