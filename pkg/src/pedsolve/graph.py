"""Simple undirected graphs with exact rational edge/vertex weights.

Vertices are dense 0-based indices.  A ``Graph`` is immutable after
construction; every operation here is a pure function, so instances can be
shared freely between threads.

Edge-list text format (``parse_graph`` / ``format_graph``): the first
non-comment line holds the vertex count ``n``; every following non-empty
line that does not start with ``#`` holds one edge ``u v`` with
``0 <= u < v < n``.  The weighted variant appends an exact rational weight:
``u v p/q``.  The writer emits edges sorted lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import GraphParseError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph over vertices ``0..n-1``.

    ``adjacency[v]`` is a frozenset of neighbours, ``edges`` the sorted
    tuple of normalized ``(u, v)`` pairs with ``u < v``.  ``masks[v]`` holds
    the same adjacency as an int bitmask; the enumeration cores work on
    masks, everything user-facing works on the sets.
    """

    __slots__ = ("n", "adjacency", "edges", "masks", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphParseError(f"negative vertex count {n}")
        seen: set[Edge] = set()
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphParseError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphParseError(f"loop edge at vertex {u}")
            e = _norm_edge(u, v)
            if e in seen:
                raise GraphParseError(f"duplicate edge {e}")
            seen.add(e)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self.masks: tuple[int, ...] = tuple(masks)
        self.adjacency: tuple[frozenset[int], ...] = tuple(
            frozenset(_bits(m)) for m in masks
        )
        self._edge_set = frozenset(seen)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._edge_set

    def edge_set(self) -> frozenset[Edge]:
        return self._edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse the plain edge-list format.  Raises GraphParseError."""
    g, w = _parse(text, weighted=False)
    assert w is None
    return g


def parse_weighted_graph(text: str) -> tuple[Graph, "EdgeWeightMap"]:
    """Parse the weighted variant ``u v p/q`` (weight defaults to 1)."""
    g, w = _parse(text, weighted=True)
    assert w is not None
    return g, w


def _parse(text: str, weighted: bool):
    n: Optional[int] = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    weights: dict[Edge, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphParseError(f"line {lineno}: expected vertex count, got {line!r}")
            if n < 0:
                raise GraphParseError(f"line {lineno}: negative vertex count")
            continue
        parts = line.split()
        if len(parts) not in (2, 3) or (len(parts) == 3 and not weighted):
            raise GraphParseError(f"line {lineno}: malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: malformed edge line {line!r}")
        if u == v:
            raise GraphParseError(f"line {lineno}: loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: endpoint out of range in {line!r}")
        e = _norm_edge(u, v)
        if e in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        if weighted:
            weights[e] = _parse_fraction(parts[2], lineno) if len(parts) == 3 else Fraction(1)
        edges.append(e)
    if n is None:
        raise GraphParseError("empty input: missing vertex count line")
    g = Graph(n, edges)
    if not weighted:
        return g, None
    return g, EdgeWeightMap(g, weights)


def _parse_fraction(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise GraphParseError(f"line {lineno}: bad rational weight {token!r}")


def format_graph(g: Graph, weights: Optional["EdgeWeightMap"] = None,
                 header: Optional[str] = None) -> str:
    """Serialize; round-trips through the matching parser."""
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append(str(g.n))
    for u, v in g.edges:
        if weights is None:
            lines.append(f"{u} {v}")
        else:
            lines.append(f"{u} {v} {weights[(u, v)]}")
    return "\n".join(lines) + "\n"


class EdgeWeightMap:
    """Exact rational weight per edge; defined on exactly E(G)."""

    __slots__ = ("_w",)

    def __init__(self, g: Graph, weights: Mapping[Edge, Fraction | int]):
        w: dict[Edge, Fraction] = {}
        for e, val in weights.items():
            e = _norm_edge(*e)
            if not g.has_edge(*e):
                raise ValueError(f"weight given for non-edge {e}")
            w[e] = Fraction(val)
        missing = g.edge_set() - w.keys()
        if missing:
            raise ValueError(f"missing weights for edges {sorted(missing)[:5]}")
        self._w = w

    @classmethod
    def unit(cls, g: Graph) -> "EdgeWeightMap":
        return cls(g, {e: Fraction(1) for e in g.edges})

    def __getitem__(self, e: Edge) -> Fraction:
        return self._w[_norm_edge(*e)]

    def total(self) -> Fraction:
        return sum(self._w.values(), Fraction(0))

    def items(self):
        return self._w.items()


class VertexWeightMap:
    """psi(u) = sum of incident edge weights.  See derive_vertex_weights."""

    __slots__ = ("_psi",)

    def __init__(self, psi: Sequence[Fraction]):
        self._psi = tuple(psi)

    def __getitem__(self, v: int) -> Fraction:
        return self._psi[v]

    def __len__(self) -> int:
        return len(self._psi)

    def total(self) -> Fraction:
        return sum(self._psi, Fraction(0))

    def subset_sum(self, vertices: Iterable[int]) -> Fraction:
        return sum((self._psi[v] for v in vertices), Fraction(0))


def derive_vertex_weights(g: Graph, w: EdgeWeightMap) -> VertexWeightMap:
    """psi(u) = sum_{v in N(u)} w(uv); satisfies sum psi = 2 * w(E)."""
    psi = [Fraction(0)] * g.n
    for (u, v), val in w.items():
        psi[u] += val
        psi[v] += val
    return VertexWeightMap(psi)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices`` plus the new->old index map."""
    keep = sorted(set(vertices))
    for v in keep:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [
        (pos[u], pos[v])
        for (u, v) in g.edges
        if u in pos and v in pos
    ]
    return Graph(len(keep), edges), keep


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets, each sorted, listed by smallest member."""
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = _component_mask(g.masks, start)
        seen |= comp
        comps.append(tuple(_bits(comp)))
    return comps


def _component_mask(masks: Sequence[int], start: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return _component_mask(g.masks, 0) == (1 << g.n) - 1


@dataclass(frozen=True)
class Bipartition:
    """Either ``sides`` (both independent, covering V) or an odd-cycle witness."""

    sides: Optional[tuple[frozenset[int], frozenset[int]]]
    odd_cycle: Optional[tuple[int, ...]]


def bipartition(g: Graph) -> Bipartition:
    """Two-color the graph if possible.

    Per connected component, the side containing that component's smallest
    vertex is placed in the first ("U") side, which makes the output
    deterministic.  If the graph is not bipartite, returns an odd closed
    walk witness (an odd cycle through the offending edge).
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    u_side: set[int] = set()
    v_side: set[int] = set()
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            x = queue.pop()
            for y in sorted(g.adjacency[x]):
                if color[y] == -1:
                    color[y] = color[x] ^ 1
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return Bipartition(None, _odd_cycle(parent, x, y))
    for v in range(g.n):
        (u_side if color[v] == 0 else v_side).add(v)
    return Bipartition((frozenset(u_side), frozenset(v_side)), None)


def _odd_cycle(parent: list[int], x: int, y: int) -> tuple[int, ...]:
    px = _path_to_root(parent, x)
    pos = {v: i for i, v in enumerate(px)}
    py = _path_to_root(parent, y)
    for j, v in enumerate(py):
        if v in pos:
            return tuple(px[: pos[v] + 1] + py[:j][::-1])
    raise AssertionError("odd edge endpoints share no tree ancestor")


def _path_to_root(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    sel = set(s)
    return all(not (g.adjacency[v] & sel) for v in sel)


def is_dissociation_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff the induced subgraph on ``s`` has maximum degree <= 1."""
    sel = set(s)
    return all(len(g.adjacency[v] & sel) <= 1 for v in sel)


def dominates(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex outside ``s`` has a neighbour in ``s``."""
    sel = set(s)
    return all(v in sel or (g.adjacency[v] & sel) for v in range(g.n))
