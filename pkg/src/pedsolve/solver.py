"""Exact minimum-weight PED-sets and exact PED/DIM counts on P6-free graphs.

The solver works per connected component.  It finds a dominating structure
(induced C6 preferred, else a maximal dominating complete bipartite
subgraph K) and enumerates every valid total coloring extending each
admissible partial coloring of that structure:

* cycle case: the 18 partial cycle colorings (1+6+6+3+2 rotations of the
  five pattern types) with their forced membership rules;
* biclique case: configurations by the number of black vertices on V(K) -
  none (two white/yellow orientations plus the all-DIM star branch),
  exactly one (candidate enumeration for the black vertex), at least two
  (star case with per-component two-way options).

Enumeration never materializes coloring families whose size is counted in
closed form (isolated-vertex covers, per-component option products); exact
big-integer counts and one minimum-weight representative per family are
carried instead.  ``collect=True`` additionally expands every family,
which the test suite uses to assert that branches are disjoint and the
counts match the materialized colorings.

The trivial PED-set E(G) is accounted exactly once, globally: every branch
emits only colorings with at least one white vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .coloring import (
    BLACK,
    UNCOLORED,
    WHITE,
    YELLOW,
    Coloring,
    PedClass,
    classify_ped,
    validate_total,
)
from .errors import NotP6FreeError
from .graph import (
    Edge,
    EdgeWeightMap,
    Graph,
    connected_components,
    derive_vertex_weights,
    induced_subgraph,
)
from .oracle import find_induced_p6, oracle_solve
from .structure import (
    CompleteBipartite,
    Cycle,
    find_dominating_structure,
)

ORACLE_FALLBACK_BOUND = 12
_COLLECT_CAP = 200_000


# --------------------------------------------------------------------------
# result type


@dataclass
class SolveResult:
    min_ped: frozenset[Edge]
    min_size: int
    min_weight: Fraction
    ped_count: int
    dim_count: int
    ped_class: PedClass
    oracle_fallback: bool = False
    colorings: Optional[list[Coloring]] = None


# --------------------------------------------------------------------------
# cycle patterns (Fig. 2 shapes as rotation families)

_PATTERN_BASE: dict[str, tuple[int, ...]] = {
    "a": (BLACK,) * 6,
    "b": (YELLOW, BLACK, YELLOW, WHITE, YELLOW, WHITE),
    "c": (BLACK, BLACK, BLACK, YELLOW, WHITE, YELLOW),
    "d": (WHITE, YELLOW, YELLOW, WHITE, YELLOW, YELLOW),
    "e": (YELLOW, WHITE, YELLOW, WHITE, YELLOW, WHITE),
}
_PATTERN_ROTATIONS = {"a": 1, "b": 6, "c": 6, "d": 3, "e": 2}


@dataclass(frozen=True)
class CyclePattern:
    kind: str  # one of "a".."e"
    rotation: int
    colors: tuple[int, ...]  # six slots in cycle order


def enumerate_cycle_patterns() -> list[tuple[CyclePattern, Coloring]]:
    """The 18 valid partial colorings of an induced C6, as rotation
    families of the five base shapes (multiplicities 1, 6, 6, 3, 2)."""
    out = []
    for kind in "abcde":
        base = _PATTERN_BASE[kind]
        for rot in range(_PATTERN_ROTATIONS[kind]):
            colors = tuple(base[(i - rot) % 6] for i in range(6))
            out.append((CyclePattern(kind, rot, colors), Coloring(colors)))
    return out


def extend_cycle_coloring(
    g: Graph, cycle: Sequence[int], pattern: CyclePattern
) -> list[Coloring]:
    """All valid total colorings of ``g`` that restrict to ``pattern`` on
    the dominating induced cycle.  Empty when the forced memberships clash.
    """
    colors = [UNCOLORED] * g.n
    for pos, v in enumerate(cycle):
        colors[v] = pattern.colors[pos]
    cyc_set = frozenset(cycle)
    outside = [v for v in range(g.n) if v not in cyc_set]
    kind = pattern.kind

    if kind == "a":
        for v in outside:
            colors[v] = BLACK
        return _validated([tuple(colors)], g)

    cyc_yellow = {cycle[i] for i in range(6) if pattern.colors[i] == YELLOW}
    cyc_white = {cycle[i] for i in range(6) if pattern.colors[i] == WHITE}

    if kind in ("b", "c", "d"):
        special: set[int] = set()
        if kind == "b":
            c_v = next(cycle[i] for i in range(6) if pattern.colors[i] == BLACK)
            d_v = next(
                cycle[i]
                for i in range(6)
                if pattern.colors[i] == YELLOW
                and pattern.colors[(i - 1) % 6] == WHITE
                and pattern.colors[(i + 1) % 6] == WHITE
            )
            special = {c_v, d_v}
        for v in outside:
            nc = g.adjacency[v] & cyc_set
            if nc <= cyc_yellow:
                colors[v] = WHITE
            elif kind == "b" and nc <= (special | cyc_white) and len(nc & special) <= 1:
                colors[v] = YELLOW
            elif kind == "c" and len(nc) == 2 and len(nc & cyc_white) == 1 \
                    and len(nc & (cyc_set - cyc_yellow - cyc_white)) == 1:
                colors[v] = YELLOW
            elif kind == "d" and nc <= cyc_white:
                colors[v] = YELLOW
            else:
                colors[v] = BLACK
        return _validated([tuple(colors)], g)

    # kind == "e": yellows are forced, the rest is white except at most one
    # black vertex adjacent to exactly the isolated yellows.
    bw: list[int] = []
    for v in outside:
        nc = g.adjacency[v] & cyc_set
        if len(nc & cyc_yellow) <= 1:
            colors[v] = YELLOW
        elif nc <= cyc_yellow:
            bw.append(v)
        else:
            return []
    yellows = [v for v in range(g.n) if colors[v] == YELLOW]
    yset = frozenset(yellows)
    if any(len(g.adjacency[v] & yset) > 1 for v in yellows):
        return []
    isolated = frozenset(v for v in yellows if not (g.adjacency[v] & yset))
    results = []
    if not isolated:
        for v in bw:
            colors[v] = WHITE
        results.append(tuple(colors))
    else:
        for x in bw:
            if g.adjacency[x] == isolated:
                for v in bw:
                    colors[v] = BLACK if v == x else WHITE
                results.append(tuple(colors))
    return _validated(results, g)


def _validated(candidates: Iterable[tuple[int, ...]], g: Graph) -> list[Coloring]:
    out = []
    for t in candidates:
        c = Coloring(t)
        if validate_total(g, c) is None:
            out.append(c)
    return out


# --------------------------------------------------------------------------
# per-component solving context and coloring families


class _Ctx:
    __slots__ = ("g", "psi", "half", "deg", "m")

    def __init__(self, g: Graph, w: Optional[EdgeWeightMap]):
        self.g = g
        self.deg = [g.degree(v) for v in range(g.n)]
        self.m = g.m
        if w is None:
            self.psi: Sequence = self.deg
            self.half = g.m
        else:
            psi_map = derive_vertex_weights(g, w)
            self.psi = [psi_map[v] for v in range(g.n)]
            self.half = sum(self.psi, Fraction(0)) / 2


_Cand = tuple  # (weight, size, sorted edge tuple)


@dataclass
class _Family:
    """A bundle of valid total colorings sharing one construction branch."""

    count: int
    best: _Cand
    best_colors: tuple[int, ...]
    dim_count: int = 0
    colorings: Optional[list[tuple[int, ...]]] = None  # collect mode only


def _cand_for(ctx: _Ctx, colors: Sequence[int]) -> _Cand:
    whites = [v for v in range(ctx.g.n) if colors[v] == WHITE]
    weight = ctx.half - sum(ctx.psi[v] for v in whites)
    size = ctx.m - sum(ctx.deg[v] for v in whites)
    edges = tuple(
        e for e in ctx.g.edges
        if colors[e[0]] != WHITE and colors[e[1]] != WHITE
    )
    return (weight, size, edges)


def _single_family(ctx: _Ctx, colors: tuple[int, ...], collect: bool) -> _Family:
    _assert_valid(ctx, colors)
    return _Family(
        count=1,
        best=_cand_for(ctx, colors),
        best_colors=colors,
        dim_count=0 if BLACK in colors else 1,
        colorings=[colors] if collect else None,
    )


def _assert_valid(ctx: _Ctx, colors: Sequence[int]) -> None:
    violation = validate_total(ctx.g, Coloring(tuple(colors)))
    if violation is not None:
        raise RuntimeError(
            f"solver emitted an invalid coloring ({violation}); "
            f"this is a bug"
        )


# --------------------------------------------------------------------------
# isolated-vertex cover counting (Procedure Two) and its expansions


def procedure_two(
    g: Graph,
    s_set: Iterable[int],
    x_set: Iterable[int],
    z_set: Iterable[int],
    psi: Sequence,
):
    """Count the valid completions that keep ``s_set`` and ``x_set`` yellow
    by choosing non-white cover vertices inside ``z_set``.

    Returns ``(qty, z_prime, weight)``: the exact number of completions, a
    subset of ``z_set`` realizing one minimum-weight completion (non-white
    vertices), and its psi-weight.  ``qty == 0`` signals that no completion
    exists.  An empty ``s_set | x_set`` has exactly the all-white
    completion: ``(1, frozenset(), 0)``.
    """
    t_set = frozenset(s_set) | frozenset(x_set)
    return _two_core(g.adjacency, t_set, frozenset(z_set), psi)


def _two_core(adj, t_set: frozenset, z_set: frozenset, psi):
    if not t_set:
        return 1, frozenset(), 0
    if not z_set:
        return 0, frozenset(), 0
    qty = 1
    z_out: set[int] = set()
    weight = 0
    for tc, zc in _h_components(adj, t_set, z_set):
        if not tc:
            continue  # lone cover candidates stay white
        if not zc:
            return 0, frozenset(), 0
        z = max(sorted(zc), key=lambda v: len(adj[v] & tc))
        if len(adj[z] & tc) < len(tc):
            return 0, frozenset(), 0
        aux_qty, aux_z, aux_w = _two_core(adj, tc, zc - {z}, psi)
        if aux_qty == 0:
            z_out.add(z)
            weight += psi[z]
        else:
            qty *= 1 + aux_qty
            if psi[z] <= aux_w:
                z_out.add(z)
                weight += psi[z]
            else:
                z_out |= aux_z
                weight += aux_w
    return qty, frozenset(z_out), weight


def _two_dim(adj, t_set: frozenset, z_set: frozenset, psi, x_part: frozenset):
    """Completions that are DIMs: every cover vertex has degree one, which
    rules out covering any vertex from the X side."""
    if t_set & x_part:
        return 0, frozenset()
    qty = 1
    z_out: set[int] = set()
    for t in sorted(t_set):
        cands = sorted(
            z for z in adj[t] & z_set if len(adj[z] & t_set) == 1
        )
        if not cands:
            return 0, frozenset()
        qty *= len(cands)
        z_out.add(min(cands, key=lambda z: (psi[z], z)))
    return qty, frozenset(z_out)


def _two_expand(adj, t_set: frozenset, z_set: frozenset) -> list[frozenset]:
    """Every non-white cover set (collect mode)."""
    if not t_set:
        return [frozenset()]
    per_comp: list[list[frozenset]] = []
    for tc, zc in _h_components(adj, t_set, z_set):
        if not tc:
            continue
        if not zc:
            return []
        z = max(sorted(zc), key=lambda v: len(adj[v] & tc))
        opts: list[frozenset] = []
        if len(adj[z] & tc) == len(tc):
            opts.append(frozenset([z]))
        else:
            return []
        opts.extend(_two_expand(adj, tc, zc - {z}))
        per_comp.append(opts)
    out = []
    for combo in itertools.product(*per_comp):
        out.append(frozenset().union(*combo) if combo else frozenset())
    return out


def _h_components(adj, t_set: frozenset, z_set: frozenset):
    """Connected components of the bipartite cover graph, as (T, Z) pairs."""
    verts = t_set | z_set
    seen: set[int] = set()
    comps = []
    for start in sorted(verts):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adj[v] & verts:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        comps.append((frozenset(comp & t_set), frozenset(comp & z_set)))
    return comps


# --------------------------------------------------------------------------
# Configuration I: no black vertex on V(K)


def _config_one_families(
    ctx: _Ctx,
    white_side: frozenset[int],
    yellow_side: frozenset[int],
    dim_only: bool,
    collect: bool,
) -> list[_Family]:
    g = ctx.g
    adj = g.adjacency
    n = g.n
    kset = white_side | yellow_side
    for v in white_side:
        if adj[v] & white_side:
            return []

    x_set = frozenset(
        v for v in range(n) if v not in kset and adj[v] & white_side
    )
    sx = frozenset(yellow_side) | x_set
    g0 = frozenset(range(n)) - kset - x_set

    # X u S must be a dissociation set; degree-one members spend their
    # yellow budget on each other, so their G0 neighbourhoods go white.
    paired: set[int] = set()
    for v in sx:
        inside = adj[v] & sx
        if len(inside) > 1:
            return []
        if inside:
            paired.add(v)
    for v in sx - paired:
        if not adj[v] & g0:
            return []  # yellow vertex with white-only neighbourhood

    isolated = frozenset(v for v in g0 if not (adj[v] & g0))
    comps = _g0_components(adj, g0 - isolated)

    colors0 = [UNCOLORED] * n
    for v in white_side:
        colors0[v] = WHITE
    for v in sx:
        colors0[v] = YELLOW
    budget0 = {v: (1 if v in paired else 0) for v in sx}

    def run(colors: list[int], budget: dict[int, int],
            ops: list[tuple[int, int]]) -> bool:
        queue = list(ops)
        bumps: list[int] = []
        while queue or bumps:
            while bumps:
                s = bumps.pop()
                budget[s] += 1
                if budget[s] > 1:
                    return False
                for z in adj[s] & g0:
                    if colors[z] == UNCOLORED:
                        queue.append((z, WHITE))
            if not queue:
                break
            v, c = queue.pop()
            cur = colors[v]
            if cur != UNCOLORED:
                if cur != c:
                    return False
                continue
            colors[v] = c
            if c == WHITE:
                for u in adj[v] & g0:
                    cu = colors[u]
                    if cu == WHITE:
                        return False
                    if cu == UNCOLORED:
                        queue.append((u, YELLOW))
            elif c == YELLOW:
                if len(adj[v] & sx) != 1:
                    return False
                bumps.append(next(iter(adj[v] & sx)))
                for u in adj[v] & g0:
                    cu = colors[u]
                    if cu in (YELLOW, BLACK):
                        return False
                    if cu == UNCOLORED:
                        queue.append((u, WHITE))
            else:  # BLACK
                if dim_only:
                    return False
                for s in adj[v] & sx:
                    bumps.append(s)
                for u in adj[v] & g0:
                    cu = colors[u]
                    if cu == WHITE:
                        return False
                    if cu == UNCOLORED:
                        queue.append((u, BLACK))
        return True

    seed_ops = [
        (z, WHITE)
        for v in sorted(paired)
        for z in sorted(adj[v] & g0)
    ]
    if not run(colors0, budget0, seed_ops):
        return []

    leaves: list[tuple[list[int], dict[int, int]]] = []

    def expand(colors: list[int], budget: dict[int, int]) -> None:
        for comp in comps:
            u0 = comp[0]
            if colors[u0] != UNCOLORED:
                continue
            for c in (BLACK, YELLOW, WHITE):
                if c == BLACK and dim_only:
                    continue
                cs, bd = colors[:], dict(budget)
                if run(cs, bd, [(u0, c)]):
                    expand(cs, bd)
            return
        leaves.append((colors, budget))

    expand(colors0, budget0)

    families = []
    for colors, budget in leaves:
        families.extend(
            _finish_config_one_leaf(
                ctx, colors, budget, sx, x_set, isolated, dim_only, collect
            )
        )
    return families


def _g0_components(adj, verts: frozenset[int]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    comps = []
    for start in sorted(verts):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adj[v] & verts:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return comps


def _finish_config_one_leaf(
    ctx: _Ctx,
    colors: list[int],
    budget: dict[int, int],
    sx: frozenset[int],
    x_set: frozenset[int],
    isolated: frozenset[int],
    dim_only: bool,
    collect: bool,
) -> list[_Family]:
    g = ctx.g
    adj = g.adjacency
    t_set = frozenset(v for v in sx if budget[v] == 0)
    z_rem = frozenset(z for z in isolated if colors[z] == UNCOLORED)

    def build(cover: frozenset[int]) -> tuple[int, ...]:
        out = colors[:]
        for z in z_rem:
            if z in cover:
                out[z] = YELLOW if len(adj[z]) == 1 else BLACK
            else:
                out[z] = WHITE
        return tuple(out)

    if dim_only:
        qty, z_prime = _two_dim(adj, t_set, z_rem, ctx.psi, t_set & x_set)
        if qty == 0:
            return []
        best_colors = build(z_prime)
        _assert_valid(ctx, best_colors)
        fam = _Family(qty, _cand_for(ctx, best_colors), best_colors, qty)
    else:
        qty, z_prime, _ = _two_core(adj, t_set, z_rem, ctx.psi)
        if qty == 0:
            return []
        best_colors = build(z_prime)
        _assert_valid(ctx, best_colors)
        dim_qty = 0
        if BLACK not in colors:
            dim_qty, _zp = _two_dim(adj, t_set, z_rem, ctx.psi, t_set & x_set)
        fam = _Family(qty, _cand_for(ctx, best_colors), best_colors, dim_qty)
    if collect:
        covers = _two_expand(adj, t_set, z_rem)
        if dim_only:
            covers = [
                c for c in covers
                if all(len(adj[z]) == 1 for z in c)
            ]
        if len(covers) != fam.count:
            raise RuntimeError("cover expansion disagrees with count")
        fam.colorings = [build(c) for c in covers]
        for t in fam.colorings:
            _assert_valid(ctx, t)
    return [fam]


def config_one(g: Graph, r_side: Iterable[int], s_side: Iterable[int]) -> list[Coloring]:
    """All valid total colorings with no black vertex on V(K) under the
    orientation ``r_side`` white / ``s_side`` yellow.  Callers cover the
    other orientation by swapping the arguments."""
    ctx = _Ctx(g, None)
    fams = _config_one_families(
        ctx, frozenset(r_side), frozenset(s_side), dim_only=False, collect=True
    )
    return _families_to_colorings(fams)


def _families_to_colorings(fams: list[_Family]) -> list[Coloring]:
    out = []
    for f in fams:
        assert f.colorings is not None
        out.extend(Coloring(t) for t in f.colorings)
    out.sort(key=lambda c: c.colors)
    return out


# --------------------------------------------------------------------------
# Configuration I, DIM branch: one yellow vertex on each side of K


def _config_one_dim_families(
    ctx: _Ctx,
    r_side: frozenset[int],
    s_side: frozenset[int],
    collect: bool,
) -> list[_Family]:
    g = ctx.g
    if len(r_side) == 1 and len(s_side) == 1:
        r = next(iter(r_side))
        s = next(iter(s_side))
        colors = [WHITE] * g.n
        colors[r] = YELLOW
        colors[s] = YELLOW
        t = tuple(colors)
        if validate_total(g, Coloring(t)) is None:
            return [_single_family(ctx, t, collect)]
        return []
    if len(r_side) == 1:
        r = next(iter(r_side))
    elif len(s_side) == 1:
        r = next(iter(s_side))
    else:
        return []  # needs a spanning star
    star = g.adjacency[r]
    edges_in_star = [
        (u, v) for (u, v) in g.edges if u in star and v in star
    ]
    if not edges_in_star:
        return _dim_star_edgeless(ctx, r, star, collect)
    candidates: list[int] = []
    if len(edges_in_star) == 1:
        candidates = sorted(edges_in_star[0])
    else:
        # G[S] must be a star plus isolated vertices; its centre is the
        # unique vertex covering every edge.
        degs: dict[int, int] = {}
        for u, v in edges_in_star:
            degs[u] = degs.get(u, 0) + 1
            degs[v] = degs.get(v, 0) + 1
        centre = [v for v, d in degs.items() if d == len(edges_in_star)]
        if len(centre) == 1:
            candidates = centre
    fams = []
    for sigma in candidates:
        t = _dim_candidate_coloring(g, r, star, sigma)
        if validate_total(g, Coloring(t)) is None:
            fams.append(_single_family(ctx, t, collect))
    return fams


def _dim_candidate_coloring(
    g: Graph, r: int, star: frozenset[int], sigma: int
) -> tuple[int, ...]:
    """B = empty, Y = (V \\ S \\ N(sigma)) + {r, sigma}, W = the rest."""
    whites = (star | g.adjacency[sigma]) - {r, sigma}
    colors = [YELLOW] * g.n
    for v in whites:
        colors[v] = WHITE
    return tuple(colors)


def _dim_star_edgeless(
    ctx: _Ctx, r: int, star: frozenset[int], collect: bool
) -> list[_Family]:
    g = ctx.g
    adj = g.adjacency
    kset = star | {r}
    y1 = frozenset(
        v for v in range(g.n) if v not in kset and len(adj[v] & star) >= 2
    )
    w1 = frozenset(s for s in star if adj[s] & y1)
    excl = {r} | y1 | w1
    w2 = frozenset(
        s for s in star - w1
        if _has_adjacent_pair(g, adj[s] - excl - star)
    )
    y2 = frozenset(
        v for v in range(g.n)
        if v not in kset and v not in y1 and adj[v] & w2
    )
    s_prime = star - w1 - w2
    if not s_prime:
        return []
    yy = y1 | y2
    if any(len(adj[v] & yy) > 1 for v in yy):
        return []
    ww = w1 | w2
    if any(adj[v] & ww for v in ww):
        return []
    fams = []
    for s, weight in procedure_one(g, ctx.psi, r, star, s_prime):
        t = _dim_candidate_coloring(g, r, star, s)
        _assert_valid(ctx, t)
        fam = _single_family(ctx, t, collect)
        if fam.best[0] != weight:
            raise RuntimeError("procedure one weight mismatch")
        fams.append(fam)
    return fams


def _has_adjacent_pair(g: Graph, verts: frozenset[int]) -> bool:
    return any(g.adjacency[v] & verts for v in verts)


def config_one_dim_branch(
    g: Graph, r_side: Iterable[int], s_side: Iterable[int]
) -> list[Coloring]:
    """Valid total colorings with exactly one yellow vertex on each side of
    K and no black vertex on V(K); all of them induce DIMs."""
    ctx = _Ctx(g, None)
    fams = _config_one_dim_families(
        ctx, frozenset(r_side), frozenset(s_side), collect=True
    )
    return _families_to_colorings(fams)


def procedure_one(
    g: Graph,
    psi: Sequence,
    r: int,
    s_set: Iterable[int],
    s_prime: Iterable[int],
):
    """Linear-scan filter for the edgeless-star DIM case.

    For each candidate ``s`` it temporarily deletes the edges incident to
    ``N(s) - r`` from ``G - V(K)`` while maintaining a pendant-vertex
    counter; ``s`` qualifies exactly when every remaining outside vertex is
    a pendant, i.e. the leftover induces a perfect matching.  Returns
    ``(s, weight)`` pairs with the weight of the DIM each ``s`` induces.

    Precondition (guaranteed by the caller's S' filters): ``G[S]`` is
    edgeless and no candidate's neighbourhood contains an adjacent pair.
    """
    star = frozenset(s_set)
    kset = star | {r}
    adj = g.adjacency
    deg: dict[int, int] = {}
    pendant = 0
    for v in range(g.n):
        if v in kset:
            continue
        deg[v] = len(adj[v] - kset)
        if deg[v] == 1:
            pendant += 1
    total_psi = sum(psi[v] for v in range(g.n))
    partial_sum = Fraction(total_psi) / 2 - sum(psi[v] for v in star)
    out = []
    for s in sorted(s_prime):
        removed: list[tuple[int, int]] = []
        for w in sorted(adj[s] - {r}):
            for z in sorted(adj[w] - kset):
                deg[z] -= 1
                if deg[z] <= 1:
                    pendant += 2 * deg[z] - 1
                deg[w] -= 1
                if deg[w] <= 1:
                    pendant += 2 * deg[w] - 1
                removed.append((w, z))
        if pendant == g.n - len(star) - len(adj[s]):
            weight = partial_sum + psi[s] - sum(
                psi[x] for x in adj[s] - {r}
            )
            out.append((s, weight))
        for w, z in reversed(removed):
            if deg[w] <= 1:
                pendant -= 2 * deg[w] - 1
            deg[w] += 1
            if deg[z] <= 1:
                pendant -= 2 * deg[z] - 1
            deg[z] += 1
    return out


# --------------------------------------------------------------------------
# Configuration II: exactly one black vertex on V(K)


def _config_two_families(
    ctx: _Ctx,
    black_side: frozenset[int],
    yellow_side: frozenset[int],
    collect: bool,
) -> list[_Family]:
    g = ctx.g
    adj = g.adjacency
    n = g.n
    for v in black_side:
        if adj[v] & black_side:
            return []
    for v in yellow_side:
        if adj[v] & yellow_side:
            return []
    kset = black_side | yellow_side
    m_set = frozenset(
        v for v in range(n) if v not in kset and adj[v] & yellow_side
    )
    rm = black_side | m_set
    for v in rm:
        if adj[v] & rm:
            return []
    n_set = frozenset(range(n)) - kset - m_set
    dn = {x: len(adj[x] & n_set) for x in n_set}
    a_set = sorted(x for x in n_set if dn[x] >= 2)
    b_set = sorted(x for x in n_set if dn[x] == 0)
    c_set = sorted(
        x for x in n_set if dn[x] == 1 and len(adj[x] & rm) >= 2
    )
    fams = []
    for r in sorted(black_side):
        if any(adj[x] & kset != {r} for x in a_set):
            continue
        if any(r not in adj[x] for x in b_set):
            continue
        if any(r in adj[x] for x in c_set):
            continue
        colors = [UNCOLORED] * n
        for v in black_side:
            colors[v] = WHITE
        colors[r] = BLACK
        for v in yellow_side:
            colors[v] = YELLOW
        for v in m_set:
            colors[v] = WHITE
        for x in n_set:
            if dn[x] >= 2:
                colors[x] = BLACK
            elif dn[x] == 0 or x not in adj[r]:
                colors[x] = YELLOW
            else:
                colors[x] = BLACK
        t = tuple(colors)
        if WHITE not in t:
            continue  # the trivial PED-set is accounted globally
        if validate_total(g, Coloring(t)) is None:
            fams.append(_single_family(ctx, t, collect))
    return fams


def config_two(g: Graph, r_side: Iterable[int], s_side: Iterable[int]) -> list[Coloring]:
    """Valid total colorings whose unique black vertex on V(K) lies in
    ``r_side`` (with ``s_side`` all yellow).  Swap arguments for the other
    orientation."""
    ctx = _Ctx(g, None)
    fams = _config_two_families(
        ctx, frozenset(r_side), frozenset(s_side), collect=True
    )
    return _families_to_colorings(fams)


# --------------------------------------------------------------------------
# Configuration III: at least two black vertices on V(K) (star case)


def _config_three_families(
    ctx: _Ctx,
    r_side: frozenset[int],
    s_side: frozenset[int],
    collect: bool,
) -> list[_Family]:
    g = ctx.g
    if len(r_side) == 1:
        r = next(iter(r_side))
    elif len(s_side) == 1:
        r = next(iter(s_side))
    else:
        # both sides black throughout; that is the trivial PED-set
        return []
    return _config_three_star(ctx, r, collect)


def _config_three_star(ctx: _Ctx, r: int, collect: bool) -> list[_Family]:
    g = ctx.g
    adj = g.adjacency
    n = g.n
    star = adj[r]
    if len(star) < 2:
        return []
    kset = star | {r}
    g0 = frozenset(range(n)) - kset
    s1 = frozenset(s for s in star if adj[s] & star)
    isolated = frozenset(v for v in g0 if not (adj[v] & g0))
    comps = _g0_components(adj, g0 - isolated)

    # component types: alpha iff some star vertex sees part of the
    # component but not all of it; beta components are forced all black
    alpha: list[tuple[int, ...]] = []
    beta: list[tuple[int, ...]] = []
    for comp in comps:
        cset = frozenset(comp)
        partial = any(
            0 < len(adj[s] & cset) < len(cset) for s in star
        )
        (alpha if partial else beta).append(comp)
    for comp in alpha:
        if not _is_bipartite_local(adj, frozenset(comp)):
            return []  # forced all black, which forces the trivial PED-set

    colors0 = [UNCOLORED] * n
    colors0[r] = BLACK
    pend0: set[int] = set()

    def run(colors: list[int], pend: set[int],
            ops: list[tuple[int, int]]) -> bool:
        queue = list(ops)
        while queue:
            v, c = queue.pop()
            if c == -1:  # non-white pending mark
                cv = colors[v]
                if cv == WHITE:
                    return False
                if cv != UNCOLORED or v in pend:
                    continue
                pend.add(v)
                for u in adj[v] & star:
                    if colors[u] == UNCOLORED:
                        queue.append((u, BLACK))
                continue
            cur = colors[v]
            if cur != UNCOLORED:
                if cur != c:
                    return False
                continue
            if c == WHITE and v in pend:
                return False
            colors[v] = c
            if c == WHITE:
                for u in adj[v]:
                    cu = colors[u]
                    if cu in (WHITE, BLACK):
                        return False
                    if cu == UNCOLORED:
                        queue.append((u, YELLOW))
            elif c == YELLOW:
                if v in star:
                    for u in adj[v]:
                        if u == r:
                            continue
                        cu = colors[u]
                        if cu in (YELLOW, BLACK) or u in pend:
                            return False
                        if cu == UNCOLORED:
                            queue.append((u, WHITE))
                else:
                    if len(adj[v] & star) != 1:
                        return False
                    s = next(iter(adj[v] & star))
                    if colors[s] == YELLOW:
                        return False
                    if colors[s] == UNCOLORED:
                        queue.append((s, BLACK))
                    for u in adj[v] & g0:
                        cu = colors[u]
                        if cu in (YELLOW, BLACK):
                            return False
                        if cu == UNCOLORED:
                            queue.append((u, WHITE))
            else:  # BLACK
                for u in adj[v]:
                    if u == r:
                        continue
                    cu = colors[u]
                    if cu == WHITE:
                        return False
                    if cu != UNCOLORED:
                        continue
                    if v in star and u in g0:
                        queue.append((u, -1))
                    else:
                        queue.append((u, BLACK))
        return True

    seeds: list[tuple[int, int]] = [(s, BLACK) for s in sorted(s1)]
    for s in sorted(star - s1):
        if not adj[s] & g0:
            seeds.append((s, YELLOW))
    for comp in beta:
        seeds.append((comp[0], BLACK))
    if not run(colors0, pend0, seeds):
        return []

    leaves: list[tuple[list[int], set[int]]] = []

    def expand(colors: list[int], pend: set[int]) -> None:
        for comp in alpha:
            u0 = comp[0]
            if colors[u0] != UNCOLORED:
                continue
            for c in (YELLOW, WHITE):
                cs, pd = colors[:], set(pend)
                if run(cs, pd, [(u0, c)]):
                    expand(cs, pd)
            return
        leaves.append((colors, pend))

    expand(colors0, pend0)

    families = []
    for colors, pend in leaves:
        fam = _finish_config_three_leaf(ctx, colors, pend, star, g0, collect)
        if fam is not None:
            families.append(fam)
    return families


def _is_bipartite_local(adj, verts: frozenset[int]) -> bool:
    color: dict[int, int] = {}
    for start in verts:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adj[v] & verts:
                if u not in color:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def _finish_config_three_leaf(
    ctx: _Ctx,
    colors: list[int],
    pend: set[int],
    star: frozenset[int],
    g0: frozenset[int],
    collect: bool,
) -> Optional[_Family]:
    g = ctx.g
    adj = g.adjacency
    s2_open = sorted(v for v in star if colors[v] == UNCOLORED)
    z_open = frozenset(
        z for z in g0 if colors[z] == UNCOLORED and z not in pend
    )
    h_comps = [
        (tc, zc)
        for tc, zc in _h_components(adj, frozenset(s2_open), z_open)
        if tc
    ]
    k = len(h_comps)
    base_w_empty = WHITE not in colors
    base_s_black = any(colors[s] == BLACK for s in star)

    excl = 0
    if base_w_empty:
        excl += 1  # the all-(i) combo is the trivial PED-set
    if not base_s_black and not (k == 0 and base_w_empty):
        excl += 1  # the all-(ii) combo belongs to Configuration II
    count = (1 << k) - excl
    if count <= 0:
        return None

    # option (ii) whitens the cover side; its weight advantage over option
    # (i) is psi of that side, so (i) wins only on negative side weight
    def option_choice(zc: frozenset[int]):
        side_psi = sum(ctx.psi[z] for z in zc)
        return side_psi >= 0  # True: pick (ii)

    def build(choice: Sequence[bool]) -> tuple[int, ...]:
        out = colors[:]
        extra_pend: list[int] = []
        for (tc, zc), pick_ii in zip(h_comps, choice):
            if pick_ii:
                for s in tc:
                    out[s] = YELLOW
                for z in zc:
                    out[z] = WHITE
            else:
                for s in tc:
                    out[s] = BLACK
                for z in zc:
                    extra_pend.append(z)
        for x in sorted(pend) + extra_pend:
            if out[x] == UNCOLORED:
                out[x] = YELLOW if len(adj[x]) == 1 else BLACK
        return tuple(out)

    def combo_ok(choice: Sequence[bool]) -> bool:
        if base_w_empty and not any(choice):
            return False
        if not base_s_black and all(choice):
            return False
        return True

    best_choice = [option_choice(zc) for _, zc in h_comps]
    if not combo_ok(best_choice):
        # flip the single component that costs least
        best = None
        for i, (tc, zc) in enumerate(h_comps):
            alt = list(best_choice)
            alt[i] = not alt[i]
            if not combo_ok(alt):
                continue
            cand = _cand_for(ctx, build(alt))
            if best is None or cand < best[0]:
                best = (cand, alt)
        if best is None:
            return None
        best_choice = best[1]
    best_colors = build(best_choice)
    _assert_valid(ctx, best_colors)
    fam = _Family(count, _cand_for(ctx, best_colors), best_colors, 0)
    if collect:
        if count > _COLLECT_CAP:
            raise RuntimeError("collect mode exceeds expansion cap")
        outs = []
        for bits in itertools.product((False, True), repeat=k):
            if not combo_ok(bits):
                continue
            t = build(bits)
            _assert_valid(ctx, t)
            outs.append(t)
        if len(outs) != count:
            raise RuntimeError("combo expansion disagrees with count")
        fam.colorings = outs
    return fam


def config_three(g: Graph, r: int) -> list[Coloring]:
    """Valid total colorings with the star centre ``r`` black and at least
    one further black vertex on the star (the trivial all-black coloring is
    excluded; it is accounted globally)."""
    ctx = _Ctx(g, None)
    fams = _config_three_star(ctx, r, collect=True)
    return _families_to_colorings(fams)


# --------------------------------------------------------------------------
# per-component driver


def _component_families(
    ctx: _Ctx, dim_only: bool, collect: bool
) -> list[_Family]:
    structure = find_dominating_structure(ctx.g)
    families: list[_Family] = []
    if isinstance(structure, Cycle):
        kinds = "de" if dim_only else "bcde"
        for pattern, _ in enumerate_cycle_patterns():
            if pattern.kind not in kinds:
                continue
            for coloring in extend_cycle_coloring(
                ctx.g, structure.vertices, pattern
            ):
                if dim_only and BLACK in coloring.colors:
                    continue
                families.append(
                    _single_family(ctx, coloring.colors, collect)
                )
        return families
    assert isinstance(structure, CompleteBipartite)
    r_side, s_side = structure.r_side, structure.s_side
    for white, yellow in ((r_side, s_side), (s_side, r_side)):
        families.extend(
            _config_one_families(ctx, white, yellow, dim_only, collect)
        )
    families.extend(
        _config_one_dim_families(ctx, r_side, s_side, collect)
    )
    if not dim_only:
        for black, yellow in ((r_side, s_side), (s_side, r_side)):
            families.extend(
                _config_two_families(ctx, black, yellow, collect)
            )
        families.extend(_config_three_families(ctx, r_side, s_side, collect))
    return families


@dataclass
class _CompResult:
    ped_count: int
    dim_count: int
    best: _Cand
    dim_best: Optional[_Cand]
    colorings: Optional[list[tuple[int, ...]]] = None
    dim_colorings: Optional[list[tuple[int, ...]]] = None


def _trivial_cand(ctx: _Ctx) -> tuple[_Cand, tuple[int, ...]]:
    colors = tuple(
        BLACK if ctx.deg[v] >= 2 else YELLOW for v in range(ctx.g.n)
    )
    return _cand_for(ctx, colors), colors


def _solve_component(ctx: _Ctx, collect: bool) -> _CompResult:
    g = ctx.g
    if g.n == 1:
        cand = (ctx.half, 0, ())
        cols = [(WHITE,)] if collect else None
        return _CompResult(1, 1, cand, cand, cols, cols)
    if g.n == 2:
        cand = _cand_for(ctx, (YELLOW, YELLOW))
        cols = [(YELLOW, YELLOW)] if collect else None
        return _CompResult(1, 1, cand, cand, cols, cols)

    families = _component_families(ctx, dim_only=False, collect=collect)
    trivial, trivial_colors = _trivial_cand(ctx)
    _assert_valid(ctx, trivial_colors)
    ped_count = 1 + sum(f.count for f in families)
    best = min([trivial] + [f.best for f in families])

    dim_families = _component_families(ctx, dim_only=True, collect=collect)
    dim_count = sum(f.count for f in dim_families)
    dim_best = min((f.best for f in dim_families), default=None)

    colorings = dim_colorings = None
    if collect:
        colorings = [trivial_colors]
        for f in families:
            colorings.extend(f.colorings)
        if len(set(colorings)) != len(colorings):
            raise RuntimeError("duplicate colorings across branches")
        if len(colorings) != ped_count:
            raise RuntimeError("materialized colorings disagree with count")
        dim_colorings = []
        for f in dim_families:
            dim_colorings.extend(f.colorings)
        if len(set(dim_colorings)) != len(dim_colorings):
            raise RuntimeError("duplicate colorings across DIM branches")
    return _CompResult(ped_count, dim_count, best, dim_best,
                       colorings, dim_colorings)


# --------------------------------------------------------------------------
# public entry points


def solve(
    g: Graph,
    w: Optional[EdgeWeightMap] = None,
    *,
    collect: bool = False,
    assume_p6_free: bool = False,
    fallback_bound: int = ORACLE_FALLBACK_BOUND,
) -> SolveResult:
    """Minimum(-weight) PED-set plus exact PED and DIM counts.

    Ties for the reported minimum break by weight, then cardinality, then
    lexicographically smallest sorted edge list (within a counted family,
    by the family's deterministic representative).  Disconnected inputs are
    solved per component and composed: minima union, counts multiply.

    Inputs that are not P6-free fall back to the oracle when
    ``n <= fallback_bound`` (flagged on the result) and otherwise raise
    NotP6FreeError.
    """
    if not assume_p6_free:
        witness = find_induced_p6(g)
        if witness is not None:
            if g.n <= fallback_bound:
                return _solve_via_oracle(g, w, collect)
            raise NotP6FreeError(witness)

    if g.n == 0:
        return SolveResult(frozenset(), 0, Fraction(0), 1, 1,
                           PedClass.TRIVIAL, False,
                           [Coloring(())] if collect else None)

    comps = connected_components(g)
    results: list[tuple[_CompResult, list[int]]] = []
    for comp in comps:
        if len(comps) == 1:
            sub, back = g, list(range(g.n))
        else:
            sub, back = induced_subgraph(g, comp)
        sub_w = _project_weights(g, w, sub, back)
        ctx = _Ctx(sub, sub_w)
        results.append((_solve_component(ctx, collect), back))

    ped_count = 1
    dim_count = 1
    min_edges: set[Edge] = set()
    min_weight: Fraction | int = 0
    min_size = 0
    for res, back in results:
        ped_count *= res.ped_count
        dim_count *= res.dim_count
        weight, size, edges = res.best
        min_weight = min_weight + weight
        min_size += size
        min_edges.update(
            (min(back[u], back[v]), max(back[u], back[v])) for u, v in edges
        )
    min_ped = frozenset(min_edges)
    colorings = _compose_colorings(g, results, collect)
    return SolveResult(
        min_ped=min_ped,
        min_size=min_size,
        min_weight=Fraction(min_weight),
        ped_count=ped_count,
        dim_count=dim_count,
        ped_class=classify_ped(g, min_ped),
        oracle_fallback=False,
        colorings=colorings,
    )


def count_dims(
    g: Graph,
    w: Optional[EdgeWeightMap] = None,
    *,
    assume_p6_free: bool = False,
    fallback_bound: int = ORACLE_FALLBACK_BOUND,
) -> tuple[int, Optional[frozenset[Edge]]]:
    """Exact number of DIMs, plus one minimum-weight DIM when any exists.

    Runs the same enumeration restricted to branches that cannot place a
    black vertex: cycle patterns (d) and (e) and Configuration I.
    """
    if not assume_p6_free:
        witness = find_induced_p6(g)
        if witness is not None:
            if g.n <= fallback_bound:
                rep = oracle_solve(g, w)
                best = None
                if rep.dim_count:
                    dims = [
                        p for p in rep.all_peds
                        if _is_matching(g, p)
                    ]
                    best = min(
                        dims,
                        key=lambda p: (_ped_weight_key(g, w, p), sorted(p)),
                    )
                return rep.dim_count, best
            raise NotP6FreeError(witness)
    if g.n == 0:
        return 1, frozenset()
    total = 1
    edges: set[Edge] = set()
    for comp in connected_components(g):
        sub, back = (g, list(range(g.n))) if len(comp) == g.n else induced_subgraph(g, comp)
        sub_w = _project_weights(g, w, sub, back)
        ctx = _Ctx(sub, sub_w)
        if sub.n == 1:
            continue
        if sub.n == 2:
            total *= 1
            edges.add((back[0], back[1]))
            continue
        fams = _component_families(ctx, dim_only=True, collect=False)
        count = sum(f.count for f in fams)
        if count == 0:
            return 0, None
        total *= count
        best = min(f.best for f in fams)
        edges.update(
            (min(back[u], back[v]), max(back[u], back[v]))
            for u, v in best[2]
        )
    return total, frozenset(edges)


def _is_matching(g: Graph, p: frozenset[Edge]) -> bool:
    inc: set[int] = set()
    for u, v in p:
        if u in inc or v in inc:
            return False
        inc.add(u)
        inc.add(v)
    return True


def _ped_weight_key(g: Graph, w: Optional[EdgeWeightMap], p: frozenset[Edge]):
    if w is None:
        return (len(p), len(p))
    total = sum((w[e] for e in p), Fraction(0))
    return (total, len(p))


def _project_weights(
    g: Graph, w: Optional[EdgeWeightMap], sub: Graph, back: list[int]
) -> Optional[EdgeWeightMap]:
    if w is None:
        return None
    if sub is g:
        return w
    return EdgeWeightMap(
        sub, {(u, v): w[(back[u], back[v])] for (u, v) in sub.edges}
    )


def _solve_via_oracle(g, w, collect) -> SolveResult:
    from .oracle import enumerate_valid_colorings

    rep = oracle_solve(g, w)
    min_weight = rep.min_weight if rep.min_weight is not None else Fraction(rep.min_size)
    return SolveResult(
        min_ped=rep.min_ped,
        min_size=rep.min_size,
        min_weight=Fraction(min_weight),
        ped_count=rep.ped_count,
        dim_count=rep.dim_count,
        ped_class=classify_ped(g, rep.min_ped),
        oracle_fallback=True,
        colorings=enumerate_valid_colorings(g) if collect else None,
    )


def _compose_colorings(
    g: Graph,
    results: list[tuple[_CompResult, list[int]]],
    collect: bool,
) -> Optional[list[Coloring]]:
    if not collect:
        return None
    total = 1
    for res, _ in results:
        total *= res.ped_count
        if total > _COLLECT_CAP:
            raise RuntimeError("collect mode exceeds expansion cap")
    out = []
    for parts in itertools.product(*(res.colorings for res, _ in results)):
        colors = [UNCOLORED] * g.n
        for (res, back), part in zip(results, parts):
            for local, c in enumerate(part):
                colors[back[local]] = c
        out.append(Coloring(tuple(colors)))
    return out
