"""FPT solver for shortest non-disconnecting s-t paths.

Layered dynamic programming over edge sets: dp(i, v) holds edge sets of
s-v paths of length i whose removal keeps the graph connected.  Cells are
pruned to representative subfamilies of the graph's cographic matroid, so
cell sizes stay bounded by binomials in k instead of the path count.
Pruning is lazy (cells below the representative-size bound are kept as-is)
and exact whenever the full-rank wedge vectors are short enough; otherwise
it falls back to seeded randomized truncation.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

from .certificate import VARIANT_NONDISC, PathCertificate
from .errors import GraphNotConnected, SameEndpoints, VertexOutOfRange
from .graph import (
    EdgeSet,
    Graph,
    component_masks,
    connected_after_edge_removal,
    induced_subgraph,
    is_connected,
    mask_members,
    mask_of,
)
from .matroid import LinearMatroid, build_cographic_matroid
from .repfamily import EdgeSetFamily, representative_indices

# Cap on wedge-vector length for exact full-rank pruning; beyond it the
# solver truncates (if the rank allows) or keeps the raw family.
WEDGE_CAP = 8192


def is_legitimate(g: Graph, edge_set, s: int) -> tuple[bool, Optional[int]]:
    """Check that the edge set forms a simple path with endpoint ``s`` whose
    removal keeps g connected.  Returns (verdict, other endpoint).

    The empty set is the trivial path at ``s``.
    """
    if not (0 <= s < g.n):
        raise VertexOutOfRange(f"vertex {s} outside graph")
    mask = edge_set if isinstance(edge_set, int) else mask_of(edge_set)
    if mask == 0:
        return True, s
    deg: dict[int, int] = {}
    for eid in mask_members(mask):
        u, v = g.edges[eid]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    ends = [v for v, d in deg.items() if d == 1]
    if len(ends) != 2 or any(d > 2 for d in deg.values()) or s not in ends:
        return False, None
    # walk from s to rule out a path plus disjoint cycles
    steps = 0
    prev, at = -1, s
    while True:
        nxt = -1
        for u, eid in g.adj[at]:
            if u != prev and ((mask >> eid) & 1):
                nxt = u
                break
        if nxt < 0:
            break
        steps += 1
        prev, at = at, nxt
        if deg[at] == 1:
            break
    if steps != mask.bit_count():
        return False, None
    if not connected_after_edge_removal(g, mask):
        return False, None
    other = ends[0] if ends[1] == s else ends[1]
    return True, other


def extend(family: EdgeSetFamily, edge_id: int) -> EdgeSetFamily:
    """Grow every member by an edge; members already containing it are
    dropped (they cannot continue a longer simple path)."""
    sets = []
    preds = []
    for idx, member in enumerate(family.sets):
        if edge_id in member:
            continue
        sets.append(member | {edge_id})
        preds.append(idx)
    return EdgeSetFamily(p=family.p + 1, sets=tuple(sets),
                         predecessors=tuple(preds))


def prune_t_cut_vertex(g: Graph, s: int, t: int) -> tuple[Graph, list[int]]:
    """If t is a cut vertex, restrict to the side containing s (plus t).

    Answer-preserving for the non-disconnecting variant: edge sets inside
    one side of a cut vertex disconnect the whole graph iff they disconnect
    that side.  Returns (graph, mapping old->new); the graph is returned
    unchanged with an identity mapping when t is not a cut vertex.
    """
    _validate_endpoints(g, s, t)
    if not is_connected(g):
        raise GraphNotConnected("graph must be connected")
    comps = component_masks(g, removed=1 << t)
    if len(comps) <= 1:
        return g, list(range(g.n))
    side = next(c for c in comps if (c >> s) & 1)
    return induced_subgraph(g, side | (1 << t))


def solve_nondisconnecting(g: Graph, s: int, t: int, k: int, seed: int = 0,
                           stats: Optional[dict] = None) -> Optional[PathCertificate]:
    """Shortest non-disconnecting s-t path of length at most k, or None.

    ``seed`` feeds the randomized truncation used for pruning on dense
    graphs; ``stats``, when given a dict, is filled with per-cell family
    sizes for inspection.
    """
    _validate_endpoints(g, s, t)
    if not is_connected(g):
        raise GraphNotConnected("graph must be connected")
    if not (0 <= k < g.n * g.n):
        raise ValueError(f"k={k} outside the sanity cap [0, n^2)")
    matroid = build_cographic_matroid(g)
    if stats is not None:
        stats["rank"] = matroid.rank
        stats["k"] = k
        stats["cells"] = []
    conn_cache: dict[int, bool] = {}

    def removal_ok(mask: EdgeSet) -> bool:
        hit = conn_cache.get(mask)
        if hit is None:
            hit = connected_after_edge_removal(g, mask)
            conn_cache[mask] = hit
        return hit

    # member: (edge mask, vertex mask, parent member, appended edge id)
    layer: dict[int, list[tuple]] = {s: [(0, 1 << s, None, None)]}
    for i in range(1, k + 1):
        nxt: dict[int, list[tuple]] = {}
        for v in range(g.n):
            bit_v = 1 << v
            cands = []
            for u, eid in g.adj[v]:
                cell = layer.get(u)
                if not cell:
                    continue
                bit_e = 1 << eid
                for member in cell:
                    emask, vmask = member[0], member[1]
                    if vmask & bit_v or emask & bit_e:
                        continue
                    grown = emask | bit_e
                    if removal_ok(grown):
                        cands.append((grown, vmask | bit_v, member, eid))
            if not cands:
                continue
            kept, pruned = _prune_cell(matroid, cands, i, k, seed)
            if stats is not None:
                stats["cells"].append(
                    {"i": i, "v": v, "raw": len(cands), "kept": len(kept),
                     "pruned": pruned})
            nxt[v] = kept
        layer = nxt
        cell_t = layer.get(t)
        if cell_t:
            vertices = _reconstruct(g, cell_t[0], s)
            cert = PathCertificate.build(g, VARIANT_NONDISC, vertices,
                                         algo="repfam", seed=seed)
            if not cert.valid or cert.length != i:
                raise RuntimeError("internal error: certificate failed re-verification")
            return cert
        if not layer:
            return None
    return None


def _prune_cell(matroid: LinearMatroid, cands: list[tuple], i: int, k: int,
                seed: int) -> tuple[list[tuple], bool]:
    r_tr = min(matroid.rank, k)
    # legitimate sets are independent, so i never exceeds the rank
    if len(cands) <= math.comb(r_tr, i):
        return cands, False
    if i == r_tr:
        return cands[:1], True  # q_eff = 0: any single member represents all
    if math.comb(matroid.rank, i) <= WEDGE_CAP:
        q = matroid.rank - i  # exact at full rank, no randomness
    elif math.comb(k, i) <= WEDGE_CAP:
        q = k - i  # seeded truncation to rank k
    else:
        return cands, False
    sets = [mask_members(c[0]) for c in cands]
    kept = representative_indices(matroid, sets, q, seed=seed)
    return [cands[j] for j in kept], True


def _reconstruct(g: Graph, member: tuple, s: int) -> list[int]:
    eids = []
    cur = member
    while cur[3] is not None:
        eids.append(cur[3])
        cur = cur[2]
    eids.reverse()
    verts = [s]
    at = s
    for eid in eids:
        a, b = g.edges[eid]
        at = b if a == at else a
        verts.append(at)
    return verts


def _validate_endpoints(g: Graph, s: int, t: int) -> None:
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise VertexOutOfRange(f"endpoints ({s}, {t}) outside 0..{g.n - 1}")
    if s == t:
        raise SameEndpoints("s and t must differ")
