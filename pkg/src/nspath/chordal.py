"""Non-separating shortest s-t paths on chordal graphs.

Only paths of length exactly dist(s, t) are considered; for longer budgets
the problem is hard even on chordal inputs.  The algorithm classifies the
vertices into distance layers, collects the minimal separators (sizes 1 and
2; larger ones cannot sit inside a shortest path of a chordal graph) that a
valid path must avoid, removes them, and takes any surviving shortest path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .certificate import VARIANT_NONSEP, PathCertificate
from .errors import GraphNotConnected, NoBranchLayer, SameEndpoints, VertexOutOfRange
from .graph import (
    Graph,
    VertexSet,
    bfs_distances,
    component_masks,
    connected_after_vertex_removal,
    is_connected,
    mask_of,
    perfect_elimination_order,
)


@dataclass(frozen=True)
class LayerDecomposition:
    """Distance layers between s and t.

    Layer i holds the vertices at distance i from s and d - i from t, i.e.
    the vertices lying on some shortest s-t path.  ``ell``/``r`` are the
    first/last indices whose layer has more than one vertex (None when every
    layer is a singleton, i.e. the shortest path is unique).
    """

    d: int
    layers: tuple[tuple[int, ...], ...]
    union_mask: VertexSet
    ell: Optional[int]
    r: Optional[int]


@dataclass(frozen=True)
class ForbiddenSets:
    """Minimal separators that a valid shortest path must not contain:
    single vertices and edges."""

    f1: frozenset[int]
    f2: frozenset[tuple[int, int]]


def layered_decomposition(g: Graph, s: int, t: int) -> LayerDecomposition:
    _validate(g, s, t)
    ds = bfs_distances(g, s)
    dt = bfs_distances(g, t)
    if math.isinf(ds[t]):
        raise GraphNotConnected("t unreachable from s")
    d = int(ds[t])
    layers: list[list[int]] = [[] for _ in range(d + 1)]
    for v in range(g.n):
        if ds[v] + dt[v] == d:
            layers[int(ds[v])].append(v)
    ell = None
    r = None
    for i, layer in enumerate(layers):
        if len(layer) > 1:
            if ell is None:
                ell = i
            r = i
    union = mask_of(v for layer in layers for v in layer)
    return LayerDecomposition(d=d, layers=tuple(tuple(l) for l in layers),
                              union_mask=union, ell=ell, r=r)


def is_minimal_separator(g: Graph, sep: VertexSet, a: int, b: int) -> bool:
    """Component criterion for minimal a-b separators: a and b fall into
    different components of G - S and every vertex of S has a neighbor in
    both of those components."""
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise VertexOutOfRange(f"endpoints ({a}, {b}) outside graph")
    if a == b:
        raise ValueError("a and b must differ")
    if (sep >> a) & 1 or (sep >> b) & 1:
        raise ValueError("separator may not contain a or b")
    comps = component_masks(g, removed=sep)
    comp_a = comp_b = 0
    for c in comps:
        if (c >> a) & 1:
            comp_a = c
        if (c >> b) & 1:
            comp_b = c
    if comp_a == comp_b:
        return False
    rest = sep
    while rest:
        low = rest & -rest
        rest ^= low
        nbrs = g.adj_mask[low.bit_length() - 1]
        if not (nbrs & comp_a) or not (nbrs & comp_b):
            return False
    return True


def forbidden_separators(g: Graph, layers: LayerDecomposition) -> ForbiddenSets:
    """Size-1 and size-2 minimal a-b separators with a in the first branch
    layer and b outside the layer union or in the last branch layer.

    Size-2 candidates are restricted to edges: minimal separators of chordal
    graphs are cliques, so nothing else fits inside a shortest path.
    """
    if layers.ell is None:
        raise NoBranchLayer("every layer is a singleton")
    dl_mask = mask_of(layers.layers[layers.ell])
    target_mask = (g.full_mask & ~layers.union_mask) | mask_of(layers.layers[layers.r])

    def forbidden(sep: VertexSet) -> bool:
        comps = component_masks(g, removed=sep)
        if len(comps) < 2:
            return False
        verts = []
        rest = sep
        while rest:
            low = rest & -rest
            rest ^= low
            verts.append(low.bit_length() - 1)
        full_adj = [c for c in comps
                    if all(g.adj_mask[x] & c for x in verts)]
        for ca in full_adj:
            if not (ca & dl_mask):
                continue
            for cb in full_adj:
                if cb is not ca and (cb & target_mask):
                    return True
        return False

    f1 = frozenset(v for v in range(g.n) if forbidden(1 << v))
    f2 = frozenset((u, v) for u, v in g.edges
                   if forbidden((1 << u) | (1 << v)))
    return ForbiddenSets(f1=f1, f2=f2)


def solve_chordal_nonsep(g: Graph, s: int, t: int) -> Optional[PathCertificate]:
    """Non-separating s-t path of length exactly dist(s, t) in a chordal
    graph, or None when no shortest path qualifies."""
    _validate(g, s, t)
    if not is_connected(g):
        raise GraphNotConnected("graph must be connected")
    perfect_elimination_order(g)  # raises NotChordal on bad input
    layers = layered_decomposition(g, s, t)
    if layers.ell is None:
        # unique shortest path: the layer singletons in order
        vertices = [layer[0] for layer in layers.layers]
        if connected_after_vertex_removal(g, mask_of(vertices)):
            return _certify(g, vertices)
        return None
    banned = forbidden_separators(g, layers)
    removed_vertices = mask_of(banned.f1)
    if (removed_vertices >> s) & 1 or (removed_vertices >> t) & 1:
        return None
    removed_edges = {g.edge_id(u, v) for u, v in banned.f2}
    dist, parent = _filtered_bfs(g, s, removed_vertices, removed_edges)
    if dist[t] != layers.d:
        return None
    vertices = []
    at = t
    while at != -1:
        vertices.append(at)
        at = parent[at]
    vertices.reverse()
    return _certify(g, vertices)


def _certify(g: Graph, vertices) -> PathCertificate:
    cert = PathCertificate.build(g, VARIANT_NONSEP, vertices, algo="chordal")
    if not cert.valid:
        raise RuntimeError("internal error: certificate failed re-verification")
    return cert


def _filtered_bfs(g: Graph, s: int, removed_vertices: VertexSet,
                  removed_edges: set) -> tuple[list, list]:
    from collections import deque

    dist = [math.inf] * g.n
    parent = [-1] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        v = q.popleft()
        for u, eid in g.adj[v]:
            if (removed_vertices >> u) & 1 or eid in removed_edges:
                continue
            if math.isinf(dist[u]):
                dist[u] = dist[v] + 1
                parent[u] = v
                q.append(u)
    return dist, parent


def _validate(g: Graph, s: int, t: int) -> None:
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise VertexOutOfRange(f"endpoints ({s}, {t}) outside 0..{g.n - 1}")
    if s == t:
        raise SameEndpoints("s and t must differ")
