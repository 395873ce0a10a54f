"""Brute-force reference solvers.

Ground truth for the property suites and the solver of last resort for small
(or contracted) instances.  Deliberately independent of the matroid and
representative-family machinery.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .certificate import VARIANT_NONSEP, PathCertificate
from .errors import ExplicitBudgetExceeded, GraphNotConnected, SameEndpoints
from .graph import (
    Graph,
    Path,
    bfs_distances,
    connected_after_edge_removal,
    connected_after_vertex_removal,
    is_connected,
)
from .reductions import Instance

# refuse instances that would enumerate for hours
BUDGET_N = 20
BUDGET_LEN = 12


def enumerate_paths(g: Graph, s: int, t: int, max_len: int) -> Iterator[Path]:
    """All simple s-t paths of length <= max_len, in lexicographic order of
    their vertex sequences."""
    if s == t:
        raise SameEndpoints("s and t must differ")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError(f"endpoints ({s}, {t}) outside graph")
    if g.n > BUDGET_N and max_len > BUDGET_LEN:
        raise ExplicitBudgetExceeded(
            f"n={g.n} with max_len={max_len} exceeds the enumeration budget")
    verts = [s]
    eids: list[int] = []
    on_path = 1 << s

    def walk(v: int) -> Iterator[Path]:
        nonlocal on_path
        for u, eid in g.adj[v]:
            if (on_path >> u) & 1:
                continue
            verts.append(u)
            eids.append(eid)
            if u == t:
                yield _make_path(tuple(verts), tuple(eids))
            elif len(eids) < max_len:
                on_path |= 1 << u
                yield from walk(u)
                on_path &= ~(1 << u)
            verts.pop()
            eids.pop()
        return

    if max_len >= 1:
        yield from walk(s)


def _make_path(vertices: tuple[int, ...], edge_ids: tuple[int, ...]) -> Path:
    # skip Path's validation: the DFS only builds valid simple paths
    p = object.__new__(Path)
    p.vertices = vertices
    p.edge_ids = edge_ids
    return p


def brute_solve(inst: Instance) -> Optional[PathCertificate]:
    """Minimum-length qualifying path by exhaustive enumeration, or None.

    Ties are broken by enumeration order.  A qualifying path matching the
    plain BFS distance ends the search early; nothing shorter can exist.
    """
    g = inst.graph
    if not is_connected(g):
        raise GraphNotConnected("instance graph must be connected")
    lower = bfs_distances(g, inst.s)[inst.t]
    if lower > inst.k:
        return None
    best: Optional[Path] = None
    nonsep = inst.variant == VARIANT_NONSEP
    for path in enumerate_paths(g, inst.s, inst.t, inst.k):
        if best is not None and path.length >= best.length:
            continue
        ok = (connected_after_vertex_removal(g, path.vertex_mask()) if nonsep
              else connected_after_edge_removal(g, path.edge_mask()))
        if ok:
            best = path
            if best.length == lower:
                break
    if best is None:
        return None
    cert = PathCertificate.build(g, inst.variant, best.vertices, algo="brute")
    assert cert.valid
    return cert
