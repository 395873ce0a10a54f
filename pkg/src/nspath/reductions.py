"""Instance constructions used as correctness fixtures and hard-instance
sources: pendant attachment, the multicolored-clique gadget, OR-composition
of non-disconnecting instances, and ball contraction.

All constructions number vertices deterministically (documented per
function) so generated fixtures are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import VARIANT_NONDISC, VARIANT_NONSEP, VARIANTS
from .errors import (
    BadPartition,
    EmptyList,
    GraphNotConnected,
    MixedK,
    MixedVariants,
)
from .graph import Graph, bfs_distances, component_masks, is_connected, mask_members
from .nondisc import prune_t_cut_vertex


@dataclass(frozen=True)
class Instance:
    """One solver problem: graph, endpoints, length budget, variant."""

    graph: Graph
    s: int
    t: int
    k: int
    variant: str

    def __post_init__(self):
        g = self.graph
        if not (0 <= self.s < g.n and 0 <= self.t < g.n):
            raise ValueError("endpoints outside graph")
        if self.s == self.t:
            raise ValueError("s and t must differ")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")


@dataclass(frozen=True)
class MccInstance:
    """Multicolored-clique instance: a graph plus an ordered partition of its
    vertices into color classes."""

    graph: Graph
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for part in self.parts:
            if not part:
                raise BadPartition("empty part")
            for v in part:
                if not (0 <= v < self.graph.n) or v in seen:
                    raise BadPartition("parts must partition the vertex set")
                seen.add(v)
        if len(seen) != self.graph.n:
            raise BadPartition("parts must cover every vertex")


def add_pendant(g: Graph, s: int) -> tuple[Graph, int]:
    """Attach a new degree-1 vertex to ``s``; the pendant gets id n."""
    if not (0 <= s < g.n):
        raise ValueError(f"vertex {s} outside graph")
    return Graph(g.n + 1, list(g.edges) + [(s, g.n)]), g.n


def mcc_gadget(inst: MccInstance) -> Instance:
    """Non-separating path instance equivalent to a multicolored-clique
    question.

    With color classes V_1..V_k, the gadget keeps edges between vertices at
    color distance <= 1, deletes edges at color distance >= 2, and replaces
    each non-edge at color distance >= 2 by a length-2 detour through a fresh
    midpoint guarded by a pendant.  A hub adjacent to every original vertex
    (with its own pendant) keeps everything else together.  The resulting
    question is for a path of length at most k + 1 from a source joined to
    V_1 to a sink joined to V_k.

    Vertex numbering: originals, detour midpoints (by vertex pair), their
    pendants (same order), hub pendant, source, sink, hub.

    The equivalence needs at least two vertices of the gadget to survive any
    candidate path; the hub and its pendant guarantee that for every valid
    partition, so no extra size gate is imposed beyond partition validity
    (which already forces n >= k).
    """
    g = inst.graph
    k = len(inst.parts)
    color = [0] * g.n
    for ci, part in enumerate(inst.parts):
        for v in part:
            color[v] = ci

    n_orig = g.n
    midpoint: dict[tuple[int, int], int] = {}
    next_id = n_orig
    for u in range(n_orig):
        for v in range(u + 1, n_orig):
            if abs(color[u] - color[v]) >= 2 and not g.has_edge(u, v):
                midpoint[(u, v)] = next_id
                next_id += 1
    mid_pendant = {pair: next_id + i for i, pair in enumerate(sorted(midpoint))}
    next_id += len(midpoint)
    hub_pendant = next_id
    s = next_id + 1
    t = next_id + 2
    hub = next_id + 3

    edges: list[tuple[int, int]] = []
    for u, v in g.edges:
        if abs(color[u] - color[v]) <= 1:
            edges.append((u, v))
    for v in inst.parts[0]:
        edges.append((s, v))
    for v in inst.parts[-1]:
        edges.append((t, v))
    for pair in sorted(midpoint):
        u, v = pair
        w = midpoint[pair]
        edges.append((u, w))
        edges.append((w, v))
        edges.append((w, mid_pendant[pair]))
    for v in range(n_orig):
        edges.append((hub, v))
    edges.append((hub, hub_pendant))
    return Instance(Graph(hub + 1, edges), s=s, t=t, k=k + 1,
                    variant=VARIANT_NONSEP)


def or_composition(instances: list[Instance]) -> Instance:
    """Combine non-disconnecting instances sharing the same k into one whose
    answer at k + 1 is the OR of the component answers.

    Each component is first restricted so its sink is not a cut vertex, the
    sinks are identified into one vertex, and a fresh source is joined to
    every component source.  Vertex numbering: each component's non-sink
    vertices in order, then the shared sink, then the source.

    A single instance is duplicated first: with one component the source
    edge would be a bridge and every composed path would be disconnecting,
    so the disjunction is taken over two copies instead (same OR).
    """
    if not instances:
        raise EmptyList("need at least one instance")
    if len(instances) == 1:
        instances = [instances[0], instances[0]]
    variants = {inst.variant for inst in instances}
    if len(variants) != 1:
        raise MixedVariants(f"mixed variants {sorted(variants)}")
    if variants.pop() != VARIANT_NONDISC:
        raise ValueError("composition is defined for the non-disconnecting variant")
    ks = {inst.k for inst in instances}
    if len(ks) != 1:
        raise MixedK(f"mixed parameters {sorted(ks)}")
    k = ks.pop()

    pruned = []
    for inst in instances:
        if not is_connected(inst.graph):
            raise GraphNotConnected("component instance must be connected")
        sub, mapping = prune_t_cut_vertex(inst.graph, inst.s, inst.t)
        pruned.append((sub, mapping[inst.s], mapping[inst.t]))

    total = sum(sub.n - 1 for sub, _, _ in pruned)
    t_id = total
    s_id = total + 1
    edges: list[tuple[int, int]] = []
    source_edges: list[tuple[int, int]] = []
    offset = 0
    for sub, si, ti in pruned:
        local = [0] * sub.n
        nid = offset
        for v in range(sub.n):
            if v == ti:
                local[v] = t_id
            else:
                local[v] = nid
                nid += 1
        for u, v in sub.edges:
            edges.append((local[u], local[v]))
        source_edges.append((s_id, local[si]))
        offset += sub.n - 1
    edges.extend(source_edges)
    return Instance(Graph(s_id + 1, edges), s=s_id, t=t_id, k=k + 1,
                    variant=VARIANT_NONDISC)


def ball_contraction(g: Graph, s: int, k: int) -> tuple[Graph, list[int]]:
    """Contract every component outside the radius-k ball around ``s`` to a
    single vertex.

    Short non-separating paths from s cannot reach the contracted parts, and
    contracting a connected set off the path does not change whether the
    path separates the graph, so answers for lengths <= k are preserved.
    The result has diameter at most 2k + 2.  Returns (graph, mapping
    old->new); ball vertices keep increasing order, then one vertex per
    contracted component (by smallest member).
    """
    if not is_connected(g):
        raise GraphNotConnected("graph must be connected")
    if not (0 <= s < g.n):
        raise ValueError(f"vertex {s} outside graph")
    if k < 0:
        raise ValueError("k must be non-negative")
    dist = bfs_distances(g, s)
    ball = 0
    for v in range(g.n):
        if dist[v] <= k:
            ball |= 1 << v
    if ball == g.full_mask:
        return g, list(range(g.n))
    mapping = [-1] * g.n
    nid = 0
    for v in mask_members(ball):
        mapping[v] = nid
        nid += 1
    for comp in component_masks(g, removed=ball):
        for v in mask_members(comp):
            mapping[v] = nid
        nid += 1
    seen = set()
    edges = []
    for u, v in g.edges:
        a, b = mapping[u], mapping[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        if key not in seen:
            seen.add(key)
            edges.append(key)
    return Graph(nid, edges), mapping
