"""Immutable undirected simple graphs with bitmask-based set operations.

Vertices are 0..n-1 and edges carry stable ids 0..m-1 (order of appearance).
Vertex and edge sets are plain Python ints used as bitmasks, which keeps
removal tests allocation-free and lets results be shared safely.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Optional

from .errors import (
    DuplicateEdge,
    MalformedLine,
    NotChordal,
    NotConnectedSet,
    SelfLoop,
    VertexOutOfRange,
)

# Type aliases for readability; both are int bitmasks.
VertexSet = int
EdgeSet = int


def mask_of(ids: Iterable[int]) -> int:
    """Bitmask with the given bit positions set."""
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def mask_members(mask: int) -> list[int]:
    """Sorted list of bit positions set in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph, immutable after construction."""

    __slots__ = ("n", "m", "edges", "adj", "adj_mask", "_edge_index", "full_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edge_list: list[tuple[int, int]] = []
        edge_index: dict[tuple[int, int], int] = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        adj_mask = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in edge_index:
                raise DuplicateEdge(f"duplicate edge {key}")
            eid = len(edge_list)
            edge_index[key] = eid
            edge_list.append(key)
            adj[u].append((v, eid))
            adj[v].append((u, eid))
            adj_mask[u] |= 1 << v
            adj_mask[v] |= 1 << u
        self.n = n
        self.m = len(edge_list)
        self.edges = tuple(edge_list)
        # neighbor lists sorted by vertex id for deterministic traversal order
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.adj_mask = tuple(adj_mask)
        self._edge_index = edge_index
        self.full_mask = (1 << n) - 1

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self._edge_index.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_id(u, v) is not None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(u for u, _ in self.adj[v])

    def closed_neighborhood_mask(self, v: int) -> int:
        return self.adj_mask[v] | (1 << v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))


class Path:
    """Simple path given as a vertex sequence, validated against its graph."""

    __slots__ = ("vertices", "edge_ids")

    def __init__(self, g: Graph, vertices: Iterable[int]):
        vs = tuple(vertices)
        if not vs:
            raise ValueError("path needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError("path vertices must be distinct")
        eids = []
        for a, b in zip(vs, vs[1:]):
            eid = g.edge_id(a, b)
            if eid is None:
                raise ValueError(f"consecutive vertices {a}, {b} not adjacent")
            eids.append(eid)
        if any(not (0 <= v < g.n) for v in vs):
            raise ValueError("path vertex outside graph")
        self.vertices = vs
        self.edge_ids = tuple(eids)

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    def vertex_mask(self) -> int:
        return mask_of(self.vertices)

    def edge_mask(self) -> int:
        return mask_of(self.edge_ids)

    def __repr__(self) -> str:
        return f"Path({'-'.join(map(str, self.vertices))})"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header line ``n m`` followed by m lines
    ``u v``.  Lines starting with ``#`` and blank lines are ignored; CRLF
    accepted."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise MalformedLine("missing header line")
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedLine(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedLine(f"header must be 'n m', got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise MalformedLine("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise MalformedLine(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"edge line must be 'u v', got {line!r}") from None
        edges.append((u, v))
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph (stable edge order)."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Unweighted shortest-path distances from ``source``; math.inf where
    unreachable."""
    if not (0 <= source < g.n):
        raise VertexOutOfRange(f"source {source} outside 0..{g.n - 1}")
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        dv = dist[v]
        for u, _ in g.adj[v]:
            if dist[u] == math.inf:
                dist[u] = dv + 1
                q.append(u)
    return dist


def is_connected(g: Graph) -> bool:
    """Whole-graph connectivity; the empty and one-vertex graphs count as
    connected."""
    return connected_after_vertex_removal(g, 0)


def connected_after_vertex_removal(g: Graph, removed: VertexSet) -> bool:
    """True iff G - removed has at most one component.  Removing everything
    leaves the empty graph, which counts as connected."""
    remaining = g.full_mask & ~removed
    if remaining == 0:
        return True
    start = remaining & -remaining
    visited = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= g.adj_mask[low.bit_length() - 1]
        frontier = nxt & remaining & ~visited
        visited |= frontier
    return visited == remaining


def connected_after_edge_removal(g: Graph, removed: EdgeSet) -> bool:
    """True iff deleting the given edges leaves all n vertices in one
    component."""
    if g.n <= 1:
        return True
    overrides: dict[int, int] = {}
    mask = removed
    while mask:
        low = mask & -mask
        mask ^= low
        u, v = g.edges[low.bit_length() - 1]
        overrides[u] = overrides.get(u, g.adj_mask[u]) & ~(1 << v)
        overrides[v] = overrides.get(v, g.adj_mask[v]) & ~(1 << u)
    visited = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            w = low.bit_length() - 1
            nxt |= overrides.get(w, g.adj_mask[w])
        frontier = nxt & ~visited
        visited |= frontier
    return visited == g.full_mask


def components(g: Graph, removed: VertexSet = 0) -> list[list[int]]:
    """Connected components of G - removed as sorted vertex lists, ordered by
    smallest member."""
    remaining = g.full_mask & ~removed
    out = []
    while remaining:
        start = remaining & -remaining
        visited = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= g.adj_mask[low.bit_length() - 1]
            frontier = nxt & remaining & ~visited
            visited |= frontier
        out.append(mask_members(visited))
        remaining &= ~visited
    return out


def component_masks(g: Graph, removed: VertexSet = 0) -> list[int]:
    """Like components() but returning bitmasks."""
    remaining = g.full_mask & ~removed
    out = []
    while remaining:
        start = remaining & -remaining
        visited = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= g.adj_mask[low.bit_length() - 1]
            frontier = nxt & remaining & ~visited
            visited |= frontier
        out.append(visited)
        remaining &= ~visited
    return out


def induced_subgraph(g: Graph, keep: VertexSet) -> tuple[Graph, list[int]]:
    """Induced subgraph on the vertices in ``keep``.

    Returns (subgraph, mapping) where mapping[old] is the new id, or -1 for
    dropped vertices.  Kept vertices are renumbered in increasing old-id
    order; edges keep their relative order.
    """
    mapping = [-1] * g.n
    new_id = 0
    for v in mask_members(keep):
        mapping[v] = new_id
        new_id += 1
    edges = []
    for u, v in g.edges:
        if mapping[u] >= 0 and mapping[v] >= 0:
            edges.append((mapping[u], mapping[v]))
    return Graph(new_id, edges), mapping


def contract_connected_set(g: Graph, cset: VertexSet) -> tuple[Graph, int, list[int]]:
    """Contract the connected vertex set ``cset`` into a single vertex.

    The result is re-simplified: parallel edges are merged and loops dropped.
    Returns (graph, v_C, mapping) where mapping[old] = new id.  New ids follow
    increasing old-id order, with every member of the set mapping to the slot
    of its smallest member.
    """
    if cset == 0:
        raise NotConnectedSet("cannot contract the empty set")
    if cset & ~g.full_mask:
        raise VertexOutOfRange("contraction set outside vertex range")
    if not _subset_connected(g, cset):
        raise NotConnectedSet("induced subgraph on the set is not connected")
    mapping = [-1] * g.n
    v_c = -1
    new_id = 0
    for v in range(g.n):
        if (cset >> v) & 1:
            if v_c < 0:
                v_c = new_id
                new_id += 1
            mapping[v] = v_c
        else:
            mapping[v] = new_id
            new_id += 1
    seen = set()
    edges = []
    for u, v in g.edges:
        a, b = mapping[u], mapping[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
    return Graph(new_id, edges), v_c, mapping


def _subset_connected(g: Graph, subset: VertexSet) -> bool:
    # connectivity of g[subset]
    if subset == 0:
        return True
    start = subset & -subset
    visited = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= g.adj_mask[low.bit_length() - 1]
        frontier = nxt & subset & ~visited
        visited |= frontier
    return visited == subset


# --- chordality -----------------------------------------------------------

def lex_bfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS visit order; ties broken towards the smallest id."""
    n = g.n
    label: list[list[int]] = [[] for _ in range(n)]
    numbered = [False] * n
    order = []
    for step in range(n):
        best = -1
        for u in range(n):
            if not numbered[u] and (best < 0 or label[u] > label[best]):
                best = u
        order.append(best)
        numbered[best] = True
        stamp = n - step
        for w, _ in g.adj[best]:
            if not numbered[w]:
                label[w].append(stamp)
    return order


def perfect_elimination_order(g: Graph) -> list[int]:
    """Perfect elimination ordering of a chordal graph (first vertex is
    eliminated first).  Raises NotChordal, with an induced >=4-cycle witness
    when one can be located."""
    order = lex_bfs_order(g)
    peo = order[::-1]
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    for v in peo:
        later = [w for w, _ in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=lambda w: pos[w])
        pmask = g.closed_neighborhood_mask(parent)
        for w in later:
            if w != parent and not ((pmask >> w) & 1):
                raise NotChordal(witness=_hole_witness(g, v, parent, w))
    return peo


def _hole_witness(g: Graph, v: int, p: int, w: int) -> Optional[tuple[int, ...]]:
    # v adjacent to both p and w; p,w non-adjacent.  A shortest p-w path
    # avoiding N[v] - {p,w} closes an induced cycle of length >= 4 through v.
    blocked = (g.closed_neighborhood_mask(v) & ~(1 << p)) & ~(1 << w)
    prev = {p: -1}
    q = deque([p])
    while q:
        x = q.popleft()
        if x == w:
            break
        for y, _ in g.adj[x]:
            if y in prev or ((blocked >> y) & 1):
                continue
            prev[y] = x
            q.append(y)
    if w not in prev:
        return None
    path = []
    x = w
    while x != -1:
        path.append(x)
        x = prev[x]
    path.reverse()  # p .. w
    return tuple([v] + path)


def is_chordal(g: Graph) -> bool:
    try:
        perfect_elimination_order(g)
        return True
    except NotChordal:
        return False
