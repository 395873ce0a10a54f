"""Shared test utilities: small graph builders, random generators, and
definition-level reference checks kept independent of the package internals.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

import nspath as ns


# --- builders ---------------------------------------------------------------

def from_nx(nxg) -> ns.Graph:
    nodes = sorted(nxg.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return ns.Graph(len(nodes), [(idx[u], idx[v]) for u, v in nxg.edges()])


def k2() -> ns.Graph:
    return ns.Graph(2, [(0, 1)])


def c4() -> ns.Graph:
    return ns.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def star3() -> ns.Graph:
    # center 0, leaves 1..3
    return ns.Graph(4, [(0, 1), (0, 2), (0, 3)])


def diamond() -> ns.Graph:
    # s=0, t=3 nonadjacent; 1, 2 adjacent to everything
    return ns.Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def complete(n: int) -> ns.Graph:
    return ns.Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> ns.Graph:
    return ns.Graph(n, [(i, i + 1) for i in range(n - 1)])


@lru_cache(maxsize=None)
def atlas_connected(min_n: int = 2, max_n: int = 7) -> tuple[ns.Graph, ...]:
    """All connected graphs with min_n <= n <= max_n, one per isomorphism
    class (networkx atlas)."""
    out = []
    for nxg in graph_atlas_g():
        if min_n <= nxg.number_of_nodes() <= max_n and nx.is_connected(nxg):
            out.append(from_nx(nxg))
    return tuple(out)


def random_connected(rng: random.Random, n: int, m: int) -> ns.Graph:
    edges = set()
    order = list(range(1, n))
    rng.shuffle(order)
    attached = [0]
    for v in order:
        u = rng.choice(attached)
        edges.add((min(u, v), max(u, v)))
        attached.append(v)
    cap = n * (n - 1) // 2
    target = min(m, cap)
    while len(edges) < target:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return ns.Graph(n, sorted(edges))


def random_ktree(rng: random.Random, n: int, kt: int) -> ns.Graph:
    base = min(kt + 1, n)
    edges = set(itertools.combinations(range(base), 2))
    kcliques = list(itertools.combinations(range(base), min(kt, base)))
    for v in range(base, n):
        q = kcliques[rng.randrange(len(kcliques))]
        for u in q:
            edges.add((min(u, v), max(u, v)))
        for x in q:
            kcliques.append(tuple(sorted((set(q) - {x}) | {v})))
    return ns.Graph(n, sorted(edges))


def random_chordal(rng: random.Random, min_n: int = 5, max_n: int = 25) -> ns.Graph:
    """Connected chordal sample: random induced piece of a random k-tree,
    chordality re-verified against networkx."""
    while True:
        kt = rng.randint(1, 4)
        n = rng.randint(max(min_n, kt + 2), max_n)
        tree = random_ktree(rng, n, kt)
        keep = [v for v in range(n) if rng.random() < 0.8]
        if len(keep) < min_n:
            continue
        sub, _ = ns.induced_subgraph(tree, ns.mask_of(keep))
        comps = ns.components(sub)
        comp = max(comps, key=len)
        if len(comp) < min_n:
            continue
        g, _ = ns.induced_subgraph(sub, ns.mask_of(comp))
        assert nx.is_chordal(to_nx(g))
        return g


def to_nx(g: ns.Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


# --- definition-level reference checks ---------------------------------------

def has_induced_cycle_ge4(g: ns.Graph) -> bool:
    """Brute chordality oracle: some vertex subset of size >= 4 induces a
    cycle (all degrees exactly 2 and connected)."""
    for size in range(4, g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            vset = set(sub)
            degs = [sum(1 for u, _ in g.adj[v] if u in vset) for v in sub]
            if any(d != 2 for d in degs):
                continue
            mask = ns.mask_of(sub)
            induced, _ = ns.induced_subgraph(g, mask)
            if len(ns.components(induced)) == 1:
                return True
    return False


def ham_path_exists(g: ns.Graph, s: int, t: int) -> bool:
    n = g.n
    if s == t:
        return n == 1
    seen = 1 << s

    def walk(v: int, cnt: int) -> bool:
        nonlocal seen
        if cnt == n:
            return v == t
        for u, _ in g.adj[v]:
            if not (seen >> u) & 1:
                if u == t and cnt + 1 < n:
                    continue
                seen |= 1 << u
                if walk(u, cnt + 1):
                    return True
                seen &= ~(1 << u)
        return False

    return walk(s, 1)


def multicolored_clique_exists(inst: ns.MccInstance) -> bool:
    g = inst.graph
    for combo in itertools.product(*inst.parts):
        if all(g.has_edge(a, b) for a, b in itertools.combinations(combo, 2)):
            return True
    return False


def separates(g: ns.Graph, sep: set[int], a: int, b: int) -> bool:
    mask = ns.mask_of(sep)
    for comp in ns.components(g, removed=mask):
        if a in comp:
            return b not in comp
    return True


def is_minimal_separator_bruteforce(g: ns.Graph, sep: set[int], a: int, b: int) -> bool:
    """Inclusion-wise definition: separates, and no proper subset does."""
    if a in sep or b in sep:
        return False
    if not separates(g, sep, a, b):
        return False
    for x in sep:
        if separates(g, sep - {x}, a, b):
            return False
    return True


def induced_paths(g: ns.Graph, u: int, v: int):
    """All induced u-v paths (as vertex tuples)."""
    path = [u]

    def walk(at: int):
        if at == v:
            yield tuple(path)
            return
        for nxt, _ in g.adj[at]:
            if nxt in path:
                continue
            # induced: the new vertex may only touch the current endpoint
            if any(g.has_edge(nxt, w) for w in path[:-1]):
                continue
            path.append(nxt)
            yield from walk(nxt)
            path.pop()

    yield from walk(u)


def best_qualifying_lengths(g: ns.Graph, s: int, cap: int, variant: str) -> dict[int, int]:
    """For each endpoint t, the minimum length <= cap of a qualifying s-t
    path (one DFS; used to batch oracle expectations)."""
    best: dict[int, int] = {}
    verts = [s]
    eids: list[int] = []
    on = 1 << s

    def qualifies() -> bool:
        if variant == "nonsep":
            return ns.connected_after_vertex_removal(g, ns.mask_of(verts))
        return ns.connected_after_edge_removal(g, ns.mask_of(eids))

    def walk(v: int):
        nonlocal on
        for u, eid in g.adj[v]:
            if (on >> u) & 1:
                continue
            verts.append(u)
            eids.append(eid)
            length = len(eids)
            if (u not in best or length < best[u]) and qualifies():
                best[u] = length
            if length < cap:
                on |= 1 << u
                walk(u)
                on &= ~(1 << u)
            verts.pop()
            eids.pop()

    if cap >= 1:
        walk(s)
    best.pop(s, None)
    return best
