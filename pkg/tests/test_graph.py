import math
import random

import pytest

import nspath as ns
from nspath.errors import (
    DuplicateEdge,
    MalformedLine,
    NotChordal,
    NotConnectedSet,
    SelfLoop,
    VertexOutOfRange,
)

import helpers as H


# --- parsing ----------------------------------------------------------------

def test_parse_k2():
    g = ns.parse_graph("2 1\n0 1")
    assert g.n == 2 and g.edges == ((0, 1),)


def test_parse_c4():
    g = ns.parse_graph("4 4\n0 1\n1 2\n2 3\n3 0")
    assert g.n == 4 and g.m == 4
    assert all(g.degree(v) == 2 for v in range(4))


def test_parse_self_loop_rejected():
    with pytest.raises(SelfLoop):
        ns.parse_graph("3 3\n0 1\n1 1\n2 0")


def test_parse_duplicate_rejected():
    with pytest.raises(DuplicateEdge):
        ns.parse_graph("3 2\n0 1\n1 0")


def test_parse_vertex_out_of_range():
    with pytest.raises(VertexOutOfRange):
        ns.parse_graph("2 1\n0 5")


@pytest.mark.parametrize("text", ["", "2", "2 1", "2 1\n0 1\n0 1\n", "1 0\njunk",
                                  "2 1\nnope nope"])
def test_parse_malformed(text):
    with pytest.raises(MalformedLine):
        ns.parse_graph(text)


def test_parse_comments_and_crlf():
    g = ns.parse_graph("# cycle\r\n4 4\r\n0 1\r\n\r\n1 2\r\n2 3\r\n# done\r\n3 0\r\n")
    assert g.m == 4


def test_format_roundtrip():
    g = H.diamond()
    assert ns.parse_graph(ns.format_graph(g)) == g


# --- bfs ----------------------------------------------------------------------

def test_bfs_k2():
    assert ns.bfs_distances(H.k2(), 0) == [0, 1]


def test_bfs_c4():
    assert ns.bfs_distances(H.c4(), 0) == [0, 1, 2, 1]


def test_bfs_unreachable():
    g = ns.Graph(4, [(0, 1), (2, 3)])
    d = ns.bfs_distances(g, 0)
    assert d[:2] == [0, 1] and math.isinf(d[2]) and math.isinf(d[3])


# --- removal connectivity -------------------------------------------------------

def test_vertex_removal_c4():
    assert ns.connected_after_vertex_removal(H.c4(), ns.mask_of([0, 1]))


def test_vertex_removal_star_center():
    assert not ns.connected_after_vertex_removal(H.star3(), ns.mask_of([0]))


def test_vertex_removal_everything_is_connected():
    # empty-graph convention
    assert ns.connected_after_vertex_removal(H.k2(), ns.mask_of([0, 1]))


def test_edge_removal_c4_single():
    assert ns.connected_after_edge_removal(H.c4(), ns.mask_of([0]))


def test_edge_removal_k2_bridge():
    assert not ns.connected_after_edge_removal(H.k2(), ns.mask_of([0]))


def test_edge_removal_star_pairs():
    # every 2-edge removal from the 3-edge star isolates two leaves
    g = H.star3()
    for a in range(3):
        for b in range(a + 1, 3):
            assert not ns.connected_after_edge_removal(g, ns.mask_of([a, b]))


def test_edge_removal_matches_spanning_forest_count():
    rng = random.Random(0)
    for _ in range(60):
        g = H.random_connected(rng, rng.randint(2, 8), rng.randint(1, 16))
        for _ in range(20):
            fmask = 0
            for eid in range(g.m):
                if rng.random() < 0.3:
                    fmask |= 1 << eid
            kept = [e for i, e in enumerate(g.edges) if not (fmask >> i) & 1]
            sub = ns.Graph(g.n, kept)
            forest = sum(len(c) - 1 for c in ns.components(sub))
            assert ns.connected_after_edge_removal(g, fmask) == (forest == g.n - 1)


# --- components -----------------------------------------------------------------

def test_components_star_center_removed():
    assert ns.components(H.star3(), ns.mask_of([0])) == [[1], [2], [3]]


def test_components_whole_c4():
    assert ns.components(H.c4()) == [[0, 1, 2, 3]]


def test_components_c4_opposite_pair():
    assert ns.components(H.c4(), ns.mask_of([0, 2])) == [[1], [3]]


# --- contraction ----------------------------------------------------------------

def test_contract_singleton_is_identity_up_to_relabeling():
    g, vc, mapping = ns.contract_connected_set(H.c4(), ns.mask_of([1]))
    assert g.n == 4 and g.m == 4
    assert sorted(g.degree(v) for v in range(4)) == [2, 2, 2, 2]
    assert mapping[1] == vc


def test_contract_c4_edge_gives_triangle():
    g, vc, mapping = ns.contract_connected_set(H.c4(), ns.mask_of([1, 2]))
    assert g.n == 3 and g.m == 3
    assert mapping[1] == mapping[2] == vc


def test_contract_disconnected_set_rejected():
    with pytest.raises(NotConnectedSet):
        ns.contract_connected_set(H.star3(), ns.mask_of([1, 2, 3]))
    with pytest.raises(NotConnectedSet):
        ns.contract_connected_set(H.c4(), 0)


def test_contraction_preserves_nonseparating_status():
    # paths avoiding the contracted set separate the original graph iff they
    # separate the contracted one
    rng = random.Random(1)
    checked = 0
    for g in H.atlas_connected(4, 6):
        if rng.random() < 0.6:
            continue
        vs = list(range(g.n))
        rng.shuffle(vs)
        seed_v = vs[0]
        cmask = 1 << seed_v
        for u, _ in g.adj[seed_v]:
            if rng.random() < 0.5:
                cmask |= 1 << u
        gc, _, mapping = ns.contract_connected_set(g, cmask)
        for s in range(g.n):
            for t in range(s + 1, g.n):
                if (cmask >> s) & 1 or (cmask >> t) & 1:
                    continue
                for p in ns.enumerate_paths(g, s, t, g.n - 1):
                    if p.vertex_mask() & cmask:
                        continue
                    orig = ns.connected_after_vertex_removal(g, p.vertex_mask())
                    mapped = ns.mask_of(mapping[v] for v in p.vertices)
                    contr = ns.connected_after_vertex_removal(gc, mapped)
                    assert orig == contr
                    checked += 1
    assert checked > 500


# --- induced subgraph -------------------------------------------------------------

def test_induced_subgraph_diamond():
    g, mapping = ns.induced_subgraph(H.diamond(), ns.mask_of([0, 1, 3]))
    assert g.n == 3 and g.m == 2
    assert mapping == [0, 1, -1, 2]


# --- chordality --------------------------------------------------------------------

def test_peo_tree():
    order = ns.perfect_elimination_order(H.star3())
    assert sorted(order) == [0, 1, 2, 3]


def test_peo_c4_not_chordal_with_witness():
    with pytest.raises(NotChordal) as exc:
        ns.perfect_elimination_order(H.c4())
    w = exc.value.witness
    assert w is not None and len(w) == 4


def test_peo_diamond():
    ns.perfect_elimination_order(H.diamond())  # no exception


def test_chordality_matches_bruteforce_on_atlas():
    for g in H.atlas_connected(2, 7):
        assert ns.is_chordal(g) == (not H.has_induced_cycle_ge4(g))


def test_chordality_matches_bruteforce_random_n9():
    rng = random.Random(2)
    for _ in range(120):
        g = H.random_connected(rng, 9, rng.randint(8, 18))
        assert ns.is_chordal(g) == (not H.has_induced_cycle_ge4(g))


def test_not_chordal_witness_is_induced_cycle():
    rng = random.Random(3)
    seen = 0
    for _ in range(200):
        g = H.random_connected(rng, rng.randint(4, 9), rng.randint(4, 16))
        try:
            ns.perfect_elimination_order(g)
        except NotChordal as exc:
            if exc.witness is None:
                continue
            w = list(exc.witness)
            assert len(w) >= 4
            for i, v in enumerate(w):
                assert g.has_edge(v, w[(i + 1) % len(w)])
                for j in range(i + 2, len(w)):
                    if (i, j) != (0, len(w) - 1):
                        assert not g.has_edge(v, w[j])
            seen += 1
    assert seen > 20


# --- Path type -----------------------------------------------------------------------

def test_path_validation():
    g = H.c4()
    p = ns.Path(g, [0, 1, 2])
    assert p.length == 2 and p.edge_ids == (0, 1)
    with pytest.raises(ValueError):
        ns.Path(g, [0, 2])
    with pytest.raises(ValueError):
        ns.Path(g, [0, 1, 0])
    with pytest.raises(ValueError):
        ns.Path(g, [])
