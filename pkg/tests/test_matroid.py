import itertools
import random

import pytest

import nspath as ns
from nspath.errors import GraphNotConnected, RankTooLarge
from nspath.gf import GF2e, field
from nspath.matroid import Matrix, rank_of

import helpers as H


# --- field arithmetic ---------------------------------------------------------

def _mul_reference(a, b, poly, bits):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> bits:
            a ^= poly
    return r


@pytest.mark.parametrize("bits", [4, 8, 16])
def test_gf_tables_match_shift_xor(bits):
    f = field(bits)
    rng = random.Random(bits)
    for _ in range(300):
        a = rng.randrange(f.order)
        b = rng.randrange(f.order)
        assert f.mul(a, b) == _mul_reference(a, b, f.poly, bits)


def test_gf_field_axioms_sampled():
    f = field(16)
    rng = random.Random(5)
    for _ in range(200):
        a, b, c = (rng.randrange(f.order) for _ in range(3))
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
        if a:
            assert f.mul(a, f.inv(a)) == 1


def test_gf_mul_vec_matches_scalar():
    import numpy as np

    f = field(16)
    rng = random.Random(6)
    a = np.array([rng.randrange(f.order) for _ in range(50)], dtype=np.int64)
    b = np.array([rng.randrange(f.order) for _ in range(50)], dtype=np.int64)
    out = f.mul_vec(a, b)
    for x, y, z in zip(a, b, out):
        assert f.mul(int(x), int(y)) == int(z)
    out2 = f.mul_vec(a, 3)
    for x, z in zip(a, out2):
        assert f.mul(int(x), 3) == int(z)


def test_unsupported_field_size():
    with pytest.raises(ValueError):
        GF2e(5)


# --- rank ------------------------------------------------------------------------

def test_rank_identity():
    assert rank_of(Matrix([[1, 0], [0, 1]])) == 2


def test_rank_zero_matrix():
    assert rank_of(Matrix([[0, 0, 0], [0, 0, 0]])) == 0


def test_rank_example():
    assert rank_of(Matrix([[1, 0, 1], [0, 1, 1]])) == 2


def test_rank_gf2e():
    f = field(16)
    # second row is x times the first: dependent
    assert rank_of(Matrix([[1, 2], [2, 4]], field=f)) == 1
    assert rank_of(Matrix([[1, 2], [3, 4]], field=f)) == 2


# --- cographic matroid --------------------------------------------------------------

def test_cographic_tree():
    g = H.star3()
    m = ns.build_cographic_matroid(g)
    assert m.rank == 0
    assert m.is_independent([])
    for eid in range(g.m):
        assert not m.is_independent([eid])


def test_cographic_c4():
    m = ns.build_cographic_matroid(H.c4())
    assert m.rank == 1
    assert m.is_independent([])
    for e in range(4):
        assert m.is_independent([e])
    for pair in itertools.combinations(range(4), 2):
        assert not m.is_independent(pair)


def test_cographic_k4_rank():
    assert ns.build_cographic_matroid(H.complete(4)).rank == 3


def test_cographic_requires_connected():
    with pytest.raises(GraphNotConnected):
        ns.build_cographic_matroid(ns.Graph(4, [(0, 1), (2, 3)]))


def test_cographic_rank_formula_random():
    rng = random.Random(7)
    for _ in range(40):
        g = H.random_connected(rng, rng.randint(2, 10), rng.randint(1, 20))
        assert ns.build_cographic_matroid(g).rank == g.m - g.n + 1


def test_independence_matches_edge_removal_atlas6():
    for g in H.atlas_connected(2, 6):
        m = ns.build_cographic_matroid(g)
        for size in range(0, 4):
            for fset in itertools.combinations(range(g.m), size):
                assert m.is_independent(fset) == ns.connected_after_edge_removal(
                    g, ns.mask_of(fset))


def test_independence_matches_edge_removal_random_n20():
    rng = random.Random(8)
    for _ in range(200):
        g = H.random_connected(rng, rng.randint(8, 20), rng.randint(10, 40))
        m = ns.build_cographic_matroid(g)
        for _ in range(30):
            size = rng.randint(0, 4)
            fset = rng.sample(range(g.m), min(size, g.m))
            assert m.is_independent(fset) == ns.connected_after_edge_removal(
                g, ns.mask_of(fset))


def test_matroid_axioms_sampled():
    rng = random.Random(9)
    for _ in range(15):
        g = H.random_connected(rng, rng.randint(4, 7), rng.randint(5, 12))
        m = ns.build_cographic_matroid(g)
        indep = [set(c) for size in range(m.rank + 1)
                 for c in itertools.combinations(range(g.m), size)
                 if m.is_independent(c)]
        assert set() in map(set, indep)
        for x in indep:
            for e in list(x):
                assert set(x) - {e} in indep  # downward closure
        for _ in range(40):
            x = rng.choice(indep)
            y = rng.choice(indep)
            if len(x) < len(y):
                assert any(m.is_independent(x | {e}) for e in y - x)  # exchange


# --- truncation -----------------------------------------------------------------------

def test_truncate_full_rank_is_exact():
    g = H.complete(4)
    m = ns.build_cographic_matroid(g)
    t = ns.truncate(m, m.rank, seed=0)
    for size in range(0, m.rank + 1):
        for fset in itertools.combinations(range(g.m), size):
            assert t.is_independent(fset) == m.is_independent(fset)


def test_truncate_rank_zero():
    m = ns.build_cographic_matroid(H.complete(4))
    t = ns.truncate(m, 0, seed=1)
    assert t.is_independent([])
    for e in range(6):
        assert not t.is_independent([e])


def test_truncate_k4_to_rank2_keeps_small_sets():
    m = ns.build_cographic_matroid(H.complete(4))
    t = ns.truncate(m, 2, seed=0)
    for size in (1, 2):
        for fset in itertools.combinations(range(6), size):
            assert t.is_independent(fset) == m.is_independent(fset)


def test_truncate_seed_trials_no_disagreement():
    # documented failure probability is ~binom(m, r) * r / 2^16 per draw;
    # these fixed seeds are expected (and observed) to produce none
    for g in (H.complete(4), H.c4(), H.diamond()):
        m = ns.build_cographic_matroid(g)
        r = max(m.rank - 1, 1)
        for seed in range(100):
            t = ns.truncate(m, r, seed=seed)
            for size in range(0, r + 1):
                for fset in itertools.combinations(range(g.m), size):
                    assert t.is_independent(fset) == m.is_independent(fset)


def test_truncate_rank_too_large():
    m = ns.build_cographic_matroid(H.c4())
    with pytest.raises(RankTooLarge):
        ns.truncate(m, m.rank + 1, seed=0)


def test_truncate_deterministic_per_seed():
    m = ns.build_cographic_matroid(H.complete(4))
    a = ns.truncate(m, 2, seed=11)
    b = ns.truncate(m, 2, seed=11)
    assert a.matrix.rows == b.matrix.rows
