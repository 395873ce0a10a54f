"""Linear matroids over GF(2) / GF(2^b) and the cographic matroid of a graph.

The cographic (bond) matroid of a connected graph G has ground set E(G), and
an edge set is independent exactly when deleting it keeps G connected.  Its
GF(2) representation used here is the fundamental-cycle matrix of a spanning
tree: one row per non-tree edge, marking the edges of that edge's cycle.  The
row space is the cycle space, the orthogonal complement of the cut space, so
column independence matches the bond-matroid independence relation.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import GraphNotConnected, RankTooLarge
from .gf import GF2e, field, matrix_rank_gf2e
from .graph import Graph, is_connected


class Matrix:
    """Row-major matrix over GF(2) (``field=None``) or GF(2^b).

    Columns are indexed by ground-set element ids 0..ncols-1.
    """

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows: Sequence[Sequence[int]], ncols: Optional[int] = None,
                 field: Optional[GF2e] = None):
        data = [list(r) for r in rows]
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols disagrees with row width")
            ncols = width
        elif ncols is None:
            ncols = 0
        limit = 2 if field is None else field.order
        for r in data:
            for x in r:
                if not (0 <= x < limit):
                    raise ValueError(f"entry {x} outside field")
        self.rows = data
        self.nrows = len(data)
        self.ncols = ncols
        self.field = field

    def row_bitmasks(self) -> list[int]:
        """GF(2) rows packed as ints (bit j = column j)."""
        if self.field is not None:
            raise ValueError("row_bitmasks is GF(2)-only")
        out = []
        for r in self.rows:
            mask = 0
            for j, x in enumerate(r):
                if x:
                    mask |= 1 << j
            out.append(mask)
        return out

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows given as int bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        v = row
        while v:
            top = v.bit_length() - 1
            other = pivots.get(top)
            if other is None:
                pivots[top] = v
                rank += 1
                break
            v ^= other
    return rank


def rank_of(mat: Matrix) -> int:
    """Row rank of the matrix over its field."""
    if mat.field is None:
        return gf2_rank(mat.row_bitmasks())
    return matrix_rank_gf2e(mat.to_numpy(), mat.field)


class LinearMatroid:
    """Matroid given by a representation matrix; columns are the ground set."""

    __slots__ = ("matrix", "ncols", "rank", "cols", "cols_np")

    def __init__(self, matrix: Matrix):
        self.matrix = matrix
        self.ncols = matrix.ncols
        self.rank = rank_of(matrix)
        if matrix.field is None:
            # column vectors packed as ints (bit i = row i)
            cols = [0] * matrix.ncols
            for i, row in enumerate(matrix.rows):
                bit = 1 << i
                for j, x in enumerate(row):
                    if x:
                        cols[j] |= bit
            self.cols = tuple(cols)
            self.cols_np = None
        else:
            self.cols = None
            self.cols_np = matrix.to_numpy()

    @property
    def field(self) -> Optional[GF2e]:
        return self.matrix.field

    def is_independent(self, elements: Iterable[int]) -> bool:
        ids = sorted(set(elements))
        if any(not (0 <= e < self.ncols) for e in ids):
            raise ValueError("element id outside ground set")
        if len(ids) > self.rank:
            return False
        if self.cols is not None:
            return gf2_rank(self.cols[e] for e in ids) == len(ids)
        sub = self.cols_np[:, ids].T  # treat columns as rows for rank
        return matrix_rank_gf2e(sub, self.matrix.field) == len(ids)


def is_independent(matroid: LinearMatroid, elements: Iterable[int]) -> bool:
    return matroid.is_independent(elements)


def build_cographic_matroid(g: Graph) -> LinearMatroid:
    """Cographic matroid of a connected graph, represented over GF(2) by the
    fundamental-cycle matrix of a BFS spanning tree.  Rank is m - n + 1."""
    if not is_connected(g):
        raise GraphNotConnected("cographic matroid needs a connected graph")
    n, m = g.n, g.m
    parent = [-1] * n
    parent_edge = [-1] * n
    depth = [0] * n
    tree_edges = set()
    if n > 0:
        seen = [False] * n
        seen[0] = True
        stack = [0]
        while stack:
            v = stack.pop()
            for u, eid in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    parent_edge[u] = eid
                    depth[u] = depth[v] + 1
                    tree_edges.add(eid)
                    stack.append(u)
    rows = []
    for eid, (u, v) in enumerate(g.edges):
        if eid in tree_edges:
            continue
        mask = 1 << eid
        a, b = u, v
        while depth[a] > depth[b]:
            mask |= 1 << parent_edge[a]
            a = parent[a]
        while depth[b] > depth[a]:
            mask |= 1 << parent_edge[b]
            b = parent[b]
        while a != b:
            mask |= 1 << parent_edge[a]
            mask |= 1 << parent_edge[b]
            a = parent[a]
            b = parent[b]
        rows.append(mask)
    dense = [[(mask >> j) & 1 for j in range(m)] for mask in rows]
    return LinearMatroid(Matrix(dense, ncols=m))


def truncate(matroid: LinearMatroid, r: int, seed: int,
             field_bits: int = 16) -> LinearMatroid:
    """Randomized truncation of a matroid to rank ``r``.

    Multiplies a row basis of the representation by a seeded random r x rank
    matrix over GF(2^field_bits).  Sets of size <= r keep their independence
    status with probability >= 1 - binom(ncols, r) * r / 2^field_bits; the
    failure probability is nonzero and callers needing certainty must verify
    downstream.  For r == rank the random matrix is redrawn until invertible,
    making the truncation exact.
    """
    if not (0 <= r <= matroid.rank):
        raise RankTooLarge(f"cannot truncate rank {matroid.rank} to {r}")
    f = field(field_bits)
    rank = matroid.rank
    m = matroid.ncols
    basis = _row_basis(matroid)  # int64 [rank, m], entries in the new field
    rng = random.Random(seed)
    while True:
        t = f.rand_array(rng, (r, rank))
        if r < rank or matrix_rank_gf2e(t, f) == r:
            break
    new = np.zeros((r, m), dtype=np.int64)
    if matroid.matrix.field is None:
        # basis entries are 0/1: the product column is an XOR of T columns
        for i in range(rank):
            sel = basis[i] != 0
            if sel.any():
                new[:, sel] ^= t[:, i : i + 1]
    else:
        if matroid.matrix.field != f:
            raise ValueError("cannot truncate across different GF(2^b) fields")
        for i in range(rank):
            new ^= f.mul_vec(t[:, i : i + 1], basis[i : i + 1, :])
    return LinearMatroid(Matrix(new.tolist(), ncols=m, field=f))


def _row_basis(matroid: LinearMatroid) -> np.ndarray:
    """A full-row-rank matrix with the same row space as the representation."""
    mat = matroid.matrix
    if mat.field is None:
        kept = []
        pivots: dict[int, int] = {}
        for row in mat.row_bitmasks():
            v = row
            while v:
                top = v.bit_length() - 1
                other = pivots.get(top)
                if other is None:
                    pivots[top] = v
                    kept.append(row)
                    break
                v ^= other
        out = np.zeros((len(kept), mat.ncols), dtype=np.int64)
        for i, mask in enumerate(kept):
            for j in range(mat.ncols):
                if (mask >> j) & 1:
                    out[i, j] = 1
        return out
    a = mat.to_numpy()
    f = mat.field
    kept_rows = []
    pivcols: list[int] = []
    work: list[np.ndarray] = []
    for idx in range(a.shape[0]):
        v = a[idx].copy()
        for pc, w in zip(pivcols, work):
            c = int(v[pc])
            if c:
                v ^= f.mul_vec(w, c)
        nz = np.nonzero(v)[0]
        if nz.size:
            c = int(nz[0])
            v = f.mul_vec(v, f.inv(int(v[c])))
            pivcols.append(c)
            work.append(v)
            kept_rows.append(a[idx])
    if kept_rows:
        return np.stack(kept_rows)
    return np.zeros((0, mat.ncols), dtype=np.int64)
