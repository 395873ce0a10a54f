"""q-representative subfamilies of uniform independent-set families.

The construction is the determinant/wedge one: each p-set X maps to the
vector of its p x p minors, indexed by p-subsets of the representation's
rows, and a subfamily whose vectors form a basis of the span is kept.  Over
a representation with r rows that basis is q-representative for every
q <= r - p, so when the matroid's rank exceeds p + q the representation is
first truncated to p + q rows (seeded, over GF(2^16)) to keep vectors short.

All fields here have characteristic 2, so minors need no sign bookkeeping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DependentMember, NonUniformFamily, RankTooSmall
from .matroid import LinearMatroid, truncate

# Wedge vectors longer than this are refused; callers should truncate or
# skip pruning instead of exhausting memory.
WEDGE_LENGTH_CAP = 1 << 20

TRUNCATION_FIELD_BITS = 16


@dataclass(frozen=True)
class EdgeSetFamily:
    """Family of same-size element-id sets.

    ``predecessors`` links each member back to its source: for outputs of
    representative_family these are indices into the input family, and DP
    layers use them to chain path reconstruction.
    """

    p: int
    sets: tuple[frozenset[int], ...]
    predecessors: Optional[tuple[int, ...]] = None

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def _normalize(family) -> list[frozenset[int]]:
    if isinstance(family, EdgeSetFamily):
        return [frozenset(s) for s in family.sets]
    return [frozenset(s) for s in family]


def representative_family(matroid: LinearMatroid, family, q: int,
                          seed: int = 0) -> EdgeSetFamily:
    """Compute a q-representative subfamily.

    Input may be an EdgeSetFamily or any iterable of element-id sets; all
    members must have the same size p and be independent.  Requires
    p + q <= rank.  Output size is at most binom(p + q, p).  When the rank
    exceeds p + q, a seeded randomized truncation is applied first and the
    result is representative with high probability (exact otherwise).
    """
    sets = _normalize(family)
    if q < 0:
        raise ValueError("q must be non-negative")
    if not sets:
        return EdgeSetFamily(p=0, sets=(), predecessors=())
    sizes = {len(s) for s in sets}
    if len(sizes) != 1:
        raise NonUniformFamily(f"member sizes {sorted(sizes)}")
    p = sizes.pop()
    if p + q > matroid.rank:
        raise RankTooSmall(f"p + q = {p + q} exceeds rank {matroid.rank}")
    for i, s in enumerate(sets):
        if not matroid.is_independent(s):
            raise DependentMember(f"member {i} is dependent")
    kept = representative_indices(matroid, sets, q, seed=seed)
    return EdgeSetFamily(p=p, sets=tuple(sets[i] for i in kept),
                         predecessors=tuple(kept))


def representative_indices(matroid: LinearMatroid, sets: Sequence[Iterable[int]],
                           q: int, seed: int = 0) -> list[int]:
    """Indices of a q-representative subfamily, in input order.

    Core of representative_family without the validation passes; members
    must already be independent sets of equal size p with p + q <= rank.
    """
    if not sets:
        return []
    members = [sorted(s) for s in sets]
    p = len(members[0])
    if p == 0 or q == 0:
        # Lambda^0 is one-dimensional / only Y = empty-set must be served:
        # the first (independent) member represents everything.
        return [0]
    r = p + q
    work = matroid if r == matroid.rank else truncate(
        matroid, r, seed, field_bits=TRUNCATION_FIELD_BITS)
    nrows = work.matrix.nrows
    if math.comb(nrows, p) > WEDGE_LENGTH_CAP:
        raise ValueError(
            f"wedge vectors of length C({nrows},{p}) exceed the supported cap")
    if work.matrix.field is None:
        vectors = _wedge_vectors_gf2(work, members, p)
        return _greedy_basis_gf2(vectors)
    vectors = _wedge_vectors_gf2e(work, members, p)
    return _greedy_basis_gf2e(vectors, work.matrix.field)


# --- index maps -------------------------------------------------------------

@lru_cache(maxsize=None)
def _extension_maps(r: int, j: int):
    """Scatter maps for extending (j-1)-subset vectors to j-subset vectors.

    For each row index i: src[i][x] is the position of a (j-1)-subset T with
    i not in T, and dst[i][x] the position of T | {i} among j-subsets.
    """
    idx_prev = {c: x for x, c in enumerate(combinations(range(r), j - 1))}
    src: list[list[int]] = [[] for _ in range(r)]
    dst: list[list[int]] = [[] for _ in range(r)]
    for x, comb in enumerate(combinations(range(r), j)):
        for i in comb:
            t = tuple(y for y in comb if y != i)
            src[i].append(idx_prev[t])
            dst[i].append(x)
    return [(np.array(src[i], dtype=np.intp), np.array(dst[i], dtype=np.intp))
            for i in range(r)]


# --- GF(2) engine ------------------------------------------------------------

def _wedge_vectors_gf2(matroid: LinearMatroid, members: Sequence[Sequence[int]],
                       p: int) -> list[int]:
    """Wedge vector of each member, packed into an int bitmask per member."""
    r = matroid.matrix.nrows
    cols = matroid.cols
    n = len(members)
    w = np.ones((n, 1), dtype=np.uint8)
    colvals = np.array([[cols[e] for e in mem] for mem in members],
                       dtype=np.uint64)
    for j in range(1, p + 1):
        bits = ((colvals[:, j - 1 : j] >> np.arange(r, dtype=np.uint64)) & 1
                ).astype(np.uint8)
        maps = _extension_maps(r, j)
        out = np.zeros((n, math.comb(r, j)), dtype=np.uint8)
        for i in range(r):
            col = bits[:, i : i + 1]
            if not col.any():
                continue
            src, dst = maps[i]
            out[:, dst] ^= w[:, src] & col
        w = out
    packed = np.packbits(w, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _greedy_basis_gf2(vectors: Sequence[int]) -> list[int]:
    pivots: dict[int, int] = {}
    kept = []
    for idx, vec in enumerate(vectors):
        v = vec
        while v:
            top = v.bit_length() - 1
            other = pivots.get(top)
            if other is None:
                pivots[top] = v
                kept.append(idx)
                break
            v ^= other
    return kept


# --- GF(2^b) engine ----------------------------------------------------------

def _wedge_vectors_gf2e(matroid: LinearMatroid, members: Sequence[Sequence[int]],
                        p: int) -> np.ndarray:
    f = matroid.matrix.field
    r = matroid.matrix.nrows
    a = matroid.cols_np
    n = len(members)
    ids = np.array(members, dtype=np.intp)  # [n, p]
    w = np.ones((n, 1), dtype=np.int64)
    for j in range(1, p + 1):
        colvals = a[:, ids[:, j - 1]].T  # [n, r]
        maps = _extension_maps(r, j)
        out = np.zeros((n, math.comb(r, j)), dtype=np.int64)
        for i in range(r):
            col = colvals[:, i : i + 1]
            if not col.any():
                continue
            src, dst = maps[i]
            out[:, dst] ^= f.mul_vec(w[:, src], col)
        w = out
    return w


def _greedy_basis_gf2e(vectors: np.ndarray, f) -> list[int]:
    r = vectors.copy()
    n, width = r.shape
    kept: list[int] = []
    for row in range(n):
        nz = np.nonzero(r[row])[0]
        if nz.size == 0:
            continue
        c = int(nz[0])
        r[row] = f.mul_vec(r[row], f.inv(int(r[row, c])))
        kept.append(row)
        if len(kept) == width:
            break
        if row + 1 < n:
            coefs = r[row + 1 :, c]
            sel = np.nonzero(coefs)[0]
            if sel.size:
                r[row + 1 + sel] ^= f.mul_vec(r[row][None, :],
                                              coefs[sel][:, None])
    return kept
