"""Arithmetic in GF(2^b) via log/antilog tables, scalar and numpy-vectorized.

Each field is built from a fixed primitive polynomial, so discrete-log
tables are valid.  Table size is 2^b entries, which caps b at 16.
"""

from __future__ import annotations

import numpy as np

# Primitive polynomials over GF(2), low-weight, from standard tables.
PRIMITIVE_POLYS = {
    2: 0b111,            # x^2 + x + 1
    4: 0x13,             # x^4 + x + 1
    8: 0x11D,            # x^8 + x^4 + x^3 + x^2 + 1
    16: 0x1100B,         # x^16 + x^12 + x^3 + x + 1
}

_FIELD_CACHE: dict[int, "GF2e"] = {}


class GF2e:
    """GF(2^bits).  Elements are plain ints in [0, 2^bits); addition is XOR."""

    def __init__(self, bits: int):
        if bits not in PRIMITIVE_POLYS:
            raise ValueError(f"unsupported field size 2^{bits}; "
                             f"choose bits in {sorted(PRIMITIVE_POLYS)}")
        self.bits = bits
        self.poly = PRIMITIVE_POLYS[bits]
        self.order = 1 << bits
        n = self.order - 1
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x >> bits:
                x ^= self.poly
        exp[n:] = exp[:n]  # doubled so exp[log a + log b] needs no modulo
        self._exp = exp
        self._log = log

    def __repr__(self) -> str:
        return f"GF2e({self.bits})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2e) and other.bits == self.bits

    def __hash__(self) -> int:
        return hash(("GF2e", self.bits))

    # scalar ops ----------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^b)")
        return int(self._exp[self.order - 1 - self._log[a]])

    # vector ops ----------------------------------------------------------

    def mul_vec(self, a: np.ndarray, b) -> np.ndarray:
        """Elementwise product; ``b`` may be an array (broadcastable) or an
        int scalar."""
        a = np.asarray(a, dtype=np.int64)
        if np.isscalar(b) or getattr(b, "ndim", 1) == 0:
            b = int(b)
            if b == 0:
                return np.zeros_like(a)
            out = self._exp[self._log[a] + self._log[b]]
            return np.where(a == 0, 0, out)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def rand_array(self, rng, shape) -> np.ndarray:
        """Uniform random field elements from a ``random.Random``."""
        total = int(np.prod(shape))
        vals = [rng.randrange(self.order) for _ in range(total)]
        return np.array(vals, dtype=np.int64).reshape(shape)


def field(bits: int) -> GF2e:
    """Shared per-size field instance (tables are built once)."""
    f = _FIELD_CACHE.get(bits)
    if f is None:
        f = GF2e(bits)
        _FIELD_CACHE[bits] = f
    return f


def matrix_rank_gf2e(rows: np.ndarray, f: GF2e) -> int:
    """Row rank of a matrix with GF(2^b) entries."""
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        return 0
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if a[r, col]:
                piv = r
                break
        if piv < 0:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        a[rank] = f.mul_vec(a[rank], f.inv(int(a[rank, col])))
        for r in range(nrows):
            if r != rank and a[r, col]:
                a[r] ^= f.mul_vec(a[rank], int(a[r, col]))
        rank += 1
        if rank == nrows:
            break
    return rank
