"""Row reduction modulo a prime: the hot loop of the oracle.

Two interchangeable backends: a numba ``@njit`` kernel and a pure-numpy
vectorized fallback.  Set ``FLAGSCHUR_NUMBA=0`` to force the fallback; it is
also used automatically when numba cannot be imported.
"""

from __future__ import annotations

import os

import numpy as np

# 2^31 - 1: products of two residues fit in int64
PRIME = 2147483647

_WANT_NUMBA = os.environ.get("FLAGSCHUR_NUMBA", "1").lower() not in ("0", "false", "no", "off")

try:
    if not _WANT_NUMBA:
        raise ImportError
    from numba import njit
except ImportError:  # pragma: no cover - exercised via env flag in a subprocess
    njit = None

HAVE_NUMBA = njit is not None


def _rank_mod_p_numpy(mat: np.ndarray, p: int) -> int:
    a = np.array(mat, dtype=np.int64) % p
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1 :, col].copy()
        hit = np.nonzero(below)[0]
        if hit.size:
            rows = rank + 1 + hit
            a[rows] = (a[rows] - (below[hit, None] * a[rank][None, :]) % p) % p
        rank += 1
    return rank


if HAVE_NUMBA:

    @njit(cache=True)
    def _powmod(base, exp, p):
        result = 1
        base %= p
        while exp > 0:
            if exp & 1:
                result = (result * base) % p
            base = (base * base) % p
            exp >>= 1
        return result

    @njit(cache=True)
    def _rank_mod_p_numba(mat, p):
        a = mat.copy()
        nrows, ncols = a.shape
        for i in range(nrows):
            for j in range(ncols):
                a[i, j] %= p
                if a[i, j] < 0:
                    a[i, j] += p
        rank = 0
        for col in range(ncols):
            if rank == nrows:
                break
            piv = -1
            for r in range(rank, nrows):
                if a[r, col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(ncols):
                    t = a[rank, j]
                    a[rank, j] = a[piv, j]
                    a[piv, j] = t
            inv = _powmod(a[rank, col], p - 2, p)
            for j in range(col, ncols):
                a[rank, j] = (a[rank, j] * inv) % p
            for r in range(rank + 1, nrows):
                f = a[r, col]
                if f != 0:
                    for j in range(col, ncols):
                        a[r, j] = (a[r, j] - f * a[rank, j]) % p
            rank += 1
        return rank


def rank_mod_p(mat: np.ndarray, p: int = PRIME, backend: str | None = None) -> int:
    """Rank of an integer matrix over GF(p).

    ``backend`` is ``"numba"``, ``"numpy"`` or ``None`` (numba when available).
    """
    mat = np.ascontiguousarray(mat, dtype=np.int64)
    if mat.size == 0:
        return 0
    if backend is None:
        backend = "numba" if HAVE_NUMBA else "numpy"
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return int(_rank_mod_p_numba(mat, p))
    if backend == "numpy":
        return _rank_mod_p_numpy(mat, p)
    raise ValueError(f"unknown backend {backend!r}")
