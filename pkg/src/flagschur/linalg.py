"""Exact rank of sparse integer row sets."""

from __future__ import annotations

from math import gcd
from typing import Sequence

import numpy as np

from ._kernels import PRIME, rank_mod_p

SparseRow = dict[int, int]


def exact_rank(rows: Sequence[SparseRow]) -> int:
    """Rank over the rationals by fraction-free elimination on integer rows.

    Each reduced row is divided by the gcd of its entries, so intermediate
    integers stay small.  This is the authoritative path.
    """
    pivots: dict[int, SparseRow] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            col = min(r)
            prow = pivots.get(col)
            if prow is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                if g > 1:
                    r = {c: v // g for c, v in r.items()}
                pivots[col] = r
                break
            a, b = prow[col], r[col]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = {c: v * ma for c, v in r.items()}
            for c, v in prow.items():
                nv = new.get(c, 0) - mb * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            r = new
    return len(pivots)


def _dense_mod(rows: Sequence[SparseRow], ncols: int, p: int) -> np.ndarray:
    mat = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, v in row.items():
            mat[i, c] = v % p
    return mat


def rank(rows: Sequence[SparseRow], ncols: int | None = None, modular: bool = True) -> int:
    """Exact rank, using a modular rank as a certificate when it is maximal.

    Rank mod p never exceeds the rational rank, so a full modular rank proves
    the exact answer; anything less falls through to :func:`exact_rank`.
    """
    rows = [r for r in rows if r]
    if len(rows) <= 1:
        return len(rows)
    if ncols is None:
        ncols = 1 + max(max(r) for r in rows)
    if modular:
        bound = min(len(rows), ncols)
        if rank_mod_p(_dense_mod(rows, ncols, PRIME), PRIME) == bound:
            return bound
    return exact_rank(rows)
