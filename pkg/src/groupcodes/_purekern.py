"""Pure numpy implementations of the hot matrix kernels.

Same contracts as the compiled backend in ``_fastkern``:

  rref_inplace(mat, add, mul, neg, inv) -> rank
      In-place reduced row echelon form over F_q; field elements are
      table indices, tables come from FieldSpec.tables().  Pivot entries
      become 1, all other entries in pivot columns 0, pivot columns
      strictly increasing, non-pivot rows zeroed.

  weight_distribution(gen, q, add, mul) -> int64[n+1]
      Hamming-weight counts over all q^k words spanned by the k rows of
      gen (the caller enforces the q^k enumeration cap).
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1024  # codewords materialized per batch in weight_distribution


def rref_inplace(mat, add, mul, neg, inv):
    m, n = mat.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        pivot = -1
        for r in range(rank, m):
            if mat[r, col] != 0:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            mat[[rank, pivot]] = mat[[pivot, rank]]
        pv = mat[rank, col]
        if pv != 1:
            mat[rank] = mul[inv[pv], mat[rank]]
        factors = mat[:, col].copy()
        factors[rank] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            scaled = mul[neg[factors[rows]][:, None], mat[rank][None, :]]
            mat[rows] = add[mat[rows], scaled]
        rank += 1
    return rank


def weight_distribution(gen, q, add, mul):
    k, n = gen.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        counts[0] = 1
        return counts
    # scaled[j][c] = c * gen[j], for every field element index c
    scaled = [mul[np.arange(q, dtype=np.int16)[:, None], gen[j][None, :]] for j in range(k)]
    total = q**k
    start = 0
    while start < total:
        stop = min(start + _CHUNK, total)
        idx = np.arange(start, stop, dtype=np.int64)
        words = np.zeros((stop - start, n), dtype=np.int16)
        for j in range(k):
            digits = idx % q
            idx = idx // q
            words = add[words, scaled[j][digits]]
        weights = np.count_nonzero(words, axis=1)
        counts += np.bincount(weights, minlength=n + 1)
        start = stop
    return counts
