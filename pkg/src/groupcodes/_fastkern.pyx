# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot matrix kernels.

Contracts match groupcodes._purekern exactly; see that module.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def rref_inplace(short[:, ::1] mat, const short[:, ::1] add, const short[:, ::1] mul,
                 const short[::1] neg, const short[::1] inv):
    cdef Py_ssize_t m = mat.shape[0]
    cdef Py_ssize_t n = mat.shape[1]
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, r, j, pivot
    cdef short pv, factor, nf, tmp
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
            for j in range(n):
                tmp = mat[rank, j]
                mat[rank, j] = mat[pivot, j]
                mat[pivot, j] = tmp
        pv = mat[rank, col]
        if pv != 1:
            pv = inv[pv]
            for j in range(n):
                mat[rank, j] = mul[pv, mat[rank, j]]
        for r in range(m):
            if r == rank:
                continue
            factor = mat[r, col]
            if factor == 0:
                continue
            nf = neg[factor]
            for j in range(n):
                mat[r, j] = add[mat[r, j], mul[nf, mat[rank, j]]]
        rank += 1
    return rank


def weight_distribution(const short[:, ::1] gen, int q, const short[:, ::1] add,
                        const short[:, ::1] mul):
    cdef Py_ssize_t k = gen.shape[0]
    cdef Py_ssize_t n = gen.shape[1]
    counts_arr = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] counts = counts_arr
    if k == 0:
        counts[0] = 1
        return counts_arr
    # step deltas: inc[j, a] = (a+1) - a scaled into row j, wrap[j] = 0 - (q-1)
    cdef short[:, :, ::1] inc = np.zeros((k, q, n), dtype=np.int16)
    cdef short[:, ::1] wrap = np.zeros((k, n), dtype=np.int16)
    cdef Py_ssize_t j, a, col
    cdef short delta
    for j in range(k):
        for a in range(q - 1):
            delta = add[a + 1, neg_of(add, q, a)]
            for col in range(n):
                inc[j, a, col] = mul[delta, gen[j, col]]
        delta = neg_of(add, q, q - 1)
        for col in range(n):
            wrap[j, col] = mul[delta, gen[j, col]]
    cdef short[::1] word = np.zeros(n, dtype=np.int16)
    cdef long long[::1] digits = np.zeros(k, dtype=np.int64)
    cdef long long total = 1
    for j in range(k):
        total *= q
    cdef long long step
    cdef Py_ssize_t d, w
    counts[0] += 1  # the zero word
    for step in range(1, total):
        d = 0
        while digits[d] == q - 1:
            for col in range(n):
                word[col] = add[word[col], wrap[d, col]]
            digits[d] = 0
            d += 1
        for col in range(n):
            word[col] = add[word[col], inc[d, digits[d], col]]
        digits[d] += 1
        w = 0
        for col in range(n):
            if word[col] != 0:
                w += 1
        counts[w] += 1
    return counts_arr


cdef inline short neg_of(const short[:, ::1] add, int q, short a):
    # find -a by scanning the addition row (q is small; called O(q) times)
    cdef Py_ssize_t b
    for b in range(q):
        if add[a, b] == 0:
            return <short> b
    return 0
