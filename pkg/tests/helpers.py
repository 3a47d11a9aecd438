"""Independent naive oracles used by the test suite.

Everything here works on FieldElem objects with plain Python loops and
never touches the numpy/Cython kernels, so kernel results can be checked
against a genuinely separate code path.
"""

from __future__ import annotations

import itertools
from collections import Counter

from groupcodes.ffield import FieldSpec


def naive_rref(rows, spec: FieldSpec):
    """Reduced row echelon form of index-valued rows, via FieldElem ops.

    Returns the nonzero rows as a list of index lists.
    """
    mat = [[spec.from_index(int(x)) for x in row] for row in rows]
    if not mat:
        return []
    n = len(mat[0])
    rank = 0
    for col in range(n):
        if rank == len(mat):
            break
        pivot = next(
            (r for r in range(rank, len(mat)) if not mat[r][col].is_zero()), None
        )
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pinv = mat[rank][col].inv()
        mat[rank] = [x * pinv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return [[x.index for x in row] for row in mat[:rank]]


def naive_weight_counts(rows, spec: FieldSpec) -> Counter:
    """Hamming-weight counts of the span of index-valued rows."""
    basis = [[spec.from_index(int(x)) for x in row] for row in rows]
    if not basis:
        return Counter({0: 1})
    n = len(basis[0])
    zero = spec.zero()
    counts: Counter = Counter()
    for coeffs in itertools.product(spec.elements(), repeat=len(basis)):
        word = [zero] * n
        for c, row in zip(coeffs, basis):
            word = [w + c * x for w, x in zip(word, row)]
        counts[sum(1 for w in word if not w.is_zero())] += 1
    return counts


def naive_min_weight(rows, spec: FieldSpec) -> int:
    counts = naive_weight_counts(rows, spec)
    return min(w for w in counts if w > 0)


def naive_in_span(vector, rows, spec: FieldSpec) -> bool:
    """Membership of an index-valued vector in the span of rows."""
    reduced = naive_rref(list(rows) + [list(vector)], spec)
    return len(reduced) == len(naive_rref(rows, spec))


def macwilliams_transform(dual_counts, n: int, q: int):
    """Weight counts of a code from its dual's counts (exact integers).

    counts[j] = (1/|dual|) * sum_i dual_counts[i] * K_j(i) with the
    Krawtchouk polynomial K_j(i) over F_q.
    """
    import math

    dual_size = sum(dual_counts.values())
    out = {}
    for j in range(n + 1):
        acc = 0
        for i, b in dual_counts.items():
            kji = sum(
                (-1) ** l * (q - 1) ** (j - l) * math.comb(i, l) * math.comb(n - i, j - l)
                for l in range(min(i, j) + 1)
                if j - l <= n - i
            )
            acc += b * kji
        assert acc % dual_size == 0
        if acc // dual_size:
            out[j] = acc // dual_size
    return out
