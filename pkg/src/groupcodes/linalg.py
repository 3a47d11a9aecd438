"""Thin wrappers over the matrix kernels: canonical forms and row-space
queries for index-valued matrices over a FieldSpec."""

from __future__ import annotations

import numpy as np

from .ffield import FieldSpec
from .kernels import rref_inplace


def as_matrix(rows, n: int, field: FieldSpec) -> np.ndarray:
    """Validated int16 matrix of field-element indices."""
    mat = np.array(rows, dtype=np.int64).reshape(len(rows) if len(rows) else 0, n)
    if mat.size and (mat.min() < 0 or mat.max() >= field.q):
        raise ValueError(f"entries must be element indices in [0, {field.q})")
    return np.ascontiguousarray(mat, dtype=np.int16)


def canonicalize(rows, n: int, field: FieldSpec) -> np.ndarray:
    """Reduced-echelon basis of the row space (rank rows, read-only)."""
    mat = as_matrix(rows, n, field)
    if mat.shape[0] == 0:
        out = np.zeros((0, n), dtype=np.int16)
        out.flags.writeable = False
        return out
    t = field.tables()
    rank = rref_inplace(mat, t.add, t.mul, t.neg, t.inv)
    out = np.ascontiguousarray(mat[:rank].copy())
    out.flags.writeable = False
    return out


def pivot_columns(canonical: np.ndarray):
    return [int(np.nonzero(row)[0][0]) for row in canonical]


def in_row_space(canonical: np.ndarray, vec, field: FieldSpec) -> bool:
    """Membership test against a canonical basis (pivot entries are 1)."""
    t = field.tables()
    v = np.array(vec, dtype=np.int16).copy()
    for row in canonical:
        c = int(np.nonzero(row)[0][0])
        if v[c]:
            v = t.add[v, t.mul[t.neg[v[c]], row]]
    return not v.any()


def rank_of(rows, n: int, field: FieldSpec) -> int:
    return canonicalize(rows, n, field).shape[0]


def stack(*mats) -> list:
    rows = []
    for m in mats:
        rows.extend(np.asarray(m).tolist())
    return rows
