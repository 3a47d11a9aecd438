"""Linear codes over F_q: canonical generator matrices, weight
enumeration, coordinate permutations, permutation automorphism groups,
equivalence search, and the bridge to group-algebra ideals through a
coordinate bijection.

A code is identified with its canonical reduced-echelon generator
matrix, so code equality is matrix equality.  Enumeration caps: q^k <=
10^6 for weight enumeration, n <= 8 for full PAut, n <= 10 for the
equivalence search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import galg
from .errors import CapError
from .ffield import FieldSpec, format_field_spec, parse_field_spec
from .kernels import weight_distribution
from .linalg import canonicalize, in_row_space, stack
from .perms import Perm, PermGroup

WEIGHT_ENUM_CAP = 10**6  # largest q^k enumerated for weights
PAUT_MAX_N = 8  # full automorphism-group length cap
EQUIV_MAX_N = 10  # equivalence-search length cap


class LinearCode:
    """A subspace of F_q^n held as a canonical generator matrix."""

    __slots__ = ("field", "n", "gen", "_weights")

    def __init__(self, field: FieldSpec, n: int, rows):
        self.field = field
        self.n = int(n)
        self.gen = canonicalize(stack(rows), self.n, field)
        self._weights = None

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and bool(np.array_equal(self.gen, other.gen))
        )

    def __hash__(self):
        return hash((self.field, self.n, self.gen.tobytes()))

    def __repr__(self):
        return f"LinearCode(q={self.field.q}, n={self.n}, k={self.k})"

    def contains_vec(self, vec) -> bool:
        return in_row_space(self.gen, vec, self.field)

    def contains_code(self, other: LinearCode) -> bool:
        if self.field != other.field or self.n != other.n:
            return False
        return all(self.contains_vec(row) for row in other.gen)

    def weight_counts(self) -> np.ndarray:
        """Counts of codewords per Hamming weight (full enumeration)."""
        if self._weights is None:
            total = self.field.q**self.k
            if total > WEIGHT_ENUM_CAP:
                raise CapError(
                    f"weight enumeration needs q^k = {total} > {WEIGHT_ENUM_CAP}"
                )
            t = self.field.tables()
            self._weights = weight_distribution(
                np.ascontiguousarray(self.gen), self.field.q, t.add, t.mul
            )
        return self._weights


def code_from_rows(rows, field: FieldSpec, n: int | None = None) -> LinearCode:
    """Canonical code spanned by the given index-valued rows."""
    rows = [list(r) for r in rows]
    if n is None:
        if not rows:
            raise ValueError("cannot infer length from an empty row list")
        n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("inconsistent row lengths")
    return LinearCode(field, n, rows)


def min_weight(C: LinearCode) -> int:
    """Minimum Hamming weight over all nonzero codewords."""
    if C.k == 0:
        raise ValueError("zero code has no minimum weight")
    counts = C.weight_counts()
    return int(next(w for w in range(1, C.n + 1) if counts[w]))


def is_divisible(C: LinearCode, delta: int) -> bool:
    """True iff delta divides every codeword weight."""
    if delta <= 1:
        raise ValueError(f"divisor must be > 1, got {delta}")
    counts = C.weight_counts()
    return all(w % delta == 0 for w in range(1, C.n + 1) if counts[w])


def apply_perm(sigma: Perm, C: LinearCode) -> LinearCode:
    """The code {sigma(c)}: coordinate i of c moves to sigma(i)."""
    if sigma.degree != C.n:
        raise ValueError(f"degree {sigma.degree} does not match length {C.n}")
    moved = np.empty_like(C.gen)
    moved[:, list(sigma.images)] = C.gen
    return LinearCode(C.field, C.n, moved)


def paut_contains(C: LinearCode, sigma: Perm) -> bool:
    return apply_perm(sigma, C) == C


def dual_code(C: LinearCode) -> LinearCode:
    """The dual code, from the standard parity-check construction."""
    pivots = [int(np.nonzero(row)[0][0]) for row in C.gen]
    free = [j for j in range(C.n) if j not in pivots]
    t = C.field.tables()
    rows = np.zeros((len(free), C.n), dtype=np.int16)
    for r, f in enumerate(free):
        rows[r, f] = 1
        for i, p in enumerate(pivots):
            rows[r, p] = t.neg[C.gen[i, f]]
    return LinearCode(C.field, C.n, rows)


# -- automorphisms and equivalence --------------------------------------


def _column_signatures(C: LinearCode):
    """Per-coordinate invariants: (zero column, proportionality class size).

    Two coordinates can correspond under a code-preserving permutation
    only if their generator-matrix columns are zero together or lie in
    proportionality classes of equal size.
    """
    t = C.field.tables()
    reps = []
    for j in range(C.n):
        col = C.gen[:, j]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            reps.append(b"zero")
        else:
            reps.append(t.mul[t.inv[col[nz[0]]], col].tobytes())
    sizes = {r: reps.count(r) for r in set(reps)}
    return [(rep == b"zero", sizes[rep]) for rep in reps]


def _prefix_forms(C: LinearCode):
    return [canonicalize(C.gen[:, :m], m, C.field) for m in range(C.n + 1)]


def _perm_search(src: LinearCode, dst: LinearCode, find_all: bool):
    """Backtracking over preimages: position j of the image code receives
    source column tau[j]; prefixes are pruned by canonical-form equality.
    Yields sigma = tau^{-1} with sigma(src) = dst."""
    n = src.n
    sig_src = _column_signatures(src)
    sig_dst = _column_signatures(dst)
    if sorted(sig_src) != sorted(sig_dst):
        return
    prefixes = _prefix_forms(dst)
    candidates = [
        [i for i in range(n) if sig_src[i] == sig_dst[j]] for j in range(n)
    ]
    tau: list[int] = []
    used = [False] * n
    cols = np.zeros((src.k, n), dtype=np.int16)

    def consistent() -> bool:
        m = len(tau)
        got = canonicalize(cols[:, :m], m, src.field)
        want = prefixes[m]
        return got.shape == want.shape and bool(np.array_equal(got, want))

    def descend():
        j = len(tau)
        if j == n:
            sigma = [0] * n
            for pos, i in enumerate(tau):
                sigma[i] = pos
            yield Perm(sigma)
            return
        for i in candidates[j]:
            if used[i]:
                continue
            used[i] = True
            tau.append(i)
            cols[:, j] = src.gen[:, i]
            if consistent():
                yield from descend()
            tau.pop()
            used[i] = False

    for sigma in descend():
        yield sigma
        if not find_all:
            return


def paut_enumerate(C: LinearCode, max_n: int = PAUT_MAX_N) -> PermGroup:
    """The full group {sigma : sigma(C) = C}, for n <= 8."""
    if C.n > max_n:
        raise CapError(f"full PAut enumeration limited to n <= {max_n}")
    autos = list(_perm_search(C, C, find_all=True))
    return PermGroup.from_elements(autos, C.n)


def perm_equivalent(C1: LinearCode, C2: LinearCode, max_n: int = EQUIV_MAX_N):
    """A permutation sigma with sigma(C1) = C2, or None."""
    if C1.n > max_n or C2.n > max_n:
        raise CapError(f"equivalence search limited to n <= {max_n}")
    if (C1.n, C1.k, C1.field) != (C2.n, C2.k, C2.field):
        return None
    if C1.field.q**C1.k <= WEIGHT_ENUM_CAP:
        if C1.weight_counts().tolist() != C2.weight_counts().tolist():
            return None
    return next(_perm_search(C1, C2, find_all=False), None)


# -- the code <-> ideal bridge ------------------------------------------


@dataclass(frozen=True)
class CoordBijection:
    """Coordinate i carries group element phi[i] (0-based element index)."""

    group: PermGroup
    phi: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.phi) != list(range(self.group.order)):
            raise ValueError("phi must be a bijection onto the group elements")

    @classmethod
    def identity(cls, group: PermGroup) -> CoordBijection:
        return cls(group, tuple(range(group.order)))

    @property
    def n(self) -> int:
        return len(self.phi)


def code_to_algebra(C: LinearCode, phi: CoordBijection) -> galg.IdealBasis:
    """The subspace of F_q[G] carrying C, with its ideal sides detected."""
    if C.n != phi.n:
        raise ValueError(f"length {C.n} does not match group order {phi.n}")
    rows = np.zeros((C.k, phi.n), dtype=np.int16)
    rows[:, list(phi.phi)] = C.gen
    probe = galg.IdealBasis(phi.group, C.field, rows, galg.SUBSPACE_ONLY)
    left = galg.is_ideal(probe, galg.LEFT)
    right = galg.is_ideal(probe, galg.RIGHT)
    if left and right:
        side = galg.TWO_SIDED
    elif left:
        side = galg.LEFT
    elif right:
        side = galg.RIGHT
    else:
        side = galg.SUBSPACE_ONLY
    return galg.IdealBasis(phi.group, C.field, rows, side)


def algebra_to_code(I: galg.IdealBasis, phi: CoordBijection) -> LinearCode:
    """Pull an ideal back to coordinates; inverse of code_to_algebra."""
    if I.group.elements != phi.group.elements:
        raise ValueError("ideal and bijection refer to different groups")
    rows = I.mat[:, list(phi.phi)]
    return LinearCode(I.field, phi.n, rows)


# -- code files ---------------------------------------------------------


def code_file_text(C: LinearCode) -> str:
    lines = [f"field={format_field_spec(C.field)} n={C.n}"]
    lines.extend(",".join(str(int(x)) for x in row) for row in C.gen)
    return "\n".join(lines) + "\n"


def write_code_file(C: LinearCode, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(code_file_text(C))


def read_code_file(path) -> LinearCode:
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError("empty code file")
    header = dict(part.split("=", 1) for part in lines[0].split())
    field = parse_field_spec(header["field"])
    n = int(header["n"])
    rows = [[int(tok) for tok in ln.split(",")] for ln in lines[1:]]
    if any(len(r) != n for r in rows):
        raise ValueError("row length does not match header n")
    return LinearCode(field, n, rows)
