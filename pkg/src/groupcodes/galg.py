"""The group algebra F_q[G] for a fully enumerated permutation group G.

Elements are coefficient vectors indexed by G's canonical element
numbering (closure order of its generators); ideals are row-reduced
linear subspaces together with a side flag and are verified closed under
the declared multiplications at construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ffield import FieldSpec
from .linalg import canonicalize, in_row_space, stack
from .perms import Perm, PermGroup

LEFT = "left"
RIGHT = "right"
TWO_SIDED = "two-sided"
SUBSPACE_ONLY = "subspace-only"

SIDES = (LEFT, RIGHT, TWO_SIDED, SUBSPACE_ONLY)
ACTION_SIDES = (LEFT, RIGHT)


def _check_side(side, allowed=SIDES):
    if side not in allowed:
        raise ValueError(f"side must be one of {allowed}, got {side!r}")


class GAElem:
    """An element of F_q[G]: one coefficient index per group element."""

    __slots__ = ("group", "field", "vec")

    def __init__(self, group: PermGroup, field: FieldSpec, vec):
        vec = np.array(vec, dtype=np.int16)
        if vec.shape != (group.order,):
            raise ValueError(f"coefficient vector must have length {group.order}")
        if vec.size and (vec.min() < 0 or vec.max() >= field.q):
            raise ValueError("coefficients must be field element indices")
        vec.flags.writeable = False
        self.group = group
        self.field = field
        self.vec = vec

    @classmethod
    def zero(cls, group, field):
        return cls(group, field, np.zeros(group.order, dtype=np.int16))

    @classmethod
    def basis_vector(cls, group, field, j: int):
        vec = np.zeros(group.order, dtype=np.int16)
        vec[j] = 1
        return cls(group, field, vec)

    def coeff(self, j: int):
        return self.field.from_index(int(self.vec[j]))

    def support_size(self) -> int:
        return int(np.count_nonzero(self.vec))

    def __eq__(self, other):
        return (
            isinstance(other, GAElem)
            and self.group is other.group
            and self.field == other.field
            and bool(np.array_equal(self.vec, other.vec))
        )

    def __hash__(self):
        return hash((id(self.group), self.field, self.vec.tobytes()))

    def __str__(self):
        terms = [
            f"{int(c)}*{j + 1}" for j, c in enumerate(self.vec) if c
        ]
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"GAElem({self})"


def parse_ga_elem(text: str, group: PermGroup, field: FieldSpec) -> GAElem:
    """Inverse of str(GAElem): ``c*j`` terms joined by ``+`` (j 1-based)."""
    vec = np.zeros(group.order, dtype=np.int16)
    text = text.strip()
    if text != "0":
        for term in text.split("+"):
            c, j = term.strip().split("*")
            vec[int(j) - 1] = field.add_index(int(vec[int(j) - 1]), int(c) % field.q)
    return GAElem(group, field, vec)


def _translate(group: PermGroup, g: Perm, vec: np.ndarray, side: str) -> np.ndarray:
    if side == LEFT:
        idx = group.left_translation(g)
    else:
        idx = group.right_translation(g)
    out = np.empty_like(vec)
    out[list(idx)] = vec
    return out


def ga_mul_elem(g: Perm, x: GAElem, side: str) -> GAElem:
    """Multiply x by the group element g from the given side."""
    _check_side(side, ACTION_SIDES)
    if g not in x.group:
        raise ValueError("element not in the group")
    return GAElem(x.group, x.field, _translate(x.group, g, x.vec, side))


def subgroup_sum(G: PermGroup, N: PermGroup, field: FieldSpec) -> GAElem:
    """The sum of all elements of N, as an element of F_q[G]."""
    if not G.contains_group(N):
        raise ValueError("N is not a subgroup of G")
    vec = np.zeros(G.order, dtype=np.int16)
    for x in N.elements:
        vec[G.index_of(x)] = 1
    return GAElem(G, field, vec)


class IdealBasis:
    """A linear subspace of F_q[G] in canonical reduced-echelon form.

    For side != subspace-only, closure under the declared multiplications
    (by the group generators, which suffices) is verified at construction.
    """

    __slots__ = ("group", "field", "mat", "side")

    def __init__(self, group: PermGroup, field: FieldSpec, rows, side: str):
        _check_side(side)
        self.group = group
        self.field = field
        self.mat = canonicalize(stack(rows), group.order, field)
        self.side = side
        if side != SUBSPACE_ONLY and not is_ideal(self, side):
            raise ValueError(f"row space is not closed as a {side} ideal")

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def rows(self):
        return [GAElem(self.group, self.field, r.copy()) for r in self.mat]

    def contains_vec(self, vec) -> bool:
        return in_row_space(self.mat, vec, self.field)

    def same_space(self, other: IdealBasis) -> bool:
        return bool(np.array_equal(self.mat, other.mat))

    def __repr__(self):
        return f"IdealBasis(dim={self.dim}, side={self.side!r})"


def _closure_sides(side):
    if side == TWO_SIDED:
        return (LEFT, RIGHT)
    return (side,)


def ideal_generated(gens, side: str) -> IdealBasis:
    """Smallest subspace containing gens closed under the declared side
    multiplications (iterated generator translations + re-echelon)."""
    _check_side(side)
    if not gens:
        raise ValueError("need at least one generating element")
    group, field = gens[0].group, gens[0].field
    for x in gens:
        if x.group is not group or x.field != field:
            raise ValueError("generators must live in one group algebra")
    basis = canonicalize([x.vec for x in gens], group.order, field)
    if side == SUBSPACE_ONLY:
        return IdealBasis(group, field, basis, side)
    while True:
        new_rows = []
        for row in basis:
            for g in group.generators:
                for action in _closure_sides(side):
                    new_rows.append(_translate(group, g, row, action))
        bigger = canonicalize(stack(basis, new_rows), group.order, field)
        if bigger.shape[0] == basis.shape[0]:
            return IdealBasis(group, field, basis, side)
        basis = bigger


def is_ideal(S: IdealBasis, side: str) -> bool:
    """Row space closed under the side multiplications by all generators."""
    _check_side(side)
    if side == SUBSPACE_ONLY:
        return True
    for row in S.mat:
        for g in S.group.generators:
            for action in _closure_sides(side):
                if not in_row_space(S.mat, _translate(S.group, g, row, action), S.field):
                    return False
    return True


def acts_trivially(N: PermGroup, I: IdealBasis, side: str) -> bool:
    """True iff every generator of N fixes every basis row from the side."""
    _check_side(side, ACTION_SIDES)
    if not I.group.contains_group(N):
        raise ValueError("N is not a subgroup of the ideal's group")
    for n in N.generators:
        for row in I.mat:
            if not np.array_equal(_translate(I.group, n, row, side), row):
                return False
    return True


@dataclass(frozen=True)
class ConstancyViolation:
    """Names one (element, basis row, position) moved by the action."""

    element: Perm
    row: int
    position: int


def coset_constancy_profile(I: IdealBasis, N: PermGroup, side: str):
    """Partition of group elements into N-cosets on which every element of
    I is constant (Ng blocks for the left action, gN for the right), or a
    ConstancyViolation if the action is not trivial."""
    _check_side(side, ACTION_SIDES)
    G = I.group
    if not G.contains_group(N):
        raise ValueError("N is not a subgroup of the ideal's group")
    for n in N.generators:
        for r, row in enumerate(I.mat):
            moved = _translate(G, n, row, side)
            if not np.array_equal(moved, row):
                pos = int(np.nonzero(moved != row)[0][0])
                return ConstancyViolation(element=n, row=r, position=pos)
    assigned = [False] * G.order
    blocks = []
    for j in range(G.order):
        if assigned[j]:
            continue
        x = G.elements[j]
        if side == LEFT:
            block = sorted(G.index_of(n * x) for n in N.elements)
        else:
            block = sorted(G.index_of(x * n) for n in N.elements)
        for i in block:
            assigned[i] = True
        blocks.append(block)
    for row in I.mat:
        for block in blocks:
            values = {int(row[i]) for i in block}
            assert len(values) == 1, "trivial action must force coset constancy"
    return blocks


# -- ideal files -------------------------------------------------------


def write_ideal_file(I: IdealBasis, path, group_name: str) -> None:
    from .ffield import format_field_spec

    lines = [f"group={group_name} field={format_field_spec(I.field)} side={I.side}"]
    lines.extend(",".join(str(int(c)) for c in row) for row in I.mat)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def read_ideal_file(path, group: PermGroup) -> IdealBasis:
    from .ffield import parse_field_spec

    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    header = dict(part.split("=", 1) for part in lines[0].split())
    field = parse_field_spec(header["field"])
    rows = [[int(tok) for tok in ln.split(",")] for ln in lines[1:]]
    if not rows:
        rows = np.zeros((0, group.order), dtype=np.int16)
    return IdealBasis(group, field, rows, header["side"])
