"""Builders for the concrete groups and codes used throughout: repetition
codes and their block direct sums, cyclic/dihedral/split-metacyclic
groups, A5, direct products, groups with prescribed derived-subgroup
order and index, and the canonical abelian generator pair inside the
automorphism group of a repetition-code direct sum.

Block coordinates: a length s*t vector is read as s blocks of size t;
coordinate r (0-based) sits at height h = r % t inside block i = r // t.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import LinearCode, code_from_rows
from .ffield import FieldSpec, is_prime
from .perms import CayleyTable, Perm, group_closure


@dataclass(frozen=True)
class BlockIndex:
    """Bijection between coordinates 0..st-1 and (height, block) pairs."""

    s: int
    t: int

    @property
    def n(self) -> int:
        return self.s * self.t

    def to_pair(self, r: int) -> tuple[int, int]:
        if not 0 <= r < self.n:
            raise ValueError(f"coordinate {r} out of range")
        return r % self.t, r // self.t

    def to_coord(self, h: int, i: int) -> int:
        if not (0 <= h < self.t and 0 <= i < self.s):
            raise ValueError(f"pair ({h}, {i}) out of range")
        return i * self.t + h


# -- repetition codes ---------------------------------------------------


def rep_code(t: int, field: FieldSpec) -> LinearCode:
    """All constant vectors of length t."""
    if t < 1:
        raise ValueError("length must be >= 1")
    return code_from_rows([[1] * t], field)


def rep_sum_code(s: int, t: int, field: FieldSpec) -> LinearCode:
    """Block-diagonal direct sum of s repetition codes of length t."""
    if s < 1 or t < 1:
        raise ValueError("block count and size must be >= 1")
    rows = []
    for i in range(s):
        row = [0] * (s * t)
        row[i * t : (i + 1) * t] = [1] * t
        rows.append(row)
    return code_from_rows(rows, field)


# -- group builders -----------------------------------------------------


def build_cyclic(m: int) -> CayleyTable:
    if m < 1:
        raise ValueError("order must be >= 1")
    return CayleyTable([[(a + b) % m for b in range(m)] for a in range(m)])


def build_dihedral(t: int) -> CayleyTable:
    """Order 2t, from the presentation x^2 = 1 = y^t, yxy = x.

    Element (a, b) stands for x^a y^b and has index a*t + b.
    """
    if t < 1:
        raise ValueError("t must be >= 1")

    def mul(a, b, c, d):
        if c == 0:
            return a, (b + d) % t
        return (a + 1) % 2, (d - b) % t

    size = 2 * t
    rows = []
    for e1 in range(size):
        a, b = divmod(e1, t)
        row = []
        for e2 in range(size):
            c, d = divmod(e2, t)
            na, nb = mul(a, b, c, d)
            row.append(na * t + nb)
        rows.append(row)
    return CayleyTable(rows)


def direct_product(T1: CayleyTable, T2: CayleyTable) -> CayleyTable:
    """Componentwise product; (a1, a2) has index a1*|T2| + a2."""
    m2 = T2.order
    size = T1.order * m2
    rows = []
    for e1 in range(size):
        a1, a2 = divmod(e1, m2)
        rows.append(
            [
                T1.mul(a1, e2 // m2) * m2 + T2.mul(a2, e2 % m2)
                for e2 in range(size)
            ]
        )
    return CayleyTable(rows)


def smallest_valid_m(p: int, q: int) -> int:
    """Smallest m with m != 1 and m^p = 1 modulo q."""
    for m in range(2, q):
        if pow(m, p, q) == 1:
            return m
    raise ValueError(f"no valid m for p={p}, q={q} (is p a divisor of q-1?)")


def build_Gpqm(p: int, q: int, m: int) -> CayleyTable:
    """The split metacyclic group of order p*q with generators a of order
    p and b of order q satisfying a b a^-1 = b^m.

    Element (i, j) stands for b^i a^j and has index i*p + j.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime")
    if (q - 1) % p != 0:
        raise ValueError(f"p = {p} does not divide q - 1 = {q - 1}")
    if m % q == 1 % q:
        raise ValueError(f"m = {m} is 1 modulo q = {q}")
    if pow(m, p, q) != 1:
        raise ValueError(f"m^p = {m}^{p} is not 1 modulo q = {q}")
    size = p * q
    rows = []
    for e1 in range(size):
        i1, j1 = divmod(e1, p)
        for_row = []
        for e2 in range(size):
            i2, j2 = divmod(e2, p)
            # b^i1 a^j1 b^i2 a^j2 = b^(i1 + i2*m^j1) a^(j1+j2)
            i = (i1 + i2 * pow(m, j1, q)) % q
            j = (j1 + j2) % p
            for_row.append(i * p + j)
        rows.append(for_row)
    return CayleyTable(rows)


def build_A5() -> CayleyTable:
    """The alternating group on 5 points, as an order-60 table."""
    five_cycle = Perm((1, 2, 3, 4, 0))
    three_cycle = Perm((1, 2, 0, 3, 4))
    group = group_closure([five_cycle, three_cycle], 5)
    assert group.order == 60
    return group.cayley_table()


# -- prescribed derived subgroup ----------------------------------------


@dataclass(frozen=True)
class PrescribedGroup:
    """Result of prescribed_commutator_group: a table plus the case that
    fired, or Unsupported (table None) with the reason."""

    table: CayleyTable | None
    case: str | None
    reason: str | None = None

    @property
    def supported(self) -> bool:
        return self.table is not None


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _match_primes(s_fact, t_fact):
    """Injective assignment of each prime power of t to a prime of s with
    p | q - 1 and exponent room; None if impossible."""
    t_items = sorted(t_fact.items())
    s_primes = sorted(s_fact)

    def backtrack(idx, used):
        if idx == len(t_items):
            return {}
        q, delta = t_items[idx]
        for p in s_primes:
            if p in used or (q - 1) % p != 0 or delta > s_fact[p]:
                continue
            rest = backtrack(idx + 1, used | {p})
            if rest is not None:
                rest[q] = p
                return rest
        return None

    return backtrack(0, frozenset())


def prescribed_commutator_group(s: int, t: int) -> PrescribedGroup:
    """A group with derived subgroup of order t and index s, assembled
    from the supported cases in fixed order; Unsupported is a value."""
    if s < 1 or t < 1:
        raise ValueError("s and t must be >= 1")
    if t == 1:
        return PrescribedGroup(build_cyclic(s), "cyclic")
    if t % 2 == 1 and s % 2 == 0:
        table = direct_product(build_dihedral(t), build_cyclic(s // 2))
        return PrescribedGroup(table, "dihedral-odd")
    if s % 4 == 0:
        table = direct_product(build_dihedral(2 * t), build_cyclic(s // 4))
        return PrescribedGroup(table, "dihedral-even")
    s_fact, t_fact = _factorize(s), _factorize(t)
    match = _match_primes(s_fact, t_fact)
    if match is not None:
        table = None
        for q, delta in sorted(t_fact.items()):
            p = match[q]
            block = build_Gpqm(p, q, smallest_valid_m(p, q))
            part = block
            for _ in range(delta - 1):
                part = direct_product(part, block)
            part = direct_product(part, build_cyclic(p ** (s_fact[p] - delta)))
            table = part if table is None else direct_product(table, part)
        leftover = 1
        for p, gamma in s_fact.items():
            if p not in match.values():
                leftover *= p**gamma
        table = direct_product(table, build_cyclic(leftover))
        return PrescribedGroup(table, "split-metacyclic-product")
    if t == 60:
        return PrescribedGroup(direct_product(build_A5(), build_cyclic(s)), "perfect-a5")
    return PrescribedGroup(
        None,
        None,
        reason=(
            f"no supported construction for derived order {t} with index {s}: "
            "t > 1 is even with s not divisible by 4, the prime-matching "
            "construction does not apply, and t != 60; this does not prove "
            "that no such group exists"
        ),
    )


# -- automorphisms of repetition-code sums -------------------------------


def rep_sum_paut_generators(s: int, t: int):
    """The block-shift and in-block-rotation generators of an abelian
    regular subgroup of the automorphism group of rep_sum_code(s, t).

    Returns (shift, rotate, G): shift sends block i to block i+1 keeping
    heights, rotate advances every height by 1 inside its block, and G is
    their closure (abelian of order s*t, regular, preserving the code).
    """
    if s < 1 or t < 1:
        raise ValueError("block count and size must be >= 1")
    idx = BlockIndex(s, t)
    shift = Perm(
        tuple(
            idx.to_coord(h, (i + 1) % s)
            for r in range(idx.n)
            for h, i in [idx.to_pair(r)]
        )
    )
    rotate = Perm(
        tuple(
            idx.to_coord((h + 1) % t, i)
            for r in range(idx.n)
            for h, i in [idx.to_pair(r)]
        )
    )
    G = group_closure([shift, rotate], idx.n)
    return shift, rotate, G


@dataclass(frozen=True)
class PAutDecomposition:
    """A block permutation plus one in-block permutation per block.

    Recomposition maps coordinate (h, i) to (taus[i](h), sigma(i)).
    """

    sigma: Perm
    taus: tuple[Perm, ...]

    def recompose(self) -> Perm:
        s = self.sigma.degree
        t = self.taus[0].degree
        idx = BlockIndex(s, t)
        images = [0] * idx.n
        for r in range(idx.n):
            h, i = idx.to_pair(r)
            images[r] = idx.to_coord(self.taus[i](h), self.sigma(i))
        return Perm(images)


def decompose_paut_element(pi: Perm, s: int, t: int) -> PAutDecomposition:
    """Split an automorphism of rep_sum_code(s, t) into its unique block
    permutation and per-block permutations; requires t >= 2 so blocks are
    distinguishable, and fails if pi does not map blocks onto blocks."""
    if t < 2:
        raise ValueError("blocks are only distinguishable for t >= 2")
    idx = BlockIndex(s, t)
    if pi.degree != idx.n:
        raise ValueError(f"degree {pi.degree} does not match s*t = {idx.n}")
    sigma_images = []
    taus = []
    for i in range(s):
        targets = {pi(idx.to_coord(h, i)) // t for h in range(t)}
        if len(targets) != 1:
            raise ValueError(f"block {i + 1} is not mapped onto a single block")
        j = targets.pop()
        sigma_images.append(j)
        taus.append(Perm(tuple(pi(idx.to_coord(h, i)) % t for h in range(t))))
    return PAutDecomposition(Perm(sigma_images), tuple(taus))


# -- builder text specs --------------------------------------------------


def parse_group_spec(text: str) -> CayleyTable:
    """Builder names: ``cyclic:m``, ``dihedral:t``, ``gpqm:p,q,m``,
    ``a5``, ``product:<spec>x<spec>``, ``prescribed:s,t``."""
    text = text.strip()
    if text == "a5":
        return build_A5()
    if text.startswith("product:"):
        parts = text[len("product:") :].split("x")
        if len(parts) < 2:
            raise ValueError("product spec needs at least two factors")
        table = parse_group_spec(parts[0])
        for part in parts[1:]:
            table = direct_product(table, parse_group_spec(part))
        return table
    if ":" not in text:
        raise ValueError(f"unrecognized group spec {text!r}")
    name, args_text = text.split(":", 1)
    args = [int(x) for x in args_text.split(",")]
    if name == "cyclic" and len(args) == 1:
        return build_cyclic(args[0])
    if name == "dihedral" and len(args) == 1:
        return build_dihedral(args[0])
    if name == "gpqm" and len(args) == 3:
        return build_Gpqm(*args)
    if name == "prescribed" and len(args) == 2:
        result = prescribed_commutator_group(*args)
        if not result.supported:
            raise ValueError(result.reason)
        return result.table
    raise ValueError(f"unrecognized group spec {text!r}")
