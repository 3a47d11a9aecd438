"""Permutations of {1..n}, fully enumerated groups, and the S_n machinery
used throughout: regularity, centralizers through the regular anti-
isomorphism, derived subgroups, centers, quotients, regular
representations, and small decomposition/isomorphism searches.

Conventions: in memory everything is 0-based (a Perm maps point i to
``images[i]``); all text formats (cycle notation, one-line image lists,
group files) and the ``i0`` parameter are 1-based.  Groups are fully
enumerated, never lazily; the element ordering of a group is always the
breadth-first closure order of its generator list, so a group round-trips
through its generators with identical element numbering.
"""

from __future__ import annotations

import itertools
import math
import random
import re

from .errors import CapError

GROUP_ORDER_CAP = 5040  # full enumeration cap for PermGroup
BRUTE_CENTRALIZER_MAX_DEGREE = 8  # S_n sweep limit for non-regular input
ISO_ORDER_CAP = 24  # table isomorphism search limit
ASSOC_EXHAUSTIVE_MAX = 64  # exhaustive associativity check limit
ASSOC_SAMPLES = 10_000  # random triples above that


class Perm:
    """A permutation of {0..n-1} as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Perm) -> Perm:
        """Composition: (a * b)(x) = a(b(x))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        img = self.images
        return Perm(tuple(img[j] for j in other.images))

    def inv(self) -> Perm:
        out = [0] * self.degree
        for i, j in enumerate(self.images):
            out[j] = i
        return Perm(out)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """Nontrivial cycles as 0-based tuples, each starting at its minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = []
            cur = start
            while not seen[cur]:
                seen[cur] = True
                cyc.append(cur)
                cur = self.images[cur]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({format_cycles(self)!r})"


def commutator(a: Perm, b: Perm) -> Perm:
    return a.inv() * b.inv() * a * b


# -- text formats ------------------------------------------------------


def format_cycles(p: Perm) -> str:
    """1-based cycle notation; the identity prints as ``()``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


def format_one_line(p: Perm) -> str:
    return "[" + ",".join(str(i + 1) for i in p.images) + "]"


def parse_perm(text: str, degree: int) -> Perm:
    """Parse ``(1 2 3)(4 5)`` or ``[2,3,1,5,4]`` (both 1-based)."""
    text = text.strip()
    if text.startswith("["):
        body = text.strip("[]")
        images = [int(x) - 1 for x in body.split(",")] if body else []
        if len(images) != degree:
            raise ValueError(f"one-line form has {len(images)} points, expected {degree}")
        return Perm(images)
    if text == "()":
        return Perm.identity(degree)
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles or re.sub(r"\([^()]*\)|\s", "", text):
        raise ValueError(f"cannot parse permutation {text!r}")
    images = list(range(degree))
    touched = set()
    for cyc in cycles:
        pts = [int(tok) - 1 for tok in cyc.replace(",", " ").split()]
        if not pts:
            continue
        for pt in pts:
            if not 0 <= pt < degree:
                raise ValueError(f"point {pt + 1} out of range 1..{degree}")
            if pt in touched:
                raise ValueError(f"point {pt + 1} repeated across cycles")
            touched.add(pt)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return Perm(images)


# -- permutation groups ------------------------------------------------


class PermGroup:
    """A fully enumerated subgroup of S_n.

    ``elements`` is the closure enumeration order of ``generators`` and is
    the canonical element numbering wherever coefficient vectors refer to
    group elements.
    """

    __slots__ = ("degree", "generators", "elements", "_index", "_ltrans", "_rtrans")

    def __init__(self, generators, degree: int, _elements=None):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.degree = degree
        self.generators = generators
        self.elements = (
            tuple(_elements) if _elements is not None else _close(generators, degree)
        )
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._ltrans = {}
        self._rtrans = {}

    @classmethod
    def from_elements(cls, elements, degree: int, generators=None) -> PermGroup:
        """Group from a full element list, preserving the given element
        numbering (it is the coefficient indexing used by group-algebra
        artifacts).  Generators are chosen greedily unless supplied."""
        elements = list(elements)
        pool = set(elements)
        if len(pool) != len(elements):
            raise ValueError("element list contains duplicates")
        if Perm.identity(degree) not in pool:
            raise ValueError("element list lacks the identity")
        if generators is None:
            generators = []
            closure = {Perm.identity(degree)}
            for e in elements:
                if e not in closure:
                    generators.append(e)
                    closure = set(_close(generators, degree))
        if set(_close(tuple(generators), degree)) != pool:
            raise ValueError("element list is not closed under the group operations")
        return cls(tuple(generators), degree, _elements=elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self._index

    def index_of(self, p: Perm) -> int:
        return self._index[p]

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def contains_group(self, other: PermGroup) -> bool:
        return self.degree == other.degree and all(g in self for g in other.elements)

    def same_group(self, other: PermGroup) -> bool:
        return (
            self.degree == other.degree
            and self.order == other.order
            and self.contains_group(other)
        )

    def is_abelian(self) -> bool:
        return all(
            a * b == b * a for a, b in itertools.combinations(self.generators, 2)
        )

    def cyclic_generator(self):
        """An element of order |G|, or None."""
        for g in self.elements:
            if g.order() == self.order:
                return g
        return None

    def left_translation(self, g: Perm):
        """Index map L with L[j] = index of g * elements[j]."""
        if g not in self._index:
            raise ValueError("element not in group")
        if g not in self._ltrans:
            self._ltrans[g] = tuple(self._index[g * x] for x in self.elements)
        return self._ltrans[g]

    def right_translation(self, g: Perm):
        """Index map R with R[j] = index of elements[j] * g."""
        if g not in self._index:
            raise ValueError("element not in group")
        if g not in self._rtrans:
            self._rtrans[g] = tuple(self._index[x * g] for x in self.elements)
        return self._rtrans[g]

    def cayley_table(self) -> CayleyTable:
        """Multiplication table over the element numbering."""
        rows = [list(self.left_translation(g)) for g in self.elements]
        return CayleyTable(rows)

    def __repr__(self):
        return f"PermGroup(order={self.order}, degree={self.degree})"


def _close(generators, degree: int, cap: int = GROUP_ORDER_CAP):
    identity = Perm.identity(degree)
    elements = [identity]
    seen = {identity}
    frontier = 0
    while frontier < len(elements):
        x = elements[frontier]
        frontier += 1
        for g in generators:
            y = x * g
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > cap:
                    raise CapError(f"group order exceeds enumeration cap {cap}")
    return tuple(elements)


def group_closure(generators, degree: int) -> PermGroup:
    """Smallest subgroup of S_degree containing the generators."""
    return PermGroup(generators, degree)


def subgroup(G: PermGroup, gens) -> PermGroup:
    """Closure of gens, checked to lie inside G."""
    H = PermGroup(tuple(gens), G.degree)
    if not G.contains_group(H):
        raise ValueError("generators do not lie in the ambient group")
    return H


def is_regular(G: PermGroup) -> bool:
    """Order n, transitive, and trivial point stabilizers (checked both ways)."""
    n = G.degree
    if G.order != n:
        return False
    orbit = {0}
    queue = [0]
    while queue:
        i = queue.pop()
        for g in G.generators:
            j = g(i)
            if j not in orbit:
                orbit.add(j)
                queue.append(j)
    if len(orbit) != n:
        return False
    for i in range(n):
        if sum(1 for g in G.elements if g(i) == i) != 1:
            return False
    return True


def centralizer_anti_isomorphism(H: PermGroup, i0: int = 1):
    """The anti-isomorphism from a regular H onto its centralizer in S_n.

    i0 is 1-based.  With psi(h) = h(i0), the companion of h sends i to
    psi_inv(i)(h(i0)).  Returns the ordered map {h: companion(h)} over
    H.elements; composition reverses and the image is C_{S_n}(H).
    """
    if not is_regular(H):
        raise ValueError("group is not regular")
    n = H.degree
    if not 1 <= i0 <= n:
        raise ValueError(f"i0 must be in 1..{n}")
    base = i0 - 1
    psi_inv = [None] * n
    for h in H.elements:
        psi_inv[h(base)] = h
    out = {}
    for h in H.elements:
        target = h(base)
        out[h] = Perm(tuple(psi_inv[i](target) for i in range(n)))
    return out


def centralizer_in_symmetric(G: PermGroup) -> PermGroup:
    """C_{S_n}(G): via the regular anti-isomorphism when G is regular,
    otherwise by brute force over S_n for degree <= 8."""
    if is_regular(G):
        sigma = centralizer_anti_isomorphism(G, 1)
        gens = [sigma[g] for g in G.generators] or [G.identity()]
        return PermGroup(gens, G.degree)
    n = G.degree
    if n > BRUTE_CENTRALIZER_MAX_DEGREE:
        raise CapError(
            f"brute-force centralizer limited to degree {BRUTE_CENTRALIZER_MAX_DEGREE}"
        )
    gens = G.generators or (G.identity(),)
    found = []
    for images in itertools.permutations(range(n)):
        p = Perm(images)
        if all(p * g == g * p for g in gens):
            found.append(p)
    return PermGroup.from_elements(found, n)


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Subgroup generated by all commutators."""
    if G.order <= 256:
        seeds = []
        seen = set()
        for a in G.elements:
            for b in G.elements:
                c = commutator(a, b)
                if c not in seen:
                    seen.add(c)
                    seeds.append(c)
        return PermGroup(seeds, G.degree)
    # larger groups: normal closure of generator commutators
    seeds = []
    seen = set()
    for a in G.generators:
        for b in G.generators:
            c = commutator(a, b)
            if c not in seen:
                seen.add(c)
                seeds.append(c)
    while True:
        H = PermGroup(seeds, G.degree)
        new = [
            conj
            for x in H.elements
            for g in G.generators
            if (conj := g.inv() * x * g) not in H
        ]
        if not new:
            return H
        for c in new:
            if c not in seen:
                seen.add(c)
                seeds.append(c)


def center(G: PermGroup) -> PermGroup:
    central = [
        g for g in G.elements if all(g * h == h * g for h in G.generators)
    ]
    return PermGroup.from_elements(central, G.degree)


# -- abstract multiplication tables ------------------------------------


class CayleyTable:
    """A finite group as an m x m index table (validated at construction)."""

    __slots__ = ("order", "table", "identity", "inverse")

    def __init__(self, table):
        table = [list(int(x) for x in row) for row in table]
        m = len(table)
        if m == 0:
            raise ValueError("empty table")
        full = list(range(m))
        for row in table:
            if sorted(row) != full:
                raise ValueError("table rows must be permutations of 0..m-1")
        for j in range(m):
            if sorted(table[i][j] for i in range(m)) != full:
                raise ValueError("table columns must be permutations of 0..m-1")
        identity = next(
            (
                e
                for e in range(m)
                if all(table[e][x] == x and table[x][e] == x for x in range(m))
            ),
            None,
        )
        if identity is None:
            raise ValueError("table has no identity element")
        inverse = [None] * m
        for a in range(m):
            for b in range(m):
                if table[a][b] == identity:
                    inverse[a] = b
                    break
        if any(v is None for v in inverse):
            raise ValueError("table has non-invertible elements")
        if m <= ASSOC_EXHAUSTIVE_MAX:
            triples = itertools.product(range(m), repeat=3)
        else:
            rng = random.Random(0)
            triples = (
                (rng.randrange(m), rng.randrange(m), rng.randrange(m))
                for _ in range(ASSOC_SAMPLES)
            )
        for a, b, c in triples:
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise ValueError(f"associativity fails at ({a},{b},{c})")
        self.order = m
        self.table = tuple(tuple(row) for row in table)
        self.identity = identity
        self.inverse = tuple(inverse)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(self.order)
        )

    def is_cyclic(self) -> bool:
        return any(self.order_of(a) == self.order for a in range(self.order))

    def __repr__(self):
        return f"CayleyTable(order={self.order})"


def regular_representation(T: CayleyTable):
    """Left-regular embedding into S_m (element a acts by x -> a*x).

    Returns (group, point_of) where point_of[a] is the point carrying
    table element a; with this construction it is the identity map, kept
    explicit because artifacts record it.
    """
    m = T.order
    if m > GROUP_ORDER_CAP:
        raise CapError(f"table order {m} exceeds enumeration cap {GROUP_ORDER_CAP}")
    perms = [Perm(tuple(T.mul(a, x) for x in range(m))) for a in range(m)]
    group = PermGroup.from_elements(perms, m)
    return group, tuple(range(m))


def quotient(G: PermGroup, N: PermGroup):
    """Cayley table on left cosets gN plus the projection index map."""
    if not G.contains_group(N):
        raise ValueError("N is not a subgroup of G")
    for g in G.generators:
        gi = g.inv()
        for x in N.elements:
            if gi * x * g not in N:
                raise ValueError("N is not normal in G")
    proj = [-1] * G.order
    reps = []
    for j, x in enumerate(G.elements):
        if proj[j] >= 0:
            continue
        c = len(reps)
        reps.append(x)
        for n in N.elements:
            proj[G.index_of(x * n)] = c
    table = [
        [proj[G.index_of(a * b)] for b in reps]
        for a in reps
    ]
    return CayleyTable(table), tuple(proj)


def find_isomorphism(T1: CayleyTable, T2: CayleyTable):
    """A multiplication-preserving bijection T1 -> T2 (as an index list),
    or None.  Backtracking over generator images; order cap 24."""
    if T1.order != T2.order:
        raise ValueError("order mismatch")
    m = T1.order
    if m > ISO_ORDER_CAP:
        raise CapError(f"isomorphism search limited to order {ISO_ORDER_CAP}")
    ord1 = [T1.order_of(a) for a in range(m)]
    ord2 = [T2.order_of(a) for a in range(m)]
    if sorted(ord1) != sorted(ord2):
        return None

    # greedy generators of T1 with a construction log for all elements
    gens = []
    log = []  # (new_elem, src_elem, gen_position)
    closure = {T1.identity}

    def extend(gen):
        added = [(gen, None, len(gens))]
        closure.add(gen)
        frontier = [gen]
        while frontier:
            nxt = []
            for x in sorted(closure):
                for gi, g in enumerate(gens + [gen]):
                    y = T1.mul(x, g)
                    if y not in closure:
                        closure.add(y)
                        added.append((y, x, gi))
                        nxt.append(y)
            frontier = nxt
        return added

    for a in range(m):
        if a not in closure:
            log.extend(extend(a))
            gens.append(a)

    def replay(images):
        img = {T1.identity: T2.identity}
        for y, x, gi in log:
            if x is None:
                img[y] = images[gi]
            else:
                img[y] = T2.mul(img[x], images[gi])
        if len(set(img.values())) != m:
            return None
        out = [img[a] for a in range(m)]
        for a in range(m):
            for b in range(m):
                if out[T1.mul(a, b)] != T2.mul(out[a], out[b]):
                    return None
        return out

    candidates = [
        [b for b in range(m) if ord2[b] == ord1[g]] for g in gens
    ]
    for images in itertools.product(*candidates):
        out = replay(list(images))
        if out is not None:
            return out
    return None


def is_hall_cocyclic(G: PermGroup, N: PermGroup) -> bool:
    """gcd(|N|, [G:N]) = 1 and G/N cyclic; N must be normal and nontrivial."""
    if N.order == 1:
        raise ValueError("co-cyclic requires a nontrivial normal subgroup")
    table, _ = quotient(G, N)  # raises if N is not a normal subgroup
    if math.gcd(N.order, G.order // N.order) != 1:
        return False
    return table.is_cyclic()


def find_coprime_cyclic_decomposition(G: PermGroup):
    """Cyclic A, B <= G with coprime orders and AB = G, or None.

    A cyclic G returns (G-as-cyclic, trivial); the trivial factor counts
    as a valid degenerate decomposition.
    """
    trivial = PermGroup((), G.degree)
    gen = G.cyclic_generator()
    if gen is not None:
        return PermGroup((gen,), G.degree), trivial
    orders = [(g, g.order()) for g in G.elements]
    for a, oa in orders:
        for b, ob in orders:
            if oa * ob == G.order and math.gcd(oa, ob) == 1:
                A = PermGroup((a,), G.degree)
                B = PermGroup((b,), G.degree)
                products = {x * y for x in A.elements for y in B.elements}
                if len(products) == G.order:
                    return A, B
    return None


# -- group files -------------------------------------------------------


def group_file_text(G: PermGroup) -> str:
    """``degree n`` plus one generator per line.

    Reading re-encloses the generators, so when the group's element
    numbering is not the closure order of its generators (regular
    representations keep table order), the full element list is written
    instead; with the identity first, re-closure reproduces the numbering.
    """
    gens = G.generators
    if tuple(_close(gens, G.degree)) != G.elements:
        gens = G.elements
    if not gens:
        gens = (G.identity(),)
    lines = [f"degree {G.degree}"]
    lines.extend(format_cycles(g) for g in gens)
    return "\n".join(lines) + "\n"


def write_group_file(G: PermGroup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(group_file_text(G))


def read_group_file(path) -> PermGroup:
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("degree"):
        raise ValueError("group file must start with 'degree n'")
    degree = int(lines[0].split()[1])
    gens = [parse_perm(ln, degree) for ln in lines[1:]]
    return PermGroup(gens, degree)
