"""Exact arithmetic in small finite fields F_q, q = p^k.

Elements are coefficient vectors over F_p (least degree first) reduced
modulo a monic irreducible polynomial; for k = 1 the modulus is ignored.
Every element also has a dense integer index obtained by base-p digit
packing of its coefficients, so index 0 is zero and index 1 is one.  The
matrix kernels work entirely on indices through dense lookup tables.

Text formats:
  field spec     ``p`` for prime fields, ``p^k:c0,c1,...,ck`` for extensions
                 (e.g. ``2^2:1,1,1`` is F_4 with modulus x^2+x+1); a bare
                 prime power such as ``9`` resolves through the built-in
                 default moduli.
  element literal the element's integer index, in [0, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import CapError

FIELD_SIZE_CAP = 2**20  # largest q accepted by FieldSpec
TABLE_Q_CAP = 1024  # largest q for which dense op tables are built

# Monic irreducible moduli shipped for the common small extensions,
# coefficients least degree first.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (3, 2): (1, 0, 1),  # x^2 + 1
    (3, 3): (1, 2, 0, 1),  # x^3 + 2x + 1
    (5, 2): (1, 1, 1),  # x^2 + x + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m, over F_p."""
    a = list(a)
    _poly_trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * mi) % p
        _poly_trim(a)
    return a


def _poly_divides(d, a, p):
    """True iff monic d divides a over F_p."""
    return not _poly_mod(a, d, p)


def _monic_polys(degree, p):
    """All monic polynomials of the given degree over F_p, as coeff lists."""
    total = p**degree
    for packed in range(total):
        coeffs = []
        x = packed
        for _ in range(degree):
            x, r = divmod(x, p)
            coeffs.append(r)
        yield coeffs + [1]


def _check_irreducible(modulus: tuple[int, ...], p: int) -> None:
    k = len(modulus) - 1
    # no roots in F_p: rules out linear factors, decisive for k <= 3
    for a in range(p):
        acc = 0
        for c in reversed(modulus):
            acc = (acc * a + c) % p
        if acc == 0:
            raise ValueError(f"modulus has root {a} over F_{p}, not irreducible")
    if k <= 3:
        return
    if k <= 6:
        for d in range(2, k // 2 + 1):
            for cand in _monic_polys(d, p):
                if _poly_divides(cand, list(modulus), p):
                    raise ValueError(
                        f"modulus divisible by degree-{d} factor over F_{p}"
                    )
    # beyond k = 6 only the root check applies (desk-scale trust)


class FieldTables(NamedTuple):
    """Dense index-level operation tables for one field."""

    add: np.ndarray  # (q, q) int16
    mul: np.ndarray  # (q, q) int16
    neg: np.ndarray  # (q,) int16
    inv: np.ndarray  # (q,) int16, entry 0 unused


class FieldSpec:
    """The finite field F_q with q = p^k, p prime.

    For k >= 2 a monic irreducible modulus of degree k is required unless
    a built-in default exists for (p, k).  Values are immutable; equality
    is by (p, k, modulus).
    """

    __slots__ = ("p", "k", "modulus", "q", "_tables", "_powers")

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        q = p**k
        if q > FIELD_SIZE_CAP:
            raise CapError(f"field size {q} exceeds cap {FIELD_SIZE_CAP}")
        if k == 1:
            modulus = (0, 1)  # placeholder, never used for reduction
        else:
            if modulus is None:
                modulus = DEFAULT_MODULI.get((p, k))
                if modulus is None:
                    raise ValueError(
                        f"no default modulus for F_{p}^{k}; supply one explicitly"
                    )
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1:
                raise ValueError(
                    f"modulus must have degree {k} ({k + 1} coefficients), "
                    f"got {len(modulus)}"
                )
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            _check_irreducible(modulus, p)
        self.p = p
        self.k = k
        self.q = q
        self.modulus = modulus
        self._tables = None
        self._powers = tuple(p**i for i in range(k))

    # -- identity ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FieldSpec({format_field_spec(self)!r})"

    # -- elements ----------------------------------------------------

    def element(self, coeffs) -> FieldElem:
        if isinstance(coeffs, int):
            coeffs = (coeffs,) + (0,) * (self.k - 1)
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElem(self, coeffs)

    def zero(self) -> FieldElem:
        return self.element(0)

    def one(self) -> FieldElem:
        return self.element(1)

    def from_index(self, idx: int) -> FieldElem:
        if not 0 <= idx < self.q:
            raise ValueError(f"element index {idx} out of range [0, {self.q})")
        coeffs = []
        for _ in range(self.k):
            idx, r = divmod(idx, self.p)
            coeffs.append(r)
        return FieldElem(self, tuple(coeffs))

    def index_of(self, coeffs) -> int:
        return sum(c * w for c, w in zip(coeffs, self._powers))

    def elements(self):
        """All q elements in index order."""
        return [self.from_index(i) for i in range(self.q)]

    # -- index-level scalar arithmetic --------------------------------

    def add_index(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        ca = self.from_index(a).coeffs
        cb = self.from_index(b).coeffs
        return self.index_of(tuple((x + y) % self.p for x, y in zip(ca, cb)))

    def neg_index(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.index_of(tuple((-c) % self.p for c in self.from_index(a).coeffs))

    def mul_index(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        ca = list(self.from_index(a).coeffs)
        cb = list(self.from_index(b).coeffs)
        prod = _poly_mod(_poly_mul(ca, cb, self.p), list(self.modulus), self.p)
        prod += [0] * (self.k - len(prod))
        return self.index_of(prod)

    def inv_index(self, a: int) -> int:
        # a^(q-2) by squaring; fine at desk scale
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        out, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                out = self.mul_index(out, base)
            base = self.mul_index(base, base)
            e >>= 1
        return out

    # -- dense tables for the matrix kernels --------------------------

    def tables(self) -> FieldTables:
        if self._tables is not None:
            return self._tables
        q, p, k = self.q, self.p, self.k
        if q > TABLE_Q_CAP:
            raise CapError(
                f"dense op tables only built for q <= {TABLE_Q_CAP}, got q = {q}"
            )
        digits = np.zeros((q, k), dtype=np.int64)
        idx = np.arange(q)
        for i in range(k):
            digits[:, i] = idx % p
            idx = idx // p
        weights = np.array(self._powers, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = ((-digits) % p) @ weights
        # multiplicative group is cyclic: build exp/log from a generator
        exp = np.zeros(max(q - 1, 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        gen_idx = self._find_primitive_index()
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self.mul_index(x, gen_idx)
        mul = np.zeros((q, q), dtype=np.int64)
        nz = np.arange(1, q)
        if q > 1:
            mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
        inv = np.zeros(q, dtype=np.int64)
        inv[nz] = exp[(-log[nz]) % (q - 1)]
        self._tables = FieldTables(
            add=np.ascontiguousarray(add, dtype=np.int16),
            mul=np.ascontiguousarray(mul, dtype=np.int16),
            neg=np.ascontiguousarray(neg, dtype=np.int16),
            inv=np.ascontiguousarray(inv, dtype=np.int16),
        )
        return self._tables

    def _find_primitive_index(self) -> int:
        target = self.q - 1
        for cand in range(1, self.q):
            order = 1
            x = cand
            while x != 1:
                x = self.mul_index(x, cand)
                order += 1
                if order > target:
                    break
            if order == target:
                return cand
        raise AssertionError("no primitive element found (unreachable)")


@dataclass(frozen=True)
class FieldElem:
    """An element of F_q as a coefficient vector, least degree first."""

    spec: FieldSpec
    coeffs: tuple[int, ...]

    def _check(self, other: FieldElem) -> None:
        if self.spec != other.spec:
            raise ValueError("mismatched field specs")

    @property
    def index(self) -> int:
        return self.spec.index_of(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: FieldElem) -> FieldElem:
        self._check(other)
        p = self.spec.p
        return FieldElem(
            self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> FieldElem:
        p = self.spec.p
        return FieldElem(self.spec, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other: FieldElem) -> FieldElem:
        return self + (-other)

    def __mul__(self, other: FieldElem) -> FieldElem:
        self._check(other)
        return self.spec.from_index(self.spec.mul_index(self.index, other.index))

    def inv(self) -> FieldElem:
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.spec.from_index(self.spec.inv_index(self.index))

    def __pow__(self, e: int) -> FieldElem:
        if e < 0:
            return self.inv() ** (-e)
        out = self.spec.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __str__(self):
        return str(self.index)

    def __repr__(self):
        return f"FieldElem({format_field_spec(self.spec)}, idx={self.index})"


# -- text formats ------------------------------------------------------


def parse_field_spec(text: str) -> FieldSpec:
    """Parse ``p``, ``p^k``, ``p^k:c0,...,ck`` or a bare prime power."""
    text = text.strip()
    if ":" in text:
        head, mods = text.split(":", 1)
        if "^" not in head:
            raise ValueError(f"bad field spec {text!r}: modulus without p^k")
        p, k = (int(x) for x in head.split("^", 1))
        modulus = tuple(int(c) for c in mods.split(","))
        return FieldSpec(p, k, modulus)
    if "^" in text:
        p, k = (int(x) for x in text.split("^", 1))
        return FieldSpec(p, k)
    q = int(text)
    if is_prime(q):
        return FieldSpec(q)
    # resolve a bare prime power through its unique factorization
    for p in range(2, q):
        if q % p == 0:
            if not is_prime(p):
                break
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                break
            return FieldSpec(p, k)
    raise ValueError(f"field spec {q!r} is not a prime power")


def format_field_spec(spec: FieldSpec) -> str:
    if spec.k == 1:
        return str(spec.p)
    mods = ",".join(str(c) for c in spec.modulus)
    return f"{spec.p}^{spec.k}:{mods}"
