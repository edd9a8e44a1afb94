"""Finite associative unital rings given by explicit operation tables.

Elements are integer indices ``0 .. order-1``.  Every predicate in this module
is exhaustive: the rings are small enough that scanning all elements, pairs or
triples is the intended algorithm.

Canonical element indexing of the constructors:

* ``zmod(n)``: the residue ``a`` has index ``a``.
* ``gf(q)``, ``q = p**k``: the polynomial ``c0 + c1 w + ... `` (``w`` a root of
  the chosen irreducible polynomial) has index ``c0 + c1 p + c2 p**2 + ...``.
* ``product(R, S)``: the pair ``(a, b)`` has index ``a * |S| + b``.
* ``matrix(R, k)``: row-major entries ``e_0 .. e_{k*k-1}`` read as base-``|R|``
  digits, most significant first.
* ``trunc_poly(p, m)`` = ``Z_p[t]/(t^m)``: ``c0 + c1 t + ...`` has index
  ``c0 + c1 p + c2 p**2 + ...``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

ELEMENT_CAP = 65536
IDEAL_CAP = 256


class CapExceeded(RuntimeError):
    """An exhaustive computation would exceed a configured size cap."""


class FiniteRing:
    """A finite ring presented by addition and multiplication tables.

    Parameters
    ----------
    add_table, mul_table : array-like of shape (order, order)
        ``add_table[a][b]`` is the index of ``a + b``; likewise for products.
    zero, one : int
        Indices of the additive and multiplicative identities.
    additive_decomposition : sequence of (generator, additive order)
        Presents the additive group as a direct sum of cyclic groups.
    labels : sequence of str, optional
        Human-readable element names; defaults to the indices.
    """

    def __init__(self, add_table, mul_table, zero: int, one: int,
                 additive_decomposition: Sequence[tuple[int, int]],
                 labels: Sequence[str] | None = None, name: str = "R",
                 descriptor: dict | None = None):
        self.add_table = np.asarray(add_table, dtype=np.int64)
        self.mul_table = np.asarray(mul_table, dtype=np.int64)
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        self.order = int(self.add_table.shape[0])
        self.zero = int(zero)
        self.one = int(one)
        self.additive_decomposition = tuple((int(g), int(m)) for g, m in additive_decomposition)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.order))
        self.name = name
        self.descriptor = descriptor
        # plain lists are much faster than numpy for scalar lookups
        self._add = self.add_table.tolist()
        self._mul = self.mul_table.tolist()
        self._neg: list[int] | None = None
        self._coords: list[tuple[int, ...]] | None = None
        self._from_coords: dict[tuple[int, ...], int] | None = None
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}

    def __repr__(self) -> str:
        return f"FiniteRing({self.name}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))

    # -- arithmetic -----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        if self._neg is None:
            neg = [-1] * self.order
            for x in range(self.order):
                row = self._add[x]
                for y in range(self.order):
                    if row[y] == self.zero:
                        neg[x] = y
                        break
            self._neg = neg
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self.neg(b)]

    def power(self, a: int, k: int) -> int:
        out = self.one
        for _ in range(k):
            out = self._mul[out][a]
        return out

    def times(self, k: int, a: int) -> int:
        """Integer multiple ``k * a`` (``k >= 0``)."""
        out = self.zero
        for _ in range(k):
            out = self._add[out][a]
        return out

    def sum(self, items: Iterable[int]) -> int:
        out = self.zero
        for x in items:
            out = self._add[out][x]
        return out

    # -- element naming -------------------------------------------------
    def label(self, a: int) -> str:
        return self.labels[a]

    def element(self, key: int | str) -> int:
        """Resolve an index or a label to an element index."""
        if isinstance(key, str):
            try:
                return self._label_index[key]
            except KeyError:
                raise KeyError(f"{self.name} has no element labelled {key!r}") from None
        if not 0 <= key < self.order:
            raise IndexError(f"element index {key} out of range for {self.name}")
        return int(key)

    # -- additive coordinates -------------------------------------------
    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.additive_decomposition)

    @property
    def exponent(self) -> int:
        """Exponent of the additive group (lcm of the cyclic orders)."""
        return math.lcm(*self.moduli) if self.moduli else 1

    @property
    def characteristic(self) -> int:
        k, x = 1, self.one
        while x != self.zero:
            x = self._add[x][self.one]
            k += 1
        return k

    def _build_coords(self) -> None:
        coords: list[tuple[int, ...] | None] = [None] * self.order
        table: dict[tuple[int, ...], int] = {}
        mults = []
        for g, m in self.additive_decomposition:
            row = [self.zero]
            for _ in range(m - 1):
                row.append(self._add[row[-1]][g])
            mults.append(row)
        for vec in itertools.product(*(range(m) for m in self.moduli)):
            x = self.zero
            for k, c in enumerate(vec):
                x = self._add[x][mults[k][c]]
            if coords[x] is not None:
                raise ValueError(f"additive decomposition of {self.name} is not a direct sum")
            coords[x] = vec
            table[vec] = x
        if any(c is None for c in coords):
            raise ValueError(f"additive decomposition of {self.name} does not generate the ring")
        self._coords = coords  # type: ignore[assignment]
        self._from_coords = table

    def coords(self, a: int) -> tuple[int, ...]:
        if self._coords is None:
            self._build_coords()
        return self._coords[a]  # type: ignore[index]

    def from_coords(self, vec: Sequence[int]) -> int:
        if self._from_coords is None:
            self._build_coords()
        key = tuple(int(c) % m for c, m in zip(vec, self.moduli))
        return self._from_coords[key]  # type: ignore[index]

    # -- small derived facts --------------------------------------------
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul_table, self.mul_table.T))

    def center(self) -> RingSubset:
        m = self.mul_table
        return RingSubset(self, frozenset(a for a in self if np.array_equal(m[a, :], m[:, a])))

    def left_inverse(self, c: int) -> int | None:
        """Some ``u`` with ``u c = 1``, or ``None``."""
        for u in self:
            if self._mul[u][c] == self.one:
                return u
        return None

    def is_unit(self, c: int) -> bool:
        u = self.left_inverse(c)
        return u is not None and self._mul[c][u] == self.one

    def to_tables(self) -> dict:
        """Explicit-table descriptor, loadable again by :func:`build_ring`."""
        return {
            "kind": "tables",
            "add": self.add_table.tolist(),
            "mul": self.mul_table.tolist(),
            "zero": self.zero,
            "one": self.one,
            "decomposition": [list(p) for p in self.additive_decomposition],
            "labels": list(self.labels),
        }


@dataclass(frozen=True)
class RingSubset:
    """A subset of a ring's elements (annihilators, ideals, nil sets...)."""

    ring: FiniteRing = field(compare=False, repr=False)
    members: frozenset[int]

    def __contains__(self, a: object) -> bool:
        return a in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    @property
    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def labels(self) -> list[str]:
        return [self.ring.label(a) for a in self.sorted]

    def __repr__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


# ---------------------------------------------------------------------------
# constructors


def zmod(n: int) -> FiniteRing:
    if n < 1:
        raise ValueError("zmod(n) needs n >= 1")
    if n > ELEMENT_CAP:
        raise CapExceeded(f"zmod({n}) exceeds the element cap {ELEMENT_CAP}")
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    decomposition = [(1 % n, n)] if n > 1 else []
    return FiniteRing(add, mul, 0, 1 % n, decomposition, name=f"Z_{n}",
                      descriptor={"kind": "zmod", "n": n})


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1 or not _is_prime(p):
                break
            return p, k
    raise ValueError(f"{q} is not a prime power")


def _polymod(a: list[int], mod: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    k = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while len(a) > k:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - k
        for i, m in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * m) % p
        a.pop()
    return a


def _irreducible(p: int, k: int) -> list[int]:
    """Lexicographically first monic irreducible polynomial of degree k."""
    def divides(d: list[int], f: list[int]) -> bool:
        return not any(_polymod(list(f), d, p))

    lower = [list(c) + [1] for deg in range(1, k // 2 + 1)
             for c in itertools.product(range(p), repeat=deg)]
    for tail in itertools.product(range(p), repeat=k):
        f = list(tail) + [1]
        if f[0] == 0:
            continue
        if not any(divides(d, f) for d in lower):
            return f
    raise AssertionError("no irreducible polynomial found")


def gf(q: int) -> FiniteRing:
    """The finite field with ``q`` elements; ``w`` names the field generator."""
    p, k = _prime_power(q)
    if q > ELEMENT_CAP:
        raise CapExceeded(f"gf({q}) exceeds the element cap")
    if k == 1:
        R = zmod(p)
        return FiniteRing(R.add_table, R.mul_table, 0, 1, R.additive_decomposition,
                          name=f"F_{q}", descriptor={"kind": "gf", "q": q})
    modpoly = _irreducible(p, k)
    vecs = [tuple((i // p ** j) % p for j in range(k)) for i in range(q)]  # little-endian digits
    index = {v: i for i, v in enumerate(vecs)}
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a, va in enumerate(vecs):
        for b, vb in enumerate(vecs):
            add[a, b] = index[tuple((x + y) % p for x, y in zip(va, vb))]
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(va):
                for j, y in enumerate(vb):
                    prod[i + j] += x * y
            red = _polymod(prod, modpoly, p) + [0] * k
            mul[a, b] = index[tuple(red[:k])]
    labels = [_poly_label(v, "w", p) for v in vecs]
    decomposition = [(p ** i, p) for i in range(k)]
    return FiniteRing(add, mul, 0, 1, decomposition, labels=labels, name=f"F_{q}",
                      descriptor={"kind": "gf", "q": q})


def _poly_label(coeffs: Sequence[int], var: str, p: int) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) if parts else "0"


def trunc_poly(p: int, m: int) -> FiniteRing:
    """``Z_p[t]/(t^m)``."""
    if not _is_prime(p) or m < 1:
        raise ValueError("trunc_poly(p, m) needs a prime p and m >= 1")
    q = p ** m
    if q > ELEMENT_CAP:
        raise CapExceeded(f"trunc_poly({p}, {m}) exceeds the element cap")
    vecs = [tuple((i // p ** j) % p for j in range(m)) for i in range(q)]
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    weights = [p ** j for j in range(m)]
    for a, va in enumerate(vecs):
        for b, vb in enumerate(vecs):
            add[a, b] = sum(((x + y) % p) * w for x, y, w in zip(va, vb, weights))
            prod = [0] * m
            for i, x in enumerate(va):
                for j in range(m - i):
                    prod[i + j] += x * vb[j]
            mul[a, b] = sum((c % p) * w for c, w in zip(prod, weights))
    labels = [_poly_label(v, "t", p) for v in vecs]
    return FiniteRing(add, mul, 0, 1 % q, [(p ** j, p) for j in range(m)], labels=labels,
                      name=f"Z_{p}[t]/(t^{m})", descriptor={"kind": "trunc_poly", "p": p, "m": m})


def product(R: FiniteRing, S: FiniteRing) -> FiniteRing:
    """Direct product ``R x S`` with componentwise operations."""
    n, m = R.order, S.order
    if n * m > ELEMENT_CAP:
        raise CapExceeded(f"{R.name} x {S.name} exceeds the element cap")
    a = np.arange(n * m)
    ra, sa = a // m, a % m
    add = R.add_table[ra[:, None], ra[None, :]] * m + S.add_table[sa[:, None], sa[None, :]]
    mul = R.mul_table[ra[:, None], ra[None, :]] * m + S.mul_table[sa[:, None], sa[None, :]]
    decomposition = [(g * m + S.zero, k) for g, k in R.additive_decomposition]
    decomposition += [(R.zero * m + g, k) for g, k in S.additive_decomposition]
    labels = [f"({R.label(i // m)},{S.label(i % m)})" for i in range(n * m)]
    desc = {"kind": "product", "factors": [R.descriptor, S.descriptor]}
    return FiniteRing(add, mul, R.zero * m + S.zero, R.one * m + S.one, decomposition,
                      labels=labels, name=f"{R.name}x{S.name}", descriptor=desc)


def matrix(R: FiniteRing, k: int) -> FiniteRing:
    """Full matrix ring ``M_k(R)``."""
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    n = R.order
    if n ** (k * k) > ELEMENT_CAP:
        raise CapExceeded(f"M_{k}({R.name}) exceeds the element cap")
    size = n ** (k * k)
    entries = np.array(list(itertools.product(range(n), repeat=k * k)), dtype=np.int64)
    weights = n ** np.arange(k * k - 1, -1, -1)
    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    A, M = R.add_table, R.mul_table
    for a in range(size):
        ea = entries[a]
        summed = A[ea[None, :], entries]
        add[a] = summed @ weights
        ma = ea.reshape(k, k)
        prod = np.empty((size, k * k), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                acc = np.full(size, R.zero, dtype=np.int64)
                for t in range(k):
                    acc = A[acc, M[ma[i, t], entries[:, t * k + j]]]
                prod[:, i * k + j] = acc
        mul[a] = prod @ weights
    zero = int(np.full(k * k, R.zero) @ weights)
    one = int(np.array([R.one if i == j else R.zero for i in range(k) for j in range(k)]) @ weights)
    decomposition = []
    for pos in range(k * k):
        for g, order in R.additive_decomposition:
            vec = np.full(k * k, R.zero)
            vec[pos] = g
            decomposition.append((int(vec @ weights), order))
    labels = []
    for e in entries:
        rows = ["[" + ",".join(R.label(int(x)) for x in e[i * k:(i + 1) * k]) + "]" for i in range(k)]
        labels.append("[" + ",".join(rows) + "]")
    return FiniteRing(add, mul, zero, one, decomposition, labels=labels,
                      name=f"M_{k}({R.name})",
                      descriptor={"kind": "matrix", "base": R.descriptor, "k": k})


def from_tables(add, mul, zero: int, one: int, decomposition, labels=None, name: str = "R") -> FiniteRing:
    R = FiniteRing(add, mul, zero, one, decomposition, labels=labels, name=name)
    R.descriptor = R.to_tables()
    return R


def build_ring(descriptor: dict) -> FiniteRing:
    """Construct a ring from a descriptor dictionary.

    Recognised kinds: ``zmod`` (``n``), ``gf`` (``q``), ``trunc_poly`` (``p``,
    ``m``), ``product`` (``factors``: two descriptors), ``matrix`` (``base``,
    ``k``) and ``tables`` (explicit ``add``/``mul``/``zero``/``one``/
    ``decomposition``, optional ``labels``).
    """
    kind = descriptor.get("kind")
    if kind == "zmod":
        return zmod(int(descriptor["n"]))
    if kind == "gf":
        return gf(int(descriptor["q"]))
    if kind == "trunc_poly":
        return trunc_poly(int(descriptor["p"]), int(descriptor["m"]))
    if kind == "product":
        factors = [build_ring(d) for d in descriptor["factors"]]
        if len(factors) < 2:
            raise ValueError("product needs at least two factors")
        out = factors[0]
        for f in factors[1:]:
            out = product(out, f)
        return out
    if kind == "matrix":
        return matrix(build_ring(descriptor["base"]), int(descriptor["k"]))
    if kind == "tables":
        order = len(descriptor["add"])
        if order > ELEMENT_CAP:
            raise CapExceeded("explicit table ring exceeds the element cap")
        return from_tables(descriptor["add"], descriptor["mul"], descriptor["zero"],
                           descriptor["one"], [tuple(p) for p in descriptor["decomposition"]],
                           labels=descriptor.get("labels"), name=descriptor.get("name", "R"))
    raise ValueError(f"unknown ring constructor {kind!r}")


# ---------------------------------------------------------------------------
# axiom validation


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    return tuple(int(x) for x in hits[0]) if len(hits) else None


def validate_ring_axioms(R: FiniteRing) -> list[Violation]:
    """Exhaustively check every ring axiom; an empty list means R is a ring.

    Each violated axiom is reported once with the first witness found.
    """
    n = R.order
    A, M = R.add_table, R.mul_table
    out: list[Violation] = []
    if A.shape != (n, n) or M.shape != (n, n):
        return [Violation("table shape", (n,))]
    bad = _first((A < 0) | (A >= n))
    if bad:
        out.append(Violation("addition closed", bad))
    bad = _first((M < 0) | (M >= n))
    if bad:
        out.append(Violation("multiplication closed", bad))
    if out:
        return out
    idx = np.arange(n)
    checks = [
        ("addition commutative", A != A.T),
        ("additive identity", (A[R.zero, :] != idx)[None, :] | (A[:, R.zero] != idx)[None, :]),
        ("additive inverses", ~np.any(A == R.zero, axis=1)[None, :]),
        ("addition associative", A[A[:, :, None], idx[None, None, :]] != A[idx[:, None, None], A[None, :, :]]),
        ("multiplication associative", M[M[:, :, None], idx[None, None, :]] != M[idx[:, None, None], M[None, :, :]]),
        # a(b + c) = ab + ac
        ("left distributive", M[idx[:, None, None], A[None, :, :]] != A[M[:, :, None], M[:, None, :]]),
        # (a + b)c = ac + bc
        ("right distributive", M[A[:, :, None], idx[None, None, :]] != A[M[:, None, :], M[None, :, :]]),
        ("multiplicative identity", (M[R.one, :] != idx)[None, :] | (M[:, R.one] != idx)[None, :]),
    ]
    for name, mask in checks:
        bad = _first(mask)
        if bad is not None:
            if mask.ndim == 2 and mask.shape[0] == 1:
                bad = bad[1:]
            out.append(Violation(name, bad))
    try:
        R._coords = None
        R._build_coords()
    except ValueError:
        out.append(Violation("additive decomposition", tuple(g for g, _ in R.additive_decomposition)))
    return out


# ---------------------------------------------------------------------------
# annihilators and ideals


def right_annihilator(R: FiniteRing, S: Iterable[int]) -> RingSubset:
    """``r_R(S) = {a : s a = 0 for all s in S}``."""
    S = list(S)
    mul = R._mul
    return RingSubset(R, frozenset(a for a in R if all(mul[s][a] == R.zero for s in S)))


def left_annihilator(R: FiniteRing, S: Iterable[int]) -> RingSubset:
    """``l_R(S) = {a : a s = 0 for all s in S}``."""
    S = list(S)
    mul = R._mul
    return RingSubset(R, frozenset(a for a in R if all(mul[a][s] == R.zero for s in S)))


def additive_closure(R: FiniteRing, gens: Iterable[int]) -> frozenset[int]:
    """Additive subgroup generated by ``gens``."""
    add = R._add
    group = {R.zero}
    for g in set(gens):
        if g in group:
            continue
        # group + <g>
        new = set(group)
        x = g
        while x not in group:
            new.update(add[x][y] for y in group)
            x = add[x][g]
        group = new
    return frozenset(group)


def principal_right_ideal(R: FiniteRing, a: int) -> RingSubset:
    """``aR``; already an additive group because R is unital."""
    return RingSubset(R, frozenset(R._mul[a]))


def principal_left_ideal(R: FiniteRing, a: int) -> RingSubset:
    return RingSubset(R, frozenset(R._mul[r][a] for r in R))


def generated_ideal(R: FiniteRing, gens: Iterable[int], side: str = "right") -> RingSubset:
    """Smallest right / left / two-sided ideal containing ``gens``."""
    mul = R._mul
    gens = set(gens)
    if side == "right":
        spread = {mul[g][r] for g in gens for r in R}
    elif side == "left":
        spread = {mul[r][g] for g in gens for r in R}
    elif side == "two":
        left = {mul[r][g] for g in gens for r in R}
        spread = {mul[x][s] for x in left for s in R}
    else:
        raise ValueError(f"unknown side {side!r}")
    return RingSubset(R, additive_closure(R, spread))


def _check_cap(R: FiniteRing, cap: int) -> None:
    if R.order > cap:
        raise CapExceeded(f"{R.name} has {R.order} elements; ideal enumeration cap is {cap}")


def _enumerate_ideals(R: FiniteRing, side: str, cap: int) -> list[RingSubset]:
    _check_cap(R, cap)
    principal = {a: generated_ideal(R, [a], side).members for a in R}
    add = R._add
    zero = frozenset([R.zero])
    seen = {zero}
    queue = [zero]
    while queue:
        current = queue.pop()
        for a in R:
            if a in current:
                continue
            gen = principal[a]
            bigger = frozenset(add[x][y] for x in current for y in gen)
            if bigger not in seen:
                seen.add(bigger)
                queue.append(bigger)
    return [RingSubset(R, I) for I in sorted(seen, key=lambda s: (len(s), sorted(s)))]


def enumerate_right_ideals(R: FiniteRing, cap: int = IDEAL_CAP) -> list[RingSubset]:
    """All right ideals, smallest first.  Raises :class:`CapExceeded`."""
    return _enumerate_ideals(R, "right", cap)


def enumerate_left_ideals(R: FiniteRing, cap: int = IDEAL_CAP) -> list[RingSubset]:
    return _enumerate_ideals(R, "left", cap)


def enumerate_ideals(R: FiniteRing, cap: int = IDEAL_CAP) -> list[RingSubset]:
    """All two-sided ideals."""
    return _enumerate_ideals(R, "two", cap)


# ---------------------------------------------------------------------------
# idempotents and nilpotents


@dataclass(frozen=True)
class IdempotentSets:
    idempotents: RingSubset
    central_idempotents: RingSubset
    left_semicentral: RingSubset
    right_semicentral: RingSubset


def idempotent_sets(R: FiniteRing) -> IdempotentSets:
    mul = R._mul
    idem = [e for e in R if mul[e][e] == e]
    center = R.center().members
    # re = ere  /  er = ere
    left = [e for e in idem if all(mul[r][e] == mul[mul[e][r]][e] for r in R)]
    right = [e for e in idem if all(mul[e][r] == mul[mul[e][r]][e] for r in R)]
    return IdempotentSets(
        RingSubset(R, frozenset(idem)),
        RingSubset(R, frozenset(e for e in idem if e in center)),
        RingSubset(R, frozenset(left)),
        RingSubset(R, frozenset(right)),
    )


def nilpotents(R: FiniteRing) -> RingSubset:
    out = set()
    for a in R:
        x = a
        # powers of a cycle within `order` steps
        for _ in range(R.order):
            if x == R.zero:
                out.add(a)
                break
            x = R._mul[x][a]
    return RingSubset(R, frozenset(out))


def is_prime_ideal(R: FiniteRing, P: frozenset[int]) -> bool:
    """``P`` proper and for all ``a, b`` outside ``P`` some ``a r b`` lies outside ``P``."""
    if len(P) == R.order:
        return False
    mul = R._mul
    outside = [a for a in R if a not in P]
    for a in outside:
        ar = {mul[a][r] for r in R}
        for b in outside:
            if all(mul[x][b] in P for x in ar):
                return False
    return True


@dataclass(frozen=True)
class NilStructure:
    nil_set: RingSubset
    is_reduced: bool
    is_NI: bool
    prime_radical: RingSubset | None
    is_2_primal: bool | None
    is_semiprime: bool | None
    status: str = "decided"


def nil_structure(R: FiniteRing, cap: int = IDEAL_CAP) -> NilStructure:
    """Nilpotent set, reducedness, NI, prime radical, 2-primal, semiprime.

    NI is decided element-wise: the nilpotent set is an ideal exactly when it
    is the largest nil ideal.  The prime radical needs the two-sided ideals
    and is ``None`` (status ``"undecided_at_cap"``) above ``cap`` elements.
    """
    nil = nilpotents(R)
    add, mul = R._add, R._mul
    N = nil.members
    is_ideal = (all(add[a][b] in N for a in N for b in N)
                and all(mul[r][a] in N and mul[a][r] in N for a in N for r in R))
    reduced = len(N) == 1
    try:
        ideals = enumerate_ideals(R, cap)
    except CapExceeded:
        return NilStructure(nil, reduced, is_ideal, None, None, None, "undecided_at_cap")
    radical = frozenset(R)
    for I in ideals:
        if is_prime_ideal(R, I.members):
            radical &= I.members
    P = RingSubset(R, radical)
    return NilStructure(nil, reduced, is_ideal, P, radical == N, radical == frozenset([R.zero]))


# ---------------------------------------------------------------------------
# Baer-type classification


@dataclass(frozen=True)
class RingClass:
    is_abelian: bool
    is_baer: bool
    is_pp_right: bool
    is_pp_left: bool
    is_pq_baer_right: bool
    is_pq_baer_left: bool


def _idempotent_right_ideals(R: FiniteRing) -> set[frozenset[int]]:
    idem = idempotent_sets(R).idempotents
    return {principal_right_ideal(R, e).members for e in idem}


def _idempotent_left_ideals(R: FiniteRing) -> set[frozenset[int]]:
    idem = idempotent_sets(R).idempotents
    return {principal_left_ideal(R, e).members for e in idem}


def classify_ring(R: FiniteRing, cap: int = IDEAL_CAP) -> RingClass:
    """Abelian, Baer, right/left p.p. and right/left p.q.-Baer flags."""
    _check_cap(R, cap)
    sets = idempotent_sets(R)
    eR = _idempotent_right_ideals(R)
    Re = _idempotent_left_ideals(R)
    r_single = {a: right_annihilator(R, [a]).members for a in R}
    l_single = {a: left_annihilator(R, [a]).members for a in R}

    # r(X) is the intersection of the r(x), so the intersection closure of
    # the single-element annihilators is every annihilator of a nonempty set
    closure = set(r_single.values())
    frontier = set(closure)
    while frontier:
        fresh = {A & B for A in frontier for B in closure} - closure
        closure |= fresh
        frontier = fresh

    def r_principal(a: int) -> frozenset[int]:
        return right_annihilator(R, principal_right_ideal(R, a)).members

    def l_principal(a: int) -> frozenset[int]:
        return left_annihilator(R, principal_left_ideal(R, a)).members

    return RingClass(
        is_abelian=sets.idempotents.members == sets.central_idempotents.members,
        is_baer=all(A in eR for A in closure),
        is_pp_right=all(r_single[a] in eR for a in R),
        is_pp_left=all(l_single[a] in Re for a in R),
        is_pq_baer_right=all(r_principal(a) in eR for a in R),
        is_pq_baer_left=all(l_principal(a) in Re for a in R),
    )


@dataclass(frozen=True)
class RingAcResult:
    holds: bool | None
    witness_map: dict[RingSubset, int]
    counterexample: RingSubset | None
    side: str = "right"
    status: str = "decided"


def ring_ac_exact(R: FiniteRing, side: str = "right", cap: int = IDEAL_CAP) -> RingAcResult:
    """Property (a.c.) on R decided over every one-sided ideal.

    Right: every right ideal ``I`` has some ``c`` with ``r(I) = r(cR)``.
    Left: every left ideal ``I`` has some ``c`` with ``l(I) = l(Rc)``.
    """
    try:
        ideals = enumerate_right_ideals(R, cap) if side == "right" else enumerate_left_ideals(R, cap)
    except CapExceeded:
        return RingAcResult(None, {}, None, side, "undecided_at_cap")
    if side == "right":
        ann = lambda S: right_annihilator(R, S).members  # noqa: E731
        principal = {c: ann(principal_right_ideal(R, c)) for c in R}
    elif side == "left":
        ann = lambda S: left_annihilator(R, S).members  # noqa: E731
        principal = {c: ann(principal_left_ideal(R, c)) for c in R}
    else:
        raise ValueError(f"unknown side {side!r}")
    witnesses: dict[RingSubset, int] = {}
    for I in ideals:
        target = ann(I)
        c = next((c for c in R if principal[c] == target), None)
        if c is None:
            return RingAcResult(False, witnesses, I, side)
        witnesses[I] = c
    return RingAcResult(True, witnesses, None, side)
