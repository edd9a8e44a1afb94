"""Subgroups of finite abelian groups ``Z_m1 + ... + Z_mN`` via integer lattices.

A homomorphism out of ``G = Z_m1 + ... + Z_mN`` is described by constraint
rows: ``x`` lies in the kernel iff ``row . x = 0 (mod M)`` for every row, where
``M`` is a common multiple of all moduli (rows for a target ``Z_n`` are scaled
by ``M / n``).  The constraint rows together with ``M Z^N`` span a lattice
``L``; the kernel is ``K = {x : L . x = 0 mod M} = M L^*``.  Two kernels are
equal iff their constraint lattices are, so :class:`ConstraintLattice` keeps
``L`` in row Hermite normal form (a canonical form) and never needs to
materialise ``K`` for comparisons.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, s, t)`` with ``g = gcd(a, b) = s a + t b`` and ``g >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


class ConstraintLattice:
    """Row HNF of ``span(rows) + M Z^N``; the kernel it cuts out of ``G``.

    Parameters
    ----------
    moduli : sequence of int
        Orders ``m_i`` of the cyclic summands of ``G``.
    modulus : int, optional
        Working modulus ``M``; defaults to ``lcm(moduli)``.
    """

    def __init__(self, moduli: Sequence[int], modulus: int | None = None):
        self.moduli = tuple(int(m) for m in moduli)
        self.N = len(self.moduli)
        self.M = int(modulus) if modulus else (math.lcm(*self.moduli) if self.moduli else 1)
        # upper triangular; rows[p][p] is the pivot of column p and divides M
        self.rows: list[list[int]] = [[self.M if q == p else 0 for q in range(self.N)]
                                      for p in range(self.N)]

    def copy(self) -> ConstraintLattice:
        out = ConstraintLattice.__new__(ConstraintLattice)
        out.moduli, out.N, out.M = self.moduli, self.N, self.M
        out.rows = [list(r) for r in self.rows]
        return out

    def key(self) -> tuple:
        return (self.M, tuple(tuple(r) for r in self.rows))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ConstraintLattice) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    # -- building ---------------------------------------------------------
    def add_row(self, row: Sequence[int], row_modulus: int | None = None) -> None:
        """Impose ``row . x = 0 (mod row_modulus)`` (default ``M``)."""
        M = self.M
        scale = 1 if row_modulus is None else M // row_modulus
        if row_modulus is not None and M % row_modulus:
            raise ValueError("row modulus must divide the working modulus")
        v = [(scale * c) % M for c in row]
        rows = self.rows
        changed = False
        for p in range(self.N):
            vp = v[p]
            if vp == 0:
                continue
            b = rows[p]
            bp = b[p]
            if vp % bp == 0:
                f = vp // bp
                for q in range(p, self.N):
                    v[q] = (v[q] - f * b[q]) % M
                continue
            g, s, t = xgcd(bp, vp)
            new_b = [s * b[q] + t * v[q] for q in range(self.N)]
            u, w = bp // g, vp // g
            v = [(u * v[q] - w * b[q]) % M for q in range(self.N)]
            rows[p] = new_b
            changed = True
        if changed:
            self._reduce()

    def add_rows(self, rows: Iterable[Sequence[int]], row_moduli: Iterable[int] | None = None) -> None:
        if row_moduli is None:
            for r in rows:
                self.add_row(r)
        else:
            for r, m in zip(rows, row_moduli):
                self.add_row(r, m)

    def meet(self, other: ConstraintLattice) -> ConstraintLattice:
        """Constraints of both; the kernel is the intersection of the kernels."""
        out = self.copy()
        for r in other.rows:
            out.add_row(r)
        return out

    def _reduce(self) -> None:
        """Canonical HNF: entries above each pivot reduced modulo that pivot."""
        rows, N = self.rows, self.N
        for q in range(N):
            piv = rows[q]
            pq = piv[q]
            for p in range(q):
                r = rows[p]
                f = r[q] // pq
                if f:
                    for k in range(q, N):
                        r[k] -= f * piv[k]
        # keep entries non-negative and bounded
        for p in range(N):
            r = rows[p]
            for k in range(p + 1, N):
                if r[k] < 0 or r[k] >= rows[k][k]:
                    raise AssertionError("HNF reduction failed")

    # -- kernel queries ---------------------------------------------------
    def contains(self, x: Sequence[int]) -> bool:
        """Is ``x`` in the kernel?"""
        M = self.M
        return all(sum(c * xi for c, xi in zip(r, x)) % M == 0 for r in self.rows)

    def kernel_includes(self, other: ConstraintLattice) -> bool:
        """``ker(other) <= ker(self)``, i.e. our constraints follow from theirs."""
        return all(other._row_in_lattice(r) for r in self.rows)

    def _row_in_lattice(self, row: Sequence[int]) -> bool:
        v = [c % self.M for c in row]
        for p in range(self.N):
            if v[p] == 0:
                continue
            b = self.rows[p]
            if v[p] % b[p]:
                return False
            f = v[p] // b[p]
            for q in range(p, self.N):
                v[q] = (v[q] - f * b[q]) % self.M
        return True

    def kernel_generators(self) -> list[tuple[int, ...]]:
        """Generators of the kernel, reduced mod the ``m_i``, zeros dropped.

        The kernel lattice is spanned by the columns of ``M B^{-1}`` where
        ``B`` is the (upper triangular) HNF basis.
        """
        N, M = self.N, self.M
        B = self.rows
        gens = []
        for col in range(N):
            # solve B y = M e_col by back substitution
            y = [Fraction(0)] * N
            for p in range(N - 1, -1, -1):
                acc = Fraction(M if p == col else 0)
                for q in range(p + 1, N):
                    acc -= B[p][q] * y[q]
                y[p] = acc / B[p][p]
            vec = []
            for yi, m in zip(y, self.moduli):
                if yi.denominator != 1:
                    raise AssertionError("kernel basis is not integral")
                vec.append(int(yi) % m)
            if any(vec):
                gens.append(tuple(vec))
        return gens

    def kernel_size(self) -> int:
        """``|ker|``: ``det(B) / prod(M / m_i)``."""
        det = math.prod(self.rows[p][p] for p in range(self.N))
        return det // math.prod(self.M // m for m in self.moduli)

    def kernel_elements(self, limit: int = 1 << 20) -> Iterator[tuple[int, ...]]:
        """Enumerate the kernel (breadth-first closure of the generators)."""
        if self.kernel_size() > limit:
            raise ValueError("kernel too large to enumerate")
        yield from subgroup_elements(self.kernel_generators(), self.moduli)


def subgroup_elements(gens: Sequence[Sequence[int]], moduli: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All elements of the subgroup of ``Z_m1 + ... + Z_mN`` spanned by ``gens``."""
    zero = tuple(0 for _ in moduli)
    seen = {zero}
    for g in gens:
        g = tuple(c % m for c, m in zip(g, moduli))
        if g in seen:
            continue
        new = set(seen)
        x = g
        while x not in seen:
            new.update(tuple((a + b) % m for a, b, m in zip(x, y, moduli)) for y in seen)
            x = tuple((a + b) % m for a, b, m in zip(x, g, moduli))
        seen = new
    yield from sorted(seen)


def random_element(gens: Sequence[Sequence[int]], moduli: Sequence[int], rng) -> tuple[int, ...]:
    """Uniform element of the subgroup spanned by ``gens`` (``rng``: ``random.Random``)."""
    out = [0] * len(moduli)
    for g in gens:
        k = rng.randrange(math.lcm(*moduli) if moduli else 1)
        for i, (c, m) in enumerate(zip(g, moduli)):
            out[i] = (out[i] + k * c) % m
    return tuple(out)


def all_vectors(moduli: Sequence[int]) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(m) for m in moduli))
