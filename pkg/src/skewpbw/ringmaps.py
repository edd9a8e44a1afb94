"""Endomorphisms and sigma-derivations of finite rings, stored as tables.

A sigma-derivation here satisfies ``d(ab) = sigma(a) d(b) + d(a) b``, the
orientation forced by ``x r = sigma(r) x + d(r)`` and ``x(ab) = (xa)b``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from .finring import FiniteRing


@dataclass(frozen=True)
class MapViolation:
    law: str
    witness: tuple[int, ...]


class MapViolations(list):
    """Failed validation; a list of :class:`MapViolation` entries."""


class RingMap:
    """A validated unital ring endomorphism (injective, hence bijective)."""

    def __init__(self, ring: FiniteRing, table: Sequence[int], name: str = ""):
        self.ring = ring
        self.table = tuple(int(x) for x in table)
        self.name = name

    def __call__(self, a: int) -> int:
        return self.table[a]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingMap) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"RingMap({self.name or self.table})"

    def compose(self, other: RingMap) -> RingMap:
        """``self o other``."""
        return RingMap(self.ring, [self.table[x] for x in other.table])

    def power(self, k: int) -> RingMap:
        table = list(range(self.ring.order))
        for _ in range(k):
            table = [self.table[x] for x in table]
        return RingMap(self.ring, table)

    @property
    def is_identity(self) -> bool:
        return self.table == tuple(range(self.ring.order))

    @property
    def order(self) -> int:
        """Order of the map as a permutation of the ring's elements."""
        seen = [False] * len(self.table)
        out = 1
        for start in range(len(self.table)):
            if seen[start]:
                continue
            length, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = self.table[x]
                length += 1
            out = math.lcm(out, length)
        return out

    def inverse(self) -> RingMap:
        inv = [0] * len(self.table)
        for a, b in enumerate(self.table):
            inv[b] = a
        return RingMap(self.ring, inv, f"{self.name}^-1" if self.name else "")


class SigmaDerivation:
    """A validated ``sigma``-derivation."""

    def __init__(self, ring: FiniteRing, sigma: RingMap, table: Sequence[int], name: str = ""):
        self.ring = ring
        self.sigma = sigma
        self.table = tuple(int(x) for x in table)
        self.name = name

    def __call__(self, a: int) -> int:
        return self.table[a]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SigmaDerivation) and self.table == other.table
                and self.sigma == other.sigma)

    def __hash__(self) -> int:
        return hash((self.table, self.sigma.table))

    def __repr__(self) -> str:
        return f"SigmaDerivation({self.name or self.table})"

    @property
    def is_zero(self) -> bool:
        return all(x == self.ring.zero for x in self.table)

    def powers(self) -> list[tuple[int, ...]]:
        """Distinct tables of ``d^0, d^1, ...`` up to the first repeat."""
        ident = tuple(range(self.ring.order))
        out = [ident]
        seen = {ident}
        cur = ident
        while True:
            cur = tuple(self.table[x] for x in cur)
            if cur in seen:
                return out
            seen.add(cur)
            out.append(cur)


def _additive_violation(R: FiniteRing, table: Sequence[int]) -> MapViolation | None:
    for a in R:
        for b in R:
            if table[R.add(a, b)] != R.add(table[a], table[b]):
                return MapViolation("additive", (a, b))
    return None


def validate_endomorphism(R: FiniteRing, table: Sequence[int], name: str = "") -> RingMap | MapViolations:
    """Check additivity, multiplicativity, ``1 -> 1`` and injectivity."""
    if len(table) != R.order or any(not 0 <= int(x) < R.order for x in table):
        return MapViolations([MapViolation("table shape", (len(table),))])
    out = MapViolations()
    bad = _additive_violation(R, table)
    if bad:
        out.append(bad)
    for a, b in itertools.product(R, R):
        if table[R.mul(a, b)] != R.mul(table[a], table[b]):
            out.append(MapViolation("multiplicative", (a, b)))
            break
    if table[R.one] != R.one:
        out.append(MapViolation("unital", (R.one,)))
    seen: dict[int, int] = {}
    for a in R:
        if table[a] in seen:
            out.append(MapViolation("injective", (seen[table[a]], a)))
            break
        seen[table[a]] = a
    return out if out else RingMap(R, table, name)


def validate_sigma_derivation(R: FiniteRing, sigma: RingMap, table: Sequence[int],
                              name: str = "") -> SigmaDerivation | MapViolations:
    """Check additivity and ``d(ab) = sigma(a) d(b) + d(a) b`` on all pairs."""
    if len(table) != R.order or any(not 0 <= int(x) < R.order for x in table):
        return MapViolations([MapViolation("table shape", (len(table),))])
    out = MapViolations()
    bad = _additive_violation(R, table)
    if bad:
        out.append(bad)
    for a, b in itertools.product(R, R):
        rhs = R.add(R.mul(sigma(a), table[b]), R.mul(table[a], b))
        if table[R.mul(a, b)] != rhs:
            out.append(MapViolation("twisted Leibniz", (a, b)))
            break
    return out if out else SigmaDerivation(R, sigma, table, name)


def _require(result, what: str):
    if isinstance(result, MapViolations):
        raise ValueError(f"{what} is not valid: {list(result)}")
    return result


# ---------------------------------------------------------------------------
# named maps


def identity_map(R: FiniteRing) -> RingMap:
    return RingMap(R, range(R.order), "id")


def zero_derivation(R: FiniteRing, sigma: RingMap | None = None) -> SigmaDerivation:
    return SigmaDerivation(R, sigma or identity_map(R), [R.zero] * R.order, "zero")


def frobenius(R: FiniteRing) -> RingMap:
    """``a -> a^p`` with ``p`` the characteristic."""
    p = R.characteristic
    return _require(validate_endomorphism(R, [R.power(a, p) for a in R], "frobenius"), "frobenius")


def swap(R: FiniteRing) -> RingMap:
    """``(a, b) -> (b, a)`` on a product of two equal factors."""
    desc = R.descriptor or {}
    factors = desc.get("factors", [])
    if desc.get("kind") != "product" or len(factors) != 2 or factors[0] != factors[1]:
        raise ValueError("swap needs a product of two identical factors")
    m = math.isqrt(R.order)
    table = [(a % m) * m + a // m for a in R]
    return _require(validate_endomorphism(R, table, "swap"), "swap")


def _trunc_params(R: FiniteRing) -> tuple[int, int]:
    desc = R.descriptor or {}
    if desc.get("kind") != "trunc_poly":
        raise ValueError("this map needs a trunc_poly ring Z_p[t]/(t^m)")
    return int(desc["p"]), int(desc["m"])


def _trunc_basis(R: FiniteRing) -> list[int]:
    p, m = _trunc_params(R)
    return [p ** j for j in range(m)]  # indices of 1, t, t^2, ...


def trunc_poly_endomorphism(R: FiniteRing, image_of_t: int, name: str = "") -> RingMap:
    """Endomorphism of ``Z_p[t]/(t^m)`` determined by the image of ``t``."""
    p, m = _trunc_params(R)
    powers = [R.power(image_of_t, j) for j in range(m)]
    table = [R.sum(R.times(c, powers[j]) for j, c in enumerate(R.coords(a))) for a in R]
    return _require(validate_endomorphism(R, table, name), name or "endomorphism")


def trunc_poly_derivation(R: FiniteRing, sigma: RingMap, image_of_t: int, name: str = "") -> SigmaDerivation:
    """The sigma-derivation of ``Z_p[t]/(t^m)`` with ``d(t) = image_of_t``.

    Uses ``d(t^k) = sigma(t) d(t^(k-1)) + d(t) t^(k-1)`` and additivity.
    """
    basis = _trunc_basis(R)
    t = basis[1] if len(basis) > 1 else R.zero
    dpow = [R.zero]
    for k in range(1, len(basis)):
        dpow.append(R.add(R.mul(sigma(t), dpow[-1]), R.mul(image_of_t, basis[k - 1])))
    table = [R.sum(R.times(c, dpow[j]) for j, c in enumerate(R.coords(a))) for a in R]
    return _require(validate_sigma_derivation(R, sigma, table, name), name or "derivation")


def formal_derivative(R: FiniteRing) -> SigmaDerivation:
    """``d/dt`` on ``Z_p[t]/(t^m)`` (an ordinary derivation, ``sigma = id``)."""
    return trunc_poly_derivation(R, identity_map(R), R.one, "formal-derivative")


# ---------------------------------------------------------------------------
# families


@dataclass
class SigmaFamily:
    """The endomorphisms ``sigma_1 .. sigma_n`` and their composites.

    ``composite(alpha)`` is ``sigma_1^a1 o ... o sigma_n^an``.
    """

    maps: tuple[RingMap, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.maps = tuple(self.maps)

    def __len__(self) -> int:
        return len(self.maps)

    def composite(self, alpha: Sequence[int]) -> RingMap:
        key = tuple(a % s.order for a, s in zip(alpha, self.maps))
        if key not in self._cache:
            R = self.maps[0].ring
            out = identity_map(R)
            for s, a in zip(self.maps, key):
                out = out.compose(s.power(a))
            self._cache[key] = out
        return self._cache[key]


def sigma_monoid(family: SigmaFamily) -> list[tuple[tuple[int, ...], RingMap]]:
    """Every distinct composite ``sigma^alpha`` with a representative exponent.

    Exponents range over the box ``prod [0, order(sigma_i))``; representatives
    are the first hit in lexicographic order.
    """
    seen: dict[RingMap, tuple[int, ...]] = {}
    for alpha in itertools.product(*(range(s.order) for s in family.maps)):
        m = family.composite(alpha)
        if m not in seen:
            seen[m] = alpha
    return [(alpha, m) for m, alpha in seen.items()]


def delta_composites(deltas: Sequence[SigmaDerivation]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Distinct tables ``d_1^b1 o ... o d_n^bn`` with representative ``beta``."""
    pows = [d.powers() for d in deltas]
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for beta in itertools.product(*(range(len(p)) for p in pows)):
        table = tuple(range(len(pows[0][0])))
        # rightmost factor acts first
        for p, b in reversed(list(zip(pows, beta))):
            table = tuple(p[b][x] for x in table)
        if table not in seen:
            seen[table] = beta
    return [(beta, table) for table, beta in seen.items()]


@dataclass(frozen=True)
class Compatibility:
    sigma_compatible: bool
    delta_compatible: bool
    sigma_delta_compatible: bool
    sigma_rigid: bool
    witnesses: dict[str, list[tuple]] = field(default_factory=dict)


def check_compatibility(R: FiniteRing, sigmas: SigmaFamily,
                        deltas: Sequence[SigmaDerivation]) -> Compatibility:
    """Sigma / delta compatibility per generator and Sigma-rigidity.

    Witness lists hold ``(i, a, b)`` for compatibility failures (``i`` the
    0-based generator index) and ``(alpha, a)`` for rigidity failures.
    """
    zero = R.zero
    mul = R._mul
    sig_w, del_w, rig_w = [], [], []
    for i, s in enumerate(sigmas.maps):
        for a in R:
            for b in R:
                if (mul[a][b] == zero) != (mul[a][s(b)] == zero):
                    sig_w.append((i, a, b))
    for i, d in enumerate(deltas):
        for a in R:
            for b in R:
                if mul[a][b] == zero and mul[a][d(b)] != zero:
                    del_w.append((i, a, b))
    for alpha, s in sigma_monoid(sigmas):
        for a in R:
            if a != zero and mul[a][s(a)] == zero:
                rig_w.append((alpha, a))
    return Compatibility(
        sigma_compatible=not sig_w,
        delta_compatible=not del_w,
        sigma_delta_compatible=not sig_w and not del_w,
        sigma_rigid=not rig_w,
        witnesses={"sigma": sig_w, "delta": del_w, "rigid": rig_w},
    )


def compatibility_consequences(R: FiniteRing, sigmas: SigmaFamily,
                               deltas: Sequence[SigmaDerivation]) -> list[tuple]:
    """Exhaustive check of the consequences of (Sigma, Delta)-compatibility.

    For all composites ``theta``, ``beta`` and all ``a, b``:

    1. ``ab = 0`` implies ``a sigma^theta(b) = sigma^theta(a) b = 0``;
    2. ``sigma^beta(a) b = 0`` implies ``ab = 0``;
    3. ``ab = 0`` implies ``sigma^theta(a) delta^beta(b) = delta^beta(a) sigma^theta(b) = 0``.

    Returns the list of failures as ``(clause, theta_or_beta, ..., a, b)``.
    """
    zero = R.zero
    mul = R._mul
    monoid = sigma_monoid(sigmas)
    dcomp = delta_composites(deltas)
    zero_pairs = [(a, b) for a in R for b in R if mul[a][b] == zero]
    out = []
    for theta, s in monoid:
        for a, b in zero_pairs:
            if mul[a][s(b)] != zero or mul[s(a)][b] != zero:
                out.append((1, theta, a, b))
        for a in R:
            for b in R:
                if mul[s(a)][b] == zero and mul[a][b] != zero:
                    out.append((2, theta, a, b))
    for theta, s in monoid:
        for beta, d in dcomp:
            for a, b in zero_pairs:
                if mul[s(a)][d[b]] != zero or mul[d[a]][s(b)] != zero:
                    out.append((3, theta, beta, a, b))
    return out
