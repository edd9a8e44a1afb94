"""Normal-form arithmetic in skew PBW extensions ``A = sigma(R)<x_1, ..., x_n>``.

Elements of ``A`` are finite sums ``sum a_alpha x^alpha`` with left
coefficients in a finite ring ``R`` and standard monomials
``x^alpha = x_1^a1 ... x_n^an``.  Products are reduced to this normal form by
rewriting with

* ``x_i r   -> sigma_i(r) x_i + delta_i(r)``
* ``x_j x_i -> d_ij x_i x_j + sum_k r_k x_k + r_0``  for ``i < j``.

Variables are 0-based in code; exponent tuples have one slot per variable.
Monomials are ordered degree-lexicographically with ``x_1 < x_2 < ... < x_n``:
first by total degree, then by the exponent of ``x_n``, then ``x_{n-1}``, ...
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .finring import FiniteRing
from .ringmaps import RingMap, SigmaDerivation, SigmaFamily, identity_map, zero_derivation

Exp = tuple[int, ...]


class PresentationError(ValueError):
    """The presentation data does not define a skew PBW extension."""


def monomial_key(alpha: Exp) -> tuple:
    """Sort key realising the deglex order (larger key = larger monomial)."""
    return (sum(alpha), alpha[::-1])


@dataclass(frozen=True)
class Relation:
    """``x_j x_i = d x_i x_j + sum_k linear[k] x_k + r0`` for a pair ``i < j``."""

    d: int
    r0: int
    linear: tuple[int, ...]


class ExtensionSpec:
    """Presentation data of a skew PBW extension plus its product caches.

    Parameters
    ----------
    ring : FiniteRing
    sigmas : sequence of RingMap
        One injective endomorphism per variable.
    deltas : sequence of SigmaDerivation
        ``deltas[i]`` must be a ``sigmas[i]``-derivation.
    relations : mapping ``(i, j) -> Relation`` with ``i < j`` (0-based)
        Missing pairs default to ``x_j x_i = x_i x_j``.
    """

    def __init__(self, ring: FiniteRing, sigmas: Sequence[RingMap],
                 deltas: Sequence[SigmaDerivation],
                 relations: Mapping[tuple[int, int], Relation] | None = None,
                 name: str = "A", variables: Sequence[str] | None = None):
        n = len(sigmas)
        if n < 1:
            raise PresentationError("an extension needs at least one variable")
        if len(deltas) != n:
            raise PresentationError("need one sigma-derivation per variable")
        for i, (s, d) in enumerate(zip(sigmas, deltas)):
            if s.ring is not ring or d.ring is not ring:
                raise PresentationError(f"maps of x_{i + 1} live over a different ring")
            if d.sigma != s:
                raise PresentationError(f"delta_{i + 1} is not a sigma_{i + 1}-derivation")
        self.ring = ring
        self.n = n
        self.sigmas = SigmaFamily(tuple(sigmas))
        self.deltas = tuple(deltas)
        self.name = name
        self.variables = tuple(variables) if variables else tuple(
            ("x" if n == 1 else f"x{i + 1}") for i in range(n))
        rels: dict[tuple[int, int], Relation] = {}
        relations = dict(relations or {})
        for i, j in itertools.combinations(range(n), 2):
            rel = relations.pop((i, j), None)
            if rel is None:
                rel = Relation(ring.one, ring.zero, (ring.zero,) * n)
            if rel.d == ring.zero:
                raise PresentationError(f"d_{i + 1},{j + 1} must be nonzero")
            if len(rel.linear) != n:
                raise PresentationError(f"relation ({i + 1},{j + 1}) needs {n} linear coefficients")
            rels[(i, j)] = rel
        if relations:
            raise PresentationError(f"relations must be indexed by pairs i < j, got {sorted(relations)}")
        self.relations = rels
        self._sig = [s.table for s in self.sigmas.maps]
        self._del = [d.table for d in self.deltas]
        self._M: dict = {}
        self._vt: dict = {}
        self._mt: dict = {}
        # scratch space for derived computations keyed by the caller
        self.cache: dict = {}
        # provenance recorded by builders (family, substitutions, normalisations)
        self.notes: dict = {}

    def __repr__(self) -> str:
        return f"ExtensionSpec({self.name}, n={self.n}, R={self.ring.name})"

    # -- element constructors --------------------------------------------
    def zero_exp(self) -> Exp:
        return (0,) * self.n

    def unit_exp(self, i: int) -> Exp:
        return tuple(1 if k == i else 0 for k in range(self.n))

    def poly(self, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = ()) -> SkewPoly:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exp, int] = {}
        R = self.ring
        for alpha, c in items:
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.n or min(alpha) < 0:
                raise ValueError(f"bad exponent vector {alpha} for {self.n} variables")
            c = R.element(c)
            s = R.add(acc.get(alpha, R.zero), c)
            if s == R.zero:
                acc.pop(alpha, None)
            else:
                acc[alpha] = s
        return SkewPoly(self, acc)

    def scalar(self, r: int) -> SkewPoly:
        return self.poly({self.zero_exp(): r})

    def monomial(self, alpha: Sequence[int], coef: int | None = None) -> SkewPoly:
        return self.poly({tuple(alpha): self.ring.one if coef is None else coef})

    def var(self, i: int) -> SkewPoly:
        return self.monomial(self.unit_exp(i))

    def one(self) -> SkewPoly:
        return self.scalar(self.ring.one)

    def exponents(self, max_degree: int) -> list[Exp]:
        """All exponent vectors of total degree <= max_degree, deglex ascending."""
        out = [a for a in itertools.product(range(max_degree + 1), repeat=self.n) if sum(a) <= max_degree]
        return sorted(out, key=monomial_key)

    # -- core rewriting ---------------------------------------------------
    def _axpy(self, acc: dict, c: int, P: Mapping[Exp, int]) -> None:
        """``acc += c * P`` with the scalar on the left."""
        R = self.ring
        mul, add, zero = R._mul[c], R._add, R.zero
        for mono, b in P.items():
            v = mul[b]
            if v != zero:
                s = add[acc.get(mono, zero)][v]
                if s == zero:
                    del acc[mono]
                else:
                    acc[mono] = s

    def _var_mono(self, i: int, beta: Exp) -> dict:
        """Normal form of ``x_i * x^beta``."""
        key = (i, beta)
        hit = self._M.get(key)
        if hit is not None:
            return hit
        R = self.ring
        j = next((k for k in range(i) if beta[k] > 0), None)
        if j is None:
            out = {beta[:i] + (beta[i] + 1,) + beta[i + 1:]: R.one}
        else:
            # x_i x_j x^rest with j < i: apply the (j, i) relation
            rel = self.relations[(j, i)]
            rest = beta[:j] + (beta[j] - 1,) + beta[j + 1:]
            out: dict = {}
            self._axpy(out, rel.d, self._var_poly(j, self._var_mono(i, rest)))
            for k, r in enumerate(rel.linear):
                if r != R.zero:
                    self._axpy(out, r, self._var_mono(k, rest))
            if rel.r0 != R.zero:
                self._axpy(out, rel.r0, {rest: R.one})
        self._M[key] = out
        return out

    def _var_term(self, i: int, b: int, beta: Exp) -> dict:
        """Normal form of ``x_i * b x^beta`` via ``x_i b = sigma_i(b) x_i + delta_i(b)``."""
        key = (i, b, beta)
        hit = self._vt.get(key)
        if hit is not None:
            return hit
        zero = self.ring.zero
        out: dict = {}
        s = self._sig[i][b]
        if s != zero:
            self._axpy(out, s, self._var_mono(i, beta))
        d = self._del[i][b]
        if d != zero:
            self._axpy(out, d, {beta: self.ring.one})
        self._vt[key] = out
        return out

    def _var_poly(self, i: int, P: Mapping[Exp, int]) -> dict:
        out: dict = {}
        one = self.ring.one
        for beta, b in P.items():
            self._axpy(out, one, self._var_term(i, b, beta))
        return out

    def _mono_term(self, alpha: Exp, b: int, beta: Exp) -> dict:
        """Normal form of ``x^alpha * b x^beta``."""
        key = (alpha, b, beta)
        hit = self._mt.get(key)
        if hit is not None:
            return hit
        i = next((k for k, a in enumerate(alpha) if a > 0), None)
        if i is None:
            out = {beta: b} if b != self.ring.zero else {}
        else:
            rest = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
            out = self._var_poly(i, self._mono_term(rest, b, beta))
        self._mt[key] = out
        return out

    def _multiply(self, f: Mapping[Exp, int], g: Mapping[Exp, int]) -> dict:
        out: dict = {}
        for alpha, a in f.items():
            for beta, b in g.items():
                self._axpy(out, a, self._mono_term(alpha, b, beta))
        return out


class SkewPoly:
    """An element of a skew PBW extension in normal form.

    ``terms`` maps exponent tuples to nonzero left coefficients.  Instances
    are treated as immutable values.
    """

    __slots__ = ("ext", "terms", "_hash")

    def __init__(self, ext: ExtensionSpec, terms: Mapping[Exp, int]):
        self.ext = ext
        self.terms = dict(terms)
        self._hash = None

    # -- value semantics --------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, SkewPoly) and self.ext is other.ext and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: SkewPoly) -> SkewPoly:
        out = dict(self.terms)
        self.ext._axpy(out, self.ext.ring.one, other.terms)
        return SkewPoly(self.ext, out)

    def __neg__(self) -> SkewPoly:
        R = self.ext.ring
        return SkewPoly(self.ext, {a: R.neg(c) for a, c in self.terms.items()})

    def __sub__(self, other: SkewPoly) -> SkewPoly:
        return self + (-other)

    def __mul__(self, other: SkewPoly) -> SkewPoly:
        return poly_multiply(self, other)

    def scale(self, c: int) -> SkewPoly:
        """Left scalar multiple ``c * self``."""
        out: dict = {}
        self.ext._axpy(out, c, self.terms)
        return SkewPoly(self.ext, out)

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(a) for a in self.terms), default=-1)

    def coefficient(self, alpha: Sequence[int]) -> int:
        return self.terms.get(tuple(alpha), self.ext.ring.zero)

    def sorted_terms(self) -> list[tuple[Exp, int]]:
        """Terms in deglex descending order."""
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def to_list(self) -> list[list]:
        return [[list(a), c] for a, c in self.sorted_terms()]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        R = self.ext.ring
        parts = []
        for alpha, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.ext.variables, alpha) if e)
            lab = R.label(c)
            if not mono:
                parts.append(lab)
            elif c == R.one:
                parts.append(mono)
            else:
                parts.append(f"({lab})*{mono}" if "+" in lab else f"{lab}*{mono}")
        return " + ".join(parts)


def poly_from_list(ext: ExtensionSpec, data: Iterable[Sequence]) -> SkewPoly:
    """Inverse of :meth:`SkewPoly.to_list`."""
    return ext.poly([(tuple(alpha), c) for alpha, c in data])


def poly_multiply(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Normal form of ``f g``."""
    if f.ext is not g.ext:
        raise ValueError("polynomials belong to different extensions")
    return SkewPoly(f.ext, f.ext._multiply(f.terms, g.terms))


# ---------------------------------------------------------------------------
# leading data


@dataclass(frozen=True)
class LeadingData:
    lm: Exp | None  # None encodes lm(0) = 0
    lc: int
    lt: SkewPoly
    exp: Exp | None
    deg: int


def leading_data(f: SkewPoly) -> LeadingData:
    ext = f.ext
    if not f:
        return LeadingData(None, ext.ring.zero, f, None, -1)
    alpha = max(f.terms, key=monomial_key)
    c = f.terms[alpha]
    return LeadingData(alpha, c, ext.monomial(alpha, c), alpha, f.degree)


# ---------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True)
class DecompResult:
    leading: int
    tail: SkewPoly


def scalar_commutation(ext: ExtensionSpec, alpha: Sequence[int], r: int) -> DecompResult:
    """Write ``x^alpha r = sigma^alpha(r) x^alpha + p`` with ``deg p < |alpha|``."""
    alpha = tuple(alpha)
    if r == ext.ring.zero:
        raise ValueError("scalar_commutation needs a nonzero scalar")
    prod = poly_multiply(ext.monomial(alpha), ext.scalar(r))
    leading = ext.sigmas.composite(alpha)(r)
    tail = prod - ext.monomial(alpha, leading)
    if tail.degree >= sum(alpha) and tail:
        raise PresentationError(f"x^{alpha} r has a tail of degree {tail.degree}")
    return DecompResult(leading, tail)


def monomial_product(ext: ExtensionSpec, alpha: Sequence[int], beta: Sequence[int]) -> DecompResult:
    """Write ``x^alpha x^beta = c x^(alpha+beta) + p`` and check ``c`` is left invertible."""
    alpha, beta = tuple(alpha), tuple(beta)
    total = tuple(a + b for a, b in zip(alpha, beta))
    prod = poly_multiply(ext.monomial(alpha), ext.monomial(beta))
    c = prod.coefficient(total)
    tail = prod - ext.monomial(total, c)
    if ext.ring.left_inverse(c) is None:
        raise PresentationError(f"c_{{{alpha},{beta}}} = {ext.ring.label(c)} is not left invertible")
    if tail and tail.degree >= sum(total):
        raise PresentationError(f"x^{alpha} x^{beta} has a tail of degree {tail.degree}")
    return DecompResult(c, tail)


def expand_monomial_scalar(ext: ExtensionSpec, alpha: Sequence[int], r: int) -> SkewPoly:
    """Closed-form expansion of ``x^alpha r`` as a sum over the variables.

    Moving ``r`` leftwards through ``x_n^an``, then ``x_{n-1}^a(n-1)``, ...:

        x^alpha r = sum_k sum_{j=1}^{a_k} x_1^a1..x_{k-1}^a(k-1) x_k^(a_k - j)
                        delta_k(sigma_k^(j-1)(s_k)) x_k^(j-1) x_{k+1}^a(k+1)..x_n^an
                    + sigma^alpha(r) x^alpha,

    where ``s_k = sigma_{k+1}^a(k+1)(...sigma_n^an(r))``.  Each summand is a
    standard monomial times a scalar times a standard monomial and is
    normalised with :func:`poly_multiply`.
    """
    alpha = tuple(alpha)
    R = ext.ring
    n = ext.n
    total = ext.poly()
    s = r  # sigma_{k+1}^.. applied to r
    for k in range(n - 1, -1, -1):
        sig, dl = ext.sigmas.maps[k], ext.deltas[k]
        for j in range(1, alpha[k] + 1):
            coef = dl(sig.power(j - 1)(s))
            if coef == R.zero:
                continue
            left = alpha[:k] + (alpha[k] - j,) + (0,) * (n - k - 1)
            right = (0,) * k + (j - 1,) + alpha[k + 1:]
            total = total + poly_multiply(ext.monomial(left), ext.monomial(right, coef))
        s = sig.power(alpha[k])(s)
    return total + ext.monomial(alpha, s)


# ---------------------------------------------------------------------------
# classification and bounded confluence


@dataclass(frozen=True)
class ExtensionClass:
    quasi_commutative: bool
    bijective: bool
    derivation_type: bool
    endomorphism_type: bool


@dataclass
class ConfluenceReport:
    confluent: bool
    seed_degree: int
    triples_checked: int
    counterexamples: list[tuple[SkewPoly, SkewPoly, SkewPoly]] = field(default_factory=list)


@dataclass
class ExtensionValidation:
    classification: ExtensionClass
    confluence: ConfluenceReport


def classify_extension(ext: ExtensionSpec) -> ExtensionClass:
    R = ext.ring
    no_delta = all(d.is_zero for d in ext.deltas)
    no_lower = all(rel.r0 == R.zero and all(c == R.zero for c in rel.linear)
                   for rel in ext.relations.values())
    return ExtensionClass(
        quasi_commutative=no_delta and no_lower,
        # sigma_i injective on a finite set is bijective
        bijective=all(R.is_unit(rel.d) for rel in ext.relations.values()),
        derivation_type=all(s.is_identity for s in ext.sigmas.maps),
        endomorphism_type=no_delta,
    )


def seed_set(ext: ExtensionSpec, seed_degree: int) -> list[SkewPoly]:
    """All ``r x^alpha`` with ``r != 0`` and ``|alpha| <= seed_degree``."""
    R = ext.ring
    return [ext.monomial(alpha, r) for alpha in ext.exponents(seed_degree) for r in R if r != R.zero]


def check_associativity(ext: ExtensionSpec, seed_degree: int, max_counterexamples: int = 5) -> ConfluenceReport:
    """Test ``(uv)w = u(vw)`` for all triples of seeds ``r x^alpha``.

    The product is left R-linear by construction, so ``(a x^alpha v) w`` and
    ``a (x^alpha v w)`` share the work of the monic case; every scalar ``a``
    is still checked.
    """
    R = ext.ring
    seeds = seed_set(ext, seed_degree)
    monos = ext.exponents(seed_degree)
    scalars = [r for r in R if r != R.zero]
    vw = {(i, j): poly_multiply(v, w) for i, v in enumerate(seeds) for j, w in enumerate(seeds)}
    bad: list = []
    checked = 0
    for alpha in monos:
        x = ext.monomial(alpha)
        for i, v in enumerate(seeds):
            xv = poly_multiply(x, v)
            for j, w in enumerate(seeds):
                diff = poly_multiply(xv, w) - poly_multiply(x, vw[(i, j)])
                for a in scalars:
                    checked += 1
                    if diff and diff.scale(a):
                        if len(bad) < max_counterexamples:
                            bad.append((ext.monomial(alpha, a), v, w))
    return ConfluenceReport(not bad, seed_degree, checked, bad)


def validate_extension(ext: ExtensionSpec, degree_bound: int = 3) -> ExtensionValidation:
    """Classify the extension and run the bounded associativity check.

    Seeds are ``r x^alpha`` with ``|alpha| <= degree_bound // 3``, so every
    checked triple has total degree at most ``degree_bound``.
    """
    return ExtensionValidation(classify_extension(ext), check_associativity(ext, degree_bound // 3))


def ensure_pbw(ext: ExtensionSpec, degree_bound: int = 3) -> ExtensionValidation:
    """Like :func:`validate_extension` but raise on a confluence failure."""
    report = validate_extension(ext, degree_bound)
    if not report.confluence.confluent:
        u, v, w = report.confluence.counterexamples[0]
        raise PresentationError(f"{ext.name} is not associative on ({u}, {v}, {w})")
    return report


def trivial_extension(R: FiniteRing, n: int = 1, name: str | None = None) -> ExtensionSpec:
    """The commutative polynomial ring ``R[x_1, ..., x_n]``."""
    ident = identity_map(R)
    return ExtensionSpec(R, [ident] * n, [zero_derivation(R, ident)] * n,
                         name=name or f"{R.name}[x]")
