"""Degree-bounded annihilators, Property (a.c.) witnesses and (SA1) checks.

Every map ``g -> f h g`` is additive in ``g``, so the bounded right
annihilator

    N(F) = {g : deg g <= T, f h g = 0 for all f in F, deg h <= E}

is the kernel of an integer matrix acting on the coordinates of ``g`` (one
block of additive coordinates of ``R`` per monomial of degree ``<= T``).  It is
computed as a :class:`~skewpbw.zmodule.ConstraintLattice`; an independent
brute-force enumeration is available for small search spaces.

Left-hand versions use ``g h f`` and are selected with ``side="left"``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .engine import ExtensionSpec, SkewPoly, poly_multiply
from .finring import CapExceeded, generated_ideal, idempotent_sets, ring_ac_exact
from .zmodule import ConstraintLattice, random_element

ORACLE_CAP = 1 << 20
SA1_CAP = 1 << 24


@dataclass(frozen=True)
class DegreeBounds:
    """Degree limits for generators, middle factors, annihilator candidates and witnesses."""

    gen_degree: int = 1
    middle_degree: int = 2
    target_degree: int = 2
    witness_degree: int = 2

    def __post_init__(self) -> None:
        if min(self.gen_degree, self.middle_degree, self.target_degree, self.witness_degree) < 0:
            raise ValueError("degree bounds must be nonnegative")

    def as_dict(self) -> dict:
        return {"gen_degree": self.gen_degree, "middle_degree": self.middle_degree,
                "target_degree": self.target_degree, "witness_degree": self.witness_degree}


def _check_side(side: str) -> None:
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")


class CoefficientSpace:
    """Additive coordinates of polynomials of degree ``<= T``."""

    def __init__(self, ext: ExtensionSpec, max_degree: int):
        self.ext = ext
        self.max_degree = max_degree
        self.monomials = ext.exponents(max_degree)
        self.ring_moduli = ext.ring.moduli
        self.moduli = tuple(m for _ in self.monomials for m in self.ring_moduli)

    @property
    def dimension(self) -> int:
        return len(self.moduli)

    def basis(self) -> list[SkewPoly]:
        """Additive generators ``d_k x^beta`` in slot order."""
        gens = [g for g, _ in self.ext.ring.additive_decomposition]
        return [self.ext.monomial(beta, d) for beta in self.monomials for d in gens]

    def to_vector(self, g: SkewPoly) -> tuple[int, ...]:
        R = self.ext.ring
        out = []
        for beta in self.monomials:
            out.extend(R.coords(g.coefficient(beta)))
        if any(sum(a) > self.max_degree for a in g.terms):
            raise ValueError(f"{g} exceeds degree {self.max_degree}")
        return tuple(out)

    def from_vector(self, vec: Sequence[int]) -> SkewPoly:
        R = self.ext.ring
        K = len(self.ring_moduli)
        return self.ext.poly({beta: R.from_coords(vec[i * K:(i + 1) * K])
                              for i, beta in enumerate(self.monomials)})

    def all_polys(self) -> Iterable[SkewPoly]:
        R = self.ext.ring
        for coeffs in itertools.product(range(R.order), repeat=len(self.monomials)):
            yield self.ext.poly(zip(self.monomials, coeffs))

    def size(self) -> int:
        return self.ext.ring.order ** len(self.monomials)


def _middle_generators(ext: ExtensionSpec, E: int) -> list[SkewPoly]:
    """Additive generators of the polynomials of degree ``<= E``."""
    return CoefficientSpace(ext, E).basis()


def _constraints(ext: ExtensionSpec, f: SkewPoly, middles: Sequence[SkewPoly],
                 space: CoefficientSpace, side: str) -> ConstraintLattice:
    R = ext.ring
    lattice = ConstraintLattice(space.moduli, R.exponent)
    basis = space.basis()
    for h in middles:
        rows: dict[tuple, list[int]] = {}
        if side == "right":
            fh = poly_multiply(f, h)
            images = [poly_multiply(fh, e) for e in basis]
        else:
            hf = poly_multiply(h, f)
            images = [poly_multiply(e, hf) for e in basis]
        for s, img in enumerate(images):
            for mu, c in img.terms.items():
                for k, x in enumerate(R.coords(c)):
                    if x:
                        row = rows.get((mu, k))
                        if row is None:
                            row = rows[(mu, k)] = [0] * space.dimension
                        row[s] = x
        for (mu, k), row in sorted(rows.items()):
            lattice.add_row(row, space.ring_moduli[k])
    return lattice


def _single_lattice(ext: ExtensionSpec, f: SkewPoly, E: int, T: int, side: str) -> ConstraintLattice:
    key = ("ann", side, f, E, T)
    hit = ext.cache.get(key)
    if hit is None:
        space = CoefficientSpace(ext, T)
        hit = ext.cache[key] = _constraints(ext, f, _middle_generators(ext, E), space, side)
    return hit


class AnnBasis:
    """A bounded annihilator as a subgroup of the degree-``<= T`` polynomials."""

    def __init__(self, ext: ExtensionSpec, bounds: DegreeBounds, side: str, lattice: ConstraintLattice):
        self.ext = ext
        self.bounds = bounds
        self.side = side
        self.lattice = lattice
        self.space = CoefficientSpace(ext, bounds.target_degree)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, AnnBasis) and self.ext is other.ext
                and self.space.monomials == other.space.monomials and self.lattice == other.lattice)

    def __hash__(self) -> int:
        return hash(self.lattice)

    def __le__(self, other: AnnBasis) -> bool:
        """Subgroup inclusion."""
        return other.lattice.kernel_includes(self.lattice)

    def __contains__(self, g: SkewPoly) -> bool:
        return self.lattice.contains(self.space.to_vector(g))

    @property
    def generators(self) -> list[tuple[int, ...]]:
        return self.lattice.kernel_generators()

    def generator_polys(self) -> list[SkewPoly]:
        return [self.space.from_vector(v) for v in self.generators]

    def size(self) -> int:
        return self.lattice.kernel_size()

    def elements(self) -> set[SkewPoly]:
        return {self.space.from_vector(v) for v in self.lattice.kernel_elements(ORACLE_CAP)}

    def is_zero(self) -> bool:
        return self.size() == 1

    def is_full(self) -> bool:
        return self.size() == self.space.size()

    def meet(self, other: AnnBasis) -> AnnBasis:
        return AnnBasis(self.ext, self.bounds, self.side, self.lattice.meet(other.lattice))

    def to_dict(self) -> dict:
        return {"side": self.side, "bounds": self.bounds.as_dict(), "size": self.size(),
                "generators": [g.to_list() for g in self.generator_polys()]}


def bounded_annihilator(ext: ExtensionSpec, F: Sequence[SkewPoly], bounds: DegreeBounds,
                        side: str = "right") -> AnnBasis:
    """``{g : deg g <= T, f h g = 0 for f in F, deg h <= E}`` (right) or ``g h f = 0`` (left)."""
    _check_side(side)
    T, E = bounds.target_degree, bounds.middle_degree
    space = CoefficientSpace(ext, T)
    lattice = ConstraintLattice(space.moduli, ext.ring.exponent)
    for f in F:
        if f.degree > bounds.gen_degree:
            raise ValueError(f"generator {f} exceeds gen_degree {bounds.gen_degree}")
        lattice = lattice.meet(_single_lattice(ext, f, E, T, side))
    return AnnBasis(ext, bounds, side, lattice)


def bounded_right_annihilator(ext: ExtensionSpec, F: Sequence[SkewPoly], bounds: DegreeBounds) -> AnnBasis:
    return bounded_annihilator(ext, F, bounds, "right")


def bounded_left_annihilator(ext: ExtensionSpec, F: Sequence[SkewPoly], bounds: DegreeBounds) -> AnnBasis:
    return bounded_annihilator(ext, F, bounds, "left")


class OracleUnavailable(CapExceeded):
    pass


def annihilator_oracle_enum(ext: ExtensionSpec, F: Sequence[SkewPoly], bounds: DegreeBounds,
                            side: str = "right", cap: int = ORACLE_CAP) -> set[SkewPoly]:
    """Brute force: test every ``g`` of degree ``<= T`` against every ``f`` and
    every monomial-scalar ``h = r x^gamma`` of degree ``<= E``."""
    _check_side(side)
    space = CoefficientSpace(ext, bounds.target_degree)
    if space.size() > cap:
        raise OracleUnavailable(f"{space.size()} candidates exceed the oracle cap {cap}")
    R = ext.ring
    hs = [ext.monomial(gamma, r) for gamma in ext.exponents(bounds.middle_degree) for r in R if r != R.zero]
    if side == "right":
        prefixes = [poly_multiply(f, h) for f in F for h in hs]
        test = lambda g: all(not poly_multiply(p, g) for p in prefixes)  # noqa: E731
    else:
        suffixes = [poly_multiply(h, f) for f in F for h in hs]
        test = lambda g: all(not poly_multiply(g, p) for p in suffixes)  # noqa: E731
    return {g for g in space.all_polys() if test(g)}


# ---------------------------------------------------------------------------
# Armendariz-type conditions


@dataclass
class ConditionResult:
    holds_at_bound: bool | None
    counterexample: dict | None
    mode: str
    checked: int
    status: str = "decided"


def _product_kernel(ext: ExtensionSpec, f: SkewPoly, D: int) -> ConstraintLattice:
    """``{g : deg g <= D, f g = 0}`` as a constraint lattice."""
    key = ("prod", f, D)
    hit = ext.cache.get(key)
    if hit is None:
        hit = ext.cache[key] = _constraints(ext, f, [ext.one()], CoefficientSpace(ext, D), "right")
    return hit


def _polys_to_check(ext: ExtensionSpec, D: int, mode: str, seed: int, trials: int, cap: int):
    space = CoefficientSpace(ext, D)
    if mode == "exhaustive":
        if space.size() ** 2 > cap:
            raise CapExceeded(f"exhaustive scan of {space.size()}^2 pairs exceeds cap {cap}")
        return space, list(space.all_polys()), None
    if mode == "random":
        rng = random.Random(seed)
        R = ext.ring
        fs = [ext.poly(zip(space.monomials, (rng.randrange(R.order) for _ in space.monomials)))
              for _ in range(trials)]
        return space, fs, rng
    raise ValueError(f"mode must be 'exhaustive' or 'random', not {mode!r}")


def check_sa1(ext: ExtensionSpec, D: int, mode: str = "exhaustive", seed: int = 0,
              trials: int = 200, cap: int = SA1_CAP) -> ConditionResult:
    """Bounded (SA1): ``fg = 0`` with ``deg f, deg g <= D`` forces ``a_i b_j = 0``.

    For each ``f`` the partners ``g`` with ``fg = 0`` form the kernel of an
    additive map, so the exhaustive scan walks that kernel instead of all
    pairs; random mode samples ``f`` uniformly and ``g`` uniformly from it.
    """
    try:
        space, fs, rng = _polys_to_check(ext, D, mode, seed, trials, cap)
    except CapExceeded as exc:
        return ConditionResult(None, {"reason": str(exc)}, mode, 0, "cap_exceeded")
    R = ext.ring
    checked = 0
    for f in fs:
        if not f:
            continue
        lattice = _product_kernel(ext, f, D)
        if mode == "exhaustive":
            gs = (space.from_vector(v) for v in lattice.kernel_elements())
        else:
            gens = lattice.kernel_generators()
            gs = [space.from_vector(random_element(gens, space.moduli, rng))]
        for g in gs:
            checked += 1
            for ai, a in f.terms.items():
                for bj, b in g.terms.items():
                    if R.mul(a, b) != R.zero:
                        return ConditionResult(False, {"f": f, "g": g, "i": ai, "j": bj}, mode, checked)
    return ConditionResult(True, None, mode, checked)


def check_quasi_armendariz(ext: ExtensionSpec, D: int, E: int, mode: str = "exhaustive",
                           seed: int = 0, trials: int = 200, cap: int = SA1_CAP) -> ConditionResult:
    """Bounded quasi-Armendariz: ``f h g = 0`` for all ``deg h <= E`` forces ``a_i R b_j = 0``."""
    try:
        space, fs, rng = _polys_to_check(ext, D, mode, seed, trials, cap)
    except CapExceeded as exc:
        return ConditionResult(None, {"reason": str(exc)}, mode, 0, "cap_exceeded")
    R = ext.ring
    bounds = DegreeBounds(gen_degree=D, middle_degree=E, target_degree=D)
    checked = 0
    for f in fs:
        if not f:
            continue
        lattice = bounded_annihilator(ext, [f], bounds).lattice
        if mode == "exhaustive":
            gs = (space.from_vector(v) for v in lattice.kernel_elements())
        else:
            gens = lattice.kernel_generators()
            gs = [space.from_vector(random_element(gens, space.moduli, rng))]
        for g in gs:
            checked += 1
            for ai, a in f.terms.items():
                for bj, b in g.terms.items():
                    for r in R:
                        if R.mul(R.mul(a, r), b) != R.zero:
                            return ConditionResult(False, {"f": f, "g": g, "i": ai, "j": bj, "r": r},
                                                   mode, checked)
    return ConditionResult(True, None, mode, checked)


# ---------------------------------------------------------------------------
# Property (a.c.) witnesses


@dataclass
class WitnessCheck:
    equal: bool
    left_only: bool   # some g annihilates the ideal generated by F but not c
    right_only: bool  # some g annihilates c but not F
    witness_gap: SkewPoly | None


def ac_verify_witness(ext: ExtensionSpec, F: Sequence[SkewPoly], c: SkewPoly, bounds: DegreeBounds,
                      side: str = "right") -> WitnessCheck:
    """Compare the bounded annihilators of ``F`` and of ``{c}`` exactly."""
    if c.degree > bounds.witness_degree:
        raise ValueError(f"witness {c} exceeds witness_degree {bounds.witness_degree}")
    wide = DegreeBounds(max(bounds.gen_degree, bounds.witness_degree), bounds.middle_degree,
                        bounds.target_degree, bounds.witness_degree)
    target = bounded_annihilator(ext, F, wide, side)
    mine = bounded_annihilator(ext, [c], wide, side)
    left_gap = next((g for g in target.generator_polys() if g not in mine), None)
    right_gap = next((g for g in mine.generator_polys() if g not in target), None)
    return WitnessCheck(left_gap is None and right_gap is None, left_gap is not None,
                        right_gap is not None, left_gap if left_gap is not None else right_gap)


@dataclass
class AcSearchResult:
    status: str  # "witness" | "bounded_refutation" | "inconclusive"
    witness: SkewPoly | None
    evidence: dict = field(default_factory=dict)


def heuristic_candidates(ext: ExtensionSpec, F: Sequence[SkewPoly], side: str = "right",
                         extra: Iterable[SkewPoly] = ()) -> list[SkewPoly]:
    """Candidate witnesses built from the generators.

    In order: the generators, pairwise sums, idempotent multiples ``e f``
    (``f e`` on the left), sums ``sum e_i f_i`` over idempotent choices, the
    exact ring-level (a.c.) witness for the ideal of ``R`` generated by all
    coefficients of ``F``, the constant ``1``, then ``extra``.
    """
    R = ext.ring
    idem = idempotent_sets(R).idempotents.sorted

    def times(e: int, f: SkewPoly) -> SkewPoly:
        return f.scale(e) if side == "right" else poly_multiply(f, ext.scalar(e))

    out: list[SkewPoly] = list(F)
    out += [F[i] + F[j] for i, j in itertools.combinations(range(len(F)), 2)]
    out += [times(e, f) for f in F for e in idem]
    if len(F) > 1:
        for choice in itertools.product(idem, repeat=len(F)):
            acc = ext.poly()
            for e, f in zip(choice, F):
                acc = acc + times(e, f)
            out.append(acc)
    coeffs = {c for f in F for c in f.terms.values()}
    ac = ring_ac_exact(R, side)
    if ac.holds:
        ideal = generated_ideal(R, coeffs, side)
        c = ac.witness_map.get(ideal)
        if c is not None:
            out.append(ext.scalar(c))
    out.append(ext.one())
    out += list(extra)
    seen: set[SkewPoly] = set()
    uniq = []
    for c in out:
        if c not in seen:
            seen.add(c)
            uniq.append(c)
    return uniq


def ac_witness_search(ext: ExtensionSpec, F: Sequence[SkewPoly], bounds: DegreeBounds,
                      side: str = "right", strategy: str = "heuristic",
                      extra: Iterable[SkewPoly] = (), cap: int = ORACLE_CAP) -> AcSearchResult:
    """Search ``c`` with ``deg c <= C`` whose bounded annihilator equals that of ``F``.

    ``exhaustive`` walks every polynomial of degree ``<= C`` in slot order
    (refusing above ``cap`` candidates); a miss is a *bounded* refutation.
    ``heuristic`` tries :func:`heuristic_candidates`; a miss is inconclusive.
    """
    _check_side(side)
    if not F:
        raise ValueError("need at least one generator")
    C = bounds.witness_degree
    wide = DegreeBounds(max(bounds.gen_degree, C), bounds.middle_degree, bounds.target_degree, C)
    target = bounded_annihilator(ext, F, wide, side)
    evidence = {"strategy": strategy, "bounds": bounds.as_dict(), "target_size": target.size()}
    if strategy == "heuristic":
        candidates = [c for c in heuristic_candidates(ext, F, side, extra) if c.degree <= C]
    elif strategy == "exhaustive":
        space = CoefficientSpace(ext, C)
        if space.size() > cap:
            evidence["reason"] = f"{space.size()} candidates exceed cap {cap}"
            return AcSearchResult("inconclusive", None, evidence)
        candidates = space.all_polys()
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    tried = 0
    for c in candidates:
        tried += 1
        if _single_lattice(ext, c, wide.middle_degree, wide.target_degree, side) == target.lattice:
            evidence["candidates_tried"] = tried
            return AcSearchResult("witness", c, evidence)
    evidence["candidates_tried"] = tried
    return AcSearchResult("bounded_refutation" if strategy == "exhaustive" else "inconclusive",
                          None, evidence)


def generator_pool(ext: ExtensionSpec, D: int) -> list[SkewPoly]:
    """All ``r x^alpha`` with ``r != 0`` and ``|alpha| <= D`` (deglex, then element index)."""
    R = ext.ring
    return [ext.monomial(alpha, r) for alpha in ext.exponents(D) for r in R if r != R.zero]


def generator_sets(pool: Sequence[SkewPoly], max_size: int = 2) -> list[tuple[SkewPoly, ...]]:
    return [combo for k in range(1, max_size + 1) for combo in itertools.combinations(pool, k)]


def ac_sweep(ext: ExtensionSpec, bounds: DegreeBounds, side: str = "right", max_set_size: int = 2,
             escalate: bool = True) -> dict:
    """Run :func:`ac_witness_search` over all generator sets drawn from the pool."""
    pool = generator_pool(ext, bounds.gen_degree)
    counts = {"witness": 0, "bounded_refutation": 0, "inconclusive": 0}
    refutations, inconclusive = [], []
    escalated = 0
    for F in generator_sets(pool, max_set_size):
        res = ac_witness_search(ext, F, bounds, side, "heuristic")
        if res.status == "inconclusive" and escalate:
            escalated += 1
            res = ac_witness_search(ext, F, bounds, side, "exhaustive")
        counts[res.status] += 1
        if res.status == "bounded_refutation":
            refutations.append([f.to_list() for f in F])
        elif res.status == "inconclusive":
            inconclusive.append([f.to_list() for f in F])
    return {"side": side, "sets": sum(counts.values()), "counts": counts, "escalated": escalated,
            "refutations": refutations, "inconclusive": inconclusive,
            "pool": f"all r*x^alpha with r != 0, |alpha| <= {bounds.gen_degree}; sets of size <= {max_set_size}"}


def pool_size_estimate(ext: ExtensionSpec, D: int) -> int:
    return (ext.ring.order - 1) * len(ext.exponents(D))


__all__ = [
    "DegreeBounds", "CoefficientSpace", "AnnBasis", "bounded_annihilator",
    "bounded_right_annihilator", "bounded_left_annihilator", "annihilator_oracle_enum",
    "OracleUnavailable", "ConditionResult", "check_sa1", "check_quasi_armendariz",
    "WitnessCheck", "ac_verify_witness", "AcSearchResult", "heuristic_candidates",
    "ac_witness_search", "generator_pool", "generator_sets", "ac_sweep",
]
