"""Named families of skew PBW extensions over finite rings.

The classical families (quantum planes, ambiskew rings, skew bi-quadratic
algebras, the algebras ``Q(a, b, 0)``) live over fields of characteristic 0;
here they are instantiated over finite fields and finite rings so every
property can be decided by enumeration.  Each built extension records this in
``ext.notes``.
"""

from __future__ import annotations

from typing import Any, Mapping

from .engine import ExtensionSpec, PresentationError, Relation, ensure_pbw
from .finring import FiniteRing, build_ring, gf, trunc_poly
from .ringmaps import (RingMap, SigmaDerivation, formal_derivative, frobenius, identity_map, swap,
                       trunc_poly_derivation, trunc_poly_endomorphism, validate_endomorphism,
                       validate_sigma_derivation, zero_derivation)


class CatalogError(ValueError):
    """Parameters violate a constraint of the requested family."""


def build_map(R: FiniteRing, desc: Any) -> RingMap:
    """Endomorphism from a descriptor: a builtin name or ``{"builtin": ..}`` /
    ``{"table": [...]}`` / ``{"builtin": "trunc_endo", "t": elem}``."""
    if isinstance(desc, str):
        desc = {"builtin": desc}
    if "table" in desc:
        res = validate_endomorphism(R, [R.element(a) for a in desc["table"]], desc.get("name", ""))
        if not isinstance(res, RingMap):
            raise CatalogError(f"table is not an injective endomorphism: {res[0].law} at {res[0].witness}")
        return res
    name = desc.get("builtin")
    if name in ("id", "identity"):
        return identity_map(R)
    if name == "frobenius":
        return frobenius(R)
    if name == "frobenius_inverse":
        return frobenius(R).inverse()
    if name == "swap":
        return swap(R)
    if name == "trunc_endo":
        return trunc_poly_endomorphism(R, R.element(desc["t"]))
    raise CatalogError(f"unknown endomorphism builtin {name!r}")


def build_derivation(R: FiniteRing, sigma: RingMap, desc: Any) -> SigmaDerivation:
    """Sigma-derivation from ``"zero"``, ``"d/dt"``, ``{"builtin": "trunc_deriv", "t": elem}``
    or ``{"table": [...]}``."""
    if isinstance(desc, str):
        desc = {"builtin": desc}
    if "table" in desc:
        res = validate_sigma_derivation(R, sigma, [R.element(a) for a in desc["table"]], desc.get("name", ""))
        if not isinstance(res, SigmaDerivation):
            raise CatalogError(f"table is not a sigma-derivation: {res[0].law} at {res[0].witness}")
        return res
    name = desc.get("builtin")
    if name == "zero":
        return zero_derivation(R, sigma)
    if name in ("d/dt", "formal_derivative"):
        if not sigma.is_identity:
            raise CatalogError("d/dt is a derivation for sigma = id only")
        return formal_derivative(R)
    if name == "trunc_deriv":
        return trunc_poly_derivation(R, sigma, R.element(desc["t"]))
    raise CatalogError(f"unknown derivation builtin {name!r}")


def _ring(params: Mapping, default: dict) -> FiniteRing:
    return build_ring(dict(params.get("ring", default)))


def _nonzero(R: FiniteRing, value: Any, what: str) -> int:
    e = R.element(value)
    if e == R.zero:
        raise CatalogError(f"{what} must be nonzero")
    return e


def _finish(ext: ExtensionSpec, family: str, notes: dict | None = None, check: bool = True) -> ExtensionSpec:
    ext.notes.update({"family": family, **(notes or {})})
    if check:
        try:
            ensure_pbw(ext, 3)
        except PresentationError as exc:
            raise CatalogError(str(exc)) from exc
    return ext


def polynomial(params: Mapping) -> ExtensionSpec:
    """``R[x_1, ..., x_n]``: identity maps, zero derivations, commuting variables."""
    R = _ring(params, {"kind": "zmod", "n": 4})
    n = int(params.get("n", 1))
    ident = identity_map(R)
    ext = ExtensionSpec(R, [ident] * n, [zero_derivation(R, ident)] * n, name=f"{R.name}[x]")
    return _finish(ext, "polynomial")


def ore(params: Mapping) -> ExtensionSpec:
    """One-variable ``R[x; sigma, delta]``."""
    R = _ring(params, {"kind": "gf", "q": 4})
    sigma = build_map(R, params.get("sigma", "id"))
    delta = build_derivation(R, sigma, params.get("delta", "zero"))
    ext = ExtensionSpec(R, [sigma], [delta], name=f"{R.name}[x;{sigma.name},{delta.name}]")
    return _finish(ext, "ore")


def diff_ops(params: Mapping) -> ExtensionSpec:
    """``Z_p[t]/(t^m)[x; id, d/dt]`` (truncated Weyl algebra)."""
    p, m = int(params.get("p", 2)), int(params.get("m", 2))
    R = trunc_poly(p, m)
    ext = ExtensionSpec(R, [identity_map(R)], [formal_derivative(R)], name=f"{R.name}[x;d/dt]")
    return _finish(ext, "diff_ops", {"substitution": "polynomial ring truncated at t^m"})


def sbqa(params: Mapping) -> ExtensionSpec:
    """Skew bi-quadratic algebra: for ``i < j``,
    ``x_j x_i = q_ij x_i x_j + sum_k a_ij,k x_k + b_ij``.

    ``params["relations"]`` is a list of ``{"pair": [i, j], "q": .., "a": [..], "b": ..}``
    with 1-based indices; missing pairs commute.  Optional ``sigmas`` and
    ``deltas`` give per-variable maps (default identity / zero).
    """
    R = _ring(params, {"kind": "gf", "q": 3})
    n = int(params.get("n", 2))
    sig_desc = params.get("sigmas", ["id"] * n)
    del_desc = params.get("deltas", ["zero"] * n)
    if len(sig_desc) != n or len(del_desc) != n:
        raise CatalogError("need one sigma and one delta per variable")
    sigmas = [build_map(R, d) for d in sig_desc]
    deltas = [build_derivation(R, s, d) for s, d in zip(sigmas, del_desc)]
    rels = {}
    for entry in params.get("relations", []):
        i, j = (int(k) - 1 for k in entry["pair"])
        if not 0 <= i < j < n:
            raise CatalogError(f"relation pair {entry['pair']} must satisfy 1 <= i < j <= {n}")
        q = _nonzero(R, entry.get("q", R.one), f"q_{i + 1}{j + 1}")
        a = [R.element(c) for c in entry.get("a", [R.zero] * n)]
        if len(a) != n:
            raise CatalogError(f"a_{i + 1}{j + 1} needs {n} coefficients")
        rels[(i, j)] = Relation(q, R.element(entry.get("b", R.zero)), tuple(a))
    ext = ExtensionSpec(R, sigmas, deltas, rels, name=params.get("name", f"SBQA({R.name}, n={n})"))
    return _finish(ext, "sbqa", {"substitution": "finite coefficient ring in place of a field of characteristic 0"})


def quantum_plane(params: Mapping) -> ExtensionSpec:
    """``x_2 x_1 = q x_1 x_2`` over a finite field (an SBQA with no lower terms)."""
    ring = params.get("ring", {"kind": "gf", "q": 3})
    R = build_ring(dict(ring))
    q = _nonzero(R, params.get("q", 2), "q")
    ext = sbqa({"ring": ring, "n": 2,
                "relations": [{"pair": [1, 2], "q": q}], "name": f"O_{R.label(q)}({R.name}^2)"})
    ext.notes["family"] = "quantum_plane"
    return ext


def ambiskew(params: Mapping) -> ExtensionSpec:
    """Ambiskew ring ``R[y; sigma][x; sigma^-1]`` with ``yx = p xy + c``.

    Variables are ``x_1 = x`` (twisted by ``sigma^-1``) and ``x_2 = y``
    (twisted by ``sigma``).
    """
    R = _ring(params, {"kind": "gf", "q": 3})
    sigma = build_map(R, params.get("sigma", "id"))
    p = _nonzero(R, params.get("p", 1), "p")
    c = R.element(params.get("c", 0))
    s_inv = sigma.inverse()
    ext = ExtensionSpec(R, [s_inv, sigma], [zero_derivation(R, s_inv), zero_derivation(R, sigma)],
                        {(0, 1): Relation(p, c, (R.zero, R.zero))},
                        name=f"Ambiskew({R.name}, p={R.label(p)}, c={R.label(c)})", variables=("x", "y"))
    return _finish(ext, "ambiskew", {"substitution": "finite coefficient ring in place of a field of characteristic 0"})


def q_algebra(params: Mapping) -> ExtensionSpec:
    """``Q(a, b, 0)``: ``yx = a x^2 + b xy`` with ``b != 0``.

    Two encodings:

    * ``encoding = "ore"`` (default): ``x`` becomes the coefficient ring
      ``F_p[t]/(t^m)`` and ``y`` the single variable, with
      ``sigma(t) = b t`` and ``delta(t) = a t^2``.
    * ``encoding = "two_variable"``: both generators are variables over
      ``F_q``.  The ``a x^2`` term is not a lower term, so for ``b != 1`` the
      variable ``y' = y + a/(b-1) x`` is used, giving ``y' x = b x y'``;
      ``b = 1`` with ``a != 0`` is rejected.
    """
    encoding = params.get("encoding", "ore")
    if encoding == "ore":
        p, m = int(params.get("p", 3)), int(params.get("m", 2))
        R = trunc_poly(p, m)
        a, b = int(params.get("a", 1)) % p, int(params.get("b", 1)) % p
        if b == 0:
            raise CatalogError("Q(a,b,0) needs b != 0")
        t = R.element("t")
        sigma = trunc_poly_endomorphism(R, R.times(b, t), f"t->{b}t")
        delta = trunc_poly_derivation(R, sigma, R.times(a, R.mul(t, t)), f"t->{a}t^2")
        ext = ExtensionSpec(R, [sigma], [delta], name=f"Q({a},{b},0) over {R.name}", variables=("y",))
        return _finish(ext, "q_algebra", {"encoding": "ore",
                                          "substitution": "k[x] truncated to F_p[t]/(t^m), t = x"})
    if encoding == "two_variable":
        R = build_ring(dict(params.get("ring", {"kind": "gf", "q": 3})))
        a = R.element(params.get("a", 0))
        b = _nonzero(R, params.get("b", 1), "b")
        notes = {"encoding": "two_variable"}
        if a != R.zero:
            bm1 = R.sub(b, R.one)
            inv = R.left_inverse(bm1)
            if inv is None:
                raise CatalogError("two-variable encoding needs a = 0 or b - 1 invertible")
            lam = R.mul(a, inv)
            notes["normalisation"] = f"y' = y + {R.label(lam)}*x"
        ext = ExtensionSpec(R, [identity_map(R)] * 2, [zero_derivation(R)] * 2,
                            {(0, 1): Relation(b, R.zero, (R.zero, R.zero))},
                            name=f"Q({R.label(a)},{R.label(b)},0) over {R.name}", variables=("x", "y"))
        return _finish(ext, "q_algebra", notes)
    raise CatalogError(f"unknown Q-algebra encoding {encoding!r}")


FAMILIES = {
    "polynomial": polynomial,
    "ore": ore,
    "diff_ops": diff_ops,
    "sbqa": sbqa,
    "quantum_plane": quantum_plane,
    "ambiskew": ambiskew,
    "q_algebra": q_algebra,
}


def build_catalog_example(name: str, params: Mapping | None = None) -> ExtensionSpec:
    """Build and validate (bounded confluence) a member of a named family."""
    try:
        builder = FAMILIES[name]
    except KeyError:
        raise CatalogError(f"unknown catalog family {name!r}; known: {sorted(FAMILIES)}") from None
    return builder(dict(params or {}))


# Concrete instances used by the theorem suites, demos and tests.
INSTANCES: dict[str, tuple[str, dict]] = {
    "Z4[x]": ("polynomial", {"ring": {"kind": "zmod", "n": 4}}),
    "Z6[x]": ("polynomial", {"ring": {"kind": "zmod", "n": 6}}),
    "Z2xZ2[x]": ("polynomial", {"ring": {"kind": "product", "factors": [{"kind": "zmod", "n": 2}] * 2}}),
    "M2(Z2)[x]": ("polynomial", {"ring": {"kind": "matrix", "base": {"kind": "zmod", "n": 2}, "k": 2}}),
    "F4[x;Frob]": ("ore", {"ring": {"kind": "gf", "q": 4}, "sigma": "frobenius"}),
    "Z2xZ2[x;swap]": ("ore", {"ring": {"kind": "product", "factors": [{"kind": "zmod", "n": 2}] * 2},
                              "sigma": "swap"}),
    "Z2[t]/(t^2)[x;d/dt]": ("diff_ops", {"p": 2, "m": 2}),
    "F3 quantum plane": ("quantum_plane", {"ring": {"kind": "gf", "q": 3}, "q": 2}),
    "F3 ambiskew": ("ambiskew", {"ring": {"kind": "gf", "q": 3}, "p": 2, "c": 1}),
    "Z4 SBQA": ("sbqa", {"ring": {"kind": "zmod", "n": 4}, "n": 2,
                         "relations": [{"pair": [1, 2], "q": 1, "a": [0, 0], "b": 2}]}),
    "Q(1,2,0) ore": ("q_algebra", {"encoding": "ore", "p": 3, "m": 3, "a": 1, "b": 2}),
    "Q(1,2,0) two-variable": ("q_algebra", {"encoding": "two_variable", "ring": {"kind": "gf", "q": 3},
                                             "a": 1, "b": 2}),
}


def catalog_instance(name: str) -> ExtensionSpec:
    family, params = INSTANCES[name]
    ext = build_catalog_example(family, params)
    ext.name = name
    return ext


def base_ring_catalog() -> dict[str, FiniteRing]:
    """The fixed coefficient rings on which ring predicates are cross-checked."""
    from .finring import matrix, product, zmod

    z2 = zmod(2)
    return {
        "Z2": z2, "Z3": zmod(3), "Z4": zmod(4), "Z6": zmod(6), "Z8": zmod(8),
        "Z2xZ2": product(z2, z2), "F4": gf(4), "M2(Z2)": matrix(z2, 2), "Z2[t]/(t^2)": trunc_poly(2, 2),
    }
