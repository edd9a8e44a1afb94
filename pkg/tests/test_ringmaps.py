import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import compatibility_oracle
from skewpbw.catalog import base_ring_catalog
from skewpbw.finring import gf, nil_structure, product, trunc_poly, zmod
from skewpbw.ringmaps import (MapViolations, RingMap, SigmaDerivation, SigmaFamily, check_compatibility,
                              compatibility_consequences, formal_derivative, frobenius, identity_map,
                              sigma_monoid, swap, trunc_poly_derivation, trunc_poly_endomorphism,
                              validate_endomorphism, validate_sigma_derivation, zero_derivation)

RINGS = base_ring_catalog()


def test_frobenius_f4():
    F = gf(4)
    fr = frobenius(F)
    assert fr(F.element("w")) == F.element("1+w")
    assert fr.order == 2 and fr.compose(fr).is_identity
    assert fr.inverse() == fr


def test_validate_endomorphism_rejections():
    R = zmod(4)
    res = validate_endomorphism(R, [0, 2, 0, 2])
    assert isinstance(res, MapViolations)
    assert {v.law for v in res} & {"unital", "injective", "multiplicative"}
    assert isinstance(validate_endomorphism(R, range(4)), RingMap)


def test_validate_sigma_derivation_rejects_non_leibniz():
    R = trunc_poly(2, 2)
    ident = identity_map(R)
    # d(1) must be 0
    res = validate_sigma_derivation(R, ident, [0, 1, 0, 1])
    assert isinstance(res, MapViolations)


def test_formal_derivative_table():
    R = trunc_poly(2, 2)
    d = formal_derivative(R)
    t = R.element("t")
    assert d(t) == R.one and d(R.one) == R.zero and d(R.element("1+t")) == R.one


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 2), st.integers(0, 8))
def test_trunc_derivation_validity_matches_leibniz(b, image):
    R = trunc_poly(3, 2)
    t = R.element("t")
    sigma = trunc_poly_endomorphism(R, R.times(b, t))
    # brute force: extend t -> image by the twisted rule and test every pair
    table = [None] * R.order
    for u in range(3):
        for v in range(3):
            a = R.add(R.times(u, R.one), R.times(v, t))
            table[a] = R.times(v, image)
    leibniz = all(table[R.mul(a, c)] == R.add(R.mul(sigma(a), table[c]), R.mul(table[a], c))
                  for a in R for c in R)
    try:
        trunc_poly_derivation(R, sigma, image)
    except ValueError:
        assert not leibniz
    else:
        assert leibniz


def test_swap_is_incompatible_with_witness():
    R = product(zmod(2), zmod(2))
    sw = swap(R)
    comp = check_compatibility(R, SigmaFamily((sw,)), [zero_derivation(R, sw)])
    assert not comp.sigma_compatible
    a, b = R.element("(1,0)"), R.element("(0,1)")
    assert (0, a, b) in comp.witnesses["sigma"]


def test_ddt_is_delta_incompatible_with_witness():
    R = trunc_poly(2, 2)
    comp = check_compatibility(R, SigmaFamily((identity_map(R),)), [formal_derivative(R)])
    t = R.element("t")
    assert comp.sigma_compatible and not comp.delta_compatible
    assert (0, t, t) in comp.witnesses["delta"]


def test_frobenius_rigid_and_compatible():
    F = gf(4)
    fr = frobenius(F)
    comp = check_compatibility(F, SigmaFamily((fr,)), [zero_derivation(F, fr)])
    assert comp.sigma_rigid and comp.sigma_delta_compatible


def _map_zoo():
    """(ring, sigmas, deltas) triples covering every builtin map."""
    out = []
    for name, R in RINGS.items():
        ident = identity_map(R)
        out.append((name + "/id", R, [ident], [zero_derivation(R, ident)]))
    F = RINGS["F4"]
    out.append(("F4/frob", F, [frobenius(F)], [zero_derivation(F, frobenius(F))]))
    P = RINGS["Z2xZ2"]
    out.append(("Z2xZ2/swap", P, [swap(P)], [zero_derivation(P, swap(P))]))
    T = RINGS["Z2[t]/(t^2)"]
    out.append(("Z2[t]/(t^2)/ddt", T, [identity_map(T)], [formal_derivative(T)]))
    T3 = trunc_poly(3, 2)
    s = trunc_poly_endomorphism(T3, T3.times(2, T3.element("t")))
    out.append(("Z3[t]/(t^2)/t->2t", T3, [s], [zero_derivation(T3, s)]))
    out.append(("F4/frob,id", F, [frobenius(F), identity_map(F)], [zero_derivation(F, frobenius(F)),
                                                                    zero_derivation(F)]))
    return out


ZOO = _map_zoo()


@pytest.mark.parametrize("label,R,sigmas,deltas", ZOO, ids=[z[0] for z in ZOO])
def test_compatibility_matches_definition(label, R, sigmas, deltas):
    comp = check_compatibility(R, SigmaFamily(tuple(sigmas)), deltas)
    ref = compatibility_oracle(R, sigmas, deltas)
    assert comp.sigma_compatible == ref["sigma"]
    assert comp.delta_compatible == ref["delta"]
    assert comp.sigma_rigid == ref["rigid"]


@pytest.mark.parametrize("label,R,sigmas,deltas", ZOO, ids=[z[0] for z in ZOO])
def test_compatibility_invariants(label, R, sigmas, deltas):
    comp = check_compatibility(R, SigmaFamily(tuple(sigmas)), deltas)
    reduced = nil_structure(R).is_reduced
    if comp.sigma_rigid:
        assert comp.sigma_delta_compatible and reduced
    if reduced:
        assert comp.sigma_rigid == comp.sigma_delta_compatible
    if comp.sigma_delta_compatible:
        assert compatibility_consequences(R, SigmaFamily(tuple(sigmas)), deltas) == []


def test_sigma_monoid_distinct():
    F = gf(4)
    monoid = sigma_monoid(SigmaFamily((frobenius(F), identity_map(F))))
    assert sorted(a for a, _ in monoid) == [(0, 0), (1, 0)]


def test_sigma_derivation_powers():
    T = trunc_poly(2, 2)
    d = formal_derivative(T)
    assert isinstance(d, SigmaDerivation)
    assert len(d.powers()) == 3  # id, d, d^2 = 0
