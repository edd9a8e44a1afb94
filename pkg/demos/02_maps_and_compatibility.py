"""Endomorphisms, sigma-derivations and the compatibility conditions.

Run with ``python demos/02_maps_and_compatibility.py``.
"""

from skewpbw.finring import gf, product, trunc_poly, zmod
from skewpbw.ringmaps import (MapViolations, SigmaFamily, check_compatibility, formal_derivative, frobenius,
                              identity_map, swap, validate_endomorphism, validate_sigma_derivation,
                              zero_derivation)

F4 = gf(4)
frob = frobenius(F4)
w = F4.element("w")
print(f"Frobenius on {F4.name}: w -> {F4.label(frob(w))}, order {frob.order}")

# Doubling on Z/4Z is additive but sends 1 to 2, so it is rejected with a witness.
res = validate_endomorphism(zmod(4), [0, 2, 0, 2])
assert isinstance(res, MapViolations)
print("a -> 2a on Z4:", [v.law for v in res])

T = trunc_poly(2, 2)
print("d/dt on Z2[t]/(t^2) passes the twisted Leibniz rule:",
      not isinstance(validate_sigma_derivation(T, identity_map(T), formal_derivative(T).table), MapViolations))


def report(label, R, sigma, delta):
    c = check_compatibility(R, SigmaFamily((sigma,)), [delta])
    print(f"\n{label}: sigma-compatible {c.sigma_compatible}, delta-compatible {c.delta_compatible}, "
          f"rigid {c.sigma_rigid}")
    for kind in ("sigma", "delta"):
        if c.witnesses[kind]:
            _, a, b = c.witnesses[kind][0]
            print(f"  {kind} witness: a = {R.label(a)}, b = {R.label(b)}")


report("F4 with Frobenius", F4, frob, zero_derivation(F4, frob))
P = product(zmod(2), zmod(2))
report("Z2 x Z2 with swap", P, swap(P), zero_derivation(P, swap(P)))
report("Z2[t]/(t^2) with d/dt", T, identity_map(T), formal_derivative(T))
