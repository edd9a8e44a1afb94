"""Degree-bounded annihilators, (a.c.) witnesses and the (SA1) condition.

Run with ``python demos/04_bounded_annihilators.py``.
"""

from skewpbw.annihilators import (DegreeBounds, ac_verify_witness, ac_witness_search, annihilator_oracle_enum,
                                  bounded_right_annihilator, check_sa1)
from skewpbw.catalog import catalog_instance

bounds = DegreeBounds(gen_degree=1, middle_degree=2, target_degree=2, witness_degree=1)
Z4x = catalog_instance("Z4[x]")
two = Z4x.scalar(2)

N = bounded_right_annihilator(Z4x, [two], bounds)
print(f"bounded r(2 A) in {Z4x.name}: {N.size()} elements, generators {N.generator_polys()}")
print("matches brute force:", N.elements() == annihilator_oracle_enum(Z4x, [two], bounds))

F = [two, Z4x.monomial((1,), 2)]
res = ac_witness_search(Z4x, F, bounds)
print(f"\nwitness for F = {F}: {res.status} c = {res.witness}")
gap = ac_verify_witness(Z4x, [two], Z4x.one(), bounds)
print(f"c = 1 for F = [2]: equal {gap.equal}, missing from r(cA): {gap.witness_gap}")

print("\n(SA1) at degree 2:")
for name in ("Z4[x]", "F4[x;Frob]", "Z2[t]/(t^2)[x;d/dt]"):
    r = check_sa1(catalog_instance(name), 2 if name != "Z2[t]/(t^2)[x;d/dt]" else 1)
    cx = r.counterexample
    extra = f"  counterexample f = {cx['f']}, g = {cx['g']}" if cx else ""
    print(f"  {name}: holds {r.holds_at_bound} ({r.checked} pairs){extra}")
