"""Finite rings as tables: construction, axioms and the Baer-type predicates.

Run with ``python demos/01_finite_rings.py``.
"""

from skewpbw.finring import (FiniteRing, classify_ring, idempotent_sets, matrix, nil_structure, ring_ac_exact,
                             right_annihilator, validate_ring_axioms, zmod)

# Z/4Z: the smallest ring where annihilators are not cut out by idempotents.
Z4 = zmod(4)
print(f"{Z4.name}: 2 + 3 = {Z4.label(Z4.add(2, 3))}, 2 * 2 = {Z4.label(Z4.mul(2, 2))}")
print("right annihilator of {2}:", right_annihilator(Z4, [2]).sorted)

cls = classify_ring(Z4)
nil = nil_structure(Z4)
print(f"Baer {cls.is_baer}, p.p. {cls.is_pp_right}, NI {nil.is_NI}, 2-primal {nil.is_2_primal}")

# Every one-sided ideal's annihilator is still the annihilator of one element.
ac = ring_ac_exact(Z4, "right")
for ideal, c in sorted(ac.witness_map.items(), key=lambda kv: kv[0].sorted):
    print(f"  r({set(ideal.sorted)}) = r({Z4.label(c)} R)")

# 2x2 matrices over Z/2Z: Baer but neither Abelian nor NI.
M = matrix(zmod(2), 2)
cls, nil = classify_ring(M), nil_structure(M)
idem = idempotent_sets(M)
print(f"\n{M.name}: {len(idem.idempotents)} idempotents, {len(idem.central_idempotents)} central")
print(f"Baer {cls.is_baer}, Abelian {cls.is_abelian}, NI {nil.is_NI}")

# A single corrupted table entry breaks an axiom, and the validator finds it.
mul = Z4.mul_table.copy()
mul[2, 2] = 1
broken = FiniteRing(Z4.add_table, mul, Z4.zero, Z4.one, Z4.additive_decomposition)
print("\ncorrupted Z4:", validate_ring_axioms(broken)[0])
