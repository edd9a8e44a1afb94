"""Normal-form arithmetic in skew PBW extensions.

Run with ``python demos/03_skew_pbw_arithmetic.py``.
"""

from skewpbw.catalog import build_catalog_example, catalog_instance
from skewpbw.engine import (classify_extension, expand_monomial_scalar, leading_data, monomial_product,
                            scalar_commutation, validate_extension)

# Quantum plane over F3: x2 x1 = 2 x1 x2.
qp = catalog_instance("F3 quantum plane")
x1, x2 = qp.var(0), qp.var(1)
print("quantum plane:  x2*x1 =", x2 * x1, "  x2^2*x1 =", x2 * x2 * x1)
print("  x^(0,2) x^(2,0) has leading coefficient", monomial_product(qp, (0, 2), (2, 0)).leading)
f = qp.poly({(1, 2): 2, (1, 0): 1})
ld = leading_data(f)
print(f"  lm({f}) = x^{ld.lm}, lc = {ld.lc}, deg = {ld.deg}")

# Differential operators over Z2[t]/(t^2): x t = t x + 1.
weyl = catalog_instance("Z2[t]/(t^2)[x;d/dt]")
t = weyl.ring.element("t")
print("\ndifferential operators:  x*t =", weyl.var(0) * weyl.scalar(t))
dec = scalar_commutation(weyl, (2,), t)
print(f"  x^2 t = {weyl.ring.label(dec.leading)} x^2 + ({dec.tail})")
print("  closed-form expansion agrees:",
      expand_monomial_scalar(weyl, (2,), t) == weyl.monomial((2,)) * weyl.scalar(t))

# The same relation yx = a x^2 + b xy in two encodings.
ore = build_catalog_example("q_algebra", {"encoding": "ore", "p": 3, "m": 3, "a": 1, "b": 2})
two = build_catalog_example("q_algebra", {"encoding": "two_variable", "ring": {"kind": "gf", "q": 3},
                                          "a": 1, "b": 2})
print(f"\n{ore.name}: y*t =", ore.var(0) * ore.scalar(ore.ring.element("t")), "  notes:", ore.notes)
print(f"{two.name}: y'*x =", two.var(1) * two.var(0), "  notes:", two.notes)

for ext in (qp, weyl, ore, two):
    v = validate_extension(ext, 3)
    print(f"{ext.name}: {classify_extension(ext)}, confluent to degree 3: {v.confluence.confluent}")
