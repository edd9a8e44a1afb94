import math
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from skewpbw.zmodule import ConstraintLattice, all_vectors, random_element, subgroup_elements, xgcd

MODULI = st.lists(st.sampled_from([2, 3, 4, 6, 8, 9]), min_size=1, max_size=3)


@st.composite
def homomorphisms(draw, moduli, count):
    """Rows of well-defined maps G -> Z_n: ``m_i c_i = 0 mod n``."""
    out = []
    for _ in range(count):
        n = draw(st.sampled_from([2, 3, 4, 6, 8, 9, 12]))
        row = [draw(st.integers(0, n)) * (n // math.gcd(m, n)) % n for m in moduli]
        out.append((row, n))
    return out


@st.composite
def systems(draw):
    moduli = draw(MODULI)
    homs = draw(homomorphisms(moduli, draw(st.integers(0, 4))))
    return moduli, homs


def _lattice(moduli, homs):
    M = math.lcm(*moduli, *(n for _, n in homs))
    L = ConstraintLattice(moduli, M)
    for row, n in homs:
        L.add_row(row, n)
    return L


def _kernel(moduli, homs):
    return {x for x in all_vectors(moduli)
            if all(sum(c * xi for c, xi in zip(row, x)) % n == 0 for row, n in homs)}


@given(st.integers(-200, 200), st.integers(-200, 200))
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert g == math.gcd(a, b) and s * a + t * b == g


@settings(max_examples=150, deadline=None)
@given(systems())
def test_kernel_matches_brute_force(system):
    moduli, homs = system
    L = _lattice(moduli, homs)
    ker = _kernel(moduli, homs)
    assert L.kernel_size() == len(ker)
    assert set(L.kernel_elements()) == ker
    assert all(L.contains(x) == (x in ker) for x in all_vectors(moduli))


@settings(max_examples=100, deadline=None)
@given(systems(), st.data())
def test_canonical_form_and_meet(system, data):
    moduli, homs = system
    other = data.draw(homomorphisms(moduli, data.draw(st.integers(0, 3))))
    M = math.lcm(*moduli, *(n for _, n in homs + other))
    A, B, both = ConstraintLattice(moduli, M), ConstraintLattice(moduli, M), ConstraintLattice(moduli, M)
    for row, n in homs:
        A.add_row(row, n)
    for row, n in other:
        B.add_row(row, n)
    # insertion order does not matter for the canonical form
    for row, n in reversed(homs + other):
        both.add_row(row, n)
    ka, kb = _kernel(moduli, homs), _kernel(moduli, other)
    assert A.meet(B) == both
    assert set(both.kernel_elements()) == ka & kb
    assert A.kernel_includes(both) and B.kernel_includes(both)
    assert A.kernel_includes(B) == (kb <= ka)
    assert (A == B) == (ka == kb)


@settings(max_examples=60, deadline=None)
@given(MODULI, st.lists(st.lists(st.integers(0, 20), min_size=3, max_size=3), max_size=3))
def test_subgroup_elements_closed(moduli, gens):
    gens = [g[:len(moduli)] for g in gens]
    H = set(subgroup_elements(gens, moduli))
    zero = tuple(0 for _ in moduli)
    assert zero in H
    assert all(tuple(c % m for c, m in zip(g, moduli)) in H for g in gens)
    assert all(tuple((a + b) % m for a, b, m in zip(x, y, moduli)) in H for x in H for y in H)
    rng = random.Random(0)
    assert all(random_element(gens, moduli, rng) in H for _ in range(10))
