"""Acceptance criteria 1-8, each at its stated tolerance.

Every test records a one-line PASS/FAIL verdict; the lines are printed in the
pytest terminal summary (see ``conftest.py``) and when this file is run as a
script.
"""

import itertools
import json
import random
import sys
import time
from contextlib import redirect_stdout
from io import StringIO

from oracles import SubsetOracle, compatibility_oracle
from skewpbw.annihilators import (CoefficientSpace, DegreeBounds, annihilator_oracle_enum,
                                  bounded_right_annihilator)
from skewpbw.catalog import INSTANCES, base_ring_catalog, catalog_instance
from skewpbw.cli import main, shipped_scenarios
from skewpbw.engine import check_associativity, expand_monomial_scalar, poly_multiply
from skewpbw.finring import FiniteRing, classify_ring, nil_structure, ring_ac_exact, validate_ring_axioms
from skewpbw.ringmaps import check_compatibility, compatibility_consequences
from skewpbw.theorems import run_suite_on

RESULTS: dict[int, str] = {}


def record(n: int, title: str, ok: bool, detail: str) -> None:
    RESULTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})"
    print(RESULTS[n])


def test_criterion_1_axiom_fuzzing():
    rings = base_ring_catalog()
    rng = random.Random(2024)
    start = time.perf_counter()
    detected = total = 0
    for name in ("Z4", "M2(Z2)"):
        R = rings[name]
        n = R.order
        for _ in range(100):
            add, mul = R.add_table.copy(), R.mul_table.copy()
            table = add if rng.random() < 0.5 else mul
            a, b = rng.randrange(n), rng.randrange(n)
            table[a, b] = (table[a, b] + rng.randrange(1, n)) % n
            total += 1
            detected += bool(validate_ring_axioms(FiniteRing(add, mul, R.zero, R.one, R.additive_decomposition)))
    elapsed = time.perf_counter() - start
    ok = detected == total and elapsed < 5
    record(1, "ring-axiom fuzzing", ok, f"{detected}/{total} corruptions detected in {elapsed:.2f} s")
    assert ok


def test_criterion_2_predicate_ground_truth():
    mismatches = []
    for name, R in base_ring_catalog().items():
        o = SubsetOracle.of(R)
        cls, nil = classify_ring(R), nil_structure(R)
        got = (cls.is_abelian, cls.is_baer, cls.is_pp_right, cls.is_pp_left, cls.is_pq_baer_right,
               cls.is_pq_baer_left, set(nil.nil_set), nil.is_reduced, nil.is_NI,
               set(nil.prime_radical), nil.is_2_primal, nil.is_semiprime)
        want = (o.is_abelian, o.is_baer, o.is_pp_right, o.is_pp_left, o.is_pq_baer_right,
                o.is_pq_baer_left, set(o.nilpotents), o.is_reduced, o.is_NI,
                set(o.prime_radical), o.is_2_primal, o.is_semiprime)
        if got != want:
            mismatches.append(name)
    rings = base_ring_catalog()
    c = {k: classify_ring(v) for k, v in rings.items()}
    n = {k: nil_structure(v) for k, v in rings.items()}
    required = [
        not c["Z4"].is_baer, not c["Z4"].is_pp_right, not c["Z4"].is_pq_baer_right,
        n["Z4"].is_NI, n["Z4"].is_2_primal,
        c["Z6"].is_baer, n["Z6"].is_reduced,
        c["M2(Z2)"].is_baer, not c["M2(Z2)"].is_abelian, not n["M2(Z2)"].is_NI,
        not n["Z2[t]/(t^2)"].is_reduced,
    ]
    ok = not mismatches and all(required)
    record(2, "predicate ground truth", ok,
           f"{len(rings)} rings, oracle mismatches {mismatches or 'none'}, "
           f"{sum(required)}/{len(required)} required outcomes")
    assert ok


def test_criterion_3_implication_lattice():
    violations = []
    for name, R in base_ring_catalog().items():
        c, n = classify_ring(R), nil_structure(R)
        ac_r, ac_l = ring_ac_exact(R, "right").holds, ring_ac_exact(R, "left").holds
        checks = {
            "reduced => abelian": not n.is_reduced or c.is_abelian,
            "baer => pp": not c.is_baer or (c.is_pp_right and c.is_pp_left),
            "pp => pq-baer (right)": not c.is_pp_right or c.is_pq_baer_right,
            "pp => pq-baer (left)": not c.is_pp_left or c.is_pq_baer_left,
            "reduced => 2-primal": not n.is_reduced or n.is_2_primal,
            "2-primal => NI": not n.is_2_primal or n.is_NI,
            "baer => (a.c.) both sides": not c.is_baer or (ac_r and ac_l),
        }
        violations += [f"{name}: {k}" for k, v in checks.items() if not v]
    ok = not violations
    record(3, "implication lattice", ok, f"violations: {violations or 'none'}")
    assert ok


def test_criterion_4_engine_soundness():
    start = time.perf_counter()
    bad = []
    names = [k for k in INSTANCES if catalog_instance(k).ring.order <= 16 and catalog_instance(k).n <= 2]
    triples = expansions = 0
    for name in names:
        ext = catalog_instance(name)
        rep = check_associativity(ext, 2)
        triples += rep.triples_checked
        if not rep.confluent:
            bad.append(f"{name}: associativity")
        for alpha in ext.exponents(3):
            for r in ext.ring:
                expansions += 1
                if expand_monomial_scalar(ext, alpha, r) != poly_multiply(ext.monomial(alpha), ext.scalar(r)):
                    bad.append(f"{name}: expansion {alpha}, {r}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(4, "engine soundness", ok, f"{len(names)} extensions, {triples} triples, {expansions} expansions, "
                                      f"{len(bad)} discrepancies, {elapsed:.1f} s")
    assert ok


def test_criterion_5_annihilator_oracle_equivalence():
    start = time.perf_counter()
    bounds = DegreeBounds(gen_degree=1, middle_degree=2, target_degree=2, witness_degree=2)
    bad, sets = [], 0
    for name in ("Z4[x]", "F4[x;Frob]", "Z2[t]/(t^2)[x;d/dt]", "F3 quantum plane"):
        ext = catalog_instance(name)
        # every nonzero polynomial of degree <= 1, not only the monomial-scalar pool
        pool = [f for f in CoefficientSpace(ext, 1).all_polys() if f]
        for k in (1, 2):
            for F in itertools.combinations(pool, k):
                sets += 1
                if bounded_right_annihilator(ext, list(F), bounds).elements() != annihilator_oracle_enum(
                        ext, list(F), bounds):
                    bad.append((name, F))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    record(5, "annihilator oracle equivalence", ok,
           f"{sets} generator sets, {len(bad)} discrepancies, {elapsed:.1f} s")
    assert ok


def test_criterion_6_compatibility_ground_truth():
    def comp(name):
        ext = catalog_instance(name)
        return ext, check_compatibility(ext.ring, ext.sigmas, ext.deltas)

    frob, c_frob = comp("F4[x;Frob]")
    swap, c_swap = comp("Z2xZ2[x;swap]")
    ddt, c_ddt = comp("Z2[t]/(t^2)[x;d/dt]")
    e1, e2 = swap.ring.element("(1,0)"), swap.ring.element("(0,1)")
    t = ddt.ring.element("t")
    facts = [
        c_frob.sigma_rigid and c_frob.sigma_delta_compatible,
        not c_swap.sigma_compatible and (0, e1, e2) in c_swap.witnesses["sigma"],
        not c_ddt.delta_compatible and (0, t, t) in c_ddt.witnesses["delta"],
    ]
    compatible, consequence_failures, oracle_mismatch = 0, 0, []
    for name in INSTANCES:
        ext, c = comp(name)
        if ext.ring.order <= 16:
            ref = compatibility_oracle(ext.ring, ext.sigmas.maps, ext.deltas)
            if (c.sigma_compatible, c.delta_compatible, c.sigma_rigid) != (ref["sigma"], ref["delta"], ref["rigid"]):
                oracle_mismatch.append(name)
        if c.sigma_delta_compatible:
            compatible += 1
            consequence_failures += len(compatibility_consequences(ext.ring, ext.sigmas, ext.deltas))
    ok = all(facts) and consequence_failures == 0 and not oracle_mismatch
    record(6, "compatibility ground truth", ok,
           f"{sum(facts)}/3 required facts, consequences pass on {compatible} compatible instances "
           f"({consequence_failures} failures), oracle mismatches {oracle_mismatch or 'none'}")
    assert ok


def test_criterion_7_theorem_suites():
    start = time.perf_counter()
    bounds = DegreeBounds(gen_degree=1, middle_degree=2, target_degree=2, witness_degree=2)
    expected_pass = [("t_pqbaer", "M2(Z2)[x]"), ("t_pqbaer", "Z2xZ2[x]"), ("t_rigid_pp", "F4[x;Frob]"),
                     ("t_baer_sa1", "F4[x;Frob]"), ("t_abelian_ni_pp", "Z6[x]")]
    expected_na = {
        "t_baer_sa1": ["baer"], "t_abelian_ni_pp": ["pp_right", "pp_left"],
        "t_rigid_pp": ["rigid", "pp_right", "pp_left"], "t_pqbaer": ["pq_baer_right", "pq_baer_left"],
    }
    problems, refutations, witnesses = [], 0, 0
    for sid, name in expected_pass:
        e = run_suite_on(sid, catalog_instance(name), bounds)
        for side in e["sides"].values():
            refutations += side.get("counts", {}).get("bounded_refutation", 0)
            witnesses += side.get("counts", {}).get("witness", 0)
            if side.get("counts", {}).get("witness", 0) != side.get("sets", -1):
                problems.append(f"{sid} on {name}: not every search found a witness")
        if e["status"] != "pass":
            problems.append(f"{sid} on {name}: {e['status']} {e['failed_hypotheses']}")
    for name in ("Z4[x]", "Z4 SBQA"):
        ext = catalog_instance(name)
        for sid, failed in expected_na.items():
            e = run_suite_on(sid, ext, bounds)
            if e["status"] != "not_applicable" or e["failed_hypotheses"] != failed:
                problems.append(f"{sid} on {name}: {e['status']} {e['failed_hypotheses']}")
    elapsed = time.perf_counter() - start
    ok = not problems and refutations == 0 and elapsed < 300
    record(7, "theorem suites", ok, f"{witnesses} witnesses, {refutations} bounded refutations, "
                                    f"problems {problems or 'none'}, {elapsed:.1f} s")
    assert ok


def _cli(argv) -> tuple[int, str]:
    buf = StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_criterion_8_determinism():
    names = sorted(shipped_scenarios())
    runs = [_cli(["run", *names, "--format", "machine"]) for _ in range(2)]
    seeded = [_cli(["check", "m2z2_poly", "--prop", "sa1", "--mode", "random", "--seed", "11",
                    "--trials", "100"]) for _ in range(2)]
    same = runs[0] == runs[1] and seeded[0] == seeded[1]
    parsed = json.loads(runs[0][1])
    ok = same and parsed["summary"]["tasks"] > 0
    record(8, "determinism", ok, f"{len(names)} scenarios, {parsed['summary']['tasks']} tasks, "
                                 f"{len(runs[0][1])} bytes, byte-equal: {same}")
    assert ok


if __name__ == "__main__":
    failed = 0
    for fn in [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
