import pytest

from oracles import SubsetOracle, compatibility_oracle
from skewpbw.annihilators import DegreeBounds
from skewpbw.catalog import INSTANCES
from skewpbw.theorems import SUITES, HypothesisChecker, run_suite_on, run_theorem_suite

SMALL = DegreeBounds(gen_degree=1, middle_degree=1, target_degree=1, witness_degree=1)
# the subset oracle handles rings of at most 16 elements
ORACLE_SIZED = [n for n in sorted(INSTANCES) if n != "Q(1,2,0) ore"]


@pytest.mark.parametrize("name", ORACLE_SIZED)
def test_hypotheses_match_oracles(name, instances):
    ext = instances(name)
    hyp = HypothesisChecker(ext)
    assert ext.ring.order <= 16
    ring = SubsetOracle.of(ext.ring)
    comp = compatibility_oracle(ext.ring, ext.sigmas.maps, ext.deltas)
    assert hyp("baer") == ring.is_baer
    assert hyp("abelian") == ring.is_abelian
    assert hyp("ni") == ring.is_NI
    assert hyp("pp_right") == ring.is_pp_right and hyp("pp_left") == ring.is_pp_left
    assert hyp("pq_baer_right") == ring.is_pq_baer_right
    assert hyp("compatible") == (comp["sigma"] and comp["delta"])
    assert hyp("rigid") == comp["rigid"]


def test_z4_is_not_applicable_for_every_suite(instances):
    ext = instances("Z4[x]")
    expected = {"t_baer_sa1": ["baer"], "t_abelian_ni_pp": ["pp_right", "pp_left"],
                "t_rigid_pp": ["rigid", "pp_right", "pp_left"],
                "t_pqbaer": ["pq_baer_right", "pq_baer_left"]}
    for sid, failed in expected.items():
        entry = run_suite_on(sid, ext, SMALL)
        assert entry["status"] == "not_applicable"
        assert entry["failed_hypotheses"] == failed


def test_rigid_pp_on_frobenius(instances):
    entry = run_suite_on("t_rigid_pp", instances("F4[x;Frob]"), SMALL)
    assert entry["status"] == "pass"
    assert set(entry["sides"]) == {"right", "left"}
    for side in entry["sides"].values():
        assert side["counts"]["bounded_refutation"] == 0 and side["counts"]["inconclusive"] == 0


def test_baer_suite_covers_right_side_only(instances):
    entry = run_suite_on("t_baer_sa1", instances("Z6[x]"), SMALL)
    assert entry["status"] == "pass" and list(entry["sides"]) == ["right"]


def test_failed_hypothesis_reported_for_incompatible_maps(instances):
    entry = run_suite_on("t_pqbaer", instances("Z2xZ2[x;swap]"), SMALL)
    assert entry["status"] == "not_applicable" and entry["failed_hypotheses"] == ["compatible"]
    entry = run_suite_on("t_baer_sa1", instances("Z2[t]/(t^2)[x;d/dt]"), SMALL)
    assert "baer" in entry["failed_hypotheses"]


def test_run_theorem_suite_aggregates(instances):
    exts = [instances("Z4[x]"), instances("F4[x;Frob]")]
    out = run_theorem_suite("t_rigid_pp", exts, SMALL)
    assert out["status"] == "pass" and out["bounded_refutations"] == 0
    assert set(out["instances"]) == {"Z4[x]", "F4[x;Frob]"}
    assert out["instances"]["Z4[x]"]["status"] == "not_applicable"
    with pytest.raises(KeyError):
        run_theorem_suite("t_unknown", exts)


def test_suite_table():
    assert set(SUITES) == {"t_baer_sa1", "t_abelian_ni_pp", "t_rigid_pp", "t_pqbaer"}
    assert SUITES["t_baer_sa1"].left is None
