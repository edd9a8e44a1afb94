"""Desk-scale checks of the four (a.c.) transfer results on the catalog.

Run with ``python demos/05_theorem_suites.py`` (about ten seconds).
"""

from skewpbw.annihilators import DegreeBounds
from skewpbw.catalog import INSTANCES, catalog_instance
from skewpbw.theorems import SUITES, run_theorem_suite

bounds = DegreeBounds(gen_degree=1, middle_degree=2, target_degree=2, witness_degree=2)
instances = [catalog_instance(name) for name in INSTANCES]

for sid, suite in SUITES.items():
    out = run_theorem_suite(sid, instances, bounds)
    print(f"\n{sid}: {suite.title}")
    print(f"  status {out['status']}, bounded refutations {out['bounded_refutations']}")
    for name, entry in out["instances"].items():
        if entry["status"] == "not_applicable":
            print(f"  {name:24s} not applicable: {', '.join(entry['failed_hypotheses'])}")
        else:
            sets = sum(s["sets"] for s in entry["sides"].values())
            print(f"  {name:24s} {entry['status']}: {sets} generator sets on {', '.join(entry['sides'])}")
