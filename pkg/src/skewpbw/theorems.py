"""Desk-scale property suites for the four (a.c.) transfer theorems.

Each suite first decides the theorem's hypotheses exactly (ring predicates,
compatibility, bounded (SA1), bijectivity).  Instances failing a hypothesis
are reported ``not_applicable`` with the failed hypotheses listed.  Otherwise
a bounded (a.c.) sweep runs on every side the hypotheses cover, and the
instance fails only if some search ends in a bounded refutation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .annihilators import DegreeBounds, ac_sweep, check_sa1
from .engine import ExtensionSpec, classify_extension
from .finring import classify_ring, nil_structure
from .ringmaps import check_compatibility


@dataclass(frozen=True)
class Suite:
    id: str
    title: str
    common: tuple[str, ...]
    # hypothesis that must additionally hold for each side; None: side not covered
    right: str | None
    left: str | None


SUITES: dict[str, Suite] = {s.id: s for s in (
    Suite("t_baer_sa1", "Baer, compatible and (SA1) => (a.c.) on the right",
          ("baer", "compatible", "sa1"), "baer", None),
    Suite("t_abelian_ni_pp", "compatible, Abelian, NI, (SA1) and p.p. => (a.c.)",
          ("compatible", "abelian", "ni", "sa1"), "pp_right", "pp_left"),
    Suite("t_rigid_pp", "bijective over a rigid, Abelian, NI p.p. ring => (a.c.)",
          ("bijective", "rigid", "abelian", "ni"), "pp_right", "pp_left"),
    Suite("t_pqbaer", "bijective over a compatible p.q.-Baer ring => (a.c.)",
          ("bijective", "compatible"), "pq_baer_right", "pq_baer_left"),
)}


class HypothesisChecker:
    """Lazily evaluated, cached hypothesis predicates for one extension."""

    def __init__(self, ext: ExtensionSpec, sa1_degree: int = 2, seed: int = 0):
        self.ext = ext
        self.sa1_degree = sa1_degree
        self.seed = seed
        self.values: dict[str, bool] = {}
        self.details: dict[str, str] = {}
        self._cls = None
        self._nil = None
        self._compat = None

    def _ring_class(self):
        if self._cls is None:
            self._cls = classify_ring(self.ext.ring)
        return self._cls

    def _compatibility(self):
        if self._compat is None:
            self._compat = check_compatibility(self.ext.ring, self.ext.sigmas, self.ext.deltas)
        return self._compat

    def _sa1(self) -> bool:
        res = check_sa1(self.ext, self.sa1_degree, "exhaustive")
        if res.status == "cap_exceeded":
            res = check_sa1(self.ext, self.sa1_degree, "random", seed=self.seed, trials=500)
        self.details["sa1"] = f"{res.mode} at degree {self.sa1_degree}, {res.checked} pairs"
        return bool(res.holds_at_bound)

    def _ni(self) -> bool:
        if self._nil is None:
            self._nil = nil_structure(self.ext.ring)
        return bool(self._nil.is_NI)

    def __call__(self, name: str) -> bool:
        if name not in self.values:
            table: dict[str, Callable[[], bool]] = {
                "baer": lambda: self._ring_class().is_baer,
                "abelian": lambda: self._ring_class().is_abelian,
                "pp_right": lambda: self._ring_class().is_pp_right,
                "pp_left": lambda: self._ring_class().is_pp_left,
                "pq_baer_right": lambda: self._ring_class().is_pq_baer_right,
                "pq_baer_left": lambda: self._ring_class().is_pq_baer_left,
                "ni": self._ni,
                "compatible": lambda: self._compatibility().sigma_delta_compatible,
                "rigid": lambda: self._compatibility().sigma_rigid,
                "bijective": lambda: classify_extension(self.ext).bijective,
                "sa1": self._sa1,
            }
            self.values[name] = bool(table[name]())
        return self.values[name]


def run_suite_on(suite: Suite | str, ext: ExtensionSpec, bounds: DegreeBounds | None = None,
                 sa1_degree: int = 2, escalate: bool = True, max_set_size: int = 2) -> dict:
    """Run one suite on one extension and return its report entry."""
    suite = SUITES[suite] if isinstance(suite, str) else suite
    bounds = bounds or DegreeBounds()
    start = time.perf_counter()
    hyp = HypothesisChecker(ext, sa1_degree)
    failed = [h for h in suite.common if not hyp(h)]
    sides = {}
    for side, req in (("right", suite.right), ("left", suite.left)):
        if req is None:
            continue
        if not hyp(req):
            sides[side] = {"status": "not_applicable", "failed_hypotheses": [req]}
        elif failed:
            sides[side] = {"status": "not_applicable"}
        else:
            sweep = ac_sweep(ext, bounds, side, max_set_size, escalate)
            sweep["status"] = "fail" if sweep["counts"]["bounded_refutation"] else "pass"
            sides[side] = sweep
    applicable = [s for s in sides.values() if s["status"] != "not_applicable"]
    if not applicable:
        status = "not_applicable"
        failed = failed + [h for s in sides.values() for h in s.get("failed_hypotheses", [])
                           if h not in failed]
    else:
        status = "fail" if any(s["status"] == "fail" for s in applicable) else "pass"
    return {
        "suite": suite.id,
        "instance": ext.name,
        "status": status,
        "hypotheses": dict(sorted(hyp.values.items())),
        "failed_hypotheses": failed,
        "hypothesis_details": hyp.details,
        "sides": sides,
        "bounds": bounds.as_dict(),
        "sa1_degree": sa1_degree,
        "notes": dict(ext.notes),
        "wall_time": time.perf_counter() - start,
    }


def run_theorem_suite(suite_id: str, instances: Sequence[ExtensionSpec], bounds: DegreeBounds | None = None,
                      sa1_degree: int = 2, escalate: bool = True) -> dict:
    """Run a suite over several extensions; entries are keyed by instance name."""
    if suite_id not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}; known: {sorted(SUITES)}")
    entries = {ext.name: run_suite_on(suite_id, ext, bounds, sa1_degree, escalate) for ext in instances}
    statuses = [e["status"] for e in entries.values()]
    return {
        "suite": suite_id,
        "title": SUITES[suite_id].title,
        "instances": entries,
        "status": "fail" if "fail" in statuses else "pass",
        "bounded_refutations": sum(s.get("counts", {}).get("bounded_refutation", 0)
                                   for e in entries.values() for s in e["sides"].values()),
    }
