"""Executing scenario tasks and rendering the resulting reports.

A report is a plain dictionary.  The machine format is JSON with sorted keys
and no timing fields, so it is byte-stable for a fixed scenario and seed; the
human format adds wall times and lays each task out as a small table.
"""

from __future__ import annotations

import json
import time
from typing import Any

from . import __version__
from .annihilators import (DegreeBounds, ac_sweep, ac_witness_search, check_quasi_armendariz, check_sa1,
                           heuristic_candidates)
from .engine import SkewPoly, check_associativity, classify_extension, validate_extension
from .finring import RingSubset, classify_ring, nil_structure, ring_ac_exact, validate_ring_axioms
from .ringmaps import check_compatibility, compatibility_consequences
from .scenario import Scenario, Task, parse_poly
from .theorems import SUITES, run_suite_on

REPORT_VERSION = 1
TIMING_KEYS = ("wall_time",)
EXIT_CODES = {"pass": 0, "not_applicable": 0, "fail": 1, "error": 2, "inconclusive": 3, "cap_exceeded": 3}
MAX_WITNESSES = 5


def jsonable(obj: Any) -> Any:
    """Convert report values (polynomials, subsets, tuples, dataclasses) to JSON data."""
    if isinstance(obj, SkewPoly):
        return {"terms": obj.to_list(), "text": repr(obj)}
    if isinstance(obj, RingSubset):
        return list(obj.sorted)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in seq]
    if hasattr(obj, "__dataclass_fields__"):
        return {k: jsonable(getattr(obj, k)) for k in obj.__dataclass_fields__}
    return obj


def _ring_summary(R) -> dict:
    cls = classify_ring(R)
    nil = nil_structure(R)
    out = {"order": R.order, "commutative": R.is_commutative()}
    out.update({k: getattr(cls, k) for k in cls.__dataclass_fields__})
    out.update({"nil": list(nil.nil_set.sorted) if nil.nil_set is not None else None,
                "is_reduced": nil.is_reduced, "is_NI": nil.is_NI, "is_2_primal": nil.is_2_primal,
                "is_semiprime": nil.is_semiprime, "nil_status": nil.status})
    for side in ("right", "left"):
        ac = ring_ac_exact(R, side)
        out[f"ac_{side}"] = ac.holds
    return out


def _task_validate(sc: Scenario, task: Task) -> dict:
    viol = validate_ring_axioms(sc.ring)
    entry: dict = {"ring_violations": [[v.axiom, list(v.witness)] for v in viol[:MAX_WITNESSES]],
                   "maps": sorted(sc.maps)}
    ok = not viol
    if sc.extension is not None:
        bound = int(task.params.get("degree_bound", 3))
        v = validate_extension(sc.extension, bound)
        entry["extension"] = {"classification": v.classification, "confluent": v.confluence.confluent,
                              "triples_checked": v.confluence.triples_checked,
                              "counterexamples": [list(t) for t in v.confluence.counterexamples],
                              "degree_bound": bound}
        ok = ok and v.confluence.confluent
    entry["status"] = "pass" if ok else "fail"
    return entry


def _task_classify(sc: Scenario, task: Task) -> dict:
    entry: dict = {"ring": _ring_summary(sc.ring), "status": "pass"}
    if sc.extension is not None:
        ext = sc.extension
        comp = check_compatibility(ext.ring, ext.sigmas, ext.deltas)
        entry["extension"] = {"classification": classify_extension(ext),
                              "sigma_compatible": comp.sigma_compatible,
                              "delta_compatible": comp.delta_compatible,
                              "sigma_rigid": comp.sigma_rigid, "notes": ext.notes}
    return entry


def _task_check(sc: Scenario, task: Task) -> dict:
    p = task.params
    prop = p["prop"]
    ext = sc.extension
    mode = p.get("mode", "exhaustive")
    seed, trials = int(p.get("seed", 0)), int(p.get("trials", 200))
    entry: dict = {"prop": prop}
    if prop in ("sa1", "quasi_armendariz"):
        D = int(p.get("degree", 2 if prop == "sa1" else 1))
        if prop == "sa1":
            res = check_sa1(ext, D, mode, seed, trials)
        else:
            E = int(p.get("middle_degree", 1))
            res = check_quasi_armendariz(ext, D, E, mode, seed, trials)
            entry["middle_degree"] = E
        entry.update({"degree": D, "mode": mode, "checked": res.checked,
                      "holds_at_bound": res.holds_at_bound, "counterexample": res.counterexample})
        if mode == "random":
            entry.update({"seed": seed, "trials": trials})
        entry["status"] = ("cap_exceeded" if res.status == "cap_exceeded"
                           else "pass" if res.holds_at_bound else "fail")
    elif prop == "compatibility":
        comp = check_compatibility(ext.ring, ext.sigmas, ext.deltas)
        entry.update({"sigma_compatible": comp.sigma_compatible, "delta_compatible": comp.delta_compatible,
                      "sigma_delta_compatible": comp.sigma_delta_compatible, "sigma_rigid": comp.sigma_rigid,
                      "witnesses": {k: v[:MAX_WITNESSES] for k, v in comp.witnesses.items()}})
        entry["status"] = "pass" if comp.sigma_delta_compatible else "fail"
    elif prop == "consequences":
        bad = compatibility_consequences(ext.ring, ext.sigmas, ext.deltas)
        entry.update({"failures": len(bad), "examples": bad[:MAX_WITNESSES]})
        entry["status"] = "pass" if not bad else "fail"
    elif prop == "ring_ac":
        side = p.get("side", "right")
        res = ring_ac_exact(sc.ring, side)
        entry.update({"side": side, "holds": res.holds, "counterexample": res.counterexample,
                      "witnesses": [[list(k.sorted), c] for k, c in
                                    sorted(res.witness_map.items(), key=lambda kv: kv[0].sorted)]})
        entry["status"] = ("cap_exceeded" if res.status != "decided"
                           else "pass" if res.holds else "fail")
    elif prop == "associativity":
        sd = int(p.get("degree", 1))
        res = check_associativity(ext, sd)
        entry.update({"seed_degree": sd, "triples_checked": res.triples_checked,
                      "counterexamples": [list(t) for t in res.counterexamples]})
        entry["status"] = "pass" if res.confluent else "fail"
    return entry


def _task_ac(sc: Scenario, task: Task) -> dict:
    p = task.params
    ext = sc.extension
    bounds = task.bounds()
    side = p.get("side", "right")
    strategy = p.get("strategy", "heuristic")
    entry: dict = {"side": side, "strategy": strategy, "bounds": bounds.as_dict(),
                   "claim": "bounded: holds only for the stated degree bounds"}
    if strategy == "sweep":
        sweep = ac_sweep(ext, bounds, side, int(p.get("max_set_size", 2)), bool(p.get("escalate", True)))
        entry.update(sweep)
        entry["status"] = ("fail" if sweep["counts"]["bounded_refutation"]
                           else "inconclusive" if sweep["counts"]["inconclusive"] else "pass")
        return entry
    F = [parse_poly(ext, f) for f in p.get("generators", [])]
    extra = [parse_poly(ext, f) for f in p.get("candidates", [])]
    if not F:
        entry.update({"status": "error", "message": "ac task needs generators (or strategy = sweep)"})
        return entry
    res = ac_witness_search(ext, F, bounds, side, strategy, extra)
    if res.status == "inconclusive" and strategy == "heuristic" and p.get("escalate", False):
        res = ac_witness_search(ext, F, bounds, side, "exhaustive", extra)
        entry["escalated"] = True
    entry.update({"generators": F, "result": res.status, "witness": res.witness, "evidence": res.evidence})
    if strategy == "heuristic":
        entry["candidates"] = len(heuristic_candidates(ext, F, side, extra))
    entry["status"] = {"witness": "pass", "bounded_refutation": "fail"}.get(res.status, "inconclusive")
    return entry


def _task_theorems(sc: Scenario, task: Task) -> dict:
    p = task.params
    suites = p.get("suites", list(SUITES))
    bounds = task.bounds()
    results = {s: run_suite_on(s, sc.extension, bounds, int(p.get("sa1_degree", 2)),
                               bool(p.get("escalate", True))) for s in suites}
    statuses = [r["status"] for r in results.values()]
    status = ("fail" if "fail" in statuses else "pass" if "pass" in statuses else "not_applicable")
    return {"suites": results, "status": status, "bounds": bounds.as_dict()}


RUNNERS = {"validate": _task_validate, "classify": _task_classify, "check": _task_check,
           "ac": _task_ac, "theorems": _task_theorems}


def run_task(sc: Scenario, task: Task) -> dict:
    start = time.perf_counter()
    entry = RUNNERS[task.op](sc, task)
    entry = {"op": task.op, **entry, "wall_time": time.perf_counter() - start}
    return entry


def run_scenario(sc: Scenario, tasks: list[Task] | None = None) -> dict:
    """Run the scenario's tasks (or ``tasks``) and assemble a report."""
    tasks = sc.tasks if tasks is None else tasks
    entries = []
    for k, task in enumerate(tasks):
        entry = run_task(sc, task)
        entry["id"] = f"{k + 1}:{task.op}"
        entries.append(entry)
    return make_report(sc.name, entries, sc.extension.notes if sc.extension is not None else {})


def make_report(name: str, entries: list[dict], notes: dict | None = None) -> dict:
    counts: dict[str, int] = {}
    for e in entries:
        counts[e["status"]] = counts.get(e["status"], 0) + 1
    return {
        "report_version": REPORT_VERSION,
        "package_version": __version__,
        "scenario": name,
        "notes": dict(notes or {}),
        "tasks": entries,
        "summary": {"tasks": len(entries), "counts": dict(sorted(counts.items())),
                    "exit_code": exit_code(entries)},
    }


def exit_code(entries: list[dict]) -> int:
    codes = {EXIT_CODES.get(e["status"], 2) for e in entries}
    for code in (2, 1, 3):
        if code in codes:
            return code
    return 0


def _strip_timing(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k not in TIMING_KEYS}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def _flatten(prefix: str, value: Any, rows: list[tuple[str, str]], depth: int = 0) -> None:
    if isinstance(value, dict) and value and depth < 3:
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows, depth + 1)
    else:
        text = json.dumps(value, sort_keys=True) if not isinstance(value, str) else value
        if len(text) > 100:
            text = text[:97] + "..."
        rows.append((prefix, text))


def emit_report(report: dict, fmt: str = "machine") -> str:
    """``machine``: canonical JSON without timings.  ``human``: one table per task."""
    data = jsonable(report)
    if fmt == "machine":
        return json.dumps(_strip_timing(data), sort_keys=True, indent=1) + "\n"
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"scenario: {data['scenario']}  (skewpbw {data['package_version']})"]
    for task in data["tasks"]:
        lines.append("")
        lines.append(f"== task {task['id']}  status: {task['status']}  ({task['wall_time']:.3f} s)")
        rows: list[tuple[str, str]] = []
        for k, v in task.items():
            if k not in ("id", "op", "status", "wall_time"):
                _flatten(k, v, rows)
        width = max((len(r[0]) for r in rows), default=0)
        lines.extend(f"  {k.ljust(width)}  {v}" for k, v in rows)
    s = data["summary"]
    counts = ", ".join(f"{k}={v}" for k, v in s["counts"].items()) or "no tasks"
    lines.append("")
    lines.append(f"summary: {s['tasks']} task(s); {counts}; exit code {s['exit_code']}")
    return "\n".join(lines) + "\n"


__all__ = ["run_scenario", "run_task", "make_report", "emit_report", "exit_code", "jsonable",
           "DegreeBounds"]
