"""Command line entry point: ``skewpbw <command> <scenario> [options]``.

Exit codes: 0 all tasks pass (or are not applicable), 1 a counterexample or
bounded refutation, 2 input error, 3 cap exceeded or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .report import emit_report, make_report, run_scenario, run_task
from .scenario import CHECK_PROPS, SUITE_IDS, Scenario, ScenarioError, Task, parse_scenario


def shipped_scenarios() -> dict[str, Path]:
    root = resources.files("skewpbw") / "data"
    return {Path(str(p)).stem: Path(str(p)) for p in root.iterdir() if str(p).endswith(".toml")}


def _load(ref: str) -> Scenario:
    path = Path(ref)
    if not path.exists():
        shipped = shipped_scenarios()
        if ref not in shipped:
            raise FileNotFoundError(f"no scenario file or shipped scenario named {ref!r}")
        path = shipped[ref]
    return parse_scenario(path.read_text(encoding="utf-8"))


def _bounds(args) -> dict:
    return {"gen_degree": args.gen_degree, "middle_degree": args.middle_degree,
            "target_degree": args.target_degree, "witness_degree": args.witness_degree}


def _tasks_for(args, sc: Scenario) -> list[Task]:
    cmd = args.command
    if cmd == "run":
        return sc.tasks
    if cmd in ("validate", "classify"):
        return [Task(cmd, {"degree_bound": args.degree_bound} if cmd == "validate" else {})]
    if cmd == "check":
        params = {"prop": args.prop, "mode": args.mode, "seed": args.seed, "trials": args.trials,
                  "side": args.side}
        if args.degree is not None:
            params["degree"] = args.degree
        if args.middle_degree is not None:
            params["middle_degree"] = args.middle_degree
        return [Task("check", params)]
    if cmd == "ac":
        if args.generators:
            return [Task("ac", {"side": args.side, "bounds": _bounds(args), "strategy": args.strategy,
                                "generators": json.loads(args.generators), "escalate": args.escalate})]
        own = [t for t in sc.tasks if t.op == "ac"]
        if own:
            return [Task("ac", {**t.params, "side": args.side, "bounds": _bounds(args),
                                "strategy": args.strategy if args.strategy != "sweep" else t.params.get(
                                    "strategy", "heuristic"),
                                "escalate": args.escalate}) for t in own]
        return [Task("ac", {"side": args.side, "bounds": _bounds(args), "strategy": "sweep",
                            "escalate": args.escalate})]
    if cmd == "theorems":
        suites = list(SUITE_IDS) if args.suite in (None, "all") else args.suite.split(",")
        unknown = [s for s in suites if s not in SUITE_IDS]
        if unknown:
            raise ScenarioError("E006", f"unknown suite {unknown[0]!r}")
        return [Task("theorems", {"suites": suites, "escalate": args.escalate, "bounds": _bounds(args),
                                  "sa1_degree": args.sa1_degree})]
    raise AssertionError(cmd)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default=None,
                        help="report format (default: the scenario's [output] format, else machine)")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--gen-degree", type=int, default=1, metavar="D")
    bounds.add_argument("--middle-degree", type=int, default=2, metavar="E")
    bounds.add_argument("--target-degree", type=int, default=2, metavar="T")
    bounds.add_argument("--witness-degree", type=int, default=2, metavar="C")
    bounds.add_argument("--escalate", action=argparse.BooleanOptionalAction, default=True,
                        help="retry heuristic misses with the exhaustive search")

    parser = argparse.ArgumentParser(prog="skewpbw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", parents=[common], help="run the tasks listed in a scenario")
    p.add_argument("files", nargs="+")
    p = sub.add_parser("validate", parents=[common], help="ring axioms, map laws and bounded confluence")
    p.add_argument("files", nargs="+")
    p.add_argument("--degree-bound", type=int, default=3)
    p = sub.add_parser("classify", parents=[common], help="ring and extension predicates")
    p.add_argument("files", nargs="+")
    p = sub.add_parser("check", parents=[common], help="check one property")
    p.add_argument("files", nargs="+")
    p.add_argument("--prop", required=True, choices=CHECK_PROPS)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--middle-degree", type=int, default=None)
    p.add_argument("--side", choices=("right", "left"), default="right")
    p = sub.add_parser("ac", parents=[common, bounds], help="bounded Property (a.c.) witness search")
    p.add_argument("files", nargs="+")
    p.add_argument("--side", choices=("right", "left"), default="right")
    p.add_argument("--strategy", choices=("heuristic", "exhaustive", "sweep"), default="heuristic")
    p.add_argument("--generators", default=None,
                   help='JSON list of polynomials, e.g. \'[[{"exp":[1],"coef":2}]]\'')
    p = sub.add_parser("theorems", parents=[common, bounds], help="run theorem suites")
    p.add_argument("files", nargs="+")
    p.add_argument("--suite", default="all", help=f"comma separated ids from {', '.join(SUITE_IDS)}, or all")
    p.add_argument("--sa1-degree", type=int, default=2)
    sub.add_parser("list", help="list the shipped scenarios")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        for name, path in sorted(shipped_scenarios().items()):
            print(f"{name}\t{path}")
        return 0
    if any(getattr(args, k, 0) is not None and getattr(args, k, 0) < 0
           for k in ("gen_degree", "middle_degree", "target_degree", "witness_degree")):
        print("error: bounds must be nonnegative", file=sys.stderr)
        return 2
    reports = []
    fmt = args.format
    try:
        for ref in args.files:
            sc = _load(ref)
            fmt = fmt or sc.output.get("format", "machine")
            reports.append(run_scenario(sc, _tasks_for(args, sc)))
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if len(reports) == 1:
        report = reports[0]
    else:
        entries = []
        for r in reports:
            for e in r["tasks"]:
                entries.append({**e, "id": f"{r['scenario']}/{e['id']}"})
        report = make_report("+".join(r["scenario"] for r in reports), entries)
    text = emit_report(report, fmt or "machine")
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return report["summary"]["exit_code"]


__all__ = ["main", "build_parser", "run_task"]
