"""Scenario files, reports and the command line.

Run with ``python demos/06_scenarios_and_reports.py``.
"""

from skewpbw.cli import main
from skewpbw.report import emit_report, run_scenario
from skewpbw.scenario import ScenarioError, emit_scenario, parse_scenario

TEXT = """\
name = "Z6 demo"

[ring]
kind = "zmod"
n = 6

[extension]
variables = ["x"]
sigmas = ["id"]

[[tasks]]
op = "classify"

[[tasks]]
op = "check"
prop = "sa1"
mode = "random"
seed = 1
trials = 50

[[tasks]]
op = "theorems"
suites = ["t_abelian_ni_pp"]
bounds = {middle_degree = 1, target_degree = 1}
"""

sc = parse_scenario(TEXT)
print("canonical form:\n" + emit_scenario(sc))
print(emit_report(run_scenario(sc), "human"))

try:
    parse_scenario(TEXT.replace('["id"]', '["frob2"]'))
except ScenarioError as exc:
    print("a dangling map reference is reported as", exc)

print("\n$ skewpbw theorems f4_frobenius --suite t_rigid_pp --format human")
code = main(["theorems", "f4_frobenius", "--suite", "t_rigid_pp", "--format", "human"])
print("exit code", code)
