"""Scenario files: a TOML description of a ring, maps, an extension and tasks.

Layout::

    name = "F4 Frobenius"

    [ring]                      # any build_ring descriptor
    kind = "gf"
    q = 4

    [maps.frob]                 # named maps; "id" and "zero" are predefined
    kind = "endomorphism"       # or "derivation" (then: sigma = "<map name>")
    builtin = "frobenius"       # or: table = [...]

    [extension]                 # explicit presentation ...
    variables = ["x"]
    sigmas = ["frob"]
    deltas = ["zero"]
    # [[extension.relations]]   pair = [1, 2], d = 2, r0 = 0, linear = [0, 0]

    # ... or a catalog family:  catalog = "quantum_plane", params = {q = 2}

    [[tasks]]
    op = "classify"             # validate | classify | check | ac | theorems

    [output]
    format = "machine"          # or "human"

Ring elements are written as indices or labels.  Polynomials are arrays of
``{exp = [...], coef = c}`` terms.  :func:`emit_scenario` writes the canonical
form, and ``parse(emit(parse(s))) == parse(s)``.
"""

from __future__ import annotations

import json
import re
import sys
from dataclasses import dataclass, field
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

from .annihilators import DegreeBounds
from .catalog import CatalogError, build_catalog_example, build_derivation, build_map
from .engine import ExtensionSpec, PresentationError, Relation, SkewPoly
from .finring import CapExceeded, FiniteRing, build_ring
from .ringmaps import RingMap, SigmaDerivation, identity_map, zero_derivation

# error codes
E_SYNTAX = "E001"
E_RING = "E002"            # unknown ring constructor or bad ring parameters
E_MAP_REF = "E003"         # unresolved map reference
E_EXPONENT = "E004"        # malformed exponent vector
E_ELEMENT = "E005"         # unknown ring element
E_TASK = "E006"            # unknown task op or bad task parameters
E_BOUNDS = "E007"          # negative or non-integer bounds
E_MAP = "E008"             # map table fails its laws
E_EXTENSION = "E009"       # presentation rejected
E_SCHEMA = "E010"          # missing or mistyped field

TASK_OPS = ("validate", "classify", "check", "ac", "theorems")
CHECK_PROPS = ("sa1", "quasi_armendariz", "compatibility", "consequences", "ring_ac", "associativity")
SUITE_IDS = ("t_baer_sa1", "t_abelian_ni_pp", "t_rigid_pp", "t_pqbaer")


class ScenarioError(ValueError):
    def __init__(self, code: str, message: str, line: int = 0, column: int = 0):
        self.code, self.message, self.line, self.column = code, message, line, column
        super().__init__(f"{code} at line {line}, column {column}: {message}")


@dataclass
class Task:
    op: str
    params: dict = field(default_factory=dict)

    def bounds(self) -> DegreeBounds:
        b = self.params.get("bounds", {})
        return DegreeBounds(**{k: int(v) for k, v in b.items()})


@dataclass
class Scenario:
    data: dict
    ring: FiniteRing
    maps: dict[str, RingMap | SigmaDerivation]
    extension: ExtensionSpec | None
    tasks: list[Task]
    output: dict

    @property
    def name(self) -> str:
        return self.data.get("name", "scenario")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Scenario) and self.data == other.data

    def poly(self, terms: list) -> SkewPoly:
        return parse_poly(self.extension, terms)


def _locate(text: str, needle: str) -> tuple[int, int]:
    """1-based position of the first occurrence of ``needle``."""
    idx = text.find(needle)
    if idx < 0:
        return 0, 0
    line = text.count("\n", 0, idx) + 1
    return line, idx - (text.rfind("\n", 0, idx) + 1) + 1


def parse_poly(ext: ExtensionSpec, terms: Any) -> SkewPoly:
    if not isinstance(terms, list):
        raise ScenarioError(E_SCHEMA, "a polynomial is an array of {exp, coef} terms")
    out = []
    for t in terms:
        if not isinstance(t, dict) or "exp" not in t:
            raise ScenarioError(E_SCHEMA, f"term {t!r} needs 'exp' and 'coef'")
        exp = t["exp"]
        if (not isinstance(exp, list) or len(exp) != ext.n
                or not all(isinstance(a, int) and not isinstance(a, bool) and a >= 0 for a in exp)):
            raise ScenarioError(E_EXPONENT, f"malformed exponent vector {exp!r} for {ext.n} variable(s)")
        out.append((tuple(exp), _element(ext.ring, t.get("coef", ext.ring.one))))
    return ext.poly(out)


def _element(R: FiniteRing, value: Any) -> int:
    try:
        return R.element(value)
    except (KeyError, ValueError, IndexError, TypeError):
        raise ScenarioError(E_ELEMENT, f"unknown element {value!r} of {R.name}") from None


def _resolve_maps(R: FiniteRing, raw: dict, text: str) -> dict:
    maps: dict[str, Any] = {"id": identity_map(R), "zero": zero_derivation(R)}
    pending = dict(raw)
    # derivations may reference endomorphisms defined anywhere in the file
    for name, desc in sorted(pending.items(), key=lambda kv: kv[1].get("kind") == "derivation"):
        if name in ("id", "zero"):
            raise ScenarioError(E_SCHEMA, f"map name {name!r} is reserved", *_locate(text, f"maps.{name}"))
        kind = desc.get("kind")
        args = {k: v for k, v in desc.items() if k not in ("kind", "sigma")}
        try:
            if kind == "endomorphism":
                maps[name] = build_map(R, args)
                maps[name].name = name
            elif kind == "derivation":
                sref = desc.get("sigma", "id")
                sigma = maps.get(sref)
                if not isinstance(sigma, RingMap):
                    raise ScenarioError(E_MAP_REF, f"unresolved map reference {sref!r}",
                                        *_locate(text, f'"{sref}"'))
                maps[name] = build_derivation(R, sigma, args)
                maps[name].name = name
            else:
                raise ScenarioError(E_SCHEMA, f"map {name!r} needs kind = endomorphism | derivation",
                                    *_locate(text, f"maps.{name}"))
        except CatalogError as exc:
            code = E_MAP if "table" in args else E_SCHEMA
            raise ScenarioError(code, f"map {name!r}: {exc}", *_locate(text, f"maps.{name}")) from None
        except (KeyError, ValueError) as exc:
            raise ScenarioError(E_MAP, f"map {name!r}: {exc}", *_locate(text, f"maps.{name}")) from None
    return maps


def _build_extension(R: FiniteRing, maps: dict, raw: dict, text: str) -> ExtensionSpec:
    if "catalog" in raw:
        try:
            ext = build_catalog_example(raw["catalog"], raw.get("params", {}))
        except (CatalogError, PresentationError, KeyError, ValueError) as exc:
            raise ScenarioError(E_EXTENSION, str(exc), *_locate(text, "catalog")) from None
        if ext.ring.to_tables() != R.to_tables():
            raise ScenarioError(E_EXTENSION, "catalog extension is over a different ring than [ring]",
                                *_locate(text, "catalog"))
        return ext
    sig_names = raw.get("sigmas")
    if not isinstance(sig_names, list) or not sig_names:
        raise ScenarioError(E_SCHEMA, "extension needs a nonempty 'sigmas' array", *_locate(text, "[extension]"))
    del_names = raw.get("deltas", ["zero"] * len(sig_names))

    def ref(name: str, kind: type) -> Any:
        m = maps.get(name)
        if m is None:
            raise ScenarioError(E_MAP_REF, f"unresolved map reference {name!r}", *_locate(text, f'"{name}"'))
        if not isinstance(m, kind):
            raise ScenarioError(E_MAP_REF, f"map {name!r} is not a {kind.__name__}", *_locate(text, f'"{name}"'))
        return m

    sigmas = [ref(s, RingMap) for s in sig_names]
    deltas = []
    for s, d in zip(sigmas, del_names):
        if d == "zero":
            deltas.append(zero_derivation(R, s))
        else:
            deltas.append(ref(d, SigmaDerivation))
    n = len(sigmas)
    rels = {}
    for entry in raw.get("relations", []):
        pair = entry.get("pair")
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(k, int) for k in pair)):
            raise ScenarioError(E_SCHEMA, f"relation pair {pair!r} must be [i, j]", *_locate(text, "pair"))
        i, j = pair[0] - 1, pair[1] - 1
        linear = entry.get("linear", [R.zero] * n)
        rels[(i, j)] = Relation(_element(R, entry.get("d", R.one)), _element(R, entry.get("r0", R.zero)),
                                tuple(_element(R, c) for c in linear))
    try:
        return ExtensionSpec(R, sigmas, deltas, rels, name=raw.get("name", "A"),
                             variables=raw.get("variables"))
    except PresentationError as exc:
        raise ScenarioError(E_EXTENSION, str(exc), *_locate(text, "[extension]")) from None


def _check_task(task: dict, k: int, ext: ExtensionSpec | None, text: str) -> Task:
    op = task.get("op")
    where = _locate(text, f'"{op}"') if isinstance(op, str) else (0, 0)
    if op not in TASK_OPS:
        raise ScenarioError(E_TASK, f"task {k + 1}: unknown op {op!r}", *where)
    params = {key: v for key, v in task.items() if key != "op"}
    for key in ("degree", "middle_degree", "trials", "seed", "degree_bound"):
        if key in params and (not isinstance(params[key], int) or params[key] < 0):
            raise ScenarioError(E_BOUNDS, f"task {k + 1}: {key} must be a nonnegative integer",
                                *_locate(text, key))
    bounds = params.get("bounds", {})
    if not isinstance(bounds, dict):
        raise ScenarioError(E_SCHEMA, f"task {k + 1}: bounds must be a table", *where)
    for key, v in bounds.items():
        if key not in ("gen_degree", "middle_degree", "target_degree", "witness_degree"):
            raise ScenarioError(E_BOUNDS, f"task {k + 1}: unknown bound {key!r}", *_locate(text, key))
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ScenarioError(E_BOUNDS, f"task {k + 1}: bound {key} must be a nonnegative integer",
                                *_locate(text, key))
    if op == "check" and params.get("prop") not in CHECK_PROPS:
        raise ScenarioError(E_TASK, f"task {k + 1}: unknown property {params.get('prop')!r}",
                            *_locate(text, "prop"))
    if op == "check" and params.get("mode", "exhaustive") not in ("exhaustive", "random"):
        raise ScenarioError(E_TASK, f"task {k + 1}: mode must be exhaustive or random", *_locate(text, "mode"))
    if op == "ac":
        if params.get("side", "right") not in ("right", "left"):
            raise ScenarioError(E_TASK, f"task {k + 1}: side must be right or left", *_locate(text, "side"))
        if params.get("strategy", "heuristic") not in ("heuristic", "exhaustive", "sweep"):
            raise ScenarioError(E_TASK, f"task {k + 1}: unknown strategy", *_locate(text, "strategy"))
        if ext is not None:
            for gens in [params.get("generators", [])] + [params.get("candidates", [])]:
                for f in gens:
                    parse_poly(ext, f)
    if op == "theorems":
        for s in params.get("suites", []):
            if s not in SUITE_IDS:
                raise ScenarioError(E_TASK, f"task {k + 1}: unknown suite {s!r}", *_locate(text, s))
    if op in ("check", "ac", "theorems") and ext is None and not (op == "check" and params.get("prop") == "ring_ac"):
        raise ScenarioError(E_SCHEMA, f"task {k + 1}: {op} needs an [extension]", *where)
    return Task(op, params)


def parse_scenario(text: str) -> Scenario:
    """Parse and fully resolve a scenario; raises :class:`ScenarioError`."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        m = re.search(r"line (\d+), column (\d+)", str(exc))
        line, col = (int(m.group(1)), int(m.group(2))) if m else (0, 0)
        raise ScenarioError(E_SYNTAX, str(exc).split(" (at")[0], line, col) from None
    unknown = set(data) - {"name", "ring", "maps", "extension", "tasks", "output"}
    if unknown:
        key = sorted(unknown)[0]
        raise ScenarioError(E_SCHEMA, f"unknown top-level key {key!r}", *_locate(text, key))
    ring_desc = data.get("ring")
    if not isinstance(ring_desc, dict):
        raise ScenarioError(E_SCHEMA, "missing [ring] table", 1, 1)
    try:
        R = build_ring(ring_desc)
    except CapExceeded as exc:
        raise ScenarioError(E_RING, str(exc), *_locate(text, "[ring]")) from None
    except (ValueError, KeyError, TypeError) as exc:
        msg = str(exc) if "constructor" in str(exc) else f"bad ring descriptor: {exc}"
        if "unknown ring constructor" in msg:
            pos = _locate(text, f'"{ring_desc.get("kind")}"')
        else:
            pos = _locate(text, "[ring]")
        raise ScenarioError(E_RING, msg, *pos) from None
    raw_maps = data.get("maps", {})
    if not isinstance(raw_maps, dict) or not all(isinstance(v, dict) for v in raw_maps.values()):
        raise ScenarioError(E_SCHEMA, "[maps] entries must be tables", *_locate(text, "maps"))
    maps = _resolve_maps(R, raw_maps, text)
    ext = _build_extension(R, maps, data["extension"], text) if "extension" in data else None
    if ext is not None:
        ext.name = data.get("name", ext.name)
        R = ext.ring
    raw_tasks = data.get("tasks", [])
    if not isinstance(raw_tasks, list):
        raise ScenarioError(E_SCHEMA, "tasks must be an array of tables", *_locate(text, "tasks"))
    tasks = [_check_task(t, k, ext, text) for k, t in enumerate(raw_tasks)]
    output = data.get("output", {})
    if output.get("format", "machine") not in ("machine", "human"):
        raise ScenarioError(E_SCHEMA, "output format must be machine or human", *_locate(text, "format"))
    return Scenario(data, R, maps, ext, tasks, output)


def load_scenario(path) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())


# ---------------------------------------------------------------------------
# canonical emission

_BARE = re.compile(r"^[A-Za-z0-9_-]+$")


def _key(k: str) -> str:
    return k if _BARE.match(k) else json.dumps(k)


def _value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    if isinstance(v, list):
        return "[" + ", ".join(_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{_key(k)} = {_value(x)}" for k, x in v.items()) + "}"
    raise TypeError(f"cannot emit {type(v).__name__}")


def _table(header: str, body: dict, skip: tuple = ()) -> list[str]:
    lines = [header] if header else []
    lines += [f"{_key(k)} = {_value(v)}" for k, v in body.items() if k not in skip]
    return lines


def emit_scenario(scenario: Scenario | dict) -> str:
    """Canonical TOML text: fixed section order, source key order inside sections."""
    data = scenario.data if isinstance(scenario, Scenario) else scenario
    blocks: list[list[str]] = []
    if "name" in data:
        blocks.append([f"name = {_value(data['name'])}"])
    blocks.append(_table("[ring]", data["ring"]))
    for name, desc in data.get("maps", {}).items():
        blocks.append(_table(f"[maps.{_key(name)}]", desc))
    if "extension" in data:
        ext = data["extension"]
        blocks.append(_table("[extension]", ext, skip=("relations",)))
        for rel in ext.get("relations", []):
            blocks.append(_table("[[extension.relations]]", rel))
    for task in data.get("tasks", []):
        blocks.append(_table("[[tasks]]", task))
    if "output" in data:
        blocks.append(_table("[output]", data["output"]))
    return "\n\n".join("\n".join(b) for b in blocks) + "\n"
