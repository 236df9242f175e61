"""Command line front end: config parsing, task orchestration and regression diffs.

    workbench run <config.json | example-name> [--maxdeg N] [--out report.json] [--timing]
    workbench examples [--write DIR]
    workbench regress <config.json | example-name | --all>

Exit codes: 0 success, 1 config error, 2 computation error, 3 regression failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List, Optional, Sequence

from . import catalog
from .covariants import (check_generation, compare_series, expand_definitions, hilbert_function,
                         minimal_generators, verify_identity)
from .errors import ConfigError, InvalidParams, NotAGroup, UnsupportedFamily, WorkbenchError
from .freealg import Word, substitute
from .grading import Grading, hdet, validate_grading, verify_resolution_euler, word_degree
from .groups import build as build_group
from .ideals import (TruncatedIdeal, block_suffix_cover_certificate, build_ideal,
                     member_via_equivalence, suffix_cover_certificate)
from .pertinency import pertinency_report, spanning_words_check
from .rewrite import Presentation, builtin, complete, custom
from .scalars import QQ_FIELD, ScalarField

__all__ = ["AnalysisConfig", "load_config", "run", "regression", "main"]

TASK_ORDER = ("validate", "hdet", "covariants", "hilbert", "verify-identities",
              "memberships", "pertinency")


@dataclass
class AnalysisConfig:
    name: str
    algebra: dict
    group: dict
    grading: Dict[str, str]
    N: int = 16
    tasks: List[str] = dc_field(default_factory=lambda: ["validate"])
    description: str = ""
    series: Optional[dict] = None
    definitions: Dict[str, str] = dc_field(default_factory=dict)
    identities: List[dict] = dc_field(default_factory=list)
    coefficients: List[dict] = dc_field(default_factory=list)
    memberships: List[dict] = dc_field(default_factory=list)
    span_check: List[str] = dc_field(default_factory=list)
    expected: Optional[dict] = None


_KNOWN_KEYS = {"name", "description", "algebra", "group", "grading", "N", "tasks", "series",
               "definitions", "identities", "coefficients", "memberships", "span_check",
               "expected"}


def load_config(obj: dict, maxdeg: Optional[int] = None) -> AnalysisConfig:
    """Validate a config dictionary; errors carry the offending key path."""
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object")
    unknown = sorted(set(obj) - _KNOWN_KEYS)
    if unknown:
        raise ConfigError(f"unknown keys {unknown}", "config")
    for key in ("algebra", "group", "grading"):
        if key not in obj:
            raise ConfigError("missing required key", key)
    if not isinstance(obj["algebra"], dict):
        raise ConfigError("must be an object", "algebra")
    if not isinstance(obj["grading"], dict) or not obj["grading"]:
        raise ConfigError("must be a nonempty object mapping generators to group elements", "grading")
    N = obj.get("N", 16) if maxdeg is None else maxdeg
    if not isinstance(N, int) or N < 4:
        raise ConfigError(f"truncation degree must be an integer >= 4, got {N!r}", "N")
    tasks = obj.get("tasks", ["validate"])
    if not isinstance(tasks, list) or not tasks:
        raise ConfigError("task list must be nonempty", "tasks")
    for i, t in enumerate(tasks):
        if t not in TASK_ORDER:
            raise ConfigError(f"unknown task {t!r}; expected one of {list(TASK_ORDER)}", f"tasks[{i}]")
    if "verify-identities" in tasks and not (obj.get("identities") or obj.get("coefficients")):
        raise ConfigError("verify-identities needs 'identities' or 'coefficients'", "tasks")
    if "memberships" in tasks and not obj.get("memberships"):
        raise ConfigError("memberships task needs a 'memberships' list", "tasks")
    expected = obj.get("expected")
    if expected is not None and not isinstance(expected, dict):
        raise ConfigError("must be an object", "expected")
    return AnalysisConfig(
        name=str(obj.get("name", "unnamed")), algebra=obj["algebra"], group=obj["group"],
        grading={str(k): str(v) for k, v in obj["grading"].items()}, N=N,
        tasks=[t for t in TASK_ORDER if t in tasks], description=str(obj.get("description", "")),
        series=obj.get("series"), definitions=dict(obj.get("definitions") or {}),
        identities=list(obj.get("identities") or []), coefficients=list(obj.get("coefficients") or []),
        memberships=list(obj.get("memberships") or []), span_check=list(obj.get("span_check") or []),
        expected=expected)


# ---------------------------------------------------------------------------
# building blocks


def _field(spec: dict) -> ScalarField:
    params = spec.get("parameters") or []
    algebraic = spec.get("algebraic")
    if not params and not algebraic:
        return QQ_FIELD
    return ScalarField(params, tuple(algebraic) if algebraic else None)


def build_presentation(spec: dict, N: int) -> Presentation:
    try:
        field = _field(spec)
        if "relations" in spec:
            pres = custom(spec.get("generators") or [], spec["relations"], field,
                          int(spec.get("gkdim", 3)))
        else:
            family = spec.get("family")
            if family is None:
                raise ConfigError("needs 'family' or 'generators'/'relations'", "algebra")
            params = dict(spec.get("params") or {})
            if family == "downup" and "beta" in params and field.parse(str(params["beta"])).is_zero():
                raise ConfigError("beta = 0 is excluded: the down-up algebra is noetherian "
                                  "if and only if beta != 0", "algebra.params.beta")
            pres = builtin(family, params, field)
    except InvalidParams as exc:
        raise ConfigError(str(exc), "algebra") from exc
    if pres.status != "complete":
        pres = complete(pres, N)
    return pres


def build_grading(cfg: AnalysisConfig, pres: Presentation) -> Grading:
    try:
        G = build_group(cfg.group)
    except (KeyError, TypeError, ValueError, NotAGroup) as exc:
        raise ConfigError(f"cannot build group: {exc}", "group") from exc
    for gen, elt in cfg.grading.items():
        if gen not in pres.alphabet.names:
            raise ConfigError(f"unknown generator {gen!r}", f"grading.{gen}")
        if elt not in G.names:
            raise ConfigError(f"group {G.label} has no element {elt!r}", f"grading.{gen}")
    missing = [a for a in pres.alphabet.names if a not in cfg.grading]
    if missing:
        raise ConfigError(f"no degree for generators {missing}", "grading")
    return Grading.from_names(pres, G, cfg.grading)


def _word(pres: Presentation, text: str, where: str) -> Word:
    try:
        p = pres.poly(str(text))
    except WorkbenchError as exc:
        raise ConfigError(str(exc), where) from exc
    items = list(p.terms.items())
    if len(items) != 1 or items[0][1] != 1:
        raise ConfigError(f"{text!r} is not a single word", where)
    return items[0][0]


def _hdet_word(pres: Presentation) -> Word:
    if pres.family == "downup":
        return (0, 0, 1, 1)
    return (0, 0, 0, 0)


# ---------------------------------------------------------------------------
# tasks


def _task_validate(cfg, pres, grading, ctx):
    check = validate_grading(pres, grading)
    out = check.to_json()
    if not check.valid:
        raise ConfigError("grading does not make the relations homogeneous: "
                          + "; ".join(map(str, check.violations)), "grading")
    return out


def _task_hdet(cfg, pres, grading, ctx):
    G = grading.group
    try:
        h, trivial = hdet(pres, grading)
    except UnsupportedFamily as exc:
        return {"supported": False, "reason": str(exc)}
    w = _hdet_word(pres)
    out = {"supported": True, "element": G.name(h), "trivial": trivial,
           "word": pres.alphabet.format(w),
           "matches_word_degree": word_degree(grading, w) == h}
    deg = min(cfg.N, 10)
    witness: list = []
    out["euler"] = {"degree": deg,
                    "passes": verify_resolution_euler(pres, grading, deg, witness=witness)}
    if witness:
        out["euler"]["first_failure"] = list(witness[0])
    return out


def _task_covariants(cfg, pres, grading, ctx):
    witness: list = []
    gens = minimal_generators(pres, grading, cfg.N, witness)
    fmt = pres.alphabet.format
    return {
        "generators": [{"word": fmt(g), "degree": len(g)} for g in gens],
        "generation_checked": check_generation(pres, grading, gens, cfg.N),
        "truncation": cfg.N,
        "note": f"minimality is relative to degrees <= {cfg.N}",
        "degree_table": [{"degree": n, "products_rank": r, "dim": d} for n, r, d in witness],
    }


def _task_hilbert(cfg, pres, grading, ctx):
    values = hilbert_function(pres, grading, cfg.N)
    ctx["hilbert"] = values
    out: Dict[str, Any] = {"values": values, "truncation": cfg.N}
    if cfg.series:
        ok, first = compare_series(values, cfg.series["numerator"], cfg.series["denominator"])
        out["series"] = {"numerator": cfg.series["numerator"],
                         "denominator": cfg.series["denominator"],
                         "match": ok, "first_mismatch": first}
    return out


def _task_identities(cfg, pres, grading, ctx):
    results = []
    for i, ident in enumerate(cfg.identities):
        try:
            holds = verify_identity(pres, ident["lhs"], ident["rhs"], cfg.definitions)
        except KeyError as exc:
            raise ConfigError(f"missing {exc}", f"identities[{i}]") from exc
        results.append({"lhs": ident["lhs"], "rhs": ident["rhs"], "holds": holds})
    coeffs = []
    for i, spec in enumerate(cfg.coefficients):
        where = f"coefficients[{i}]"
        target = build_presentation(spec["target"], cfg.N)
        src = pres.poly(expand_definitions(spec["poly"], cfg.definitions))
        images = {k: target.poly(v) for k, v in spec["substitute"].items()}
        image = substitute(src, images, target.alphabet)
        target.require(max(image.degree(), 0))
        value = target.nf(image).coefficient(target.alphabet.format(_word(target, spec["word"], where)))
        entry = {"poly": spec["poly"], "word": spec["word"], "coefficient": str(value)}
        if "value" in spec:
            entry["expected"] = str(spec["value"])
            entry["holds"] = (value - target.field.parse(str(spec["value"]))).is_zero()
        coeffs.append(entry)
    checks = [r["holds"] for r in results] + [c["holds"] for c in coeffs if "holds" in c]
    return {"identities": results, "coefficients": coeffs, "all_hold": all(checks)}


def _ideal(cfg, pres, grading, ctx) -> TruncatedIdeal:
    if "J" not in ctx:
        ctx["J"] = build_ideal(pres, grading, cfg.N)
    return ctx["J"]


def _task_memberships(cfg, pres, grading, ctx):
    fmt = pres.alphabet.format
    certified: Dict[str, Word] = {}
    members: List[Word] = []
    results = []
    for i, spec in enumerate(cfg.memberships):
        where = f"memberships[{i}]"
        method = spec.get("method", "linear_algebra")
        name = spec.get("name", spec.get("word", f"#{i}"))
        entry: Dict[str, Any] = {"name": name, "method": method}
        if method == "block_suffix_cover":
            segs = []
            for seg in spec.get("segments") or []:
                if isinstance(seg, list):
                    segs.append([(_word(pres, u, where), int(e)) for u, e in seg])
                else:
                    segs.append(_word(pres, seg, where))
            cert = block_suffix_cover_certificate(pres, grading, segs)
            w = cert["word"] if cert else ()
            entry.update({"degree": len(w) if cert else None, "member": cert is not None,
                          "witness": cert["suffixes"] if cert else None})
        else:
            if "word" not in spec:
                raise ConfigError("missing 'word'", where)
            w = _word(pres, spec["word"], where)
            entry.update({"word": fmt(w), "degree": len(w)})
            if method == "linear_algebra":
                J = _ideal(cfg, pres, grading, ctx)
                if len(w) > J.N:
                    raise ConfigError(f"degree {len(w)} exceeds the truncation {J.N}", where)
                ok, data = J.contains(w)
                entry["member"] = bool(ok)
                if ok and data:
                    piv = next(iter(data))
                    entry["provenance"] = J.explain(len(piv), piv)
            elif method == "suffix_cover":
                cert = suffix_cover_certificate(grading, w)
                entry.update({"member": cert is not None,
                              "witness": [list(c) for c in cert] if cert else None})
            elif method == "equivalence":
                ref = spec.get("certified")
                if ref not in certified:
                    raise ConfigError(f"no earlier certified membership named {ref!r}", where)
                left = _word(pres, spec["left"], where) if spec.get("left") else ()
                right = _word(pres, spec["right"], where) if spec.get("right") else ()
                ok, lam = member_via_equivalence(w, certified[ref], pres, left, right)
                entry.update({"member": ok, "certified_by": ref,
                              "multipliers": {"left": fmt(left) if left else "1",
                                              "right": fmt(right) if right else "1"},
                              "scalar": str(lam) if ok else None})
            else:
                raise ConfigError(f"unknown method {method!r}", where)
        if entry["member"]:
            certified[name] = w
            members.append(w)
        results.append(entry)
    ctx["members"] = members
    return {"results": results, "all_hold": all(r["member"] for r in results)}


def _task_pertinency(cfg, pres, grading, ctx):
    J = _ideal(cfg, pres, grading, ctx)
    report = pertinency_report(pres, grading, cfg.N, members=ctx.get("members", ()), J=J)
    out = report.to_json()
    if cfg.span_check:
        forbidden = [_word(pres, w, f"span_check[{i}]") for i, w in enumerate(cfg.span_check)]
        out["span_check"] = spanning_words_check(pres, J, forbidden)
    ctx["quotient_dims"] = out["growth"]["dims"]
    return out


_TASKS = {
    "validate": _task_validate,
    "hdet": _task_hdet,
    "covariants": _task_covariants,
    "hilbert": _task_hilbert,
    "verify-identities": _task_identities,
    "memberships": _task_memberships,
    "pertinency": _task_pertinency,
}


class TaskError(WorkbenchError):
    """A computation failed inside a named task (CLI exit code 2)."""


def run(config, maxdeg: Optional[int] = None, timing: bool = False) -> dict:
    """Execute the configured tasks in dependency order and return the report."""
    cfg = config if isinstance(config, AnalysisConfig) else load_config(config, maxdeg)
    pres = build_presentation(cfg.algebra, cfg.N)
    grading = build_grading(cfg, pres)
    G = grading.group
    report: Dict[str, Any] = {
        "name": cfg.name,
        "description": cfg.description,
        "algebra": {"family": pres.family,
                    "params": {k: str(v) for k, v in pres.params.items()},
                    "rules": [str(r) for r in pres.rules], "status": pres.status},
        "group": {"label": G.label, "order": G.order},
        "grading": grading.describe(),
        "truncation": cfg.N,
        "tasks": {},
    }
    ctx: Dict[str, Any] = {}
    times = {}
    tasks = list(cfg.tasks)
    if "validate" not in tasks:
        tasks.insert(0, "validate")
    for task in tasks:
        start = time.perf_counter()
        try:
            report["tasks"][task] = _TASKS[task](cfg, pres, grading, ctx)
        except ConfigError:
            raise
        except WorkbenchError as exc:
            raise TaskError(f"task {task}: {exc}") from exc
        times[task] = round(time.perf_counter() - start, 3)
    if timing:
        report["timing_seconds"] = times
    return report


# ---------------------------------------------------------------------------
# regression


def _norm_words(pres: Presentation, words: Sequence[str]) -> List[str]:
    return sorted(pres.alphabet.format(_word(pres, w, "expected")) for w in words)


def _seq_diff(key: str, got: Sequence, want: Sequence) -> Optional[dict]:
    for n, (a, b) in enumerate(zip(got, want)):
        if a != b:
            return {"key": key, "first_mismatch_degree": n, "got": a, "expected": b}
    if len(got) < len(want):
        return {"key": key, "first_mismatch_degree": len(got), "got": None, "expected": want[len(got)]}
    return None


def regression(config: dict, report: Optional[dict] = None) -> dict:
    """Structural diff of a report against the config's expected block."""
    expected = config.get("expected") or {}
    if not expected:
        return {"name": config.get("name"), "pass": True, "diffs": [], "note": "no expected block"}
    if report is None:
        report = run(config)
    cfg = load_config(config)
    pres = build_presentation(cfg.algebra, cfg.N)
    t = report["tasks"]
    pert = t.get("pertinency", {})
    got: Dict[str, Any] = {
        "valid": t.get("validate", {}).get("valid"),
        "hdet_trivial": t.get("hdet", {}).get("trivial"),
        "hdet_matches_word": t.get("hdet", {}).get("matches_word_degree"),
        "euler_passes": t.get("hdet", {}).get("euler", {}).get("passes"),
        "generation_checked": t.get("covariants", {}).get("generation_checked"),
        "series_match": t.get("hilbert", {}).get("series", {}).get("match"),
        "identities_all_hold": t.get("verify-identities", {}).get("all_hold"),
        "memberships_all_hold": t.get("memberships", {}).get("all_hold"),
        "pty_ge_2": pert.get("pty", {}).get("pty_ge_2"),
        "pty_eq_3": pert.get("pty", {}).get("pty_eq_3"),
        "isolated_singularity": pert.get("isolated_singularity"),
        "growth": pert.get("growth", {}).get("classification"),
        "certificate_kind": (pert.get("certificate") or {}).get("kind"),
        "span_reproduced": pert.get("span_check", {}).get("reproduced"),
    }
    diffs = []
    for key, want in expected.items():
        if key == "generators":
            have = sorted(g["word"] for g in t.get("covariants", {}).get("generators", []))
            if have != _norm_words(pres, want):
                diffs.append({"key": key, "got": have, "expected": _norm_words(pres, want)})
        elif key == "hilbert":
            d = _seq_diff(key, t.get("hilbert", {}).get("values", []), want)
            if d:
                diffs.append(d)
        elif key == "quotient_dims":
            d = _seq_diff(key, pert.get("growth", {}).get("dims", []), want)
            if d:
                diffs.append(d)
        elif key == "dims_bound":
            dims = pert.get("growth", {}).get("dims", [])
            lo = min(8, len(dims) - 1)
            worst = max(dims[lo:], default=None)
            if worst is None or worst > want:
                diffs.append({"key": key, "got": worst, "expected": want,
                              "window": [lo, len(dims) - 1]})
        elif key in got:
            if got[key] != want:
                diffs.append({"key": key, "got": got[key], "expected": want})
        else:
            diffs.append({"key": key, "got": None, "expected": want, "note": "unknown expectation"})
    return {"name": config.get("name"), "pass": not diffs, "diffs": diffs}


# ---------------------------------------------------------------------------
# entry point


def _load(source: str) -> dict:
    if os.path.exists(source):
        try:
            with open(source) as fh:
                return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON: {exc}", source) from exc
    try:
        return catalog.get_example(source)
    except KeyError:
        raise ConfigError("no such file or built-in example", source) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _summary(report: dict) -> str:
    lines = [f"{report['name']}: {report['algebra']['family']} with {report['group']['label']} "
             f"(order {report['group']['order']}), truncation {report['truncation']}"]
    t = report["tasks"]
    if "hdet" in t and t["hdet"].get("supported"):
        lines.append(f"  hdet = {t['hdet']['element']} (trivial: {t['hdet']['trivial']})")
    if "covariants" in t:
        lines.append("  generators: " + ", ".join(g["word"] for g in t["covariants"]["generators"]))
    if "hilbert" in t:
        lines.append("  hilbert: " + " ".join(map(str, t["hilbert"]["values"])))
    if "verify-identities" in t:
        lines.append(f"  identities hold: {t['verify-identities']['all_hold']}")
    if "memberships" in t:
        lines.append(f"  memberships hold: {t['memberships']['all_hold']}")
    if "pertinency" in t:
        p = t["pertinency"]
        lines.append(f"  dim (A/J)_n: {' '.join(map(str, p['growth']['dims']))} "
                     f"[{p['growth']['classification']}]")
        lines.append(f"  Pty >= 2: {p['pty']['pty_ge_2']}, Pty = 3: {p['pty']['pty_eq_3']}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="workbench", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="run one analysis")
    p_run.add_argument("config", help="config JSON file or built-in example name")
    p_run.add_argument("--maxdeg", type=int, default=None, help="override the truncation degree")
    p_run.add_argument("--out", default=None, help="report path; figures and CSV go beside it")
    p_run.add_argument("--timing", action="store_true", help="include per-task wall time")
    p_ex = sub.add_parser("examples", help="list built-in example configs")
    p_ex.add_argument("--write", metavar="DIR", default=None, help="also write each config as JSON")
    p_reg = sub.add_parser("regress", help="compare results with the expected block")
    p_reg.add_argument("config", nargs="?", help="config JSON file or built-in example name")
    p_reg.add_argument("--all", action="store_true", help="run every built-in example")
    args = parser.parse_args(argv)

    try:
        if args.command == "examples":
            for entry in catalog.list_examples():
                print(f"{entry['name']:24s} {entry['description']}")
            if args.write:
                os.makedirs(args.write, exist_ok=True)
                for entry in catalog.CATALOG:
                    with open(os.path.join(args.write, entry["name"] + ".json"), "w") as fh:
                        fh.write(_dump(entry) + "\n")
            return 0
        if args.command == "run":
            cfg = _load(args.config)
            report = run(cfg, args.maxdeg, args.timing)
            if args.out:
                from .report import write_report
                for path in write_report(report, args.out):
                    print(f"wrote {path}", file=sys.stderr)
            else:
                print(_dump(report))
            print(_summary(report), file=sys.stderr)
            return 0
        if args.command == "regress":
            if args.all:
                configs = [catalog.get_example(e["name"]) for e in catalog.list_examples()]
            elif args.config:
                configs = [_load(args.config)]
            else:
                raise ConfigError("give a config or --all", "regress")
            failed = 0
            for cfg in configs:
                res = regression(cfg)
                print(f"{'PASS' if res['pass'] else 'FAIL'} {res['name']}")
                for d in res["diffs"]:
                    print("  " + json.dumps(d, sort_keys=True))
                failed += not res["pass"]
            return 3 if failed else 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except WorkbenchError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
