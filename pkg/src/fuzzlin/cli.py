"""Batch command-line front end.

::

    fuzzlin rank      [--input FILE] [--format text|json]
    fuzzlin defuzzify [--method cog|cog-of-cogs]
    fuzzlin assess    [gpa|tfn|tpfn|all]
    fuzzlin lp        [--trace]
    fuzzlin flp       [--refuzz tfn|tpfn --dof D --alpha x1=3.5 --b x1=0.2]

Input is a JSON document read from ``--input`` or standard input.  Exit
status: 0 on success, 1 on a domain error, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import assessment as asm
from .errors import DomainError, FuzzlinError, UnsupportedFormError
from .flp import CRISP_ZERO, RefuzzSpec, solve_fuzzy
from .fuzzy import TFN, cog_of_cogs, cog_tfn, cog_tpfn, dof, rank
from .jsonio import (
    InputError,
    flp_from_json,
    fuzzy_from_json,
    fuzzy_to_json,
    groups_from_json,
    lp_from_json,
    lp_to_json,
    refuzz_from_json,
    round_sig,
)
from .simplex import FEAS_TOL, solve

__all__ = ["CliConfig", "Report", "run", "emit_tableau_trace", "main"]

COMMANDS = ("rank", "defuzzify", "assess", "lp", "flp")

# published values are printed to two decimals
PUBLISHED_TOL = 0.01


@dataclass
class CliConfig:
    command: str
    input: Optional[str] = None
    format: str = "text"
    tol: float = FEAS_TOL
    trace: bool = False
    method: str = "cog"
    assess: str = "all"
    refuzz: Optional[str] = None
    dof: Optional[float] = None
    alpha: dict = field(default_factory=dict)
    b: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")


@dataclass
class Report:
    command: str
    results: object = None
    warnings: list = field(default_factory=list)
    exit_status: int = 0
    error: Optional[str] = None

    def warn(self, code, message):
        self.warnings.append({"code": code, "message": message})

    @property
    def codes(self):
        return [w["code"] for w in self.warnings]

    def to_json(self):
        doc = {
            "command": self.command,
            "status": "ok" if self.exit_status == 0 else "error",
            "results": self.results,
            "warnings": self.warnings,
        }
        if self.error:
            doc["error"] = self.error
        return json.dumps(round_sig(doc), indent=2, ensure_ascii=False) + "\n"


# -- commands ---------------------------------------------------------------------

def _rank(config, doc, report):
    if isinstance(doc, dict) and "numbers" in doc:
        items = doc["numbers"]
        if not isinstance(items, list):
            raise InputError("$.numbers", "expected an array")
        fs = [fuzzy_from_json(v, f"$.numbers[{i}]") for i, v in enumerate(items)]
        return {"ranks": [{**fuzzy_to_json(f), "rank": rank(f), "dof": dof(f)} for f in fs]}
    f = fuzzy_from_json(doc)
    return {**fuzzy_to_json(f), "rank": rank(f), "dof": dof(f)}


def _defuzzify_one(f, method):
    if isinstance(f, TFN):
        if method != "cog":
            raise DomainError("cog-of-cogs applies to trapezoidal numbers only")
        p = cog_tfn(f)
    elif method == "cog":
        p = cog_tpfn(f)
    else:
        p = cog_of_cogs(f)
    return {**fuzzy_to_json(f), "method": method, "x": p.x, "y": p.y}


def _defuzzify(config, doc, report):
    if isinstance(doc, dict) and "numbers" in doc:
        items = doc["numbers"]
        if not isinstance(items, list):
            raise InputError("$.numbers", "expected an array")
        return {"points": [_defuzzify_one(fuzzy_from_json(v, f"$.numbers[{i}]"), config.method)
                           for i, v in enumerate(items)]}
    return _defuzzify_one(fuzzy_from_json(doc), config.method)


def _check_published(report, group, key, computed, published):
    if key not in published:
        return
    expected = published[key]
    got = list(computed) if isinstance(computed, (tuple, list)) else [computed]
    want = expected if isinstance(expected, list) else [expected]
    if len(got) != len(want) or any(abs(g - w) > PUBLISHED_TOL for g, w in zip(got, want)):
        report.warn(
            "PAPER_ERRATUM",
            f"{group}: published {key} {expected} disagrees with recomputed "
            f"{[round(g, 4) for g in got] if len(got) > 1 else round(got[0], 4)}",
        )


def _assess(config, doc, report):
    scale, groups = groups_from_json(doc)
    what = config.assess
    out = []
    for name, dist, sheet, published in groups:
        entry = {"name": name}
        if sheet is not None:
            dist = asm.distribution_of_sheet(scale, sheet)
            entry["mean_score"] = asm.mean_score(sheet)
        entry["n"] = dist.n
        entry["distribution"] = dist.to_mapping()
        classification = {}
        if what in ("gpa", "all"):
            g = asm.gpa(dist)
            entry["gpa"] = g
            _check_published(report, name, "gpa", g, published)
        if what in ("tfn", "all"):
            m, x = asm.mean_performance_tfn(scale, dist)
            entry["tfn_mean"] = {"a": m.a, "b": m.b, "c": m.c, "x": x}
            classification["tfn"] = asm.classify_mean(scale, x).name
            _check_published(report, name, "tfn_mean", m.astuple(), published)
            _check_published(report, name, "tfn_x", x, published)
        if what in ("tpfn", "all"):
            if sheet is None:
                if what == "tpfn":
                    raise DomainError(f"{name}: TpFN assessment needs per-member scores")
            else:
                members = [(n, asm.member_tpfn(scale, s)) for n, s in sheet.members]
                p, x = asm.group_mean_tpfn([t for _, t in members])
                entry["members"] = [{"name": n, **dict(zip("abcd", t.astuple()))}
                                    for n, t in members]
                entry["tpfn_mean"] = {"a": p.a, "b": p.b, "c": p.c, "d": p.d, "x": x}
                classification["tpfn"] = asm.classify_mean(scale, x).name
                _check_published(report, name, "tpfn_mean", p.astuple(), published)
                _check_published(report, name, "tpfn_x", x, published)
        if classification:
            entry["classification"] = classification
        out.append(entry)
    return {"scale": scale.to_mapping(), "groups": out}


def emit_tableau_trace(solution):
    """Every tableau of a traced solve as JSON-ready dicts, in pivot order."""
    return [{"step": k, **t.to_dict()} for k, t in enumerate(solution.trace)]


def _solution_json(sol):
    doc = {"status": sol.status}
    if sol.optimal:
        doc["x"] = dict(zip(sol.names, sol.x))
        doc["objective"] = sol.objective
        doc["unique"] = sol.unique
    doc["pivots"] = sol.pivots
    if sol.message:
        doc["message"] = sol.message
    return doc


def _lp(config, doc, report):
    lp = lp_from_json(doc)
    sol = solve(lp, trace=config.trace, tol=config.tol)
    if sol.status == "unsupported_form":
        raise UnsupportedFormError(sol.message)
    out = _solution_json(sol)
    if lp.sense == "min":
        out["solved_via"] = "dual"
    if config.trace:
        out["trace"] = emit_tableau_trace(sol)
    return out


def _refuzz_spec(config, doc):
    if config.refuzz is not None:
        if config.dof is None:
            raise DomainError("--refuzz needs --dof")
        return RefuzzSpec(config.refuzz, config.dof, dict(config.alpha), dict(config.b))
    if isinstance(doc, dict) and doc.get("refuzz") is not None:
        spec = refuzz_from_json(doc["refuzz"])
        if config.dof is not None:
            spec = RefuzzSpec(spec.kind, config.dof, spec.alpha, spec.b)
        return spec
    return None


def _flp(config, doc, report):
    flp = flp_from_json(doc)
    spec = _refuzz_spec(config, doc)
    sol = solve_fuzzy(flp, spec, tol=config.tol)
    if sol.crisp.status == "unsupported_form":
        raise UnsupportedFormError(sol.crisp.message)
    out = {"crisp_lp": lp_to_json(sol.lp), "crisp": _solution_json(sol.crisp)}
    if config.trace:
        out["trace"] = emit_tableau_trace(sol.crisp)
    for code, message in sol.notes:
        report.warn(code, message)
    if sol.fuzzy_vars is not None:
        fuzzy = {}
        for name, f in sol.fuzzy_vars.items():
            item = fuzzy_to_json(f)
            if f is not CRISP_ZERO:
                item["rank"] = rank(f)
                item["dof"] = dof(f)
            fuzzy[name] = item
        out["refuzz"] = {"kind": spec.kind, "dof": spec.dof}
        out["fuzzy"] = fuzzy
        out["audit"] = [
            {"constraint": r.index + 1, "rel": r.rel, "worst_lhs": r.worst_lhs,
             "rhs": r.rhs, "violated": r.violated}
            for r in sol.audit.constraints
        ]
        published = doc.get("published", {}).get("fuzzy", {}) if isinstance(doc, dict) else {}
        for name, tup in published.items():
            f = fuzzy_from_json(tup, f"$.published.fuzzy.{name}")
            j = flp.names.index(name) if name in flp.names else None
            if j is None:
                continue
            R = sol.crisp.x[j]
            if abs(rank(f) - R) > 1e-6 or abs(dof(f) - spec.dof) > 1e-6:
                report.warn(
                    "PAPER_ERRATUM",
                    f"published {name} {list(f.astuple())} has rank {rank(f):.6g} and DoF "
                    f"{dof(f):.6g}; expected rank {R:.6g} and DoF {spec.dof:g}",
                )
    return out


_HANDLERS = {
    "rank": _rank,
    "defuzzify": _defuzzify,
    "assess": _assess,
    "lp": _lp,
    "flp": _flp,
}


def run(config: CliConfig, document) -> Report:
    """Execute one command on an already-parsed JSON document."""
    report = Report(config.command)
    try:
        report.results = _HANDLERS[config.command](config, document, report)
    except InputError as exc:
        report.exit_status = 2
        report.error = str(exc)
    except FuzzlinError as exc:
        report.exit_status = 1
        report.error = str(exc)
    return report


# -- text rendering -------------------------------------------------------------

def _fmt(v):
    if isinstance(v, float):
        return f"{v:.4f}"
    return str(v)


def _tuple(d, keys):
    return "(" + ", ".join(_fmt(d[k]) for k in keys) + ")"


def render_text(report: Report) -> str:
    r = report.results
    lines = []
    cmd = report.command
    if cmd in ("rank", "defuzzify"):
        items = r.get("ranks") or r.get("points") or [r]
        for it in items:
            keys = "abc" if it["kind"] == "tfn" else "abcd"
            if cmd == "rank":
                lines.append(f"{it['kind'].upper()} {_tuple(it, keys)}: rank {_fmt(it['rank'])}, "
                             f"DoF {_fmt(it['dof'])}")
            else:
                lines.append(f"{it['kind'].upper()} {_tuple(it, keys)}: {it['method']} "
                             f"X = {_fmt(it['x'])}, Y = {_fmt(it['y'])}")
    elif cmd == "assess":
        for g in r["groups"]:
            lines.append(f"{g['name']} (n = {g['n']})")
            if "mean_score" in g:
                lines.append(f"  mean score   {_fmt(g['mean_score'])}")
            if "gpa" in g:
                lines.append(f"  GPA          {_fmt(g['gpa'])}")
            if "tfn_mean" in g:
                lines.append(f"  TFN mean     {_tuple(g['tfn_mean'], 'abc')}  X = "
                             f"{_fmt(g['tfn_mean']['x'])} ({g['classification']['tfn']})")
            if "tpfn_mean" in g:
                lines.append(f"  TpFN mean    {_tuple(g['tpfn_mean'], 'abcd')}  X = "
                             f"{_fmt(g['tpfn_mean']['x'])} ({g['classification']['tpfn']})")
    elif cmd in ("lp", "flp"):
        sol = r["crisp"] if cmd == "flp" else r
        lines.append(f"status: {sol['status']}")
        if sol["status"] == "optimal":
            lines.append("x = " + ", ".join(f"{k} = {_fmt(v)}" for k, v in sol["x"].items()))
            lines.append(f"objective = {_fmt(sol['objective'])}"
                         + (" (unique)" if sol["unique"] else ""))
        lines.append(f"pivots: {sol['pivots']}")
        for step in r.get("trace", []):
            lines.append(f"tableau {step['step']}: basis {', '.join(step['basis'])}")
            lines.append("  " + " ".join(f"{c:>9}" for c in step["columns"]))
            for row in step["rows"] + [step["net_evaluation"]]:
                lines.append("  " + " ".join(f"{v:9.4f}" for v in row))
        if "fuzzy" in r:
            for name, f in r["fuzzy"].items():
                if f["kind"] == "crisp":
                    lines.append(f"{name} = 0 (clamped)")
                else:
                    keys = "abc" if f["kind"] == "tfn" else "abcd"
                    lines.append(f"{name} = {_tuple(f, keys)}")
            for a in r["audit"]:
                flag = "VIOLATED" if a["violated"] else "ok"
                lines.append(f"constraint {a['constraint']}: worst case {_fmt(a['worst_lhs'])} "
                             f"{a['rel']} {_fmt(a['rhs'])}  {flag}")
    for w in report.warnings:
        lines.append(f"warning [{w['code']}]: {w['message']}")
    return "\n".join(lines) + "\n"


# -- entry point ----------------------------------------------------------------

def _keyval(text):
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected var=value, got {text!r}")
    try:
        return name, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {value!r}")


def _parser():
    p = argparse.ArgumentParser(prog="fuzzlin", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--input", "-i", help="JSON input file (default: standard input)")
        sp.add_argument("--format", "-f", choices=("text", "json"), default="text")
        sp.add_argument("--tol", type=float, default=FEAS_TOL,
                        help="feasibility tolerance (default: %(default)g)")
        return sp

    common(sub.add_parser("rank", help="rank TFNs/TpFNs"))
    sp = common(sub.add_parser("defuzzify", help="centroid defuzzification"))
    sp.add_argument("--method", choices=("cog", "cog-of-cogs"), default="cog")
    sp = common(sub.add_parser("assess", help="group assessment from grades or scores"))
    sp.add_argument("what", nargs="?", choices=("gpa", "tfn", "tpfn", "all"), default="all")
    sp = common(sub.add_parser("lp", help="solve a canonical-form LP"))
    sp.add_argument("--trace", action="store_true", help="include every simplex tableau")
    sp = common(sub.add_parser("flp", help="solve a fuzzy LP"))
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--refuzz", choices=("tfn", "tpfn"))
    sp.add_argument("--dof", type=float)
    sp.add_argument("--alpha", type=_keyval, action="append", default=[], metavar="VAR=VALUE")
    sp.add_argument("--b", type=_keyval, action="append", default=[], metavar="VAR=VALUE")
    return p


def _read_document(path):
    label = path or "<stdin>"
    try:
        if path is None:
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(label, exc.strerror or str(exc))
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{label}:{exc.lineno}:{exc.colno}", exc.msg)


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        config = CliConfig(
            command=args.command,
            input=args.input,
            format=args.format,
            tol=args.tol,
            trace=getattr(args, "trace", False),
            method=getattr(args, "method", "cog"),
            assess=getattr(args, "what", "all"),
            refuzz=getattr(args, "refuzz", None),
            dof=getattr(args, "dof", None),
            alpha=dict(getattr(args, "alpha", [])),
            b=dict(getattr(args, "b", [])),
        )
    except ValueError as exc:
        print(f"fuzzlin: error: {exc}", file=sys.stderr)
        return 2
    try:
        document = _read_document(config.input)
    except InputError as exc:
        print(f"fuzzlin: malformed input: {exc}", file=sys.stderr)
        return 2
    report = run(config, document)
    if report.exit_status != 0:
        kind = "malformed input" if report.exit_status == 2 else "error"
        print(f"fuzzlin: {kind}: {report.error}", file=sys.stderr)
    if report.exit_status == 0 or config.format == "json":
        out = report.to_json() if config.format == "json" else render_text(report)
        sys.stdout.write(out)
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
