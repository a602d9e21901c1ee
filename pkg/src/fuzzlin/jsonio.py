"""JSON documents in and out.

Readers raise :class:`InputError` with a JSONPath-like location when a
document does not match its schema; domain violations inside otherwise
well-formed documents surface as the library's own errors.
"""

from __future__ import annotations

import math
from numbers import Real

from .assessment import PRESETS, GradeDistribution, GradeScale, ScoreSheet
from .errors import FuzzlinError
from .flp import CRISP_ZERO, FuzzyConstraint, FuzzyLinearProgram, RefuzzSpec
from .fuzzy import TFN, TpFN
from .simplex import Constraint, LinearProgram

__all__ = [
    "InputError",
    "fuzzy_from_json",
    "fuzzy_to_json",
    "lp_from_json",
    "lp_to_json",
    "flp_from_json",
    "refuzz_from_json",
    "scale_from_json",
    "group_from_json",
    "groups_from_json",
    "round_sig",
]


class InputError(FuzzlinError):
    """The document does not match the expected schema."""

    def __init__(self, where, message):
        super().__init__(f"{where}: {message}")
        self.where = where


def _get(doc, key, where, kind=None):
    if not isinstance(doc, dict):
        raise InputError(where, "expected an object")
    if key not in doc:
        raise InputError(where, f"missing required key {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise InputError(f"{where}.{key}", f"expected {_kind_name(kind)}")
    return value


def _kind_name(kind):
    names = {list: "an array", dict: "an object", str: "a string", Real: "a number"}
    if isinstance(kind, tuple):
        return " or ".join(names.get(k, k.__name__) for k in kind)
    return names.get(kind, kind.__name__)


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, Real):
        raise InputError(where, f"expected a number, got {value!r}")
    return float(value)


def _numbers(values, where):
    if not isinstance(values, list):
        raise InputError(where, "expected an array of numbers")
    return [_number(v, f"{where}[{i}]") for i, v in enumerate(values)]


def fuzzy_from_json(doc, where="$"):
    """Accept ``{"kind": "tfn", "a":..,"b":..,"c":..}``, the ``tpfn`` analogue,
    or a bare array of 3 or 4 numbers."""
    if isinstance(doc, list):
        entries = _numbers(doc, where)
        if len(entries) == 3:
            return TFN(*entries)
        if len(entries) == 4:
            return TpFN(*entries)
        raise InputError(where, f"a fuzzy number needs 3 or 4 entries, got {len(entries)}")
    kind = _get(doc, "kind", where, str).lower()
    if kind == "tfn":
        keys = "abc"
        cls = TFN
    elif kind == "tpfn":
        keys = "abcd"
        cls = TpFN
    else:
        raise InputError(f"{where}.kind", f"expected 'tfn' or 'tpfn', got {kind!r}")
    return cls(*(_number(_get(doc, k, where), f"{where}.{k}") for k in keys))


def fuzzy_to_json(f):
    if f is CRISP_ZERO:
        return {"kind": "crisp", "value": 0.0}
    kind = "tfn" if isinstance(f, TFN) else "tpfn"
    return {"kind": kind, **dict(zip("abcd", f.astuple()))}


def _constraints(doc, where, parse_coeff, parse_rhs):
    rows = _get(doc, "constraints", where, list)
    out = []
    for i, row in enumerate(rows):
        w = f"{where}.constraints[{i}]"
        coeffs = _get(row, "coeffs", w, list)
        rel = _get(row, "rel", w, str)
        rhs = _get(row, "rhs", w)
        out.append((
            tuple(parse_coeff(v, f"{w}.coeffs[{j}]") for j, v in enumerate(coeffs)),
            rel,
            parse_rhs(rhs, f"{w}.rhs"),
        ))
    return out


def _names(doc, where):
    names = doc.get("names")
    if names is None:
        return None
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise InputError(f"{where}.names", "expected an array of strings")
    return tuple(names)


def lp_from_json(doc, where="$"):
    """``{"sense": "max", "objective": [...], "constraints": [{"coeffs": [...],
    "rel": "<=", "rhs": 20}, ...]}``"""
    sense = _get(doc, "sense", where, str)
    objective = _numbers(_get(doc, "objective", where), f"{where}.objective")
    rows = _constraints(doc, where, _number, _number)
    return LinearProgram(sense, tuple(objective),
                         tuple(Constraint(*r) for r in rows), _names(doc, where))


def lp_to_json(lp):
    return {
        "sense": lp.sense,
        "objective": list(lp.objective),
        "constraints": [
            {"coeffs": list(c.coeffs), "rel": c.rel, "rhs": c.rhs} for c in lp.constraints
        ],
        "names": list(lp.names),
    }


def flp_from_json(doc, where="$"):
    sense = _get(doc, "sense", where, str)
    objective = _get(doc, "objective", where, list)
    objective = tuple(fuzzy_from_json(v, f"{where}.objective[{j}]")
                      for j, v in enumerate(objective))
    rows = _constraints(doc, where, fuzzy_from_json, fuzzy_from_json)
    return FuzzyLinearProgram(sense, objective,
                              tuple(FuzzyConstraint(*r) for r in rows), _names(doc, where))


def _param_map(doc, where):
    if doc is None:
        return {}
    if not isinstance(doc, dict):
        raise InputError(where, "expected an object mapping variable names to numbers")
    return {str(k): _number(v, f"{where}.{k}") for k, v in doc.items()}


def refuzz_from_json(doc, where="$.refuzz"):
    """``{"kind": "tfn", "dof": 1, "alpha": {"x1": 3.5}, "b": {...}}``"""
    kind = _get(doc, "kind", where, str)
    dof = _number(_get(doc, "dof", where), f"{where}.dof")
    return RefuzzSpec(kind, dof, _param_map(doc.get("alpha"), f"{where}.alpha"),
                      _param_map(doc.get("b"), f"{where}.b"))


def scale_from_json(doc, where="$.scale"):
    """Preset name (``"default"``, ``"rigorous"``) or ``{"A": [85, 100], ...}``."""
    if doc is None:
        return PRESETS["default"]
    if isinstance(doc, str):
        if doc not in PRESETS:
            raise InputError(where, f"unknown preset {doc!r}; choose from {sorted(PRESETS)}")
        return PRESETS[doc]
    if not isinstance(doc, dict):
        raise InputError(where, "expected a preset name or an object of grade intervals")
    for k, v in doc.items():
        if not (isinstance(v, list) and len(v) == 2):
            raise InputError(f"{where}.{k}", "expected [lo, hi]")
        _numbers(v, f"{where}.{k}")
    return GradeScale.from_mapping(doc)


def group_from_json(doc, where="$"):
    """One group: ``{"name": .., "counts": {..}}`` or ``{"name": .., "members": [..]}``.

    Returns ``(name, distribution_or_None, sheet_or_None, published)``.
    """
    if not isinstance(doc, dict):
        raise InputError(where, "expected an object")
    name = str(doc.get("name", "group"))
    published = doc.get("published") or {}
    if not isinstance(published, dict):
        raise InputError(f"{where}.published", "expected an object")
    if "counts" in doc:
        counts = _get(doc, "counts", where, dict)
        for k, v in counts.items():
            if isinstance(v, bool) or not isinstance(v, int):
                raise InputError(f"{where}.counts.{k}", f"expected an integer, got {v!r}")
        return name, GradeDistribution.from_mapping(counts), None, published
    if "members" in doc:
        members = []
        for i, m in enumerate(_get(doc, "members", where, list)):
            w = f"{where}.members[{i}]"
            scores = _numbers(_get(m, "scores", w, list), f"{w}.scores")
            members.append((str(m.get("name", f"P{i + 1}")), scores))
        return name, None, ScoreSheet(tuple(members)), published
    raise InputError(where, "expected either 'counts' or 'members'")


def groups_from_json(doc):
    """All groups in an assessment document plus its grade scale."""
    if not isinstance(doc, dict):
        raise InputError("$", "expected an object")
    scale = scale_from_json(doc.get("scale"))
    if "groups" in doc:
        groups = _get(doc, "groups", "$", list)
        return scale, [group_from_json(g, f"$.groups[{i}]") for i, g in enumerate(groups)]
    return scale, [group_from_json(doc)]


def round_sig(value, digits=12):
    """Recursively round floats to ``digits`` significant digits for output."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        r = float(f"{value:.{digits}g}")
        return 0.0 if r == 0 else r
    if isinstance(value, dict):
        return {k: round_sig(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_sig(v, digits) for v in value]
    if isinstance(value, Real):
        return round_sig(float(value), digits)
    return value
