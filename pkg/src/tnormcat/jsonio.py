"""JSON schemas: t-norms, categories, sequences, and report rendering.

Schemas (rationals are "num/den" strings; plain integers are accepted):

* t-norm     {"family": "minimum" | "product" | "lukasiewicz" |
              "nilpotent-minimum" | "interval-collapse",
              "intervals": [["1/5","1/2"], ...]}      (iff interval-collapse)
* category   {"elements": ["x","y"], "hom": [["1","1/2"],["0","1"]]}
              with hom[i][j] = hom(elements[i], elements[j])
* sequence   {"carrier": <path or inline category>, "prefix": [...],
              "cycle": [...]}
"""

from __future__ import annotations

import json
from dataclasses import is_dataclass, fields
from fractions import Fraction
from pathlib import Path

from .errors import InputError
from .rationals import format_rational, parse_rational
from .tnorms import INTERVAL_COLLAPSE, TNorm
from .categories import (
    CccReport,
    CounterexampleBundle,
    PowerObject,
    RCat,
    RFunctor,
    label_text,
)
from .completeness import TailSeq


def _load_json_file(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def tnorm_from_dict(data) -> TNorm:
    if not isinstance(data, dict) or "family" not in data:
        raise InputError('t-norm JSON must be an object with a "family" key')
    family = data["family"]
    intervals = data.get("intervals")
    if family == INTERVAL_COLLAPSE:
        if intervals is None:
            raise InputError('interval-collapse requires an "intervals" list')
        parsed = []
        for k, pair in enumerate(intervals):
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise InputError(f"intervals[{k}] must be a two-element list")
            parsed.append(
                (
                    parse_rational(pair[0], f"intervals[{k}][0]"),
                    parse_rational(pair[1], f"intervals[{k}][1]"),
                )
            )
        return TNorm(family, tuple(parsed))
    if intervals is not None:
        raise InputError(f'"intervals" is only valid for {INTERVAL_COLLAPSE}')
    return TNorm(family)


def load_tnorm(path) -> TNorm:
    return tnorm_from_dict(_load_json_file(path))


def tnorm_to_dict(t: TNorm) -> dict:
    out: dict = {"family": t.family}
    if t.family == INTERVAL_COLLAPSE:
        out["intervals"] = [
            [format_rational(a), format_rational(b)] for a, b in t.intervals
        ]
    return out


def category_from_dict(data, where: str = "category") -> RCat:
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected an object")
    try:
        elements = data["elements"]
        hom = data["hom"]
    except (KeyError, TypeError):
        raise InputError(f'{where}: needs "elements" and "hom" keys') from None
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InputError(f"{where}: elements must be a list of strings")
    if not isinstance(hom, list) or len(hom) != len(elements):
        raise InputError(f"{where}: hom must have one row per element")
    rows = []
    for i, row in enumerate(hom):
        if not isinstance(row, list) or len(row) != len(elements):
            raise InputError(f"{where}: hom[{i}] must have one entry per element")
        rows.append(
            tuple(
                parse_rational(v, f"{where}: hom[{i}][{j}]") for j, v in enumerate(row)
            )
        )
    return RCat(tuple(elements), tuple(rows))


def load_category(path) -> RCat:
    return category_from_dict(_load_json_file(path), where=str(path))


def category_to_dict(cat: RCat) -> dict:
    return {
        "elements": [label_text(e) for e in cat.elements],
        "hom": [[format_rational(v) for v in row] for row in cat.hom],
    }


def sequence_from_dict(data, base_dir=None, where: str = "sequence") -> TailSeq:
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected an object")
    carrier = data.get("carrier")
    if isinstance(carrier, str):
        path = Path(carrier)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        cat = load_category(path)
    elif isinstance(carrier, dict):
        cat = category_from_dict(carrier, where=f"{where}: carrier")
    else:
        raise InputError(f'{where}: "carrier" must be a path or inline category')
    prefix = data.get("prefix", [])
    cycle = data.get("cycle")
    if not isinstance(cycle, list) or not cycle:
        raise InputError(f'{where}: "cycle" must be a nonempty list')
    return TailSeq(cat, tuple(prefix), tuple(cycle))


def load_sequence(path) -> TailSeq:
    return sequence_from_dict(
        _load_json_file(path), base_dir=Path(path).parent, where=str(path)
    )


def functor_to_list(f: RFunctor) -> list:
    """Target labels in source element order."""
    return [label_text(lbl) for lbl in f.mapping]


def power_to_dict(p: PowerObject) -> dict:
    return {
        "base": category_to_dict(p.base),
        "fiber": category_to_dict(p.fiber),
        "functors": [functor_to_list(f) for f in p.functors],
        "d": [[format_rational(v) for v in row] for row in p.hom],
    }


def bundle_to_dict(b: CounterexampleBundle) -> dict:
    return {
        "tnorm": tnorm_to_dict(b.tnorm),
        "p": format_rational(b.p),
        "q": format_rational(b.q),
        "u": format_rational(b.u),
        "base": category_to_dict(b.base),
        "fiber": category_to_dict(b.fiber),
        "f": functor_to_list(b.f),
        "g": functor_to_list(b.g),
        "h": functor_to_list(b.h),
        "d_fg": format_rational(b.d_fg),
        "d_gh": format_rational(b.d_gh),
        "d_fh": format_rational(b.d_fh),
        "interchange": {
            "lhs": format_rational(b.c1_lhs),
            "rhs": format_rational(b.c1_rhs),
        },
        "transitivity": {
            "lhs": format_rational(b.trans_lhs),
            "rhs": format_rational(b.trans_rhs),
        },
        "violated": {
            "inequality": "(d_fg & d_gh) ∧ u <= d_fh ∧ u",
            "lhs": format_rational(b.capped_lhs),
            "rhs": format_rational(b.capped_rhs),
        },
    }


def to_jsonable(obj):
    """Recursively render report values: fractions as strings, dataclasses as dicts."""
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, TNorm):
        return tnorm_to_dict(obj)
    if isinstance(obj, RCat):
        return category_to_dict(obj)
    if isinstance(obj, RFunctor):
        return functor_to_list(obj)
    if isinstance(obj, PowerObject):
        return power_to_dict(obj)
    if isinstance(obj, CounterexampleBundle):
        return bundle_to_dict(obj)
    if isinstance(obj, CccReport):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
        out["verdict"] = "pass" if obj.verdict else "fail"
        return out
    if is_dataclass(obj) and not isinstance(obj, type):
        out = {}
        for f in fields(obj):
            if not f.repr and not f.compare:
                continue
            out[f.name] = to_jsonable(getattr(obj, f.name))
        if "verdict" in out and isinstance(obj.verdict, bool):
            out["verdict"] = "pass" if obj.verdict else "fail"
        return out
    if isinstance(obj, dict):
        return {label_text(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    return label_text(obj)
