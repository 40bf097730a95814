"""Command-line front end.

Subcommands: check-tnorm, exp, product, ccc-suite, counterexample, limits,
power-completeness.  Reports are JSON by default (deterministic modulo the
timing field) with a text renderer behind --format text.

Exit codes: 0 clean run, 1 input/precondition error, 2 violation found while
--fail-on-violation is set, 3 enumeration budget exceeded.  The env var
TNORMCAT_BUDGET overrides the default enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from .errors import BudgetError, InputError, PreconditionError
from .rationals import parse_rational
from .tnorms import (
    DEFAULT_GRID_N,
    canonical_grid,
    check_c1,
    check_c2,
    extract_intervals,
    verify_tnorm_axioms,
)
from .categories import (
    DEFAULT_BUDGET,
    check_ccc,
    counterexample,
    exponential,
    product,
    validate,
)
from .completeness import (
    check_power_completeness,
    find_bilimit,
    find_yoneda_limit,
    is_cauchy,
    is_forward_cauchy,
)
from . import jsonio


@dataclass
class RunReport:
    command: str
    inputs: dict
    verdicts: list = field(default_factory=list)
    certified: bool = True
    violation: bool = False
    timing_ms: int = 0

    def add(self, name: str, result, ok: bool, certified: bool = True):
        self.verdicts.append({"name": name, "ok": ok, "result": jsonio.to_jsonable(result)})
        if not ok:
            self.violation = True
        if not certified:
            self.certified = False


def _default_budget() -> int:
    raw = os.environ.get("TNORMCAT_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"TNORMCAT_BUDGET must be an integer, got {raw!r}") from exc


def _parse_values(raw: str) -> list:
    vals = []
    for k, chunk in enumerate(raw.split(",")):
        vals.append(parse_rational(chunk, f"--values[{k}]"))
    if not vals:
        raise InputError("--values must list at least one rational")
    return vals


def _grid_for(args, t):
    if getattr(args, "values", None):
        return _parse_values(args.values)
    return canonical_grid(t, args.grid)


def cmd_check_tnorm(args) -> RunReport:
    t = jsonio.load_tnorm(args.tnorm)
    grid = _grid_for(args, t)
    report = RunReport(
        "check-tnorm",
        {"tnorm": jsonio.tnorm_to_dict(t), "grid_points": len(grid)},
    )
    if t.dropped_intervals:
        report.inputs["normalized_away"] = jsonio.to_jsonable(t.dropped_intervals)
    c1 = check_c1(t, grid)
    c2 = check_c2(t, grid)
    extraction = extract_intervals(t)
    axioms = verify_tnorm_axioms(t, grid)
    report.add("C1", c1, c1.verdict, certified=c1.certified)
    report.add("C2", c2, c2.verdict, certified=c2.certified)
    report.add("C3-form", extraction, extraction.ok)
    # the axiom layer is always grid evidence (its embedded report says so);
    # it does not downgrade the certification of the condition verdicts
    report.add("axioms", axioms, axioms.verdict)
    agree = c1.verdict == c2.verdict == extraction.ok
    report.add(
        "agreement",
        {"C1": c1.verdict, "C2": c2.verdict, "C3-form": extraction.ok},
        agree,
    )
    # the axioms check and a bundle-worthy failure are different animals: only
    # condition failures and disagreement count as violations for exit code 2
    report.violation = (not c1.verdict) or (not c2.verdict) or (not extraction.ok) \
        or (not axioms.verdict) or not agree
    return report


def cmd_product(args) -> RunReport:
    left = jsonio.load_category(args.left)
    right = jsonio.load_category(args.right)
    report = RunReport(
        "product",
        {"left": jsonio.category_to_dict(left), "right": jsonio.category_to_dict(right)},
    )
    prod = product(left, right)
    report.add("product", prod, True)
    if args.tnorm:
        t = jsonio.load_tnorm(args.tnorm)
        for name, cat in (("left", left), ("right", right), ("product", prod)):
            w = validate(cat, t)
            report.add(f"validate-{name}", w, w is None)
    return report


def cmd_exp(args) -> RunReport:
    t = jsonio.load_tnorm(args.tnorm)
    base = jsonio.load_category(args.base)
    fiber = jsonio.load_category(args.fiber)
    report = RunReport(
        "exp",
        {
            "tnorm": jsonio.tnorm_to_dict(t),
            "base": jsonio.category_to_dict(base),
            "fiber": jsonio.category_to_dict(fiber),
        },
    )
    power = exponential(t, base, fiber, args.budget)
    report.add("power", power, True)
    w = validate(power.as_rcat(), t)
    report.add("power-validates", w, w is None)
    return report


def cmd_ccc_suite(args) -> RunReport:
    t = jsonio.load_tnorm(args.tnorm)
    grid = _grid_for(args, t)
    report = RunReport(
        "ccc-suite",
        {
            "tnorm": jsonio.tnorm_to_dict(t),
            "grid_points": len(grid),
            "max_size": args.max_size,
        },
    )
    result = check_ccc(t, grid, args.max_size, args.budget)
    report.add("ccc", result, result.verdict, certified=result.c1.certified)
    return report


def cmd_counterexample(args) -> RunReport:
    t = jsonio.load_tnorm(args.tnorm)
    p = parse_rational(args.p, "p")
    q = parse_rational(args.q, "q")
    u = parse_rational(args.u, "u")
    report = RunReport(
        "counterexample",
        {"tnorm": jsonio.tnorm_to_dict(t), "triple": jsonio.to_jsonable((p, q, u))},
    )
    bundle = counterexample(t, p, q, u)
    report.add("bundle", bundle, False)
    return report


def cmd_limits(args) -> RunReport:
    seq = jsonio.load_sequence(args.seq)
    report = RunReport(
        "limits",
        {
            "carrier": jsonio.category_to_dict(seq.carrier),
            "prefix": jsonio.to_jsonable(seq.prefix),
            "cycle": jsonio.to_jsonable(seq.cycle),
        },
    )
    if args.tnorm:
        t = jsonio.load_tnorm(args.tnorm)
        w = validate(seq.carrier, t)
        if w is not None:
            raise InputError(
                f"carrier is not a valid category at {w.values}: {w.note}"
            )
    cauchy = is_cauchy(seq)
    report.add("cauchy", cauchy, cauchy is None)
    forward = is_forward_cauchy(seq)
    report.add("forward-cauchy", forward, forward is None)
    bilimit = find_bilimit(seq)
    report.add("bilimit", bilimit, bilimit.kind != "none")
    if forward is None:
        yoneda = find_yoneda_limit(seq)
        report.add("yoneda-limit", yoneda, yoneda.kind != "none")
    return report


def cmd_power_completeness(args) -> RunReport:
    t = jsonio.load_tnorm(args.tnorm)
    base = jsonio.load_category(args.base)
    fiber = jsonio.load_category(args.fiber)
    report = RunReport(
        "power-completeness",
        {
            "tnorm": jsonio.tnorm_to_dict(t),
            "base": jsonio.category_to_dict(base),
            "fiber": jsonio.category_to_dict(fiber),
            "cycle_budget": args.max_size,
        },
    )
    w = check_power_completeness(t, base, fiber, args.max_size, args.budget)
    report.add("power-completeness", w, w is None)
    return report


def _render_text(report: RunReport) -> str:
    lines = [f"command: {report.command}"]
    for v in report.verdicts:
        status = "PASS" if v["ok"] else "FAIL"
        lines.append(f"  {v['name']}: {status}")
        result = v["result"]
        if isinstance(result, dict):
            witness = result.get("witness")
            if witness:
                lines.append(f"    witness: {json.dumps(witness, ensure_ascii=False)}")
            if "d_fg" in result:
                lines.append(
                    f"    d(f,g)={result['d_fg']} d(g,h)={result['d_gh']} "
                    f"d(f,h)={result['d_fh']}"
                )
                bad = result["violated"]
                lines.append(
                    f"    violated: {bad['inequality']} "
                    f"({bad['lhs']} > {bad['rhs']})"
                )
    lines.append(f"certified: {report.certified}")
    lines.append(f"violation: {report.violation}")
    lines.append(f"timing_ms: {report.timing_ms}")
    return "\n".join(lines) + "\n"


def _emit(report: RunReport, args) -> None:
    if args.format == "text":
        text = _render_text(report)
    else:
        text = json.dumps(
            jsonio.to_jsonable(report), indent=2, sort_keys=True, ensure_ascii=False
        ) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(sub, budget_default):
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("-o", "--output", default=None, help="write the report here")
    sub.add_argument(
        "--fail-on-violation",
        action="store_true",
        help="exit 2 when any verdict fails",
    )
    sub.add_argument("--budget", type=int, default=budget_default,
                     help="enumeration budget")
    sub.add_argument("--grid", type=int, default=DEFAULT_GRID_N,
                     help="uniform resolution of the canonical grid")
    sub.add_argument("--values", default=None,
                     help="comma-separated rationals overriding the canonical grid")
    sub.add_argument("--max-size", type=int, default=None)


def build_parser(budget_default: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tnormcat",
        description="exact checks for [0,1]-enriched categories over t-norms",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("check-tnorm", help="condition suite for one t-norm")
    s.add_argument("tnorm")
    _add_common(s, budget_default)
    s.set_defaults(handler=cmd_check_tnorm)

    s = subs.add_parser("product", help="product of two categories")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--tnorm", default=None, help="validate against this t-norm")
    _add_common(s, budget_default)
    s.set_defaults(handler=cmd_product)

    s = subs.add_parser("exp", help="function-space object")
    s.add_argument("--tnorm", required=True)
    s.add_argument("--base", required=True)
    s.add_argument("--fiber", required=True)
    _add_common(s, budget_default)
    s.set_defaults(handler=cmd_exp)

    s = subs.add_parser("ccc-suite", help="cartesian-closedness verdict")
    s.add_argument("tnorm")
    _add_common(s, budget_default)
    s.set_defaults(handler=cmd_ccc_suite, max_size_default=2)

    s = subs.add_parser("counterexample", help="build a transitivity counterexample")
    s.add_argument("tnorm")
    s.add_argument("p")
    s.add_argument("q")
    s.add_argument("u")
    _add_common(s, budget_default)
    s.set_defaults(handler=cmd_counterexample)

    s = subs.add_parser("limits", help="limit verdicts for a sequence")
    s.add_argument("--seq", required=True)
    s.add_argument("--tnorm", default=None, help="validate the carrier first")
    _add_common(s, budget_default)
    s.set_defaults(handler=cmd_limits)

    s = subs.add_parser("power-completeness", help="Cauchy completeness of a power")
    s.add_argument("--tnorm", required=True)
    s.add_argument("--base", required=True)
    s.add_argument("--fiber", required=True)
    _add_common(s, budget_default)
    s.set_defaults(handler=cmd_power_completeness)

    return parser


def main(argv=None) -> int:
    try:
        budget_default = _default_budget()
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    parser = build_parser(budget_default)
    args = parser.parse_args(argv)
    if args.max_size is None:
        args.max_size = 2 if args.command == "ccc-suite" else 3
    start = time.perf_counter()
    try:
        report = args.handler(args)
    except (InputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    report.timing_ms = int((time.perf_counter() - start) * 1000)
    _emit(report, args)
    if args.fail_on_violation and report.violation:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
