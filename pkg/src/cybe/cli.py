"""Command-line interface.

    cybe check     --input problem.json   residual verdicts + classification
    cybe bialgebra --input problem.json   bialgebra axioms + closed forms
    cybe enumerate --input problem.json   exhaustive scan over GF(p)
    cybe generate  --input problem.json   build a closed-form solution case
    cybe families                         list algebra tables and cases

Exit codes: 0 when every verdict in the report is affirmative, 1 when some
check came back negative (not a solution, axiom failed, classification not
confirmed, budget exceeded), 2 for malformed input.  Reports go to stdout
(or --output) as JSON by default; --format text renders a summary.  Reports
are deterministic; opt into wall-clock timing with --timing.
"""

from __future__ import annotations

import argparse
import sys

from .bialgebra import bialgebra_check, coboundary_predicate, triangular_predicate
from .exhaustive import BudgetExceeded, DEFAULT_BUDGET, verify_classification
from .liealg import check_jacobi
from .problems import (
    ProblemError,
    algebra_obj,
    dumps_report,
    field_obj,
    load_problem,
    tensor_obj,
)
from .scalars import FieldError, scalar_str
from .solve import (
    GENERATOR_CASES,
    UncoveredRegime,
    classify_solution,
    cybe_residual,
    generate_solution,
    is_cybe_solution,
    recognize_table,
)
from .tensor import is_skew_symmetric, symmetry_flags

RESIDUAL_WITNESS_CAP = 100


def _jacobi_section(L, report):
    violations = check_jacobi(L)
    report["jacobi_ok"] = not violations
    if violations:
        report["jacobi_violations"] = [
            {"triple": list(tri),
             "residual": [scalar_str(v) for v in vec]}
            for tri, vec in violations
        ]
    return not violations


def _symmetry_section(L, r):
    reg = recognize_table(L)
    if reg is not None and reg[0] == "ii":
        flags = symmetry_flags(r, reg[1], reg[2])
    else:
        flags = symmetry_flags(r)
    return {k: v for k, v in flags.items()}


def cmd_check(problem):
    L = problem.algebra
    if L is None:
        raise ProblemError('"check" needs an algebra')
    if not problem.tensors:
        raise ProblemError('"check" needs a tensor (or tensors)')
    report = {
        "command": "check",
        "field": field_obj(problem.field),
        "algebra": algebra_obj(L),
    }
    ok = _jacobi_section(L, report)
    results = []
    if ok:
        for r in problem.tensors:
            res = cybe_residual(L, r)
            entry = {
                "tensor": tensor_obj(r),
                "is_solution": res.is_zero,
                "symmetry": _symmetry_section(L, r),
            }
            if not res.is_zero:
                entry["residual_entries"] = [
                    [list(cell), scalar_str(v)]
                    for cell, v in res.nonzero_entries[:RESIDUAL_WITNESS_CAP]
                ]
                ok = False
            try:
                _, labels = classify_solution(L, r)
                entry["covered"] = True
                entry["labels"] = sorted(lab.value for lab in labels)
            except UncoveredRegime as e:
                entry["covered"] = False
                entry["labels"] = None
                entry["uncovered_reason"] = str(e)
            results.append(entry)
    report["results"] = results
    report["ok"] = ok
    return report, 0 if ok else 1


def cmd_bialgebra(problem):
    L = problem.algebra
    if L is None:
        raise ProblemError('"bialgebra" needs an algebra')
    if not problem.tensors:
        raise ProblemError('"bialgebra" needs a tensor (or tensors)')
    report = {
        "command": "bialgebra",
        "field": field_obj(problem.field),
        "algebra": algebra_obj(L),
    }
    ok = _jacobi_section(L, report)
    results = []
    if ok:
        for r in problem.tensors:
            b = bialgebra_check(L, r)
            entry = {
                "tensor": tensor_obj(r),
                "coantisymmetry_ok": b.coantisymmetry_ok,
                "cojacobi_ok": b.cojacobi_ok,
                "compatibility_ok": b.compatibility_ok,
                "cybe_solution": b.cybe_solution,
                "is_coboundary": b.is_coboundary,
                "is_triangular": b.is_triangular,
            }
            witnesses = {}
            if not b.coantisymmetry_ok:
                witnesses["coantisymmetry"] = list(
                    b.witnesses["coantisymmetry"])
            if not b.cojacobi_ok:
                witnesses["cojacobi"] = [
                    {"basis_index": i,
                     "entries": [[list(cell), scalar_str(v)]
                                 for cell, v in entries]}
                    for i, entries in b.witnesses["cojacobi"]
                ]
            if not b.compatibility_ok:
                witnesses["compatibility"] = [
                    {"pair": list(pair),
                     "entries": [[list(cell), scalar_str(v)]
                                 for cell, v in entries]}
                    for pair, entries in b.witnesses["compatibility"]
                ]
            if witnesses:
                entry["witnesses"] = witnesses
            closed = {"applicable": is_skew_symmetric(r)}
            if closed["applicable"]:
                try:
                    cf_cob = coboundary_predicate(L, r)
                    cf_tri = triangular_predicate(L, r)
                    closed["coboundary"] = cf_cob
                    closed["triangular"] = cf_tri
                    closed["agrees"] = (cf_cob == b.is_coboundary
                                        and cf_tri == b.is_triangular)
                except UncoveredRegime as e:
                    closed["covered"] = False
                    closed["uncovered_reason"] = str(e)
            entry["closed_form"] = closed
            if not (b.is_coboundary and b.is_triangular
                    and closed.get("agrees", True)):
                ok = False
            results.append(entry)
    report["results"] = results
    report["ok"] = ok
    return report, 0 if ok else 1


def cmd_enumerate(problem, args):
    L = problem.algebra
    if L is None:
        raise ProblemError('"enumerate" needs an algebra')
    opts = problem.options
    budget = args.budget if args.budget is not None else opts.get(
        "budget", DEFAULT_BUDGET)
    workers = args.workers if args.workers is not None else opts.get(
        "workers", 1)
    timing = args.timing or bool(opts.get("timing", False))
    report = {
        "command": "enumerate",
        "field": field_obj(problem.field),
        "algebra": algebra_obj(L),
    }
    if not _jacobi_section(L, report):
        report["ok"] = False
        return report, 1
    try:
        enum = verify_classification(L, workers=workers, budget=budget,
                                     timing=timing)
    except BudgetExceeded as e:
        report["error"] = str(e)
        report["partial"] = False
        report["ok"] = False
        return report, 1
    report.update({
        "total": enum.total,
        "backend": enum.backend,
        "workers": enum.workers,
        "solution_count": enum.solution_count,
        "predicate_count": enum.predicate_count,
        "matched": enum.matched,
        "label_counts": dict(sorted(enum.label_counts.items())),
        "missed_by_predicate": list(enum.missed_by_predicate),
        "false_positives": list(enum.false_positives),
        "confirmed": enum.confirmed,
        "empirical_only": enum.empirical_only,
        "wall_time_ms": enum.wall_time_ms,
    })
    if opts.get("list_solutions") or args.list_solutions:
        from .exhaustive import enumerate_solutions
        report["solutions"] = [
            tensor_obj(t) for t in enumerate_solutions(
                L, workers=workers, budget=budget)
        ]
    report["ok"] = enum.confirmed
    return report, 0 if enum.confirmed else 1


def cmd_generate(problem, args):
    L = problem.algebra
    if L is None:
        raise ProblemError('"generate" needs an algebra')
    opts = problem.options
    case = args.case or opts.get("case")
    if not case:
        raise ProblemError(
            '"generate" needs a case (options.case or --case)')
    params_in = opts.get("params", {})
    if not isinstance(params_in, dict):
        raise ProblemError('"options.params" must be an object')
    params = {}
    for name, text in params_in.items():
        if not isinstance(text, str):
            raise ProblemError(
                f"generator parameter {name} must be a string")
        try:
            params[name] = problem.field.parse(text)
        except FieldError as e:
            raise ProblemError(f"parameter {name}: {e}") from None
    r = generate_solution(L, case, params)
    ok = is_cybe_solution(L, r)
    report = {
        "command": "generate",
        "field": field_obj(problem.field),
        "algebra": algebra_obj(L),
        "case": case,
        "params": {k: scalar_str(v) for k, v in sorted(params.items())},
        "tensor": tensor_obj(r),
        "self_check": ok,
        "ok": ok,
    }
    return report, 0 if ok else 1


def cmd_families():
    fams = [
        {"name": "I", "dim": "any (default 3)", "params": ["dim"],
         "bracket": "abelian: every bracket vanishes"},
        {"name": "II", "dim": 3, "params": ["alpha", "beta"],
         "bracket": "[e1,e2]=e3, [e2,e3]=alpha e1, [e3,e1]=beta e2 "
                    "(alpha*beta != 0)"},
        {"name": "III", "dim": 3, "params": [],
         "bracket": "[e1,e2]=e3, e3 central (the II table at "
                    "alpha=beta=0)"},
        {"name": "IV", "dim": 3, "params": ["beta", "delta"],
         "bracket": "[e1,e3]=e1+beta e2, [e2,e3]=delta e2 (delta != 0)"},
        {"name": "V", "dim": 3, "params": [],
         "bracket": "[e1,e3]=e1 (the solvable table at beta=delta=0)"},
        {"name": "VI", "dim": 2, "params": [],
         "bracket": "[e1,e2]=e1"},
        {"name": "sl2", "dim": 3, "params": [],
         "bracket": "the II table at alpha=4, beta=-4"},
    ]
    cases = [
        {"name": "strong-z", "algebra": "any dim-3", "params": ["s", "u", "z"],
         "conditions": "z != 0"},
        {"name": "strong-x", "algebra": "any dim-2/3", "params": ["p", "x"],
         "conditions": "x != 0"},
        {"name": "strong-y", "algebra": "any dim-2/3", "params": ["y"],
         "conditions": "none"},
        {"name": "alpha-beta-skew", "algebra": "II table",
         "params": ["z", "s", "u", "p"],
         "conditions": "alpha*beta*z^2 + beta*s^2 + alpha*u^2 + p^2 = 0"},
        {"name": "heisenberg-1", "algebra": "III",
         "params": ["p", "x", "y", "s", "t", "u", "v", "z"],
         "conditions": "p != 0, p^2 = xy, xu = sp, xv = tp, tu = vs"},
        {"name": "heisenberg-2", "algebra": "III",
         "params": ["x", "y", "s", "t", "u", "v", "z"],
         "conditions": "xy = xu = xv = ys = yt = 0, tu = vs"},
        {"name": "iv-diagonal-2", "algebra": "IV with beta=0",
         "params": ["p", "q", "s", "u", "x", "y"],
         "conditions": "xu = xs = ys = yu = (1-delta)us = "
                       "(1+delta)s(q+p) = (1+delta)u(q+p) = 0"},
        {"name": "iv-jordan-2", "algebra": "IV with beta!=0, delta=1",
         "params": ["p", "q", "u", "x", "y"],
         "conditions": "xu = yu = u(q+p) = 0"},
        {"name": "v-1", "algebra": "V", "params": ["s", "u", "v", "y", "z"],
         "conditions": "z != 0 (p, q, x derived)"},
        {"name": "v-2", "algebra": "V",
         "params": ["p", "q", "s", "u", "v", "x", "y"],
         "conditions": "us = vs = xs = xu = xv = 0, up = qv, s(p+q) = 0"},
        {"name": "skew", "algebra": "VI", "params": ["p"],
         "conditions": "none"},
    ]
    report = {
        "command": "families",
        "families": fams,
        "generator_cases": cases,
        "ok": True,
    }
    return report, 0


# ---------------------------------------------------------------------------
# text rendering

def _render_text(report, out):
    def line(s=""):
        out.write(s + "\n")

    cmd = report.get("command")
    line(f"command: {cmd}")
    if "field" in report:
        f = report["field"]
        line("field:   " + ("Q" if f["kind"] == "rational"
                            else f"F_{f['p']}"))
    if "algebra" in report:
        a = report["algebra"]
        line(f"algebra: {a['label']} (dim {a['dim']})")
    if "jacobi_ok" in report:
        line(f"jacobi:  {'ok' if report['jacobi_ok'] else 'VIOLATED'}")
        for v in report.get("jacobi_violations", []):
            line(f"  triple {tuple(v['triple'])}: residual {v['residual']}")
    if cmd in ("check", "bialgebra"):
        for idx, res in enumerate(report.get("results", []), start=1):
            line(f"tensor #{idx}: {res['tensor']['entries']}")
            if cmd == "check":
                line(f"  solution: {res['is_solution']}")
                if res.get("residual_entries"):
                    line(f"  nonzero residual at: "
                         f"{[e[0] for e in res['residual_entries']]}")
                flags = ", ".join(k for k, v in res["symmetry"].items() if v)
                line(f"  symmetry: {flags or 'none'}")
                if res["covered"]:
                    line(f"  labels: {', '.join(res['labels']) or '(none)'}")
                else:
                    line(f"  labels: uncovered regime "
                         f"({res['uncovered_reason']})")
            else:
                for key in ("coantisymmetry_ok", "cojacobi_ok",
                            "compatibility_ok", "cybe_solution",
                            "is_coboundary", "is_triangular"):
                    line(f"  {key}: {res[key]}")
                cf = res["closed_form"]
                if not cf["applicable"]:
                    line("  closed form: n/a (tensor not skew)")
                elif cf.get("covered") is False:
                    line(f"  closed form: uncovered "
                         f"({cf['uncovered_reason']})")
                else:
                    line(f"  closed form: coboundary={cf['coboundary']} "
                         f"triangular={cf['triangular']} "
                         f"agrees={cf['agrees']}")
    if cmd == "enumerate" and "total" in report:
        line(f"total candidates: {report['total']}")
        line(f"solutions:        {report['solution_count']}")
        line(f"predicate union:  {report['predicate_count']}")
        line(f"matched:          {report['matched']}")
        line(f"label counts:     {report['label_counts']}")
        line(f"missed: {len(report['missed_by_predicate'])}  "
             f"false positives: {len(report['false_positives'])}")
        line(f"confirmed: {report['confirmed']}"
             + ("  (empirical only)" if report["empirical_only"] else ""))
    if cmd == "enumerate" and "error" in report:
        line(f"error: {report['error']}")
    if cmd == "generate":
        line(f"case: {report['case']} params: {report['params']}")
        line(f"tensor: {report['tensor']['entries']}")
        line(f"self check: {report['self_check']}")
    if cmd == "families":
        for fam in report["families"]:
            line(f"{fam['name']:>4}  dim {fam['dim']}: {fam['bracket']}")
        line("generator cases:")
        for case in report["generator_cases"]:
            line(f"  {case['name']:<16} {case['algebra']:<24} "
                 f"params {', '.join(case['params'])}; {case['conditions']}")
    line(f"ok: {report.get('ok')}")


def _emit(report, args):
    if args.format == "json":
        text = dumps_report(report)
    else:
        import io

        buf = io.StringIO()
        _render_text(report, buf)
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cybe",
        description="Exact verification, classification and enumeration of "
                    "constant CYBE solutions on low-dimensional Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", "-i", required=True,
                           help="problem file (JSON)")
        p.add_argument("--output", "-o", help="write the report here")
        p.add_argument("--format", choices=("json", "text"), default="json")

    common(sub.add_parser("check", help="CYBE verdicts + classification"))
    common(sub.add_parser("bialgebra",
                          help="bialgebra axioms and closed forms"))
    p_enum = sub.add_parser("enumerate",
                            help="exhaustive scan over a prime field")
    common(p_enum)
    p_enum.add_argument("--budget", type=int, default=None,
                        help=f"candidate cap (default {DEFAULT_BUDGET})")
    p_enum.add_argument("--workers", type=int, default=None,
                        help="scan threads (default 1)")
    p_enum.add_argument("--timing", action="store_true",
                        help="include wall_time_ms in the report")
    p_enum.add_argument("--list-solutions", action="store_true",
                        help="include every solution tensor in the report")
    p_gen = sub.add_parser("generate", help="build a closed-form solution")
    common(p_gen)
    p_gen.add_argument("--case", choices=GENERATOR_CASES, default=None,
                       help="overrides options.case from the problem file")
    common(sub.add_parser("families",
                          help="list the built-in tables and cases"),
           needs_input=False)
    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "families":
            report, code = cmd_families()
        else:
            problem = load_problem(args.input)
            if args.command == "check":
                report, code = cmd_check(problem)
            elif args.command == "bialgebra":
                report, code = cmd_bialgebra(problem)
            elif args.command == "enumerate":
                report, code = cmd_enumerate(problem, args)
            else:
                report, code = cmd_generate(problem, args)
    except ValueError as e:
        # ProblemError, FieldError, SideConditionError, UncoveredRegime and
        # the plain dimension/field guards all land here: usage errors
        sys.stderr.write(f"error: {e}\n")
        return 2
    _emit(report, args)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
