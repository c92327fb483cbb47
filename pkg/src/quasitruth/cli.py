"""quasitruth command line.

Exit codes: 0 true / quasi-true / parsed / well built, 1 false / quasi-false,
2 usage or input error, 3 formal nonsense, 4 search budget exhausted,
5 pragmatic nonsense or not well built.
"""

from __future__ import annotations

import argparse
import json
import sys

from .expansion import (
    DEFAULT_BUDGET, SearchBudget, Undetermined, count_a_normal, list_a_normal,
)
from .kbfile import KBError, load_kb
from .parser import parse_formula, print_formula
from .pragmatics import (
    LITERAL, MODES, audit_primary, classify,
)
from .structures import is_total, undetermined_cells
from .tarski import is_true

EXIT_OK, EXIT_FALSE, EXIT_ERROR, EXIT_FORMAL, EXIT_UNDETERMINED, EXIT_PRAGMATIC = 0, 1, 2, 3, 4, 5

NEEDS_FORMULA = ("parse", "eval", "classify")


class CLIError(Exception):
    pass


def _cell(pred, t, value=None):
    d = {"predicate": pred, "tuple": list(t)}
    if value is not None:
        d["value"] = "in" if value else "out"
    return d


def _cell_text(pred, t, value):
    atom = f"{pred}({', '.join(t)})" if t else pred
    return f"{atom} = {'in' if value else 'out'}"


def _witness_cells(kb, witness):
    out = []
    for pred, t in undetermined_cells(kb.structure):
        out.append((pred, t, t in witness.relations[pred].known_in))
    return out


def cmd_parse(kb, args, budget):
    outcome = parse_formula(args.formula, kb.signature)
    if outcome.ok:
        text = print_formula(outcome.formula)
        return EXIT_OK, "PARSED", {"formula": text}, [text]
    ev = {"position": outcome.position, "reason": outcome.reason, "kind": outcome.kind}
    return EXIT_FORMAL, "FORMAL-NONSENSE", ev, [
        f"FORMAL-NONSENSE at character {outcome.position}: {outcome.reason}",
        f"  {args.formula}",
        "  " + " " * max(outcome.position - 1, 0) + "^",
    ]


def cmd_eval(kb, args, budget):
    if not is_total(kb.structure):
        raise CLIError("eval needs a total structure; this one has "
                       f"{len(undetermined_cells(kb.structure))} undetermined cell(s)")
    outcome = parse_formula(args.formula, kb.signature)
    if not outcome.ok:
        return cmd_parse(kb, args, budget)
    value = is_true(kb.structure, outcome.formula)
    verdict = "TRUE" if value else "FALSE"
    return (EXIT_OK if value else EXIT_FALSE), verdict, \
        {"formula": print_formula(outcome.formula)}, [verdict]


def cmd_expand(kb, args, budget):
    cells = undetermined_cells(kb.structure)
    k = len(cells)
    ev = {"k": k, "expansions": 1 << k, "cells": [_cell(p, t) for p, t in cells]}
    lines = [f"undetermined cells: {k}", f"total expansions: {1 << k}"]
    result = list_a_normal(kb, budget) if args.list else count_a_normal(kb, budget)
    if isinstance(result, Undetermined):
        ev["a_normal_count"] = None
        lines.append(f"A-normal structures: UNDETERMINED (budget of {budget.limit} exhausted)")
        return EXIT_UNDETERMINED, "UNDETERMINED", ev, lines
    if args.list:
        ev["a_normal_count"] = len(result)
        ev["a_normal"] = [[_cell(p, t, v) for (p, t), v in item] for item in result]
        lines.append(f"A-normal structures: {len(result)}")
        for n, item in enumerate(result, 1):
            lines.append(f"  #{n}: " + "; ".join(_cell_text(p, t, v) for (p, t), v in item))
    else:
        ev["a_normal_count"] = result
        lines.append(f"A-normal structures: {result}")
    return EXIT_OK, "COUNTED", ev, lines


def _audit_lines(report):
    lines = [report.verdict + (f" ({report.mode} mode)")]
    for text in report.missing:
        lines.append(f"  missing: {text}")
    for item in report.forbidden:
        lines.append(f"  forbidden: {item['sentence']} (contradicts {item['contradicts']})")
    for text in report.strict_extras:
        lines.append(f"  not necessarily included: {text}")
    for text in report.undetermined:
        lines.append(f"  warning: exclusion of {text} undetermined within budget")
    return lines


def cmd_audit(kb, args, budget):
    report = audit_primary(kb, args.mode, budget)
    if not report.well_built:
        code = EXIT_PRAGMATIC
    elif report.undetermined:
        code = EXIT_UNDETERMINED
    else:
        code = EXIT_OK
    return code, report.verdict, report.to_dict(), _audit_lines(report)


def cmd_classify(kb, args, budget):
    v = classify(kb, args.formula, args.mode, budget)
    ev = {"reason": v.reason}
    lines = [v.kind, f"  {v.reason}"]
    if v.formula is not None:
        ev["formula"] = print_formula(v.formula)
    if v.position is not None:
        ev["position"] = v.position
        lines[0] += f" at character {v.position}"
    if v.undetermined:
        ev["undetermined"] = True
    if v.no_a_normal:
        ev["no_a_normal"] = True
    if v.excluded_by is not None:
        ev["excluded_by"] = v.excluded_by
        lines.append(f"  contradicts necessarily included: {v.excluded_by}")
    if v.witness is not None:
        cells = _witness_cells(kb, v.witness)
        ev["witness"] = [_cell(p, t, val) for p, t, val in cells]
        lines.append("  witness:")
        lines.extend(f"    {_cell_text(p, t, val)}" for p, t, val in cells)
    if v.audit is not None:
        ev["audit"] = v.audit.to_dict()
        if not v.audit.well_built:
            lines.extend(_audit_lines(v.audit))
    return v.exit_code, v.kind, ev, lines


COMMANDS = {
    "parse": cmd_parse,
    "eval": cmd_eval,
    "expand": cmd_expand,
    "audit": cmd_audit,
    "classify": cmd_classify,
}


def build_parser():
    p = argparse.ArgumentParser(
        prog="quasitruth",
        description="Quasi-truth, formal nonsense and pragmatic nonsense over knowledge-base files.",
    )
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("kb", help="knowledge-base JSON file")
    p.add_argument("formula", nargs="?", help="formula text (parse, eval, classify)")
    p.add_argument("--mode", choices=MODES, default=LITERAL, help="audit mode (default: literal)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help=f"max candidate expansions visited (default: {DEFAULT_BUDGET})")
    p.add_argument("--json", action="store_true", help="print one JSON object")
    p.add_argument("--list", action="store_true", help="expand: list every A-normal structure")
    return p


def _emit(args, verdict, evidence, budget_used, lines, out):
    if args.json:
        doc = {"command": args.command, "verdict": verdict, "evidence": evidence,
               "budget_used": budget_used}
        out.write(json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget <= 0:
        parser.error("--budget must be positive")
    if args.command in NEEDS_FORMULA and args.formula is None:
        parser.error(f"{args.command} needs a formula")
    budget = SearchBudget(args.budget)
    try:
        kb = load_kb(args.kb)
        code, verdict, evidence, lines = COMMANDS[args.command](kb, args, budget)
    except (OSError, KBError, CLIError) as e:
        msg = f"{e.strerror}: {e.filename}" if isinstance(e, OSError) and e.strerror else str(e)
        if args.json:
            _emit(args, "ERROR", {"error": msg}, budget.used, [], out)
        err.write(f"quasitruth: error: {msg}\n")
        return EXIT_ERROR
    _emit(args, verdict, evidence, budget.used, lines, out)
    return code


def entry():
    sys.exit(main())
