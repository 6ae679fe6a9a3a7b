"""Command-line front end.

Output is line-oriented and stable: the first line is machine-readable
(HOLDS / FAILS ... / KIND=... / CELLS ... / STAR ... / SEPARATED ... /
DERIVED ... / NOTFOUND / WROTE ...), further lines are human detail.
``--format json-lines`` switches to one JSON object per result.

Exit codes: 0 success/holds, 1 counterexample or nothing found, 2 usage,
3 invalid input, 4 evaluation budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import errors, tableio
from .constructions import build_named
from .core import FiniteSemigroup
from .rewrite import RewriteTrace, cell_decompose, derive_bounded, \
    eliminate_single_occurrences, format_trace, star_word
from .structure import classification_report, classify, separate_regular_pair
from .words import abelian_brandt_basis, abelian_positive_basis, brandt_basis, \
    identity_holds, ln_identity, parse_identity, parse_positive_basis, parse_word, \
    trahtman_basis


def load_semigroup(name: str) -> FiniteSemigroup:
    """A builtin name like B(Z2,2), or @file for the table format."""
    if name.startswith("@"):
        return tableio.load(name[1:])
    return build_named(name)


def format_counterexample(S: FiniteSemigroup, counterexample) -> str:
    assignment, lv, rv = counterexample
    pairs = " ".join(f"{v}={S.label(e)}" for v, e in assignment.items())
    return f"{pairs} lhs={S.label(lv)} rhs={S.label(rv)}"


def _json_counterexample(S, counterexample):
    if counterexample is None:
        return None
    assignment, lv, rv = counterexample
    return {"assignment": {v: S.label(e) for v, e in assignment.items()},
            "lhs": S.label(lv), "rhs": S.label(rv)}


def _emit_verdict(args, S, ident, verdict) -> int:
    if args.format == "json-lines":
        print(json.dumps({"verdict": "HOLDS" if verdict.holds else "FAILS",
                          "identity": str(ident),
                          "counterexample": _json_counterexample(S, verdict.counterexample),
                          "evaluations": verdict.evaluations_checked}))
    elif verdict.holds:
        print("HOLDS")
        print(f"identity: {ident}")
        print(f"evaluations: {verdict.evaluations_checked}")
    else:
        print(f"FAILS {format_counterexample(S, verdict.counterexample)}")
        print(f"identity: {ident}")
        print(f"evaluations: {verdict.evaluations_checked}")
    return 0 if verdict.holds else 1


def cmd_check(args) -> int:
    S = load_semigroup(args.semigroup)
    ident = parse_identity(args.identity)
    verdict = identity_holds(S, ident, budget=args.budget, jobs=args.jobs)
    return _emit_verdict(args, S, ident, verdict)


def cmd_basis_verify(args) -> int:
    S = load_semigroup(args.semigroup)
    if args.abelian:
        idents = abelian_brandt_basis(args.n)
    else:
        if args.positive_basis is None:
            raise errors.BuildSpecError("need --positive-basis or --abelian")
        if args.positive_basis == "abelian":
            basis = abelian_positive_basis(args.n)
        else:
            with open(args.positive_basis, "r", encoding="utf-8") as fh:
                basis = parse_positive_basis(fh.read())
        idents = brandt_basis(args.n, basis)
    results = [(ident, identity_holds(S, ident, budget=args.budget, jobs=args.jobs))
               for ident in idents]
    ok = all(v.holds for _, v in results)
    if args.format == "json-lines":
        for ident, v in results:
            print(json.dumps({"verdict": "HOLDS" if v.holds else "FAILS",
                              "identity": str(ident),
                              "counterexample": _json_counterexample(S, v.counterexample)}))
    else:
        failing = [ident for ident, v in results if not v.holds]
        print("HOLDS" if ok else f"FAILS {failing[0]}")
        for ident, v in results:
            if v.holds:
                print(f"holds: {ident} ({v.evaluations_checked} evaluations)")
            else:
                print(f"fails: {ident} at {format_counterexample(S, v.counterexample)}")
    return 0 if ok else 1


def _decomposed(args):
    w = parse_word(args.word)
    prepared, trace1 = eliminate_single_occurrences(w, args.n)
    form, trace2 = cell_decompose(prepared, args.n)
    return w, form, trace1, trace2


def cmd_decompose(args) -> int:
    w, form, trace1, trace2 = _decomposed(args)
    steps = trace1.steps + trace2.steps
    if args.format == "json-lines":
        print(json.dumps({"verdict": "CELLS",
                          "cells": [[y, "".join(p)] for y, p in form.cells],
                          "flattened": str(form.flatten()),
                          "trace_steps": len(steps)}))
    else:
        print(f"CELLS {form}")
        print(f"word: {w}")
        print(f"flattened: {form.flatten()}")
        if steps:
            print(format_trace(RewriteTrace(steps)))
    return 0


def cmd_star(args) -> int:
    _, form, _, _ = _decomposed(args)
    star = star_word(form)
    if args.format == "json-lines":
        print(json.dumps({"verdict": "STAR", "star": str(star),
                          "cells": [[y, "".join(p)] for y, p in form.cells]}))
    else:
        print(f"STAR {star}")
        print(f"cells: {form}")
    return 0


def cmd_separate(args) -> int:
    S = load_semigroup(args.semigroup)
    result = separate_regular_pair(S, args.a, args.b, args.n)
    sc = result.quotient_class
    if args.format == "json-lines":
        print(json.dumps({"verdict": "SEPARATED", "chosen_z": result.chosen_z,
                          "kind": sc.kind,
                          "q_order": sc.group_part.size if sc.group_part else None,
                          "index_size": sc.index_size}))
    else:
        print(f"SEPARATED z={result.chosen_z} kind={sc.kind}")
        print(f"images: {args.a} -> {result.hom(args.a)}, {args.b} -> {result.hom(args.b)}")
        print(f"quotient: {classification_report(sc)}")
    return 0


def cmd_classify(args) -> int:
    S = load_semigroup(args.semigroup)
    sc = classify(S)
    if args.format == "json-lines":
        print(json.dumps({"verdict": "KIND", "kind": sc.kind,
                          "q_order": sc.group_part.size if sc.group_part else None,
                          "index_size": sc.index_size}))
    else:
        parts = [f"KIND={sc.kind}"]
        if sc.group_part is not None:
            parts.append(f"|Q|={sc.group_part.size}")
        if sc.index_size is not None:
            parts.append(f"|J|={sc.index_size}")
        print(" ".join(parts))
        print(classification_report(sc, verbose=args.verbose))
    return 0


def cmd_build(args) -> int:
    S = load_semigroup(args.semigroup)
    tableio.dump(S, args.output)
    if args.format == "json-lines":
        print(json.dumps({"verdict": "WROTE", "path": args.output, "size": S.size}))
    else:
        print(f"WROTE {args.output} n={S.size}")
    return 0


def cmd_derive(args) -> int:
    ident = parse_identity(args.identity)
    if args.basis == "trahtman":
        basis = trahtman_basis()
    else:
        with open(args.basis, "r", encoding="utf-8") as fh:
            basis = [parse_identity(ln) for ln in fh.read().splitlines()
                     if ln.strip() and not ln.lstrip().startswith("#")]
    trace = derive_bounded(ident, basis, max_steps=args.max_steps,
                           max_length=args.max_length)
    if trace is None:
        if args.format == "json-lines":
            print(json.dumps({"verdict": "NOTFOUND", "identity": str(ident)}))
        else:
            print("NOTFOUND")
            print("not found within bounds")
        return 1
    if args.format == "json-lines":
        print(json.dumps({"verdict": "DERIVED", "identity": str(ident),
                          "steps": len(trace.steps)}))
    else:
        print(f"DERIVED steps={len(trace.steps)}")
        if trace.steps:
            print(format_trace(trace))
    return 0


def cmd_ln(args) -> int:
    ident = ln_identity(args.n)
    if args.check:
        if args.semigroup is None:
            raise errors.BuildSpecError("--check needs -s <semigroup>")
        S = load_semigroup(args.semigroup)
        verdict = identity_holds(S, ident, budget=args.budget, jobs=args.jobs)
        return _emit_verdict(args, S, ident, verdict)
    if args.format == "json-lines":
        print(json.dumps({"verdict": "LN", "identity": str(ident)}))
    else:
        print(ident)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brandtkit",
        description="finite semigroup checks, constructions, rewriting, classification")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, semigroup=True, budget=False):
        p.add_argument("--format", choices=["plain", "json-lines"], default="plain")
        if semigroup:
            p.add_argument("-s", "--semigroup", required=True,
                           help="builtin name (e.g. B2, B(Z2,2)) or @file")
        if budget:
            p.add_argument("--budget", type=int, default=None,
                           help="maximum number of evaluations")
            p.add_argument("--jobs", type=int, default=1,
                           help="parallel worker processes")

    p = sub.add_parser("check", help="check one identity exhaustively")
    common(p, budget=True)
    p.add_argument("-i", "--identity", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("basis-verify", help="check a whole identity basis")
    common(p, budget=True)
    p.add_argument("-n", type=int, required=True, help="group exponent")
    p.add_argument("--positive-basis", default=None,
                   help="file of words (one per line), or 'abelian'")
    p.add_argument("--abelian", action="store_true",
                   help="use the explicit abelian basis instead")
    p.set_defaults(func=cmd_basis_verify)

    p = sub.add_parser("decompose", help="rewrite a word into a product of cells")
    common(p, semigroup=False)
    p.add_argument("-w", "--word", required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("star", help="the star word of a cell decomposition")
    common(p, semigroup=False)
    p.add_argument("-w", "--word", required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("separate", help="separate two regular elements")
    common(p)
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("classify", help="group / group with zero / Brandt / other")
    common(p)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("build", help="write a builtin to a table file")
    common(p)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("derive", help="search for a rewrite derivation")
    common(p, semigroup=False)
    p.add_argument("-i", "--identity", required=True)
    p.add_argument("--basis", default="trahtman", help="'trahtman' or a file of identities")
    p.add_argument("--max-steps", type=int, default=10_000)
    p.add_argument("--max-length", type=int, default=4)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("ln", help="print (and optionally check) the n-th L identity")
    common(p, semigroup=False, budget=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("-s", "--semigroup", default=None)
    p.set_defaults(func=cmd_ln)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except errors.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except errors.Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
