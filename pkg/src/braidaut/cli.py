"""
Command-line interface.

    braidaut act --rep artin --strands 2 "1" "x1"
    braidaut solve --strands 3 "1 2 1 -2 -1 -2"
    braidaut compare --strands 3 "2" "1"
    braidaut magnus --rep wada1:2 --strands 3 "1 -2" --det
    braidaut distinguish --a wada1:2 --b wada3 --strands 4 --json
    braidaut verify lemma --strands 4 --max-length 8

Exit codes: 0 ok, 1 property failure, 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import harness
from .braids import parse_braid_word, relators, format_braid_word
from .dehornoy import DEFAULT_BUDGET, BudgetExhausted, compare, handle_reduce, solve_word_problem
from .distinguish import distinguish
from .endo import apply
from .freegroup import RankError, format_free_word, parse_free_word
from .laurent import format_matrix
from .magnus import determinant_invariant, magnus_matrix
from .reps import parse_rep, represent

EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SUITES = ("lemma", "positivity", "relations", "oracle", "magnus", "distinguish", "order", "all")


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": harness.SCHEMA_VERSION, **payload}, indent=2))
    else:
        print(text)


def _strands(args, default: Optional[int] = None) -> int:
    n = args.strands if args.strands is not None else default
    if n is None:
        raise UsageError("--strands is required")
    if n < 2:
        raise UsageError("--strands must be at least 2")
    return n


def cmd_act(args) -> int:
    n = _strands(args)
    kind = parse_rep(args.rep)
    w = parse_braid_word(args.braid, n)
    u = parse_free_word(args.word, n)
    out = apply(represent(kind, w), u)
    _emit(args, {"command": "act", "rep": str(kind), "strands": n, "braid": format_braid_word(w),
                 "input": format_free_word(u), "output": format_free_word(out)}, format_free_word(out))
    return EXIT_OK


def cmd_reduce(args) -> int:
    n = _strands(args)
    w = parse_braid_word(args.braid, n)
    form = handle_reduce(w, args.budget)
    text = format_braid_word(form.word)
    if not args.json and form.main_index is not None:
        text += f"\n  main index {form.main_index}, sign {'+' if form.definite_sign > 0 else '-'}"
    _emit(args, {"command": "reduce", "strands": n, "input": format_braid_word(w),
                 "output": format_braid_word(form.word), "main_index": form.main_index,
                 "sign": form.definite_sign}, text)
    return EXIT_OK


def cmd_solve(args) -> int:
    n = _strands(args)
    w = parse_braid_word(args.braid, n)
    verdict = solve_word_problem(w, args.budget)
    _emit(args, {"command": "solve", "strands": n, "input": format_braid_word(w), "verdict": verdict.value},
          verdict.value)
    return EXIT_OK


def cmd_compare(args) -> int:
    n = _strands(args)
    u = parse_braid_word(args.u, n)
    v = parse_braid_word(args.v, n)
    order = compare(u, v, args.budget)
    _emit(args, {"command": "compare", "strands": n, "u": format_braid_word(u), "v": format_braid_word(v),
                 "order": order.value}, order.value)
    return EXIT_OK


def cmd_magnus(args) -> int:
    n = _strands(args)
    kind = parse_rep(args.rep)
    w = parse_braid_word(args.braid, n)
    try:
        if args.det:
            d = determinant_invariant(kind, w)
            _emit(args, {"command": "magnus", "rep": str(kind), "strands": n, "determinant": str(d)}, str(d))
        else:
            m = magnus_matrix(kind, w)
            _emit(args, {"command": "magnus", "rep": str(kind), "strands": n,
                         "matrix": [[str(x) for x in row] for row in m]}, format_matrix(m))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_relators(args) -> int:
    n = _strands(args)
    rs = relators(n)
    _emit(args, {"command": "relators", "strands": n, "relators": [format_braid_word(r) for r in rs]},
          "\n".join(format_braid_word(r) for r in rs) if rs else "(none)")
    return EXIT_OK


def cmd_distinguish(args) -> int:
    n = _strands(args, 3)
    try:
        rep = distinguish(parse_rep(args.a), parse_rep(args.b), n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"command": "distinguish", **rep.to_dict()}, rep.render())
    return EXIT_OK if rep.verified else EXIT_FAILURE


def _run_suite(name: str, args) -> harness.SuiteResult:
    seed, budget = args.seed, args.budget
    if name == "lemma":
        n = _strands(args, 4)
        return harness.verify_lemma(n, args.max_length if args.max_length is not None else 8)
    if name == "positivity":
        n = _strands(args, 4)
        return harness.verify_positivity(n, args.max_length if args.max_length is not None else 8, budget=budget)
    if name == "relations":
        return harness.verify_relations(_strands(args, 6))
    if name == "oracle":
        n = _strands(args, 3)
        m = args.max_length if args.max_length is not None else 6
        samples = args.samples if args.samples is not None else 10_000
        return harness.verify_oracle(((n, m),), samples, seed=seed, budget=budget)
    if name == "magnus":
        samples = args.samples if args.samples is not None else 1000
        return harness.verify_magnus(_strands(args, 5), samples, seed=seed)
    if name == "distinguish":
        samples = args.samples if args.samples is not None else 100
        return harness.verify_distinguish(_strands(args, 3), samples, seed=seed)
    if name == "order":
        samples = args.samples if args.samples is not None else 1000
        m = args.max_length if args.max_length is not None else 12
        return harness.verify_order(samples, m, seed=seed, budget=budget)
    raise UsageError(f"unknown suite {name!r}")


def cmd_verify(args) -> int:
    names = SUITES[:-1] if args.suite == "all" else (args.suite,)
    results = [_run_suite(name, args) for name in names]
    if args.json:
        print(json.dumps({"schema": harness.SCHEMA_VERSION, "command": "verify",
                          "results": [r.to_dict() for r in results]}, indent=2))
    else:
        print("\n".join(r.render() for r in results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strands", type=int, help="number of strands n (rank of F_n)")
    common.add_argument("--rep", default="artin", help="artin, wada1:k, wada2 or wada3")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled suites")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="handle-reduction step budget")

    parser = argparse.ArgumentParser(prog="braidaut", description="Braid groups acting on free groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("act", parents=[common], help="apply a braid to a free-group word")
    p.add_argument("braid")
    p.add_argument("word")
    p.set_defaults(func=cmd_act)

    for name, func, helptext in (("reduce", cmd_reduce, "handle-reduce to a sigma-definite word"),
                                 ("solve", cmd_solve, "decide TRIVIAL / POSITIVE / NEGATIVE")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("braid")
        p.set_defaults(func=func)

    p = sub.add_parser("compare", parents=[common], help="Dehornoy order of two braids")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("magnus", parents=[common], help="Magnus matrix of a braid")
    p.add_argument("braid")
    p.add_argument("--det", action="store_true", help="print only the determinant")
    p.set_defaults(func=cmd_magnus)

    p = sub.add_parser("relators", parents=[common], help="defining relators of B_n")
    p.set_defaults(func=cmd_relators)

    p = sub.add_parser("distinguish", parents=[common], help="certificate separating two images")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-length", type=int)
    p.add_argument("--samples", type=int, help="number of sampled cases")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget < 1:
        parser.error("--budget must be at least 1")
    if getattr(args, "max_length", None) is not None and args.max_length < 0:
        parser.error("--max-length must be nonnegative")
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, RankError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
