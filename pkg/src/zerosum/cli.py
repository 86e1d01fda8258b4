"""Command-line front end.

Exit codes: 0 success, 1 violation / nothing found, 2 invalid input, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable

from zerosum import classify as cls_mod
from zerosum import counting, egz, extremal, lemmas, witness
from zerosum.core import ResidueSequence, format_sequence, load_sequence
from zerosum.errors import BudgetExceeded, PreconditionError
from zerosum.suite import verify_suite

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "ZEROSUM_MAX_ENUMERATION"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _budget(args) -> dict:
    value = args.max_enumeration
    if value is None and os.environ.get(BUDGET_ENV):
        value = int(os.environ[BUDGET_ENV])
    return {} if value is None else {"max_enumeration": value}


def cmd_classify(args) -> tuple[int, Any]:
    A = load_sequence(args.input)
    report = cls_mod.classify(A, args.l)
    return EXIT_OK, report.to_dict()


def cmd_witness(args) -> tuple[int, Any]:
    A = load_sequence(args.input)
    if args.theorem == 1:
        w = witness.thm1_witness(A, args.budget)
    elif args.theorem == 2:
        w = witness.thm2_witness(A, args.budget)
    else:
        if args.l is None:
            raise PreconditionError("--l is required for theorem 3")
        w = witness.thm3_witness(A, args.l, args.window, args.budget)
    if w is None:
        return EXIT_VIOLATION, {"sequence": A.to_dict(), "witness": None,
                                "reason": f"no witness within budget {args.budget}"}
    return EXIT_OK, {"sequence": A.to_dict(), "witness": w.to_dict(),
                     "valid": witness.validate(w, A), "proofline": witness.proofline(w, A)}


def cmd_extremal(args) -> tuple[int, Any]:
    if args.family == "A1":
        spec = extremal.build_A1(args.p, args.m)
    elif args.family == "A2":
        spec = extremal.build_A2(args.p, args.m)
    else:
        if args.l is None:
            raise PreconditionError("--l is required for A3")
        spec = extremal.build_A3(args.p, args.m, args.l)
        if spec is None:
            return EXIT_VIOLATION, {"family": "A3", "p": args.p, "m": args.m, "l": args.l,
                                    "infeasible": True}
    return EXIT_OK, spec.to_dict()


def cmd_count_partitions(args) -> tuple[int, Any]:
    table = counting.PartitionTable.build(args.n, args.m)
    return EXIT_OK, {"n": args.n, "m": args.m, "count": table[args.n],
                     "table": [int(v) for v in table.values]}


def cmd_count_census(args) -> tuple[int, Any]:
    r = counting.census(args.p, args.m, workers=args.workers, **_budget(args))
    return EXIT_OK, r.to_dict()


def cmd_egz_verify(args) -> tuple[int, Any]:
    r = egz.egz_verify(args.p, workers=args.workers, **_budget(args))
    return (EXIT_VIOLATION if r.counterexamples else EXIT_OK), r.to_dict()


def cmd_egz_extremal(args) -> tuple[int, Any]:
    r = egz.egz_extremal_classify(args.p, workers=args.workers,
                                  orbit_reduce=args.orbit_reduce, **_budget(args))
    return (EXIT_VIOLATION if r.deviations else EXIT_OK), r.to_dict()


def cmd_egz_greedy(args) -> tuple[int, Any]:
    A = load_sequence(args.input)
    out = egz.greedy_zero_p_subsequence(A, normalize=args.normalize)
    if out is None:
        return EXIT_VIOLATION, {"sequence": A.to_dict(), "subsequence": None}
    return EXIT_OK, {"sequence": A.to_dict(), "subsequence": out.to_dict()}


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise PreconditionError(f"expected integers, got {text!r}") from exc


def cmd_lemma_zero_subset(args) -> tuple[int, Any]:
    X = _ints(args.X)
    out = lemmas.zero_subset_mod_D(X, args.D)
    return EXIT_OK, {"D": args.D, "X": X, "subsequence": out}


def cmd_lemma_crt(args) -> tuple[int, Any]:
    return EXIT_OK, lemmas.crt_unit_fractions(_ints(args.d), args.r).to_dict()


def cmd_lemma_crt_bounded(args) -> tuple[int, Any]:
    return EXIT_OK, lemmas.crt_bounded(_ints(args.d), args.D, args.r).to_dict()


def cmd_lemma_olson(args) -> tuple[int, Any]:
    return EXIT_OK, lemmas.olson_lsum_probe(args.p, **_budget(args)).to_dict()


def cmd_lemma_ap(args) -> tuple[int, Any]:
    r = lemmas.ap_theorem_probe(args.p, args.size, args.l, args.d, args.trials, args.seed)
    return EXIT_OK, r.to_dict()


def cmd_verify_suite(args) -> tuple[int, Any]:
    results = verify_suite(args.level)
    if args.output == "text":
        for r in results:
            print(r.line())
    ok = all(r.passed for r in results)
    summary = {"level": args.level, "passed": sum(r.passed for r in results),
               "failed": sum(not r.passed for r in results),
               "criteria": [{k: v for k, v in r.to_dict().items() if k != "seconds"}
                            for r in results]}
    return (EXIT_OK if ok else EXIT_VIOLATION), summary


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", choices=["text", "structured"], default="text")
    common.add_argument("--max-enumeration", type=int, default=None,
                        help=f"enumeration budget (env {BUDGET_ENV})")
    common.add_argument("--workers", type=int, default=1)

    parser = _Parser(prog="zerosum", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("--input", required=True, help="'p=11; A=1^2,7' or a JSON object")
    p.add_argument("--l", type=int, action="append", help="also classify l-sums (repeatable)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", parents=[common])
    p.add_argument("--theorem", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--budget", type=int, default=3)
    p.add_argument("--l", type=int)
    p.add_argument("--window", type=int)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("extremal", parents=[common])
    p.add_argument("--family", choices=["A1", "A2", "A3"], required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_extremal)

    count = sub.add_parser("count").add_subparsers(
        dest="what", required=True, parser_class=_Parser)
    p = count.add_parser("partitions", parents=[common])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, help="multiplicity bound (omit for unrestricted)")
    p.set_defaults(func=cmd_count_partitions)
    p = count.add_parser("census", parents=[common])
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=cmd_count_census)

    eg = sub.add_parser("egz").add_subparsers(
        dest="what", required=True, parser_class=_Parser)
    p = eg.add_parser("verify", parents=[common])
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=cmd_egz_verify)
    p = eg.add_parser("extremal", parents=[common])
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--orbit-reduce", action="store_true")
    p.set_defaults(func=cmd_egz_extremal)
    p = eg.add_parser("greedy", parents=[common])
    p.add_argument("--input", required=True)
    p.add_argument("--normalize", action="store_true",
                   help="map the two most frequent residues to 0 and 1 first")
    p.set_defaults(func=cmd_egz_greedy)

    lm = sub.add_parser("lemma").add_subparsers(
        dest="what", required=True, parser_class=_Parser)
    p = lm.add_parser("zero-subset", parents=[common])
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--X", required=True, help="comma separated terms")
    p.set_defaults(func=cmd_lemma_zero_subset)
    p = lm.add_parser("crt", parents=[common])
    p.add_argument("--d", required=True, help="comma separated distinct moduli")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_lemma_crt)
    p = lm.add_parser("crt-bounded", parents=[common])
    p.add_argument("--d", required=True)
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_lemma_crt_bounded)
    p = lm.add_parser("olson-probe", parents=[common])
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=cmd_lemma_olson)
    p = lm.add_parser("ap-probe", parents=[common])
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lemma_ap)

    p = sub.add_parser("verify-suite", parents=[common])
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.set_defaults(func=cmd_verify_suite)
    return parser


def _text(value: Any, indent: int = 0) -> list[str]:
    pad = " " * indent
    if isinstance(value, dict):
        if set(value) == {"p", "elements"}:
            return [pad + format_sequence(ResidueSequence.from_dict(value))]
        width = max((len(str(k)) for k in value), default=0)
        lines = []
        for k, v in value.items():
            sub = _text(v, indent + 2)
            if len(sub) <= 1:
                lines.append(f"{pad}{str(k).ljust(width)}  {sub[0].strip() if sub else '[]'}")
            else:
                lines.append(f"{pad}{k}:")
                lines.extend(sub)
        return lines
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return [pad + "[" + ", ".join(map(str, value)) + "]"]
        return [line for v in value for line in _text(v, indent)]
    return [pad + str(value)]


def emit(doc: dict, fmt: str, out: Callable[[str], None] = print) -> None:
    if fmt == "structured":
        out(json.dumps(doc, sort_keys=True))
    else:
        for line in _text(doc["result"]):
            out(line)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    command = " ".join(x for x in (args.command, getattr(args, "what", None)) if x)
    try:
        code, result = args.func(args)
    except BudgetExceeded as exc:
        code, result = EXIT_BUDGET, {"refused": str(exc), "needed": exc.needed, "budget": exc.budget}
    except PreconditionError as exc:
        code, result = EXIT_INPUT, {"error": str(exc)}
    if args.command == "verify-suite" and args.output == "text":
        print("all criteria passed" if code == EXIT_OK else "some criteria FAILED")
        return code
    emit({"command": command, "exit_code": code, "result": result}, args.output)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
