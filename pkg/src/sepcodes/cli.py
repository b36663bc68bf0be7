"""Command-line interface.

Exit status: 0 when the checked properties hold (or the command succeeded),
1 when a property fails or a target is not met, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from sepcodes import codefile
from sepcodes.bounds import bound_report
from sepcodes.construct import (
    ConstructionConfig,
    ConstructionError,
    TargetNotMet,
    adaptive_construct,
    construct,
)
from sepcodes.core import CodeError, CodeParams
from sepcodes.search import PROPERTIES, SearchTooLarge, greedy_max, max_code
from sepcodes.verify import is_frameproof, is_separable

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _ids(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


def cmd_verify(args, out) -> int:
    try:
        code = codefile.read(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CodeError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if len(code) == 0:
        print("error: code file has no codewords", file=sys.stderr)
        return EXIT_INPUT
    t = args.t
    print(f"code: q={code.params.q} n={code.params.n} size={len(code)}", file=out)
    status = EXIT_OK
    if args.property in ("separable", "both"):
        ok, w = is_separable(code, t, method=args.method)
        print(f"{t}-separable: {'yes' if ok else 'no'}", file=out)
        if not ok:
            status = EXIT_FAIL
            print(f"  witness: X={_ids(w.X)} X'={_ids(w.X_prime)}", file=out)
            print(f"  shared desc: {w.profile}", file=out)
    if args.property in ("frameproof", "both"):
        ok, w = is_frameproof(code, t)
        print(f"{t}-frameproof: {'yes' if ok else 'no'}", file=out)
        if not ok:
            status = EXIT_FAIL
            print(f"  witness: X={_ids(w.X)} c={w.c}", file=out)
            print(f"  desc(X): {w.profile}", file=out)
    return status


def _emit_code(code, args, out) -> None:
    if args.out:
        codefile.write(code, args.out)
    else:
        out.write(codefile.render(code))


def cmd_construct(args, out) -> int:
    report = sys.stderr if not args.out else out
    try:
        if args.t >= 3 and args.N is None and args.epsilon is None:
            if args.target is None:
                print("error: t >= 3 needs --N, --epsilon or --target", file=sys.stderr)
                return EXIT_INPUT
            N, result = adaptive_construct(args.q, args.n, args.t, args.target, args.seed)
        else:
            config = ConstructionConfig(
                q=args.q, n=args.n, t=args.t, N=args.N, epsilon=args.epsilon,
                seed=args.seed, max_attempts=args.attempts, target_size=args.target,
            )
            N = config.samples()
            result = construct(config)
    except TargetNotMet as exc:
        print(f"target not met: {exc}", file=report)
        print(f"best size={len(exc.code)}", file=report)
        _emit_code(exc.code, args, out)
        return EXIT_FAIL
    except (ConstructionError, CodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    code, ledger, attempts = result
    print(f"N={N}", file=report)
    print(f"Z={ledger.Z}", file=report)
    print(f"removed={len(ledger.removal_set)}", file=report)
    print(f"size={len(code)}", file=report)
    print(f"attempts={attempts}", file=report)
    report.write(bound_report(args.q, args.n, args.t).to_text())
    if args.ledger:
        with open(args.ledger, "w") as fh:
            fh.write(ledger.to_text())
    _emit_code(code, args, out)
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    try:
        rep = bound_report(args.q, args.n, args.t)
    except CodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(rep.to_json(), file=out)
    else:
        out.write(rep.to_text())
    return EXIT_OK


def cmd_search(args, out) -> int:
    try:
        params = CodeParams(args.q, args.n)
        if args.mode == "exhaustive":
            res = max_code(params, args.t, args.property, cap=args.cap, jobs=args.jobs)
            code, payload = res.witness_code, res.to_dict()
        else:
            code = greedy_max(params, args.t, args.property, seed=args.seed)
            payload = {
                "q": args.q, "n": args.n, "t": args.t, "property": args.property,
                "mode": "greedy", "seed": args.seed, "size": len(code),
                "witness_code": [list(w) for w in code.words],
            }
    except SearchTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except CodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.t >= 2:
        payload["bounds"] = bound_report(args.q, args.n, args.t).to_dict()
    if args.format == "json":
        print(json.dumps(payload), file=out)
        return EXIT_OK
    if args.mode == "exhaustive":
        print(f"optimum={res.optimum}", file=out)
        print(f"nodes={res.nodes_explored}", file=out)
    else:
        print(f"size={len(code)}", file=out)
    print("code:", file=out)
    for w in code.words:
        print("  " + " ".join(map(str, w)), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sepcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a code file")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--property", choices=("both",) + PROPERTIES, default="both")
    p.add_argument("--method", choices=("hash", "naive"), default="hash")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="random construction with expurgation")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--N", type=int)
    g.add_argument("--epsilon", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target", type=int)
    p.add_argument("--attempts", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--ledger", help="write the event ledger to this file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="evaluate closed-form bounds")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exhaustive or greedy search for large codes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--property", choices=PROPERTIES, default="separable")
    p.add_argument("--mode", choices=("exhaustive", "greedy"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=256)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
