"""Command-line interface: check, count, poly, automaton, verify, bench."""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import automaton as aut
from . import brute_force, counting, verify
from .matrix_core import BudgetExceeded, MatrixParseError, parse_matrix, violations

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _cmd_check(args) -> int:
    try:
        with open(args.file) as fh:
            M = parse_matrix(fh.read())
    except (OSError, MatrixParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    found = violations(M)
    if args.report == "json":
        print(json.dumps({"rows": M.rows, "cols": M.cols, "baxter": not found,
                          "violations": [{"kind": v.kind, "detail": str(v)} for v in found]},
                         indent=1))
    elif not found:
        print("BAXTER")
    else:
        print(f"NOT BAXTER ({len(found)} violation{'s' if len(found) != 1 else ''})")
        for v in found:
            print(f"violation: {v}")
    return EXIT_OK if not found else EXIT_FAIL


def _cmd_count(args) -> int:
    r, k = args.rows, args.cols
    if args.method == "brute":
        result = (brute_force.brute_count_by_extra(r, k, budget=args.budget) if args.by_extra
                  else brute_force.brute_count(r, k, budget=args.budget))
    elif args.method == "skeleton":
        if args.by_extra:
            extras = sorted({e for (_, _, e) in counting.skeleton_profile(r)})
            result = {e: n for e in extras
                      if (n := counting.count_from_skeletons(r, k, extra=e))}
        else:
            result = counting.count_from_skeletons(r, k)
    else:
        result = counting.dp_count_by_extra(r, k) if args.by_extra else counting.dp_count(r, k)
        if args.method == "auto":
            check = (sum(result.values()) if args.by_extra else result)
            if check != counting.count_from_skeletons(r, k):
                raise counting.ConsistencyError(f"dp and skeleton counts disagree for {r}x{k}")
    if args.by_extra:
        if args.format == "json":
            print(json.dumps({"rows": r, "cols": k,
                              "by_extra": {str(e): n for e, n in result.items()},
                              "total": sum(result.values())}))
        else:
            print(f"{'extra':>5} {'weight':>6} count")
            for e, n in result.items():
                print(f"{e:>5} {k + e:>6} {n}")
            print(f"{'total':>12} {sum(result.values())}")
    elif args.format == "json":
        print(json.dumps({"rows": r, "cols": k, "count": result}))
    else:
        print(result)
    return EXIT_OK


def _cmd_poly(args) -> int:
    r = args.rows
    p = counting.eventual_polynomial(r)
    extras = counting.extra_polynomials(r) if args.extras else None
    if args.format == "json":
        doc = {"rows": r, "polynomial": p.to_json()}
        if extras is not None:
            doc["extras"] = {str(e): q.to_json() for e, q in extras.items()}
        print(json.dumps(doc, indent=1))
        return EXIT_OK
    if extras is None:
        print(f"{p} (k >= {p.threshold})")
    else:
        for e, q in extras.items():
            print(f"extra {e}  weight k+{e}  {q} (k >= {q.threshold})")
    return EXIT_OK


def _cmd_automaton(args) -> int:
    A = aut.build_automaton(args.rows, max_rows=args.max_rows)
    text = aut.export_dot(A) if args.format == "dot" else aut.export_json(A) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.automaton:
        with open(args.automaton) as fh:
            A = aut.load_json(fh.read())
        reports = verify.structural_checks(A.rows, A)
    else:
        reports = verify.run_all(args.rows, args.max_k, budget=args.budget,
                                 include_tables=not args.skip_tables)
    if args.format == "json":
        print(verify.reports_json(reports))
    else:
        for rep in reports:
            print(rep.to_text())
        failed = sum(not rep.ok for rep in reports)
        print(f"{len(reports) - failed}/{len(reports)} checks passed")
    return EXIT_OK if all(rep.ok for rep in reports) else EXIT_FAIL


def _timed(fn):
    t = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t


def _cmd_bench(args) -> int:
    r, k = args.rows, args.cols
    rows = []
    A, dt = _timed(lambda: aut.build_automaton(r))
    rows.append(("build A_r", f"{len(A.states) - 1} states, {len(A.edges)} edges", dt))
    n, dt = _timed(lambda: counting.dp_count(r, k))
    rows.append(("dp_count", n, dt))
    n2, dt = _timed(lambda: counting.count_from_skeletons(r, k))
    rows.append(("skeletons", n2, dt))
    p, dt = _timed(lambda: counting.eventual_polynomial(r))
    rows.append(("polynomial", f"degree {p.degree}, k >= {p.threshold}", dt))
    if r * k <= args.budget:
        b, dt = _timed(lambda: brute_force.brute_count(r, k, budget=args.budget))
        rows.append(("brute_count", b, dt))
    else:
        rows.append(("brute_count", f"skipped ({r * k} cells > budget {args.budget})", None))
    width = max(len(str(v)) for _, v, _ in rows)
    print(f"{'method':<12} {'result':<{width}} seconds")
    for name, value, secs in rows:
        print(f"{name:<12} {str(value):<{width}} {'-' if secs is None else f'{secs:.3f}'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="baxter", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a matrix file against the Baxter conditions")
    p.add_argument("file")
    p.add_argument("--report", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("count", help="count r x k Baxter matrices")
    p.add_argument("-r", "--rows", type=int, required=True)
    p.add_argument("-k", "--cols", type=int, required=True)
    p.add_argument("--method", choices=["auto", "dp", "skeleton", "brute"], default="auto")
    p.add_argument("--by-extra", action="store_true")
    p.add_argument("--budget", type=int, default=brute_force.DEFAULT_BUDGET,
                   help="largest r*k the brute-force scan accepts")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("poly", help="eventual counting polynomial for r rows")
    p.add_argument("-r", "--rows", type=int, required=True)
    p.add_argument("--extras", action="store_true", help="split by number of extra 1's")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("automaton", help="export A_r")
    p.add_argument("-r", "--rows", type=int, required=True)
    p.add_argument("--format", choices=["dot", "json"], required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--max-rows", type=int, default=aut.DEFAULT_MAX_ROWS)
    p.set_defaults(func=_cmd_automaton)

    p = sub.add_parser("verify", help="run the structural and cross-validation checks")
    p.add_argument("-r", "--rows", type=int, default=5)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--budget", type=int, default=brute_force.DEFAULT_BUDGET)
    p.add_argument("--automaton", help="check a JSON automaton file instead of building A_r")
    p.add_argument("--skip-tables", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time the counting routes")
    p.add_argument("-r", "--rows", type=int, required=True)
    p.add_argument("-k", "--cols", type=int, required=True)
    p.add_argument("--budget", type=int, default=brute_force.DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    for name in ("rows", "cols"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 1:
            print(f"error: --{name} must be at least 1", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except counting.ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
