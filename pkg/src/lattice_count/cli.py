"""Command-line interface.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage
error, 3 internal consistency error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import identities, series, tau
from .covers import MAX_DEGREE, oracle_compare, oracle_count
from .quasi import InternalConsistencyError, check_stable, parity_classes, qp_eval
from .store import PolyStore, poly_entry

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

SUITES = ("string", "dilaton", "vanishing", "product", "genus0", "tau-top",
          "inversion", "euler", "series", "all")


class UsageError(ValueError):
    pass


def int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def stable_pairs(max_complexity: int):
    out = []
    for c in range(1, max_complexity + 1):
        for g in range(0, c // 2 + 2):
            n = c + 2 - 2 * g
            if n >= 1:
                out.append((g, n))
    return out


# each task is (suite, argument tuple); tasks are independent so they can
# run in worker processes
def _run_task(task, cache=None) -> dict:
    suite, args = task
    store = PolyStore(cache)
    if suite == "string":
        g, n = args
        report = identities.check_string1(g, n, store).merge(identities.check_string2(g, n, store))
        report.name = "string"
    elif suite == "dilaton":
        report = identities.check_dilaton(*args, store)
    elif suite == "vanishing":
        report = identities.check_vanishing(*args, store)
    elif suite == "product":
        report = identities.product_formula_check(args[0], 20, store)
    elif suite == "genus0":
        report = identities.check_genus0(args[0], store)
    elif suite == "tau-top":
        report = tau.check_top_degree(*args, store)
    elif suite == "euler":
        g, n = args
        report = identities.IdentityReport("euler", [[g, n]], samples=1)
        value = qp_eval(store.quasi(g, n), (0,) * n)
        expected = identities.euler_closed_form(g, n)
        if value != expected:
            report.counterexamples.append({"g": g, "n": n, "value": str(value), "closed_form": str(expected)})
    elif suite == "series":
        report = series.coefficient_check(series.fixture(*args), 12)
    elif suite == "inversion":
        report = series.inversion_check(series.fixture(*args), 20)
    else:
        raise UsageError(f"unknown suite {suite!r}")
    return report.to_dict()


def verify_tasks(suite: str, max_complexity: int) -> list:
    pairs = stable_pairs(max_complexity)
    names = SUITES[:-1] if suite == "all" else (suite,)
    tasks = []
    for name in names:
        if name in ("string", "dilaton", "vanishing", "tau-top", "euler"):
            tasks += [(name, p) for p in pairs]
        elif name in ("product", "genus0"):
            tasks += [(name, (n,)) for n in range(4, max_complexity + 3)]
        elif name in ("series", "inversion"):
            tasks += [(name, p) for p in series.FIXTURE_IDS if 2 * p[0] - 2 + p[1] <= max_complexity]
        else:
            raise UsageError(f"unknown suite {name!r}")
    return tasks


def emit(value, as_json: bool):
    if isinstance(value, Fraction):
        text = json.dumps({"value": str(value)}, sort_keys=True) if as_json else str(value)
    elif isinstance(value, (dict, list)):
        text = json.dumps(value, sort_keys=True, indent=1 if as_json else None)
    else:
        text = str(value)
    print(text)


def cmd_poly(args) -> int:
    check_stable(args.g, args.n)
    store = PolyStore(args.cache)
    ks = parity_classes(args.n) if args.k is None else [args.k]
    if args.k is not None and (args.k % 2 or not 0 <= args.k <= args.n):
        raise UsageError(f"k must be even and between 0 and {args.n}")
    entries = [poly_entry(args.g, args.n, k, store.poly(args.g, args.n, k)) for k in ks]
    store.save()
    emit({"entries": entries, "version": "1"}, args.json)
    return EXIT_OK


def cmd_eval(args) -> int:
    if any(x < 0 for x in args.b):
        raise UsageError("arguments must be nonnegative")
    store = PolyStore(args.cache)
    value = qp_eval(store.quasi(args.g, len(args.b)), args.b)
    store.save()
    emit(value, args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    tasks = verify_tasks(args.suite, args.max_complexity)
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_task, tasks, [args.cache] * len(tasks)))
    else:
        reports = [_run_task(t, args.cache) for t in tasks]
    emit(reports, True)
    return EXIT_OK if all(r["ok"] for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_oracle(args) -> int:
    if args.action == "compare":
        report = oracle_compare(args.max_total, args.max_degree)
        emit(report.to_dict(), True)
        return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE
    if args.action is not None:
        raise UsageError(f"unknown oracle action {args.action!r}")
    if args.b is None or args.genus is None:
        raise UsageError("oracle needs --b and --genus (or the 'compare' action)")
    emit(oracle_count(args.b, args.genus, args.max_degree), args.json)
    return EXIT_OK


def cmd_euler(args) -> int:
    emit(identities.euler_characteristic(args.g, args.n, PolyStore(args.cache)), args.json)
    return EXIT_OK


def cmd_tau(args) -> int:
    signs = tau.parse_signs(args.signs) if args.signs else "+" * len(args.m)
    emit(tau.tau_bracket(args.g, args.m, signs, PolyStore(args.cache)), args.json)
    return EXIT_OK


def cmd_series(args) -> int:
    g, n = args.fixture
    f = series.fixture(g, n)
    report = series.coefficient_check(f, args.order)
    emit(report.to_dict(), True)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", metavar="PATH", help="JSON polynomial cache file")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="json", action="store_true", help="JSON output for scalar results")
    mode.add_argument("--plain", dest="json", action="store_false", help="plain p/q output (default)")

    parser = argparse.ArgumentParser(prog="lattice-count",
                                     description="Exact lattice counts N_{g,n} and their identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="parity-class polynomials of N_{g,n}")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("eval", parents=[common], help="N_{g,n}(b) at nonnegative integers")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--b", type=int_list, required=True, help="comma-separated, e.g. 1,1,2")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-complexity", type=int, default=3, help="bound on 2g-2+n")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force cover count")
    p.add_argument("action", nargs="?", choices=["compare"])
    p.add_argument("--b", type=int_list)
    p.add_argument("--genus", type=int)
    p.add_argument("--max-total", type=int, default=MAX_DEGREE)
    p.add_argument("--max-degree", type=int, default=MAX_DEGREE, help="enumeration bound on sum(b)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("euler", parents=[common], help="N_{g,n}(0,...,0)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("tau", parents=[common], help="tau bracket from polynomial coefficients")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--m", type=int_list, required=True)
    p.add_argument("--signs", help="one of + or - per entry, e.g. +- or +,-")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("series", parents=[common], help="closed form against the recursion")
    p.add_argument("--fixture", type=int_list, required=True, help="g,n")
    p.add_argument("--order", type=int, default=12)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "series" and len(args.fixture) != 2:
        parser.error("--fixture takes g,n")
    if args.command == "verify" and args.max_complexity < 1:
        parser.error("--max-complexity must be at least 1")
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
