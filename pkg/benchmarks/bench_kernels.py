"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--degree 8] [--repeat 3]

Times the permutation-pair enumeration behind the cover oracle and the
integer polynomial evaluation behind every quasi-polynomial lookup, and
checks that the two backends return identical results.
"""
import argparse
import random
import sys
import timeit

from lattice_count._kernels import _fallback
from lattice_count.store import default_store

try:
    from lattice_count._kernels import _ckernels
except ImportError:
    _ckernels = None


def eval_workload():
    store = default_store()
    polys = [store.poly(0, 6, 2), store.poly(1, 4, 0), store.poly(2, 2, 2)]
    rng = random.Random(1)
    jobs = []
    for p in polys:
        _, terms = p.int_form()
        for _ in range(200):
            jobs.append((terms, tuple(rng.randint(0, 40) ** 2 for _ in range(p.num_vars))))
    return jobs


def run_eval(mod, jobs):
    return [mod.eval_int_terms(t, u) for t, u in jobs]


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python fallback is available")
        return 1

    jobs = eval_workload()
    rows = []
    for name, fn_c, fn_py, same in [
        (f"count_triples(d={args.degree})",
         lambda: _ckernels.count_triples(args.degree), lambda: _fallback.count_triples(args.degree),
         _ckernels.count_triples(args.degree) == _fallback.count_triples(args.degree)),
        (f"eval_int_terms x{len(jobs)}",
         lambda: run_eval(_ckernels, jobs), lambda: run_eval(_fallback, jobs),
         run_eval(_ckernels, jobs) == run_eval(_fallback, jobs)),
    ]:
        tc = best(fn_c, args.repeat)
        tp = best(fn_py, args.repeat)
        rows.append((name, tc, tp, tp / tc, same))

    print(f"{'kernel':28} {'cython s':>10} {'python s':>10} {'speedup':>8}  agree")
    for name, tc, tp, ratio, same in rows:
        print(f"{name:28} {tc:10.4f} {tp:10.4f} {ratio:8.1f}  {same}")
    return 0 if all(r[-1] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
