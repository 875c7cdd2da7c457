"""Benchmark the exhaustive-scan kernels: numba vs pure numpy.

Times scan_solution_ids on a few standard tables with each backend forced,
then (optionally) shows worker scaling for the numba path.  The production
code picks a backend automatically (or honors CYBE_BACKEND); this script
passes the backend explicitly so both paths are exercised regardless of the
environment.

Usage:
    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --repeat 5 --workers 1,2,4
    python3 benchmarks/bench_backends.py --skip-numpy   # only the jit path
"""

import argparse
import os
import time

from cybe import (
    PrimeField,
    candidate_count,
    family_ii,
    family_iii,
    family_vi,
    scan_solution_ids,
    solvable_table,
)

try:
    import numba  # noqa: F401
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def workloads():
    F5 = PrimeField(5)
    return [
        ("vi / F_5", family_vi(F5)),
        ("ii(1,1) / F_5", family_ii(F5.one(), F5.one(), F5)),
        ("iii / F_5", family_iii(F5)),
        ("solvable(1,2) / F_5", solvable_table(F5.from_int(1), F5.from_int(2), F5)),
    ]


def best_of(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="timed repetitions per cell, best is reported")
    ap.add_argument("--workers", default="1",
                    help="comma-separated worker counts for the scaling "
                         "section, e.g. 1,2,4")
    ap.add_argument("--skip-numpy", action="store_true",
                    help="skip the pure-numpy column (it is the slow one)")
    args = ap.parse_args()
    worker_counts = [int(w) for w in args.workers.split(",") if w]

    if not HAS_NUMBA:
        print("numba not importable: only the numpy column will run")

    print(f"repeat={args.repeat}, cpus={os.cpu_count()}, "
          f"CYBE_BACKEND={os.environ.get('CYBE_BACKEND', '(unset)')!r} "
          f"(ignored here, backends are forced)")
    print()
    header = f"{'table':<22}{'candidates':>12}{'numpy':>12}{'numba':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, L in workloads():
        total = candidate_count(L.n, L.field.p)
        if HAS_NUMBA:
            # first call includes jit compilation; warm up before timing
            scan_solution_ids(L, backend="numba")
        t_np = None
        if not args.skip_numpy:
            t_np = best_of(lambda: scan_solution_ids(L, backend="numpy"),
                           args.repeat)
        t_nb = None
        if HAS_NUMBA:
            t_nb = best_of(lambda: scan_solution_ids(L, backend="numba"),
                           args.repeat)
        cols = [f"{label:<22}", f"{total:>12,}"]
        cols.append(f"{t_np:>11.3f}s" if t_np is not None else f"{'-':>12}")
        cols.append(f"{t_nb:>11.3f}s" if t_nb is not None else f"{'-':>12}")
        if t_np and t_nb:
            cols.append(f"{t_np / t_nb:>9.1f}x")
        else:
            cols.append(f"{'-':>10}")
        print("".join(cols))

    if HAS_NUMBA and len(worker_counts) > 1:
        print()
        print("worker scaling, numba backend, ii(1,1) / F_5 "
              "(threads share one process; gains need free cores):")
        F5 = PrimeField(5)
        L = family_ii(F5.one(), F5.one(), F5)
        base = None
        for w in worker_counts:
            t = best_of(lambda: scan_solution_ids(L, workers=w,
                                                  backend="numba"),
                        args.repeat)
            base = base or t
            print(f"  workers={w:<3} {t:8.3f}s  ({base / t:.2f}x vs "
                  f"workers={worker_counts[0]})")


if __name__ == "__main__":
    main()
