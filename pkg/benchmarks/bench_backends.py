#!/usr/bin/env python3
"""Benchmark the compiled arithmetic kernel against the pure-Python twin.

Micro-benchmarks run both kernels in-process; the end-to-end case (a
duality grid, dominated by rational arithmetic) runs the CLI in a
subprocess with KNWZNW_PURE toggled.

    python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import os
import subprocess
import sys
import time

from knwznw._kernel import _pure

try:
    from knwznw._kernel import _fast
except ImportError:
    _fast = None


def timeit(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_rat_sum(kernel):
    Rat = kernel.Rat

    def run():
        acc = Rat(0)
        for k in range(1, 1500):
            acc = acc + Rat(1, k * k)
        return acc

    return run


def bench_rat_mul(kernel):
    Rat = kernel.Rat
    xs = [Rat(k, k + 7) for k in range(1, 400)]

    def run():
        acc = Rat(1)
        for x in xs:
            acc = acc * x
        return acc

    return run


def bench_poly_mul(kernel):
    Rat = kernel.Rat
    a = tuple(Rat(k + 1, 3) for k in range(60))
    b = tuple(Rat(2 * k - 5, 7) for k in range(60))

    def run():
        for _ in range(20):
            kernel.poly_mul(a, b)

    return run


def bench_poly_divmod(kernel):
    Rat = kernel.Rat
    a = tuple(Rat(k + 1) for k in range(80))
    b = tuple(Rat(k - 3) for k in range(1, 12))

    def run():
        for _ in range(50):
            kernel.poly_divmod(a, b)

    return run


MICRO = [
    ("rational sums", bench_rat_sum),
    ("rational products", bench_rat_mul),
    ("polynomial products", bench_poly_mul),
    ("polynomial divmod", bench_poly_divmod),
]


def bench_cli_duality(pure):
    env = dict(os.environ)
    env["KNWZNW_PURE"] = "1" if pure else "0"
    cmd = [sys.executable, "-m", "knwznw.cli", "verify", "--suite", "basis"]
    t0 = time.perf_counter()
    subprocess.run(cmd, check=True, capture_output=True, env=env)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-cli", action="store_true")
    args = ap.parse_args()

    if _fast is None:
        print("compiled kernel not available; showing the pure kernel only")
    rows = []
    for name, factory in MICRO:
        t_pure = timeit(factory(_pure), args.repeat)
        t_fast = timeit(factory(_fast), args.repeat) if _fast else None
        rows.append((name, t_pure, t_fast))

    if not args.skip_cli:
        t_pure = bench_cli_duality(pure=True)
        t_fast = bench_cli_duality(pure=False) if _fast else None
        rows.append(("basis suite via CLI (subprocess)", t_pure, t_fast))

    width = max(len(r[0]) for r in rows)
    print("%-*s  %10s  %10s  %8s" % (width, "task", "python", "cython",
                                     "speedup"))
    for name, t_pure, t_fast in rows:
        if t_fast is None:
            print("%-*s  %9.4fs  %10s  %8s" % (width, name, t_pure, "-", "-"))
        else:
            print("%-*s  %9.4fs  %9.4fs  %7.2fx"
                  % (width, name, t_pure, t_fast, t_pure / t_fast))


if __name__ == "__main__":
    main()
