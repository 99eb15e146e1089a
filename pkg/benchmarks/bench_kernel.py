"""Compiled kernel vs pure-Python fallback timings.

Runs the fraction-free kernels on identical seeded inputs through both
backends in-process, then times the full constructive solver end to end
in subprocesses (TVPM_PURE_PYTHON=1 forces the fallback).  Prints one
table; no assertions.

Usage: python3 benchmarks/bench_kernel.py
"""

import os
import random
import subprocess
import sys
import time

from tvpm import _kernel_py

try:
    from tvpm import _kernel
except ImportError:
    _kernel = None


def rand_matrix(rng, rows, cols, lo=-999, hi=999):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def time_op(fn, repeat):
    best = None
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def kernel_rows():
    rng = random.Random(12345)
    det_m = rand_matrix(rng, 12, 12)
    solve_m = rand_matrix(rng, 10, 10)
    solve_b = [rng.randint(-999, 999) for _ in range(10)]
    thin = rand_matrix(rng, 9, 14)
    rank_m = [row[:] for row in thin] + [
        [3 * a - 2 * b for a, b in zip(thin[0], thin[1])]]

    cases = [
        ("ff_det 12x12 x100",
         lambda k: (lambda: k.ff_det([row[:] for row in det_m])), 100),
        ("ff_solve 10x10 x100",
         lambda k: (lambda: k.ff_solve([row[:] for row in solve_m],
                                       solve_b[:])), 100),
        ("ff_rank 10x14 x100",
         lambda k: (lambda: k.ff_rank([row[:] for row in rank_m])), 100),
    ]
    for label, make, repeat in cases:
        py = time_op(make(_kernel_py), repeat)
        if _kernel is None:
            yield (label, None, py)
        else:
            cy = time_op(make(_kernel), repeat)
            yield (label, cy, py)


SOLVE_CODE = (
    "import time\n"
    "from tvpm.gen import random_config, separated_subset\n"
    "from tvpm.sarkaria import tverberg_pm\n"
    "from tvpm import kernel\n"
    "t0 = time.perf_counter()\n"
    "for s in range(5):\n"
    "    cfg = random_config(3, 4, 42 + s)\n"
    "    m = separated_subset(cfg, 3, 42 + s)\n"
    "    tverberg_pm(cfg, m, check_sep=False)\n"
    "print('%s %.4f' % (kernel.BACKEND, time.perf_counter() - t0))\n"
)

SEARCH_CODE = (
    "import time\n"
    "from tvpm.gen import random_config\n"
    "from tvpm.search import search_exact_k\n"
    "from tvpm import kernel\n"
    "t0 = time.perf_counter()\n"
    "for s in range(20):\n"
    "    search_exact_k(random_config(2, 3, 42 + s), 5)\n"
    "print('%s %.4f' % (kernel.BACKEND, time.perf_counter() - t0))\n"
)


def subprocess_elapsed(code, pure):
    env = dict(os.environ)
    if pure:
        env["TVPM_PURE_PYTHON"] = "1"
    else:
        env.pop("TVPM_PURE_PYTHON", None)
    best = None
    backend = None
    for _ in range(2):
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True)
        backend, elapsed = out.stdout.split()
        elapsed = float(elapsed)
        best = elapsed if best is None else min(best, elapsed)
    return backend, best


def main():
    print("%-28s %10s %10s %9s" % ("case", "cython", "python", "speedup"))
    for label, cy, py in kernel_rows():
        if cy is None:
            print("%-28s %10s %10.4fs %9s" % (label, "n/a", py, "-"))
        else:
            print("%-28s %9.4fs %9.4fs %8.1fx" % (label, cy, py, py / cy))
    backend = None
    for label, code in (("tverberg_pm d=3 r=4 x5", SOLVE_CODE),
                        ("search k=5 d=2 r=3 x20", SEARCH_CODE)):
        backend, fast = subprocess_elapsed(code, pure=False)
        _, slow = subprocess_elapsed(code, pure=True)
        if backend == "cython":
            print("%-28s %9.4fs %9.4fs %8.1fx"
                  % (label, fast, slow, slow / fast))
        else:
            print("%-28s %10s %10.4fs %9s" % (label, "n/a", slow, "-"))
    print("in-process backend: %s; subprocess backend without override: %s"
          % ("cython" if _kernel else "python", backend))


if __name__ == "__main__":
    main()
