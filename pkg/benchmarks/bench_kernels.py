"""Compare the numba and numpy implementation of every kernel.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Kernels are timed in-process through ``_kernels.implementations`` (the jit
path is warmed up first so compilation is not counted). The end-to-end
rows run a small workload in a subprocess with and without
GOODINT_DISABLE_NUMBA=1.
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from goodint import _kernels as K
from goodint.galois import field_make, least_irreducible


def kernel_cases():
    rng = np.random.default_rng(0)
    mod = np.asarray(least_irreducible(2, 120), dtype=np.int64)
    x, y = rng.integers(0, 2, 120), rng.integers(0, 2, 120)
    yield "polymulmod F_2^120", "polymulmod", lambda jit: (x, y, mod, K.reduction_matrix(mod, 2, needed=not jit), 2)

    mat = rng.integers(0, 3, (60, 61))
    yield "rref_mod_p 60x61 F_3", "rref_mod_p", lambda jit: (mat, 3)

    f16 = field_make(2, 4)
    tmat = rng.integers(0, 16, (30, 31))
    yield "rref_table 30x31 F_16", "rref_table", lambda jit: (tmat, f16.add_t, f16.mul_t, f16.neg_t, f16.inv_t)

    f, g = rng.integers(0, 16, 80), rng.integers(0, 16, 80)
    yield "polymul_table deg 80 F_16", "polymul_table", lambda jit: (f, g, f16.add_t, f16.mul_t, f16.coords, 2)

    yield "coset_reps N=99999 q=2", "coset_reps", lambda jit: (99999, 2)

    a, b = rng.integers(0, 5, 200), rng.integers(0, 5, 150)
    a[-1] = b[-1] = 1
    yield "polygcd_mod_p deg 200 F_5", "polygcd_mod_p", lambda jit: (a, b, 5)

    yield "witness_scan ell=999983", "witness_scan", lambda jit: (2, 3, 999983, 999983, 0)


END_TO_END = {
    "factor + count, n <= 120 over F_2..F_5": (
        "from goodint.codes import count_lcd\n"
        "for p in (2, 3, 5):\n"
        "    for n in range(1, 121):\n"
        "        count_lcd(n, p)\n"
    ),
}


def run(repeat: int) -> None:
    print(f"{'kernel':32s} {'numba [ms]':>11s} {'numpy [ms]':>11s} {'speedup':>8s}")
    for label, name, make_args in kernel_cases():
        times = []
        for jit in (True, False):
            fn = K.implementations(name, jit)
            args = make_args(jit)
            fn(*args)  # warm-up / compile
            times.append(min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat)) * 1e3)
        print(f"{label:32s} {times[0]:11.3f} {times[1]:11.3f} {times[1] / times[0]:7.1f}x")

    print()
    print(f"{'end to end (subprocess)':40s} {'numba [s]':>10s} {'numpy [s]':>10s}")
    for label, code in END_TO_END.items():
        row = []
        for disable in ("0", "1"):
            env = dict(os.environ, GOODINT_DISABLE_NUMBA=disable)
            t = timeit.default_timer()
            subprocess.run([sys.executable, "-c", code], env=env, check=True)
            row.append(timeit.default_timer() - t)
        print(f"{label:40s} {row[0]:10.2f} {row[1]:10.2f}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        sys.exit("numba is not installed; nothing to compare")
    run(args.repeat)


if __name__ == "__main__":
    main()
