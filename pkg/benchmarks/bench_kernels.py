"""Benchmark the array kernels: numba vs pure numpy.

    python benchmarks/bench_kernels.py [--max-n 8] [--repeat 3]

Both paths live in ``cosetlab._accel``; the script calls the ``*_nb`` and
``*_np`` twins directly so a single process can time both, and checks that
they agree before reporting.
"""

import argparse
import time

import numpy as np

from cosetlab import _accel
from cosetlab.catalog import symmetric
from cosetlab.group import CosetSide, coset_labels, subgroup
from cosetlab.perm import parse_cycles


def best_of(fn, repeat):
    fn()  # warmup / JIT compile
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best * 1000


def cases(max_n):
    for n in range(5, max_n + 1):
        G = symmetric(n)
        small = subgroup(G, [parse_cycles("(1 2)", n)])
        big = subgroup(G, [parse_cycles("(1 2)", n), parse_cycles("(1 " + " ".join(map(str, range(2, n))) + ")", n)])
        yield f"S{n}", G, small, big


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba not importable; nothing to compare")

    print(f"{'kernel':<28}{'case':<8}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, G, small, big in cases(args.max_n):
        t = np.ascontiguousarray(G.table)
        rows = _accel.compose_np(t, t[::-1].copy())
        lab, reps = coset_labels(G, small, CosetSide.LEFT_OF_H)
        jobs = [
            ("lookup |G|", lambda: _accel.lookup_np(t, rows), lambda: _accel.lookup_nb(t, rows)),
            ("coset_partition |G:S_{n-1}|",
             lambda: _accel.coset_partition_np(t, big.table, True),
             lambda: _accel.coset_partition_nb(t, big.table, True)),
            ("coset_partition |G:C2|",
             lambda: _accel.coset_partition_np(t, small.table, False),
             lambda: _accel.coset_partition_nb(t, small.table, False)),
            ("double_coset_partition",
             lambda: _accel.double_coset_partition_np(t, lab, reps, big.table),
             lambda: _accel.double_coset_partition_nb(t, lab, reps, big.table)),
        ]
        for label, f_np, f_nb in jobs:
            a, b = f_np(), f_nb()
            same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, tuple) else np.array_equal(a, b)
            if not same:
                raise SystemExit(f"{label} on {name}: numpy and numba disagree")
            tn, tj = best_of(f_np, args.repeat), best_of(f_nb, args.repeat)
            print(f"{label:<28}{name:<8}{tn:>12.2f}{tj:>12.2f}{tn / tj:>9.1f}x")


if __name__ == "__main__":
    main()
