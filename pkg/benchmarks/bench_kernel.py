"""Timing comparison of the compiled and pure-Python word kernels.

Run as: python3 benchmarks/bench_kernel.py [--sizes 32,256,2048]
Both backends are loaded directly (bypassing the import-time selection)
and checked for agreement on every input before timing.
"""

from __future__ import annotations

import argparse
import random
import time

from cbgraph import _kernel_py
from cbgraph.surface import standard_triangulation

try:
    from cbgraph import _kernel
except ImportError:
    _kernel = None


def random_word(rng, tri, length):
    # Random valid dual path: walk the dual graph without backtracking.
    word = []
    t, s = 0, 0
    for _ in range(length):
        t2, s2 = tri.opposite(t, s)
        word.append(3 * t2 + s2)
        t = t2
        s = (s2 + rng.choice((1, 2))) % 3
    return tuple(word)


def bench(fn, args_list, repeat=5):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="32,256,2048")
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=7)
    opts = parser.parse_args()

    if _kernel is None:
        print("compiled kernel not built; nothing to compare")
        return

    tri = standard_triangulation(2)
    rng = random.Random(opts.seed)
    names = ("cyclic_reduce", "min_rotation", "canonical_cyclic")
    print(f"{'op':<18}{'len':>6}{'python':>12}{'cython':>12}{'speedup':>9}")
    for size in (int(s) for s in opts.sizes.split(",")):
        words = [random_word(rng, tri, size) for _ in range(opts.count)]
        for name in names:
            py = getattr(_kernel_py, name)
            cy = getattr(_kernel, name)
            if name == "min_rotation":
                args = [(w,) for w in words]
            else:
                args = [(w, tri.mate) for w in words]
            for a in args:
                if py(*a) != cy(*a):
                    raise SystemExit(f"backend mismatch in {name} on {a[0][:8]}...")
            tp = bench(py, args)
            tc = bench(cy, args)
            print(f"{name:<18}{size:>6}{tp:>11.4f}s{tc:>11.4f}s{tp / tc:>8.2f}x")


if __name__ == "__main__":
    main()
