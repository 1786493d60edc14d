"""Time the compiled row-reduction kernels against the pure-Python ones.

    python3 benchmarks/bench_rref.py [--size N] [--repeat R]
"""

import argparse
import random
import timeit
from fractions import Fraction

from kirlie import _pykernels

try:
    from kirlie import _ckernels
except ImportError:
    _ckernels = None


def random_rows(rng, n, p=None):
    if p is None:
        return [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)]


def bench(kernel, rows, ncols, p, repeat):
    def run():
        copy = [list(r) for r in rows]
        if p is None:
            kernel.rref_generic(copy, ncols)
        else:
            kernel.rref_mod_p(copy, ncols, p)

    return min(timeit.repeat(run, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, nargs="+", default=[12, 24, 48])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--prime", type=int, default=10007)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` with Cython available")
    rng = random.Random(0)
    print(f"{'field':>8} {'n':>4} {'python (s)':>12} {'cython (s)':>12} {'speedup':>8}")
    for n in args.size:
        for label, p in ((f"F_{args.prime}", args.prime), ("Q", None)):
            rows = random_rows(rng, n, p)
            py = bench(_pykernels, rows, n, p, args.repeat)
            if _ckernels is None:
                print(f"{label:>8} {n:>4} {py:12.5f} {'-':>12} {'-':>8}")
                continue
            cy = bench(_ckernels, rows, n, p, args.repeat)
            print(f"{label:>8} {n:>4} {py:12.5f} {cy:12.5f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
