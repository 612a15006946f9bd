"""Compare the compiled kernels against the NumPy fallback.

Times the Jacobi eigensolver and the ternary partition enumeration on a
few sizes and prints one table row per (kernel, size, backend). Runs
fine when only the fallback is available.
"""

import argparse
import time

import numpy as np

from stepgraphon._kernels import fallback


def load_backends():
    backends = [("fallback", fallback)]
    try:
        from stepgraphon._kernels import _native
    except ImportError:
        return backends
    return [("native", _native)] + backends


def time_call(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def symmetric_matrix(rng, n):
    a = rng.standard_normal((n, n))
    return (a + a.T) / 2.0


def kernel_matrix(rng, m):
    a = rng.uniform(0.0, 1.0, (m, m))
    k = np.round((a + a.T) / 2.0, 1)
    np.fill_diagonal(k, 0.0)
    return k


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jacobi-sizes", type=int, nargs="+", default=[64, 128, 256])
    parser.add_argument("--ternary-sizes", type=int, nargs="+", default=[8, 10, 12])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = load_backends()
    if len(backends) == 1:
        print("compiled backend not available; timing the fallback only")
    rng = np.random.default_rng(args.seed)

    rows = []
    for n in args.jacobi_sizes:
        a = symmetric_matrix(rng, n)
        for name, impl in backends:
            rows.append(("jacobi_eigh", n, name, time_call(impl.jacobi_eigh, a, repeats=args.repeats)))
    for m in args.ternary_sizes:
        k = kernel_matrix(rng, m)
        for name, impl in backends:
            rows.append(("ternary_min_ratio", m, name, time_call(impl.ternary_min_ratio, k, repeats=args.repeats)))

    print(f"{'kernel':<20}{'size':>6}{'backend':>10}{'best of ' + str(args.repeats):>14}")
    for kernel, size, name, seconds in rows:
        print(f"{kernel:<20}{size:>6}{name:>10}{seconds * 1e3:>12.2f}ms")

    if len(backends) == 2:
        print()
        for kernel in ("jacobi_eigh", "ternary_min_ratio"):
            pairs = {}
            for k, size, name, seconds in rows:
                if k == kernel:
                    pairs.setdefault(size, {})[name] = seconds
            for size, by_name in sorted(pairs.items()):
                speedup = by_name["fallback"] / by_name["native"]
                print(f"{kernel} n={size}: native is {speedup:.1f}x the fallback")


if __name__ == "__main__":
    main()
