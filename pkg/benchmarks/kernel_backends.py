"""Compare the numba and numpy support-counting backends.

Usage: python3 benchmarks/kernel_backends.py [--transactions N] [--items U]
       [--candidates M] [--reps R]
"""
import argparse
import statistics
import time

import numpy as np

from maxminer import _kernels


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--transactions", type=int, default=20000)
    p.add_argument("--items", type=int, default=24)
    p.add_argument("--candidates", type=int, default=4000)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    rng = np.random.default_rng(args.seed)
    matrix = (rng.random((args.transactions, args.items))
              < args.density).astype(np.uint8)
    cands = (rng.random((args.candidates, args.items))
             < args.density).astype(np.uint8)

    print(f"matrix {matrix.shape}, candidates {cands.shape}, "
          f"reps {args.reps} (median after warm-up)")
    results = {}
    for backend in _kernels.available_backends():
        _kernels.support_counts_using(backend, matrix, cands)  # warm-up/JIT
        times = []
        for _ in range(args.reps):
            t0 = time.perf_counter()
            out = _kernels.support_counts_using(backend, matrix, cands)
            times.append(time.perf_counter() - t0)
        results[backend] = out
        print(f"{backend:>6}: {statistics.median(times):.4f}s")

    if len(results) == 2:
        assert np.array_equal(results["numba"], results["numpy"]), \
            "backends disagree"
        print("backends agree on all counts")


if __name__ == "__main__":
    main()
