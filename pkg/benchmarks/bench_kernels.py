#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twin.

Usage: python benchmarks/bench_kernels.py [--max-dim 12] [--compose 20000]

Times basis enumeration per dimension and a bulk run of random
compositions, for whichever of the two kernel modules are importable.
"""

from __future__ import annotations

import argparse
import random
import time

from tlkit import _kernels_py

KERNELS = {"python": _kernels_py}
try:
    from tlkit import _kernels

    KERNELS["compiled"] = _kernels
except ImportError:
    pass


def _time(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def bench_enumerate(max_dim: int) -> None:
    print(f"{'enumerate':<12}" + "".join(f"{name:>12}" for name in KERNELS))
    for n in range(8, max_dim + 1):
        times = [_time(lambda m=mod: m.enumerate_pairings(n)) for mod in KERNELS.values()]
        cells = "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        print(f"  dim {n:<7}{cells}")


def bench_count(max_dim: int) -> None:
    print(f"{'count':<12}" + "".join(f"{name:>12}" for name in KERNELS))
    for n in range(8, max_dim + 1):
        times = [_time(lambda m=mod: m.count_pairings(n)) for mod in KERNELS.values()]
        cells = "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        print(f"  dim {n:<7}{cells}")


def bench_compose(pairs: int) -> None:
    n = 6
    basis = _kernels_py.enumerate_pairings(n)
    rng = random.Random(0)
    sample = [(rng.choice(basis), rng.choice(basis)) for _ in range(pairs)]
    print(
        f"{f'compose x{pairs}':<12}" + "".join(f"{name:>12}" for name in KERNELS)
    )
    times = [
        _time(lambda m=mod: [m.compose_pairings(a, b, n) for a, b in sample])
        for mod in KERNELS.values()
    ]
    cells = "".join(f"{t * 1e3:>10.1f}ms" for t in times)
    print(f"  dim {n:<7}{cells}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-dim", type=int, default=12)
    parser.add_argument("--compose", type=int, default=20_000)
    args = parser.parse_args()
    print("available kernels:", ", ".join(KERNELS))
    bench_enumerate(args.max_dim)
    bench_count(args.max_dim)
    bench_compose(args.compose)


if __name__ == "__main__":
    main()
