"""Compare the numba and pure-numpy pairing kernels.

Usage: python3 benchmarks/bench_kernels.py [--sizes 10000 100000] [--repeat 20]

Kernel timings run in-process (both implementations are always importable);
the end-to-end timing runs ``tgen generate`` once per backend in a fresh
interpreter with ``TGEN_DISABLE_NUMBA`` toggled.
"""

from __future__ import annotations

import argparse
import os
import statistics
import subprocess
import sys
import time

import numpy as np

from temporal_tgen import _kernels


def _median_time(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def bench_kernels(sizes, repeat, T=10):
    rows = []
    for M in sizes:
        rng = np.random.default_rng(0)
        stubs = _kernels.stub_labels([2] * (M // 2))
        perm = rng.permutation(stubs.size)
        times = rng.integers(1, T + 1, size=stubs.size // 2)
        n = M // 2
        u, v, t = _kernels.pair_stubs_numpy(stubs, perm, times)
        impls = {"numpy": (_kernels.pair_stubs_numpy, _kernels.nonsimple_summary_numpy)}
        if _kernels.USING_NUMBA:
            impls["numba"] = (_kernels.pair_stubs, _kernels.nonsimple_summary)
            _kernels.pair_stubs(stubs, perm, times)  # compile
            _kernels.nonsimple_summary(u, v, t, n, T)
        for name, (pair, summary) in impls.items():
            tp = _median_time(lambda: pair(stubs, perm, times), repeat)
            ts = _median_time(lambda: summary(u, v, t, n, T), repeat)
            rows.append((M, name, tp, ts))
    return rows


def bench_end_to_end(n, T, samples):
    out = {}
    for name, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, TGEN_DISABLE_NUMBA=flag)
        args = [sys.executable, "-m", "temporal_tgen", "generate", "--regular", f"{n},2",
                "--lifetime", str(T), "--samples", str(samples), "--seed", "1", "--jobs", "1"]
        start = time.perf_counter()
        res = subprocess.run(args, env=env, capture_output=True, check=True)
        out[name] = (time.perf_counter() - start, res.stdout)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10_000, 100_000, 1_000_000])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--e2e-n", type=int, default=20_000)
    ap.add_argument("--e2e-samples", type=int, default=20)
    args = ap.parse_args(argv)

    print(f"numba available: {_kernels.USING_NUMBA}")
    print(f"{'M':>9} {'backend':>7} {'pair_stubs':>12} {'nonsimple':>12}")
    for M, name, tp, ts in bench_kernels(args.sizes, args.repeat):
        print(f"{M:>9} {name:>7} {tp * 1e3:>10.3f}ms {ts * 1e3:>10.3f}ms")
    e2e = bench_end_to_end(args.e2e_n, 10, args.e2e_samples)
    same = e2e["numba"][1] == e2e["numpy"][1]
    for name, (secs, _) in e2e.items():
        print(f"end-to-end {name}: {secs:.2f}s for {args.e2e_samples} samples (n={args.e2e_n}, incl. startup)")
    print(f"identical output across backends: {same}")


if __name__ == "__main__":
    main()
