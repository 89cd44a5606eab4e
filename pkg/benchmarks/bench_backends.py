#!/usr/bin/env python3
"""Compare the compiled (numba) and pure-numpy linear-algebra backends.

Every workload builds fresh objects per run so nothing is served from a
cache, takes the best wall-clock time of --repeats runs per backend, and
checks that both backends return identical results. JIT compilation is
paid once per backend (kernels.warmup) before anything is timed.

Run:  python3 benchmarks/bench_backends.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from coldec import LinearCode, PrimeField, decode, kernels
from coldec.ideals import min_distance

DEMO_G = [
    [1, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 1],
]
DEMO_W = [0, 1, 1, 1, 0, 0]

RREF_SIZES = [(64, 96), (128, 192), (256, 384)]
RREF_P = 251

MID_P, MID_K, MID_N = 3, 6, 14
MID_SEED = 424242


def mid_code_matrix() -> np.ndarray:
    rng = np.random.default_rng(MID_SEED)
    while True:
        G = rng.integers(0, MID_P, size=(MID_K, MID_N))
        if np.any(np.all(G == 0, axis=0)):
            continue
        if kernels.rank_of_rows(G, MID_P) == MID_K:
            return G


def best_of(fn, repeats: int):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def build_workloads():
    rng = np.random.default_rng(7)
    rref_inputs = [rng.integers(0, RREF_P, size=s) for s in RREF_SIZES]
    mid_G = mid_code_matrix()
    workloads = []
    for a, (r, c) in zip(rref_inputs, RREF_SIZES):
        workloads.append(
            (f"rref {r}x{c} GF({RREF_P})", lambda a=a: kernels.rref_array(a, RREF_P)[1])
        )

    def run_min_distance():
        C = LinearCode(PrimeField(MID_P), mid_G)  # fresh: no cached distance
        return min_distance(C)

    workloads.append((f"min_distance [{MID_N},{MID_K}] GF({MID_P})", run_min_distance))

    def run_decode():
        C = LinearCode(PrimeField(2), DEMO_G)
        res = decode(C, DEMO_W)
        return (str(res.status), res.error.tolist())

    workloads.append(("decode worked example (cold)", run_decode))

    steady = LinearCode(PrimeField(2), DEMO_G)
    min_distance(steady)  # prime the cached distance, as a decoding stream would

    def run_decode_steady():
        res = decode(steady, DEMO_W)
        return (str(res.status), res.error.tolist())

    workloads.append(("decode worked example (steady)", run_decode_steady))
    return workloads


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5, help="runs per timing (best-of)")
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if kernels.NUMBA_AVAILABLE else [])
    if "numba" not in backends:
        print("numba unavailable: timing the numpy backend only")

    results: dict[str, dict[str, float]] = {}
    outputs: dict[str, dict[str, object]] = {}
    for backend in backends:
        previous = kernels.select_backend(backend)
        try:
            kernels.warmup()
            for name, fn in build_workloads():
                elapsed, out = best_of(fn, args.repeats)
                results.setdefault(name, {})[backend] = elapsed
                outputs.setdefault(name, {})[backend] = out
        finally:
            kernels.select_backend(previous)

    for name, outs in outputs.items():
        vals = list(outs.values())
        assert all(v == vals[0] for v in vals[1:]), f"backend mismatch in {name}: {outs}"

    width = max(len(name) for name in results)
    header = f"{'workload'.ljust(width)}  " + "".join(f"{b + ' (ms)':>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, times in results.items():
        row = name.ljust(width) + "  "
        row += "".join(f"{times[b] * 1000:>12.3f}" for b in backends)
        if len(backends) == 2:
            row += f"{times['numpy'] / times['numba']:>9.2f}x"
        print(row)

    decode_name = "decode worked example (steady)"
    for backend in backends:
        rate = 1.0 / results[decode_name][backend]
        print(f"steady-state decode throughput ({backend}): {rate:,.0f} words/s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
