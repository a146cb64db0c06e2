"""Benchmark the numba kernels against the pure-numpy fallback.

Spawns itself once per backend (selection happens at import time via the
SLOCC4_BACKEND environment variable) and prints a timing table for the
batch kernels plus an end-to-end classification macro-benchmark.

Usage: python benchmarks/bench_kernels.py [--batch N] [--classify N]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run_workloads(batch_size: int, classify_count: int) -> dict:
    import numpy as np

    from slocc4 import apply_slocc, classify4, make_canonical
    from slocc4.backend import BACKEND
    from slocc4.canonical import FamilySpec, random_slocc
    from slocc4.cli import run_fuzz_empty
    from slocc4.kernels import ghz_invariant_batch, tri_codes_batch
    from slocc4.oracle import rank_codes_batch

    rng = np.random.default_rng(0)
    batch = rng.standard_normal((batch_size, 8)) + 1j * rng.standard_normal(
        (batch_size, 8)
    )

    # warm-up (includes JIT compilation when numba is active)
    ghz_invariant_batch(batch[:10])
    tri_codes_batch(batch[:10], 1e-9)
    rank_codes_batch(batch[:10])

    results = {"backend": BACKEND}
    results["ghz_invariant_batch"] = _time(lambda: ghz_invariant_batch(batch))
    results["tri_codes_batch"] = _time(lambda: tri_codes_batch(batch, 1e-9))
    results["oracle_rank_codes"] = _time(lambda: rank_codes_batch(batch))

    state = make_canonical(FamilySpec("WW_W"))
    classify4(state)
    images = [
        apply_slocc(state, random_slocc(4, 1e3, rng)) for _ in range(classify_count)
    ]

    def classify_all():
        for img in images:
            classify4(img)

    results["classify4_loop"] = _time(classify_all, repeats=3)
    results["fuzz_100_trials"] = _time(lambda: run_fuzz_empty(100, seed=1), repeats=3)
    return results


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--batch", type=int, default=200_000,
                        help="rows per kernel batch (default 200000)")
    parser.add_argument("--classify", type=int, default=500,
                        help="states in the classify4 macro-benchmark")
    parser.add_argument("--inner", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.inner:
        print(json.dumps(run_workloads(args.batch, args.classify)))
        return 0

    rows = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ, SLOCC4_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, __file__, "--inner",
             "--batch", str(args.batch), "--classify", str(args.classify)],
            capture_output=True, text=True, env=env,
        )
        if proc.returncode != 0:
            print(f"{backend} run failed:\n{proc.stderr}", file=sys.stderr)
            continue
        rows[backend] = json.loads(proc.stdout.strip().splitlines()[-1])

    if not rows:
        return 1

    names = [k for k in next(iter(rows.values())) if k != "backend"]
    width = max(map(len, names)) + 2
    print(f"\nbatch={args.batch}, classify4 states={args.classify}")
    header = f"{'workload':<{width}}" + "".join(f"{b:>12}" for b in rows)
    if len(rows) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name in names:
        line = f"{name:<{width}}"
        for backend in rows:
            line += f"{rows[backend][name] * 1e3:>10.2f}ms"
        if len(rows) == 2:
            numba_t = rows.get("numba", {}).get(name)
            numpy_t = rows.get("numpy", {}).get(name)
            if numba_t and numpy_t:
                line += f"{numpy_t / numba_t:>9.2f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
