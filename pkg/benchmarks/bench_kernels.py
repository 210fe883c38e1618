#!/usr/bin/env python3
"""Benchmark the JIT-compiled kernels against the pure-numpy fallback.

The kernel path is fixed when ``reedcheck._kernels`` is imported, so the
orchestrator (default mode) runs every workload in two subprocesses, one
with REEDCHECK_JIT=1 and one with REEDCHECK_JIT=0, and prints a
comparison table:

    python benchmarks/bench_kernels.py

Kernels are warmed up on tiny inputs before timing, so JIT compilation
time is excluded from the measurements.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _workload_enumerate() -> int:
    """Orderly enumeration of all isomorphism classes up to order 7."""
    from reedcheck.enumeration import enumerate_graphs

    total = 0
    for n in range(1, 8):
        total += sum(1 for _ in enumerate_graphs(n))
    return total


def _workload_invariants() -> int:
    """Exact chi and omega over every graph of order 6."""
    from reedcheck.enumeration import enumerate_graphs
    from reedcheck.invariants import chromatic_number, clique_number

    acc = 0
    for g in enumerate_graphs(6):
        acc += chromatic_number(g) + clique_number(g)
    return acc


def _workload_canonical() -> int:
    """Full canonical labeling of every graph of order 6."""
    from reedcheck.enumeration import enumerate_graphs
    from reedcheck.graph import canonical_form

    return sum(len(canonical_form(g)) for g in enumerate_graphs(6))


def _workload_search() -> int:
    """Pruned counterexample search over one class up to order 7."""
    from reedcheck.enumeration import counterexample_search
    from reedcheck.patterns import class_by_name

    return counterexample_search(class_by_name("class4"), 7).graphs_checked


WORKLOADS = {
    "enumerate<=7": _workload_enumerate,
    "chi+omega n=6": _workload_invariants,
    "canonical n=6": _workload_canonical,
    "search class4<=7": _workload_search,
}


def _warmup() -> None:
    import numpy as np

    from reedcheck import _kernels

    adj = np.zeros(3, dtype=np.uint64)
    adj[0], adj[1] = np.uint64(2), np.uint64(1)
    _kernels.max_clique(adj, 3, 1000)
    _kernels.k_color(adj, np.ones(3, dtype=np.int64), 3, 2, 1000, np.zeros(3, dtype=np.int64))
    _kernels.canon_search(adj, 3, 1, np.zeros(3, dtype=np.int64))
    _kernels.canon_search(adj, 3, 0, np.zeros(3, dtype=np.int64))
    _kernels.canonical_child_masks(adj, 4, np.zeros(8, dtype=np.uint8))


def run_workloads() -> dict:
    from reedcheck import _kernels

    _warmup()
    timings = {"using_numba": _kernels.USING_NUMBA, "workloads": {}}
    for name, fn in WORKLOADS.items():
        t0 = time.perf_counter()
        checksum = fn()
        timings["workloads"][name] = {
            "seconds": time.perf_counter() - t0,
            "checksum": checksum,
        }
    return timings


def _spawn(jit: bool) -> dict | None:
    env = dict(os.environ)
    env["REEDCHECK_JIT"] = "1" if jit else "0"
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--run"],
        env=env,
        capture_output=True,
        text=True,
    )
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        return None
    return json.loads(proc.stdout.strip().splitlines()[-1])


def orchestrate() -> int:
    jit = _spawn(jit=True)
    pure = _spawn(jit=False)
    if pure is None:
        print("pure-numpy run failed", file=sys.stderr)
        return 1
    if jit is None:
        print("JIT run unavailable (numba not importable); pure-numpy timings only\n")
    header = f"{'workload':<20} {'jit [s]':>10} {'pure [s]':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name in WORKLOADS:
        p = pure["workloads"][name]
        if jit is not None:
            j = jit["workloads"][name]
            if j["checksum"] != p["checksum"]:
                print(f"{name:<20} CHECKSUM MISMATCH jit={j['checksum']} pure={p['checksum']}")
                return 1
            speed = p["seconds"] / j["seconds"] if j["seconds"] > 0 else float("inf")
            print(f"{name:<20} {j['seconds']:>10.3f} {p['seconds']:>10.3f} {speed:>8.1f}x")
        else:
            print(f"{name:<20} {'-':>10} {p['seconds']:>10.3f} {'-':>9}")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--run",
        action="store_true",
        help="run the workloads in-process and emit JSON (used by the orchestrator)",
    )
    args = parser.parse_args()
    if args.run:
        print(json.dumps(run_workloads()))
        return 0
    return orchestrate()


if __name__ == "__main__":
    raise SystemExit(main())
