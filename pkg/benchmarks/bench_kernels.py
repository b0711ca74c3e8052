#!/usr/bin/env python3
"""Timing comparison of the compiled and pure-Python kernels.

Runs the workloads that dominate verification sweeps on both backends
and prints per-workload timings plus the speedup.  Output counts are
asserted equal across backends before timings are reported.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import itertools
import time

from idsballs import _kernels_py

try:
    from idsballs import _kernels_c
except ImportError:
    _kernels_c = None


def sweep_ball_size(kernels, q, n, budget):
    total = 0
    for x in itertools.product(range(q), repeat=n):
        for t in range(budget + 1):
            for s in range(min(budget, n) + 1):
                for p in range(budget + 1):
                    total += kernels.ball_size(x, t, s, p, q, q ** (n + t - s))
    return total


def sweep_ball_members(kernels, q, n, t, s, p):
    total = 0
    for x in itertools.product(range(q), repeat=n):
        total += len(kernels.ball(x, t, s, p, q, q ** (n + t - s)))
    return total


def sweep_definitional(kernels, q, n, t, s, p):
    total = 0
    for x in itertools.product(range(q), repeat=n):
        total += len(kernels.definitional_ball(x, t, s, p, q))
    return total


def sweep_membership(kernels, q, n, t, s, p):
    hits = 0
    m = n + t - s
    for x in itertools.product(range(q), repeat=n):
        for z in itertools.product(range(q), repeat=m):
            hits += kernels.is_member(z, x, s, p)
    return hits


def workloads(quick):
    scale = (3, 4) if quick else (3, 5)
    q, n = scale
    return [
        (f"ball_size grid q={q} n<={n} budgets<=2",
         lambda k: sum(sweep_ball_size(k, q, nn, 2) for nn in range(n + 1))),
        (f"ball members q={q} n={n} (2,1,2)",
         lambda k: sweep_ball_members(k, q, n, 2, 1, 2)),
        (f"definitional ball q=2 n={n} (1,1,1)",
         lambda k: sweep_definitional(k, 2, n, 1, 1, 1)),
        (f"membership scan q=2 n={n} (2,1,1)",
         lambda k: sweep_membership(k, 2, n, 2, 1, 1)),
    ]


def run(quick: bool) -> None:
    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("c", _kernels_c))
    else:
        print("compiled kernels unavailable; timing pure Python only")

    rows = []
    for name, work in workloads(quick):
        timings = {}
        results = set()
        for label, kernels in backends:
            start = time.perf_counter()
            results.add(work(kernels))
            timings[label] = time.perf_counter() - start
        assert len(results) == 1, f"backends disagree on {name}: {results}"
        rows.append((name, results.pop(), timings))

    width = max(len(r[0]) for r in rows)
    header = f"{'workload'.ljust(width)}  {'result':>10}  {'python':>9}"
    if _kernels_c is not None:
        header += f"  {'c':>9}  {'speedup':>7}"
    print(header)
    for name, result, timings in rows:
        line = f"{name.ljust(width)}  {result:>10}  {timings['python']:>8.3f}s"
        if "c" in timings:
            speedup = timings["python"] / timings["c"] if timings["c"] > 0 else float("inf")
            line += f"  {timings['c']:>8.3f}s  {speedup:>6.1f}x"
        print(line)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    run(parser.parse_args().quick)
