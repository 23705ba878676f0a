"""Time-per-butterfly harness for forward transforms.

Plans are built and the input generated before any timing. Each trial
copies the same seeded input into the work buffer (untimed) and times one
in-place forward transform. Bit reversal is never performed.
"""

from __future__ import annotations

import csv
import hashlib
import io
import os
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .modfield import Direction, FieldContext, find_ntt_prime
from .ntt import Interval, ResidueVec, Strategy, forward, plan_build

CSV_HEADER = ("strategy", "p", "ell", "trials", "ns_per_butterfly", "cycles_per_butterfly")
AFFINITY_ENV = "LAZYNTT_CPU"

# Cycles per butterfly reported for a 3.06GHz Westmere Xeon, L = 2048.
WESTMERE_REFERENCE = {"NTL": 12.0, "baseline": 10.1, "shoup-lazy": 6.9}


@dataclass
class BenchResult:
    strategy: Strategy
    p: int
    ell: int
    trials: int
    ns_median: float
    ns_min: float
    cycles_median: float | None
    input_digest: str

    @property
    def butterflies(self) -> int:
        return butterfly_count(self.ell)


def butterfly_count(ell: int) -> int:
    return ell << (ell - 1) if ell else 0


def default_prime(ell: int) -> int:
    return find_ntt_prime(62, ell, Direction.LARGEST_BELOW)


def bench_input(p: int, ell: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, p, size=1 << ell, dtype=np.uint64)


def pin_cpu_from_env() -> int | None:
    cpu = os.environ.get(AFFINITY_ENV)
    if cpu is None or not hasattr(os, "sched_setaffinity"):
        return None
    os.sched_setaffinity(0, {int(cpu)})
    return int(cpu)


def run_bench(ell: int = 11, strategies=tuple(Strategy), trials: int = 50, warmup: int = 5,
              seed: int = 0, p: int | None = None, cpu_ghz: float | None = None) -> list[BenchResult]:
    if trials <= 0:
        raise ValueError("trials must be positive")
    if warmup < 0:
        raise ValueError("warmup must be non-negative")
    if ell < 1:
        raise ValueError("ell must be at least 1")
    p = default_prime(ell) if p is None else p
    ctx = FieldContext(p)
    data = bench_input(p, ell, seed)
    digest = hashlib.sha256(data.tobytes()).hexdigest()[:16]
    nbf = butterfly_count(ell)
    results = []
    for strategy in strategies:
        plan = plan_build(ctx, ell, strategy)
        vec = ResidueVec(np.empty_like(data))
        samples = []
        for i in range(warmup + trials):
            vec.data[...] = data
            vec.tag = Interval.LT_P
            t0 = time.perf_counter_ns()
            forward(plan, vec)
            t1 = time.perf_counter_ns()
            if i >= warmup:
                samples.append((t1 - t0) / nbf)
        med = statistics.median(samples)
        results.append(BenchResult(strategy, p, ell, trials, med, min(samples),
                                   med * cpu_ghz if cpu_ghz else None, digest))
    return results


def results_csv(results: list[BenchResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in results:
        w.writerow([r.strategy.value, r.p, r.ell, r.trials, f"{r.ns_median:.3f}",
                    "" if r.cycles_median is None else f"{r.cycles_median:.3f}"])
    return buf.getvalue()


def shoup_not_slower(results: list[BenchResult]) -> bool | None:
    by = {r.strategy: r.ns_median for r in results}
    if Strategy.BASELINE not in by or Strategy.SHOUP_LAZY not in by:
        return None
    return by[Strategy.SHOUP_LAZY] <= by[Strategy.BASELINE]
