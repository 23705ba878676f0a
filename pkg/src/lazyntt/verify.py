"""Correctness suites behind ``lazyntt verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import oracle
from .bench import default_prime
from .modfield import FieldContext
from .ntt import ResidueVec, Strategy, forward, inverse, normalize, plan_build, scale
from .polymul import PlanCache, polymul_mod_p

NEGATIVE_CONTROL_PRIME = 67  # beta/4 < 67 < beta/2 at beta = 2^8


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def _walk(name, primes=None):
    rep = oracle.exhaustive_butterfly_check(8, name, primes=primes)
    return rep, CheckResult("exhaustive", rep.ok, rep.details())


def negative_control() -> tuple[oracle.ExhaustiveReport, CheckResult]:
    rep = oracle.exhaustive_butterfly_check(8, "shoup-lazy", primes=[NEGATIVE_CONTROL_PRIME])
    ok = rep.interval_violations > 0
    return rep, CheckResult("negative control: shoup-lazy with p=67 > beta/4 must break",
                            ok, rep.details())


def _random_butterflies(trials: int, seed: int) -> CheckResult:
    """Native-width kernels on random (p, W, X, Y) against big-integer arithmetic."""
    rng = random.Random(seed)
    primes = [default_prime(ell) for ell in (1, 11, 20)]
    bad = 0
    for p in primes:
        ctx = FieldContext(p)
        for _ in range(trials):
            name = rng.choice(oracle.CORE_ALGORITHMS)
            kern = oracle.ALGORITHMS[name]
            w = rng.randrange(1, p)
            x, y = rng.randrange(kern.in_mult * p), rng.randrange(kern.in_mult * p)
            xo, yo = kern.fn(x, y, ctx.twiddle(w), ctx)
            want = (x + w * y, x - w * y) if kern.inverse else (x + y, w * (x - y))
            bound = kern.out_mult * p
            if (xo - want[0]) % p or (yo - want[1]) % p or not (0 <= xo < bound and 0 <= yo < bound):
                bad += 1
    return CheckResult("random native-width butterflies", bad == 0,
                       f"{trials * len(primes)} trials, {bad} violations")


def _transforms(max_ell: int, reps: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    p = default_prime(max_ell)
    ctx = FieldContext(p)
    bad = 0
    for ell in range(max_ell + 1):
        for strategy in Strategy:
            plan = plan_build(ctx, ell, strategy)
            for _ in range(reps):
                a = [rng.randrange(p) for _ in range(plan.length)]
                got = normalize(forward(plan, ResidueVec.from_values(a, p)), ctx).tolist()
                if got != oracle.bit_reversed(oracle.naive_dft(a, plan.omega, p), ell):
                    bad += 1
                back = scale(plan, inverse(plan, ResidueVec.from_values(got, p))).tolist()
                if back != a:
                    bad += 1
    return CheckResult("transforms vs naive DFT and round trip", bad == 0,
                       f"L <= 2^{max_ell}, {bad} mismatches")


def _polymul(cases: int, max_len: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    p = default_prime(11)
    ctx = FieldContext(p)
    bad = 0
    for strategy in Strategy:
        factory = PlanCache(ctx, strategy)
        for _ in range(cases):
            a = [rng.randrange(p) for _ in range(rng.randint(1, max_len))]
            b = [rng.randrange(p) for _ in range(rng.randint(1, max_len))]
            if polymul_mod_p(a, b, factory) != oracle.schoolbook_polymul(a, b, p):
                bad += 1
    return CheckResult("polymul vs schoolbook", bad == 0, f"{bad} mismatches")


def run_quick(seed: int = 0) -> tuple[list[CheckResult], list[oracle.ExhaustiveReport]]:
    results, reports = [], []
    for name in oracle.CORE_ALGORITHMS:
        kern = oracle.ALGORITHMS[name]
        primes = oracle.default_primes(kern, 256)[-3:]
        rep, res = _walk(name, primes)
        reports.append(rep)
        results.append(res)
    rep, res = negative_control()
    reports.append(rep)
    results.append(res)
    results.append(_random_butterflies(2000, seed))
    results.append(_transforms(6, 3, seed))
    results.append(_polymul(5, 40, seed))
    return results, reports


def run_exhaustive(seed: int = 0) -> tuple[list[CheckResult], list[oracle.ExhaustiveReport]]:
    results, reports = [], []
    for name in oracle.ALGORITHMS:
        rep, res = _walk(name)
        reports.append(rep)
        results.append(res)
    rep, res = negative_control()
    reports.append(rep)
    results.append(res)
    fails = oracle.shoup_candidate_bound_check(8)
    results.append(CheckResult("shoup candidate in [0, 2p) for all p < beta/2, T < beta",
                               fails == 0, f"{fails} violations"))
    results.append(_random_butterflies(20000, seed))
    results.append(_transforms(8, 3, seed))
    results.append(_polymul(10, 200, seed))
    return results, reports
