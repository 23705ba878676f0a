"""Brute-force references.

Nothing in here calls the word-arithmetic or transform code; the only
imports from the package are the kernels under test and FieldContext (the
argument type they expect). Twiddle precomputations are recomputed here with
plain integer arithmetic and the context's Montgomery constant is checked
against ``pow(p, -1, beta)``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import butterfly as bf
from .modfield import FieldContext, TwiddlePair
from .word_arith import WordParams


def naive_dft(a: list[int], omega: int, p: int) -> list[int]:
    """b_j = sum_i omega^(ij) a_i mod p, natural order, O(L^2)."""
    L = len(a)
    out = []
    x = 1
    for _ in range(L):
        acc = 0
        for coeff in reversed(a):
            acc = (acc * x + coeff) % p
        out.append(acc)
        x = x * omega % p
    return out


def bit_reversed(values: list, ell: int | None = None) -> list:
    L = len(values)
    if ell is None:
        ell = L.bit_length() - 1
    if ell == 0:
        return list(values)
    return [values[int(format(j, f"0{ell}b")[::-1], 2)] for j in range(L)]


def schoolbook_polymul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return [c % p for c in out]


def cyclic_fold(c: list[int], L: int, p: int) -> list[int]:
    out = [0] * L
    for k, v in enumerate(c):
        out[k % L] += v
    return [v % p for v in out]


def odd_primes_below(n: int) -> list[int]:
    sieve = bytearray([1]) * n
    sieve[:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i in range(3, n) if sieve[i]]


# Exact-integer shadows of each kernel's intermediates. Each returns a mask of
# cases where some intermediate leaves [0, beta), i.e. where a real word
# would have wrapped. Arguments are int64 arrays; beta <= 2^16 keeps every
# product exact.

def _shoup_exact(w, t, p, lg):
    q = (((w << lg) // p) * t) >> lg
    return w * t - q * p


def _mont_exact(w, t, p, lg):
    beta = 1 << lg
    r = ((w << lg) % p) * t
    q = ((r & (beta - 1)) * pow(p, -1, beta)) & (beta - 1)
    return (r >> lg) - ((q * p) >> lg) + p


def _out_of_word(beta, *vals):
    bad = np.zeros(np.shape(vals[0]), dtype=bool)
    for v in vals:
        bad |= (v < 0) | (v >= beta)
    return bad


def _ovf_baseline(x, y, w, p, lg):
    t = np.where(x < y, x - y + p, x - y)
    return _out_of_word(1 << lg, x + y, t, _shoup_exact(w, t, p, lg))


def _ovf_shoup_lazy(x, y, w, p, lg):
    t = x - y + 2 * p
    return _out_of_word(1 << lg, x + y, t, _shoup_exact(w, t, p, lg))


def _ovf_montgomery_lazy(x, y, w, p, lg):
    t = x - y + 2 * p
    return _out_of_word(1 << lg, x + y, t, _mont_exact(w, t, p, lg))


def _ovf_inverse(mul):
    def check(x, y, w, p, lg):
        xr = np.where(x >= 2 * p, x - 2 * p, x)
        t = mul(w, y, p, lg)
        return _out_of_word(1 << lg, t, xr + t, xr - t + 2 * p)
    return check


def _ovf_inverse_baseline(x, y, w, p, lg):
    t = _shoup_exact(w, y, p, lg)
    t = np.where(t >= p, t - p, t)
    return _out_of_word(1 << lg, t, x + t)


def _ovf_unit_lazy(x, y, w, p, lg):
    return _out_of_word(1 << lg, x + y, x - y + 2 * p)


def _ovf_unit_inverse(x, y, w, p, lg):
    xr = np.where(x >= 2 * p, x - 2 * p, x)
    yr = np.where(y >= 2 * p, y - 2 * p, y)
    return _out_of_word(1 << lg, xr + yr, xr - yr + 2 * p)


def _ovf_unit_baseline(x, y, w, p, lg):
    return _out_of_word(1 << lg, x + y)


@dataclass(frozen=True)
class KernelInfo:
    """How to drive one kernel over its whole small-word domain."""

    name: str
    fn: Callable
    in_mult: int          # inputs range over [0, in_mult * p)
    out_mult: int         # outputs must land in [0, out_mult * p)
    inverse: bool         # (X + WY, X - WY) instead of (X + Y, W(X - Y))
    beta_divisor: int     # validity class: p < beta / beta_divisor
    overflow: Callable    # exact shadow of the intermediates
    unit: bool = False    # W = 1 only, kernel called without a twiddle


ALGORITHMS = {
    s.name: s for s in [
        KernelInfo("baseline", bf.butterfly_baseline, 1, 1, False, 2, _ovf_baseline),
        KernelInfo("shoup-lazy", bf.butterfly_shoup_lazy, 2, 2, False, 4, _ovf_shoup_lazy),
        KernelInfo("inverse-lazy", bf.butterfly_inverse_lazy, 4, 4, True, 4,
                   _ovf_inverse(_shoup_exact)),
        KernelInfo("montgomery-lazy", bf.butterfly_montgomery_lazy, 2, 2, False, 4,
                   _ovf_montgomery_lazy),
        KernelInfo("inverse-baseline", bf.butterfly_inverse_baseline, 1, 1, True, 2,
                   _ovf_inverse_baseline),
        KernelInfo("montgomery-inverse-lazy", bf.butterfly_montgomery_inverse_lazy,
                   4, 4, True, 4, _ovf_inverse(_mont_exact)),
        KernelInfo("unit-baseline", bf.butterfly_unit_baseline, 1, 1, False, 2,
                   _ovf_unit_baseline, unit=True),
        KernelInfo("unit-lazy", bf.butterfly_unit_lazy, 2, 2, False, 4,
                   _ovf_unit_lazy, unit=True),
        KernelInfo("unit-inverse-lazy", bf.butterfly_unit_inverse_lazy, 4, 4, True, 4,
                   _ovf_unit_inverse, unit=True),
    ]
}

# The four core butterflies; the rest are extensions.
CORE_ALGORITHMS = ("baseline", "shoup-lazy", "inverse-lazy", "montgomery-lazy")


@dataclass
class ExhaustiveReport:
    algorithm: str
    log2_beta: int
    primes: list[int] = field(default_factory=list)
    cases: int = 0
    congruence_violations: int = 0
    interval_violations: int = 0
    first_counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.congruence_violations == 0 and self.interval_violations == 0

    def summary(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.details()}"

    def details(self) -> str:
        line = (f"{self.algorithm} beta=2^{self.log2_beta} primes={len(self.primes)} "
                f"cases={self.cases} congruence_violations={self.congruence_violations} "
                f"interval_violations={self.interval_violations}")
        if self.first_counterexample:
            ce = self.first_counterexample
            line += (f" first: p={ce['p']} W={ce['w']} X={ce['x']} Y={ce['y']}"
                     f" -> X'={ce['x_out']} Y'={ce['y_out']} ({ce['reason']})")
        return line

    CSV_FIELDS = ("algorithm", "log2_beta", "n_primes", "cases", "congruence_violations",
                  "interval_violations", "p", "w", "x", "y", "x_out", "y_out", "reason")

    def csv_row(self) -> dict:
        row = {"algorithm": self.algorithm, "log2_beta": self.log2_beta,
               "n_primes": len(self.primes), "cases": self.cases,
               "congruence_violations": self.congruence_violations,
               "interval_violations": self.interval_violations}
        row.update(self.first_counterexample or {})
        return row


def write_report_csv(reports: Iterable[ExhaustiveReport], fh=None) -> str:
    buf = fh if fh is not None else io.StringIO()
    w = csv.DictWriter(buf, fieldnames=ExhaustiveReport.CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue() if fh is None else ""


def default_primes(kern: KernelInfo, beta: int) -> list[int]:
    return [p for p in odd_primes_below(beta) if kern.beta_divisor * p < beta]


def exhaustive_butterfly_check(log2_beta: int, algorithm: str | KernelInfo,
                               primes: list[int] | None = None,
                               max_grid: int = 1 << 22) -> ExhaustiveReport:
    """Run ``algorithm`` on every (p, W, X, Y) and check both contracts.

    The interval contract covers the outputs and, through an exact-integer
    shadow, every intermediate the kernel keeps in a word.

    Defaults to every odd prime in the algorithm's validity class. Pass
    ``primes`` explicitly to probe outside it.
    """
    if log2_beta not in (8, 16):
        raise ValueError("exhaustive checks need beta = 2^8 or 2^16")
    kern = ALGORITHMS[algorithm] if isinstance(algorithm, str) else algorithm
    wp = WordParams(log2_beta)
    beta = wp.beta
    if primes is None:
        primes = default_primes(kern, beta)
    report = ExhaustiveReport(kern.name, log2_beta, list(primes))
    for p in primes:
        ctx = FieldContext(p, wp)
        if ctx.j_inv != pow(p, -1, beta):
            raise AssertionError(f"context Montgomery constant wrong for p={p}")
        n = kern.in_mult * p
        xs, ys = np.meshgrid(np.arange(n, dtype=np.uint64), np.arange(n, dtype=np.uint64),
                             indexing="ij")
        xs, ys = xs.ravel(), ys.ravel()
        ws = [1] if kern.unit else list(range(1, p))
        chunk = max(1, max_grid // (n * n))
        for start in range(0, len(ws), chunk):
            wchunk = np.array(ws[start:start + chunk], dtype=np.uint64)
            _check_block(kern, ctx, wchunk, xs, ys, report)
    return report


def _check_block(kern, ctx, wchunk, xs, ys, report):
    p, beta = ctx.p, ctx.wp.beta
    k = len(wchunk)
    W = np.repeat(wchunk, len(xs))
    X = np.tile(xs, k)
    Y = np.tile(ys, k)
    if kern.unit:
        xo, yo = kern.fn(X, Y, ctx)
    else:
        Wi = [int(w) for w in wchunk]
        shoup = np.repeat(np.array([(w * beta) // p for w in Wi], dtype=np.uint64), len(xs))
        mont = np.repeat(np.array([(w * beta) % p for w in Wi], dtype=np.uint64), len(xs))
        xo, yo = kern.fn(X, Y, TwiddlePair(W, shoup, mont), ctx)
    xo = np.broadcast_to(xo, X.shape).astype(np.int64)
    yo = np.broadcast_to(yo, X.shape).astype(np.int64)
    Xi, Yi, Wi64 = X.astype(np.int64), Y.astype(np.int64), W.astype(np.int64)
    if kern.inverse:
        wy = Wi64 * Yi
        want_x, want_y = Xi + wy, Xi - wy
    else:
        want_x, want_y = Xi + Yi, Wi64 * (Xi - Yi)
    bad_cong = ((xo - want_x) % p != 0) | ((yo - want_y) % p != 0)
    bound = kern.out_mult * p
    bad_int = (xo < 0) | (xo >= bound) | (yo < 0) | (yo >= bound)
    bad_int |= kern.overflow(Xi, Yi, Wi64, p, ctx.wp.log2_beta)
    report.cases += len(X)
    report.congruence_violations += int(bad_cong.sum())
    report.interval_violations += int(bad_int.sum())
    if report.first_counterexample is None and (bad_cong.any() or bad_int.any()):
        i = int(np.flatnonzero(bad_cong | bad_int)[0])
        report.first_counterexample = {
            "p": p, "w": int(W[i]), "x": int(X[i]), "y": int(Y[i]),
            "x_out": int(xo[i]), "y_out": int(yo[i]),
            "reason": "interval" if bad_int[i] else "congruence",
        }


def shoup_candidate_bound_check(log2_beta: int, primes: list[int] | None = None) -> int:
    """Count (p, W, T), p < beta/2, T any word, where the Shoup product candidate
    is not a representative of WT in [0, 2p)."""
    wp = WordParams(log2_beta)
    beta = wp.beta
    if primes is None:
        primes = [p for p in odd_primes_below(beta) if 2 * p < beta]
    T = np.arange(beta, dtype=np.uint64)
    Ti = T.astype(np.int64)
    failures = 0
    for p in primes:
        ctx = FieldContext(p, wp)
        for w in range(1, p):
            cand = bf.shoup_mul_candidate(T, w, (w * beta) // p, ctx).astype(np.int64)
            bad = (cand >= 2 * p) | ((cand - w * Ti) % p != 0)
            failures += int(bad.sum())
    return failures
