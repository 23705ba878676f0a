"""Radix-2 NTT over a precomputed plan.

``forward`` is the in-place decimation-in-frequency network with natural
order input and bit-reversed output. ``inverse`` runs the same network
backwards (decimation in time), takes bit-reversed input, returns natural
order and is unscaled: the result is L*a. Each stage is one vectorised
butterfly call over all ``L/2`` pairs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import butterfly as bf
from .modfield import (FieldContext, find_primitive_root_of_unity, mod_inv,
                       montgomery_precompute, shoup_precompute)
from .word_arith import csub


class IntervalError(AssertionError):
    """A residue escaped its tagged representation interval."""


class Interval(enum.IntEnum):
    """Representation interval [0, k*p) of a residue vector."""

    LT_P = 1
    LT_2P = 2
    LT_4P = 4

    def bound(self, p: int) -> int:
        return int(self) * p


@dataclass(frozen=True)
class _Kernels:
    fwd: Callable
    inv: Callable
    fwd_unit: Callable
    inv_unit: Callable
    fwd_in: frozenset
    fwd_out: Interval
    inv_in: frozenset
    inv_out: Interval
    needs_quarter_beta: bool


_ANY = frozenset(Interval)


class Strategy(enum.Enum):
    BASELINE = "baseline"
    SHOUP_LAZY = "shoup-lazy"
    MONTGOMERY_LAZY = "montgomery-lazy"

    @property
    def kernels(self) -> _Kernels:
        return _KERNELS[self]


_KERNELS = {
    Strategy.BASELINE: _Kernels(
        bf.butterfly_baseline, bf.butterfly_inverse_baseline,
        bf.butterfly_unit_baseline, bf.butterfly_unit_baseline,
        frozenset({Interval.LT_P}), Interval.LT_P,
        frozenset({Interval.LT_P}), Interval.LT_P, False),
    Strategy.SHOUP_LAZY: _Kernels(
        bf.butterfly_shoup_lazy, bf.butterfly_inverse_lazy,
        bf.butterfly_unit_lazy, bf.butterfly_unit_inverse_lazy,
        frozenset({Interval.LT_P, Interval.LT_2P}), Interval.LT_2P,
        _ANY, Interval.LT_4P, True),
    Strategy.MONTGOMERY_LAZY: _Kernels(
        bf.butterfly_montgomery_lazy, bf.butterfly_montgomery_inverse_lazy,
        bf.butterfly_unit_lazy, bf.butterfly_unit_inverse_lazy,
        frozenset({Interval.LT_P, Interval.LT_2P}), Interval.LT_2P,
        _ANY, Interval.LT_4P, True),
}


@dataclass
class ResidueVec:
    data: np.ndarray
    tag: Interval = Interval.LT_P

    @classmethod
    def from_values(cls, values, p: int, tag: Interval = Interval.LT_P) -> "ResidueVec":
        ints = [int(v) for v in values]
        bound = tag.bound(p)
        if any(v < 0 or v >= bound for v in ints):
            raise ValueError(f"residue outside [0, {bound})")
        return cls(np.array(ints, dtype=np.uint64), tag)

    def __len__(self):
        return len(self.data)

    def copy(self) -> "ResidueVec":
        return ResidueVec(self.data.copy(), self.tag)

    def tolist(self) -> list[int]:
        return [int(v) for v in self.data]

    def check(self, p: int, where: str = "") -> None:
        bound = self.tag.bound(p)
        if self.data.size and int(self.data.max()) >= bound:
            raise IntervalError(
                f"{where}: value {int(self.data.max())} >= {self.tag.name} bound {bound}")


class TwiddleTable:
    """Twiddles for one stage, k ascending, rows (W, W' shoup, W' montgomery)."""

    def __init__(self, powers: list[int], ctx: FieldContext):
        rows = [(w, shoup_precompute(w, ctx), montgomery_precompute(w, ctx)) for w in powers]
        self.rows = np.array(rows, dtype=np.uint64).reshape(len(powers), 3)
        self.w = self.rows[:, 0]
        self.w_shoup = self.rows[:, 1]
        self.w_mont = self.rows[:, 2]

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class NttPlan:
    ctx: FieldContext
    ell: int
    strategy: Strategy
    omega: int
    unit_fast_path: bool = False
    omega_inv: int = field(init=False)
    length_inv: int = field(init=False)
    fwd_twiddles: tuple = field(init=False, repr=False)
    inv_twiddles: tuple = field(init=False, repr=False)

    def __post_init__(self):
        p = self.ctx.p
        omega_inv = mod_inv(self.omega, self.ctx)
        object.__setattr__(self, "omega_inv", omega_inv)
        object.__setattr__(self, "length_inv", mod_inv(self.length % p, self.ctx))
        object.__setattr__(self, "fwd_twiddles", self._tables(self.omega))
        object.__setattr__(self, "inv_twiddles", self._tables(omega_inv))

    @property
    def length(self) -> int:
        return 1 << self.ell

    def _tables(self, root: int) -> tuple:
        p = self.ctx.p
        tables = []
        for i in range(1, self.ell + 1):
            zeta = pow(root, 1 << (i - 1), p)
            m = self.length >> i
            powers = [1] * m
            for k in range(1, m):
                powers[k] = powers[k - 1] * zeta % p
            tables.append(TwiddleTable(powers, self.ctx))
        return tuple(tables)


def plan_build(ctx: FieldContext, ell: int, strategy: Strategy = Strategy.SHOUP_LAZY,
               omega: int | None = None, unit_fast_path: bool = False) -> NttPlan:
    if ell < 0:
        raise ValueError("ell must be non-negative")
    if strategy.kernels.needs_quarter_beta and not ctx.below_quarter_beta:
        raise ValueError(f"{strategy.value} requires p < beta/4, p={ctx.p}")
    if not ctx.below_half_beta:
        raise ValueError(f"{strategy.value} requires p < beta/2, p={ctx.p}")
    if omega is None:
        omega = find_primitive_root_of_unity(ell, ctx)
    else:
        L, p = 1 << ell, ctx.p
        if (p - 1) % L:
            raise ValueError(f"p={p} is not 1 mod 2^{ell}")
        if pow(omega, L, p) != 1 or (L > 1 and pow(omega, L // 2, p) != p - 1):
            raise ValueError(f"omega={omega} is not a primitive 2^{ell}-th root of unity")
    return NttPlan(ctx, ell, strategy, omega, unit_fast_path)


def _check_vec(plan: NttPlan, vec: ResidueVec, allowed: frozenset, check: bool) -> None:
    if len(vec) != plan.length:
        raise ValueError(f"length {len(vec)} does not match plan length {plan.length}")
    if vec.tag not in allowed:
        raise ValueError(f"{plan.strategy.value} does not accept {vec.tag.name} input")
    if vec.data.dtype != np.uint64:
        raise TypeError("ResidueVec data must be uint64")
    if check:
        vec.check(plan.ctx.p, "input")


def forward(plan: NttPlan, vec: ResidueVec, check: bool = False) -> ResidueVec:
    """In-place forward transform, bit-reversed output.

    With ``check`` every stage's output is audited against the output tag.
    """
    k = plan.strategy.kernels
    _check_vec(plan, vec, k.fwd_in, check)
    ctx, x, L = plan.ctx, vec.data, plan.length
    out = ResidueVec(x, k.fwd_out)
    for i in range(1, plan.ell + 1):
        m = L >> i
        v = x.reshape(-1, 2, m)
        if m == 1 and plan.unit_fast_path:
            xo, yo = k.fwd_unit(v[:, 0, :], v[:, 1, :], ctx)
        else:
            xo, yo = k.fwd(v[:, 0, :], v[:, 1, :], plan.fwd_twiddles[i - 1], ctx)
        v[:, 0, :] = xo
        v[:, 1, :] = yo
        if check:
            out.check(ctx.p, f"forward stage {i}")
    vec.tag = k.fwd_out
    return vec


def inverse(plan: NttPlan, vec: ResidueVec, check: bool = False) -> ResidueVec:
    """In-place inverse transform of bit-reversed input; result is L*a, natural order."""
    k = plan.strategy.kernels
    _check_vec(plan, vec, k.inv_in, check)
    ctx, x, L = plan.ctx, vec.data, plan.length
    out = ResidueVec(x, k.inv_out)
    for i in range(plan.ell, 0, -1):
        m = L >> i
        v = x.reshape(-1, 2, m)
        if m == 1 and plan.unit_fast_path:
            xo, yo = k.inv_unit(v[:, 0, :], v[:, 1, :], ctx)
        else:
            xo, yo = k.inv(v[:, 0, :], v[:, 1, :], plan.inv_twiddles[i - 1], ctx)
        v[:, 0, :] = xo
        v[:, 1, :] = yo
        if check:
            out.check(ctx.p, f"inverse stage {i}")
    vec.tag = k.inv_out
    return vec


def normalize(vec: ResidueVec, ctx: FieldContext) -> ResidueVec:
    """In place: canonical representatives in [0, p)."""
    wp, p, x = ctx.wp, ctx.p, vec.data
    if vec.tag is Interval.LT_4P:
        x = csub(x, 2 * p, wp)
    if vec.tag is not Interval.LT_P:
        x = csub(x, p, wp)
    vec.data[...] = x
    vec.tag = Interval.LT_P
    return vec


def scale(plan: NttPlan, vec: ResidueVec, factor: int | None = None) -> ResidueVec:
    """In place: multiply by ``factor`` (default 1/L), canonical output.

    Uses the Shoup product, which takes any word-sized input.
    """
    ctx = plan.ctx
    w = plan.length_inv if factor is None else factor % ctx.p
    if w == 0:
        vec.data[...] = 0
    else:
        t = bf.shoup_mul_candidate(vec.data, w, shoup_precompute(w, ctx), ctx)
        vec.data[...] = csub(t, ctx.p, ctx.wp)
    vec.tag = Interval.LT_P
    return vec


def bit_reverse_indices(ell: int) -> np.ndarray:
    idx = np.zeros(1 << ell, dtype=np.int64)
    for b in range(ell):
        idx |= ((np.arange(1 << ell) >> b) & 1) << (ell - 1 - b)
    return idx


def bit_reverse_permute(vec: ResidueVec) -> ResidueVec:
    L = len(vec)
    if L & (L - 1) or L == 0:
        raise ValueError(f"length {L} is not a power of two")
    return ResidueVec(vec.data[bit_reverse_indices(L.bit_length() - 1)], vec.tag)
