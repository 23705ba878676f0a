"""Cyclic convolution and polynomial multiplication over F_p."""

from __future__ import annotations

from typing import Callable

import numpy as np

from .butterfly import montgomery_mul_lazy, shoup_mul_candidate
from .modfield import FieldContext, shoup_precompute
from .ntt import Interval, NttPlan, ResidueVec, Strategy, forward, inverse, normalize, plan_build
from .word_arith import csub


class TransformLengthError(ValueError):
    pass


def pointwise_mul_scaled(a: np.ndarray, b: np.ndarray, factor: int, ctx: FieldContext) -> np.ndarray:
    """a*b*factor mod p, canonical. Inputs below 2p (below p if p >= beta/4).

    The Montgomery product leaves a stray 1/beta; it is cancelled by folding
    beta into the fixed factor, which is then applied with a Shoup multiply.
    """
    r = montgomery_mul_lazy(a, b, ctx)
    s = (factor << ctx.wp.log2_beta) % ctx.p
    t = shoup_mul_candidate(r, s, shoup_precompute(s, ctx), ctx)
    return csub(t, ctx.p, ctx.wp)


def cyclic_convolve(a: ResidueVec, b: ResidueVec, plan: NttPlan) -> ResidueVec:
    if len(a) != plan.length or len(b) != plan.length:
        raise ValueError(f"inputs of length {len(a)}, {len(b)} do not match plan length {plan.length}")
    ctx = plan.ctx
    fa = forward(plan, a.copy())
    fb = forward(plan, b.copy())
    prod = ResidueVec(pointwise_mul_scaled(fa.data, fb.data, plan.length_inv, ctx), Interval.LT_P)
    return normalize(inverse(plan, prod), ctx)


class PlanCache:
    """Plan factory for one field and strategy, memoised by transform size."""

    def __init__(self, ctx: FieldContext, strategy: Strategy = Strategy.SHOUP_LAZY):
        self.ctx = ctx
        self.strategy = strategy
        self._plans: dict[int, NttPlan] = {}

    def __call__(self, ell: int) -> NttPlan:
        if ell not in self._plans:
            if (self.ctx.p - 1) % (1 << ell):
                raise TransformLengthError(
                    f"no transform of length 2^{ell} over p={self.ctx.p}")
            self._plans[ell] = plan_build(self.ctx, ell, self.strategy)
        return self._plans[ell]


def polymul_mod_p(a, b, plan_factory: Callable[[int], NttPlan]) -> list[int]:
    """Product of two coefficient lists via a zero-padded cyclic convolution."""
    a, b = [int(v) for v in a], [int(v) for v in b]
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    ell = (n - 1).bit_length()
    plan = plan_factory(ell)
    p = plan.ctx.p
    L = plan.length
    va = ResidueVec.from_values(a + [0] * (L - len(a)), p)
    vb = ResidueVec.from_values(b + [0] * (L - len(b)), p)
    return cyclic_convolve(va, vb, plan).tolist()[:n]
