"""Butterfly kernels over a FieldContext.

Forward (decimation in frequency):  (X, Y) -> (X + Y, W(X - Y))
Inverse (decimation in time):       (X, Y) -> (X + WY, X - WY)

Inputs and outputs are words (Python ints or uint64 arrays). No kernel checks
its own preconditions: the exhaustive walker deliberately calls them outside
their validity class. Interval contracts:

    baseline            p < beta/2   in [0, p)   out [0, p)
    shoup_lazy          p < beta/4   in [0, 2p)  out [0, 2p)
    inverse_lazy        p < beta/4   in [0, 4p)  out [0, 4p)
    montgomery_lazy     p < beta/4   in [0, 2p)  out [0, 2p)
"""

from __future__ import annotations

from .modfield import FieldContext
from .word_arith import add_mod_beta, cadd_if, csub, mul_hi, mul_hi_lo, mul_lo, sub_mod_beta


def shoup_mul_candidate(t, w, w_shoup, ctx: FieldContext):
    """WT - Qp mod beta with Q = floor(W'T / beta); lands in [0, 2p) for any T < beta."""
    wp = ctx.wp
    q = mul_hi(w_shoup, t, wp)
    return sub_mod_beta(mul_lo(w, t, wp), mul_lo(q, ctx.p, wp), wp)


def montgomery_mul_lazy(t, w_mont, ctx: FieldContext):
    """W'T / beta mod p in [0, 2p), provided W'T < p*beta. No final correction."""
    wp = ctx.wp
    r1, r0 = mul_hi_lo(w_mont, t, wp)
    q = mul_lo(r0, ctx.j_inv, wp)
    h = mul_hi(q, ctx.p, wp)
    return add_mod_beta(sub_mod_beta(r1, h, wp), ctx.p, wp)


def butterfly_baseline(x, y, tw, ctx: FieldContext):
    wp, p = ctx.wp, ctx.p
    xo = csub(add_mod_beta(x, y, wp), p, wp)
    # unsigned: "T < 0" becomes the borrow test X < Y
    t = cadd_if(x < y, sub_mod_beta(x, y, wp), p, wp)
    yo = csub(shoup_mul_candidate(t, tw.w, tw.w_shoup, ctx), p, wp)
    return xo, yo


def butterfly_shoup_lazy(x, y, tw, ctx: FieldContext):
    wp, p2 = ctx.wp, 2 * ctx.p
    xo = csub(add_mod_beta(x, y, wp), p2, wp)
    t = add_mod_beta(sub_mod_beta(x, y, wp), p2, wp)
    return xo, shoup_mul_candidate(t, tw.w, tw.w_shoup, ctx)


def butterfly_inverse_lazy(x, y, tw, ctx: FieldContext):
    wp, p2 = ctx.wp, 2 * ctx.p
    x = csub(x, p2, wp)
    t = shoup_mul_candidate(y, tw.w, tw.w_shoup, ctx)
    return add_mod_beta(x, t, wp), add_mod_beta(sub_mod_beta(x, t, wp), p2, wp)


def butterfly_montgomery_lazy(x, y, tw, ctx: FieldContext):
    wp, p2 = ctx.wp, 2 * ctx.p
    xo = csub(add_mod_beta(x, y, wp), p2, wp)
    t = add_mod_beta(sub_mod_beta(x, y, wp), p2, wp)
    return xo, montgomery_mul_lazy(t, tw.w_mont, ctx)


def butterfly_inverse_baseline(x, y, tw, ctx: FieldContext):
    """Canonical DIT butterfly, [0, p) -> [0, p), p < beta/2."""
    wp, p = ctx.wp, ctx.p
    t = csub(shoup_mul_candidate(y, tw.w, tw.w_shoup, ctx), p, wp)
    xo = csub(add_mod_beta(x, t, wp), p, wp)
    yo = cadd_if(x < t, sub_mod_beta(x, t, wp), p, wp)
    return xo, yo


def butterfly_montgomery_inverse_lazy(x, y, tw, ctx: FieldContext):
    """DIT butterfly with Montgomery twiddles, [0, 4p) -> [0, 4p).

    Y < 4p and W' < p keep W'Y below p*beta, so the product lands in [0, 2p)
    exactly as the Shoup estimate does.
    """
    wp, p2 = ctx.wp, 2 * ctx.p
    x = csub(x, p2, wp)
    t = montgomery_mul_lazy(y, tw.w_mont, ctx)
    return add_mod_beta(x, t, wp), add_mod_beta(sub_mod_beta(x, t, wp), p2, wp)


# W = 1: add/sub only, same contracts as the general kernels.

def butterfly_unit_baseline(x, y, ctx: FieldContext):
    wp, p = ctx.wp, ctx.p
    xo = csub(add_mod_beta(x, y, wp), p, wp)
    yo = cadd_if(x < y, sub_mod_beta(x, y, wp), p, wp)
    return xo, yo


def butterfly_unit_lazy(x, y, ctx: FieldContext):
    wp, p2 = ctx.wp, 2 * ctx.p
    xo = csub(add_mod_beta(x, y, wp), p2, wp)
    yo = csub(add_mod_beta(sub_mod_beta(x, y, wp), p2, wp), p2, wp)
    return xo, yo


def butterfly_unit_inverse_lazy(x, y, ctx: FieldContext):
    wp, p2 = ctx.wp, 2 * ctx.p
    x = csub(x, p2, wp)
    y = csub(y, p2, wp)
    return add_mod_beta(x, y, wp), add_mod_beta(sub_mod_beta(x, y, wp), p2, wp)
