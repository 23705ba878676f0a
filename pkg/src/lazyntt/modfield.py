"""Prime-field context and the per-twiddle precomputations."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .word_arith import WordParams, cadd_if, sub_mod_beta

# Deterministic for every n < 3.3e24, which covers all 64-bit words.
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class SearchExhausted(ValueError):
    pass


class ValidityClass(enum.Enum):
    QUARTER_BETA = "p < beta/4"
    HALF_BETA = "p < beta/2"
    FULL_BETA = "p < beta"


class Direction(enum.Enum):
    SMALLEST_ABOVE = "smallest-above"
    LARGEST_BELOW = "largest-below"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inverse_mod_beta(p: int, wp: WordParams) -> int:
    """J with p*J = 1 mod beta, by Newton iteration on the 2-adic inverse."""
    if p % 2 == 0:
        raise ValueError(f"p must be odd to be invertible mod beta, got {p}")
    j = p & wp.mask  # p*p = 1 mod 8 for odd p: three correct bits
    bits = 3
    while bits < wp.log2_beta:
        j = (j * (2 - p * j)) & wp.mask
        bits *= 2
    return j


@dataclass(frozen=True)
class FieldContext:
    p: int
    wp: WordParams = field(default_factory=WordParams)
    validity_class: ValidityClass = field(init=False)
    j_inv: int = field(init=False)

    def __post_init__(self):
        p = self.p
        if not 2 < p < self.wp.beta:
            raise ValueError(f"p={p} must lie in (2, beta) for beta=2^{self.wp.log2_beta}")
        if not is_prime(p):
            raise ValueError(f"p={p} is not an odd prime")
        if 4 * p < self.wp.beta:
            vc = ValidityClass.QUARTER_BETA
        elif 2 * p < self.wp.beta:
            vc = ValidityClass.HALF_BETA
        else:
            vc = ValidityClass.FULL_BETA
        object.__setattr__(self, "validity_class", vc)
        object.__setattr__(self, "j_inv", inverse_mod_beta(p, self.wp))

    @property
    def below_half_beta(self) -> bool:
        return self.validity_class is not ValidityClass.FULL_BETA

    @property
    def below_quarter_beta(self) -> bool:
        return self.validity_class is ValidityClass.QUARTER_BETA

    def twiddle(self, w: int) -> "TwiddlePair":
        return TwiddlePair(w, shoup_precompute(w, self), montgomery_precompute(w, self))


@dataclass(frozen=True)
class TwiddlePair:
    """A twiddle W with its Shoup quotient estimate and its Montgomery form."""

    w: int
    w_shoup: int
    w_mont: int


def _check_twiddle(w: int, ctx: FieldContext) -> None:
    if not 0 < w < ctx.p:
        raise ValueError(f"twiddle must satisfy 0 < w < p={ctx.p}, got {w}")


def shoup_precompute(w: int, ctx: FieldContext) -> int:
    """floor(w * beta / p), from a double-word dividend."""
    _check_twiddle(w, ctx)
    return (w << ctx.wp.log2_beta) // ctx.p


def montgomery_precompute(w: int, ctx: FieldContext) -> int:
    _check_twiddle(w, ctx)
    return (w << ctx.wp.log2_beta) % ctx.p


def mod_pow(base: int, exp: int, ctx: FieldContext) -> int:
    return pow(base, exp, ctx.p)


def mod_inv(a: int, ctx: FieldContext) -> int:
    return pow(a, -1, ctx.p)


def find_primitive_root_of_unity(ell: int, ctx: FieldContext) -> int:
    """Smallest integer of multiplicative order exactly 2**ell mod p.

    A starting root comes from c**((p-1)/L) for the first quadratic
    non-residue c; every other primitive L-th root is an odd power of it and
    the minimum over those is returned, so the answer depends only on (p, L).
    """
    p, L = ctx.p, 1 << ell
    if ell < 0 or (p - 1) % L:
        raise ValueError(f"p={p} is not 1 mod 2^{ell}")
    if L == 1:
        return 1
    c = 2
    while pow(c, (p - 1) // 2, p) != p - 1:
        c += 1
    root = pow(c, (p - 1) // L, p)
    step = root * root % p
    best = cur = root
    for _ in range(L // 2 - 1):
        cur = cur * step % p
        if cur < best:
            best = cur
    return best


def find_ntt_prime(target_bits: int, ell: int,
                   direction: Direction = Direction.LARGEST_BELOW,
                   log2_beta: int = 64) -> int:
    """A prime p = 1 mod 2**ell with exactly ``target_bits`` bits."""
    if target_bits > log2_beta:
        raise ValueError(f"target_bits={target_bits} exceeds word size {log2_beta}")
    if target_bits < 2 or ell < 0:
        raise ValueError("need target_bits >= 2 and ell >= 0")
    L = 1 << ell
    lo, hi = 1 << (target_bits - 1), 1 << target_bits
    if direction is Direction.SMALLEST_ABOVE:
        c = (lo - 1) // L * L + 1
        if c < lo:
            c += L
        candidates = range(c, hi, L)
    else:
        c = (hi - 2) // L * L + 1
        candidates = range(c, lo - 1, -L)
    for n in candidates:
        if is_prime(n):
            return n
    raise SearchExhausted(
        f"no {target_bits}-bit prime is 1 mod 2^{ell}")


def add_mod_p_full(x, y, ctx: FieldContext):
    """(x + y) mod p for any p < beta, written as x - (p - y) with a borrow fix."""
    wp = ctx.wp
    py = ctx.p - y
    return cadd_if(x < py, sub_mod_beta(x, py, wp), ctx.p, wp)


def sub_mod_p_full(x, y, ctx: FieldContext):
    """(x - y) mod p for any p < beta; the borrow is the x < y test."""
    wp = ctx.wp
    return cadd_if(x < y, sub_mod_beta(x, y, wp), ctx.p, wp)
