"""Fixed-radix word arithmetic.

Every routine here accepts either Python ints or ``numpy.uint64`` arrays and
returns the same kind. The butterflies are written against this module only,
so the code that is checked exhaustively at an 8-bit word is the same code
that runs over 64-bit words.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SUPPORTED_WIDTHS = (8, 16, 32, 64)

_M32 = 0xFFFFFFFF


def _is_array(*xs) -> bool:
    return any(isinstance(x, np.ndarray) for x in xs)


@dataclass(frozen=True)
class WordParams:
    """Machine word radix beta = 2**log2_beta."""

    log2_beta: int = 64
    mask: int = field(init=False, repr=False)

    def __post_init__(self):
        if self.log2_beta not in SUPPORTED_WIDTHS:
            raise ValueError(
                f"log2_beta must be one of {SUPPORTED_WIDTHS}, got {self.log2_beta}")
        object.__setattr__(self, "mask", (1 << self.log2_beta) - 1)

    @property
    def beta(self) -> int:
        return 1 << self.log2_beta

    def words(self, values) -> np.ndarray:
        """Pack values into a uint64 array, rejecting anything outside [0, beta)."""
        if isinstance(values, np.ndarray) and values.dtype == np.uint64:
            arr = values
        else:
            ints = [int(v) for v in np.ravel(values)]
            if any(v < 0 or v >= 1 << 64 for v in ints):
                raise ValueError("word value out of range")
            arr = np.array(ints, dtype=np.uint64).reshape(np.shape(values))
        if arr.size and int(arr.max()) > self.mask:
            raise ValueError("word value out of range")
        return arr


def add_mod_beta(a, b, wp: WordParams):
    return (a + b) & wp.mask


def sub_mod_beta(a, b, wp: WordParams):
    return (a - b) & wp.mask


def mul_lo(a, b, wp: WordParams):
    return (a * b) & wp.mask


def mul_hi(a, b, wp: WordParams):
    """High word of a*b, i.e. floor(a*b / beta)."""
    if wp.log2_beta == 64 and _is_array(a, b):
        return _mul_hi_u64(a, b)
    return (a * b) >> wp.log2_beta


def mul_hi_lo(a, b, wp: WordParams):
    """Full double-word product as (hi, lo) with hi*beta + lo == a*b."""
    return mul_hi(a, b, wp), mul_lo(a, b, wp)


def _mul_hi_u64(a, b):
    # 32-bit limbs; every partial product and carry sum fits in uint64.
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    a0, a1 = a & _M32, a >> 32
    b0, b1 = b & _M32, b >> 32
    lo_lo = a0 * b0
    hi_lo = a1 * b0
    lo_hi = a0 * b1
    mid = (lo_lo >> 32) + (hi_lo & _M32) + (lo_hi & _M32)
    return a1 * b1 + (hi_lo >> 32) + (lo_hi >> 32) + (mid >> 32)


def flag(cond, wp: WordParams):
    """All-ones word where ``cond`` holds, zero elsewhere."""
    if isinstance(cond, np.ndarray):
        return cond.astype(np.uint64) * np.uint64(wp.mask)
    return -int(cond) & wp.mask


def select(cond, a, b, wp: WordParams):
    """Branch-free ``a if cond else b``."""
    return b ^ ((a ^ b) & flag(cond, wp))


def csub(x, c, wp: WordParams):
    """x - c if x >= c else x (unsigned compare, no branch)."""
    return (x - (c & flag(x >= c, wp))) & wp.mask


def cadd_if(cond, x, c, wp: WordParams):
    """x + c where ``cond`` holds, x elsewhere, wrapping mod beta."""
    return (x + (c & flag(cond, wp))) & wp.mask
