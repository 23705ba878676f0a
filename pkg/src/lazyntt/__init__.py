"""Number-theoretic transforms over word-sized primes with lazy reduction."""

from .modfield import (Direction, FieldContext, TwiddlePair, ValidityClass,
                       find_ntt_prime, find_primitive_root_of_unity)
from .ntt import (Interval, NttPlan, ResidueVec, Strategy, bit_reverse_permute, forward,
                  inverse, normalize, plan_build, scale)
from .polymul import PlanCache, cyclic_convolve, polymul_mod_p
from .word_arith import WordParams

__all__ = [
    "Direction", "FieldContext", "Interval", "NttPlan", "PlanCache", "ResidueVec",
    "Strategy", "TwiddlePair", "ValidityClass", "WordParams", "bit_reverse_permute",
    "cyclic_convolve", "find_ntt_prime", "find_primitive_root_of_unity", "forward",
    "inverse", "normalize", "plan_build", "polymul_mod_p", "scale",
]
