import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lazyntt.modfield import (Direction, FieldContext, SearchExhausted, ValidityClass,
                              add_mod_p_full, find_ntt_prime, find_primitive_root_of_unity,
                              inverse_mod_beta, is_prime, mod_pow, montgomery_precompute,
                              shoup_precompute, sub_mod_p_full)
from lazyntt.oracle import odd_primes_below
from lazyntt.word_arith import WordParams

from conftest import P62, W8, W16


def test_context_validity_classes():
    assert FieldContext(61, W8).validity_class is ValidityClass.QUARTER_BETA
    assert FieldContext(67, W8).validity_class is ValidityClass.HALF_BETA
    assert FieldContext(251, W8).validity_class is ValidityClass.FULL_BETA
    assert FieldContext(P62).validity_class is ValidityClass.QUARTER_BETA


@pytest.mark.parametrize("p", [1, 2, 15, 256, 65521 * 3])
def test_context_rejects(p):
    with pytest.raises(ValueError):
        FieldContext(p, W8)


@pytest.mark.parametrize("w,p,expected", [(3, 17, 11565), (1, 5, 13107), (16, 17, 61680)])
def test_shoup_precompute_examples(w, p, expected):
    assert shoup_precompute(w, FieldContext(p, W16)) == expected


def test_montgomery_precompute_examples(ctx17, ctx13):
    assert montgomery_precompute(3, ctx17) == 3
    # 65536 = 5041*13 + 3
    assert montgomery_precompute(1, ctx13) == 3


@pytest.mark.parametrize("w", [0, 17, 100])
def test_precompute_rejects_bad_twiddle(ctx17, w):
    with pytest.raises(ValueError):
        shoup_precompute(w, ctx17)
    with pytest.raises(ValueError):
        montgomery_precompute(w, ctx17)


def test_shoup_precompute_bound_exhaustive_8bit():
    for p in odd_primes_below(256):
        ctx = FieldContext(p, W8)
        for w in range(1, p):
            ws = shoup_precompute(w, ctx)
            # 0 <= w*beta/p - ws < 1, in integers
            assert 0 <= w * 256 - ws * p < p
            assert 0 < ws < 256


def test_inverse_mod_beta_examples():
    assert inverse_mod_beta(1, W16) == 1
    assert inverse_mod_beta(17, W16) == 61681
    assert 17 * 61681 == 16 * 65536 + 1
    assert inverse_mod_beta(13, W16) == 20165
    with pytest.raises(ValueError):
        inverse_mod_beta(12, W16)


def test_inverse_mod_beta_exhaustive():
    for p in range(1, 256, 2):
        assert p * inverse_mod_beta(p, W8) % 256 == 1
    for p in range(1, 1 << 16, 2):
        assert p * inverse_mod_beta(p, W16) % (1 << 16) == 1


@given(st.integers(0, 2**63 - 1).map(lambda n: 2 * n + 1))
def test_inverse_mod_beta_64(p):
    assert p * inverse_mod_beta(p, WordParams(64)) % 2**64 == 1


def test_context_montgomery_constant(ctx62):
    assert P62 * ctx62.j_inv % 2**64 == 1


def test_mod_pow_examples():
    assert mod_pow(7, 0, FieldContext(97, W8)) == 1
    assert mod_pow(5, 12, FieldContext(97, W8)) == 64
    assert mod_pow(5, 2, FieldContext(13, W8)) == 12


def test_is_prime_matches_sieve():
    sieve = set(odd_primes_below(20000)) | {2}
    assert [n for n in range(20000) if is_prime(n)] == sorted(sieve)


@pytest.mark.parametrize("n,expected", [
    (3215031751, False),             # strong pseudoprime to bases 2, 3, 5, 7
    (3825123056546413051, False),    # strong pseudoprime to bases 2..23
    (2**61 - 1, True),
    (18446744073709551557, True),    # largest 64-bit prime
    (P62, True),
    (P62 + 2048, False),
])
def test_is_prime_hard_cases(n, expected):
    assert is_prime(n) is expected


def _order(x, p):
    k, y = 1, x
    while y != 1:
        y = y * x % p
        k += 1
    return k


def test_primitive_root_examples():
    assert find_primitive_root_of_unity(0, FieldContext(97, W8)) == 1
    w97 = find_primitive_root_of_unity(3, FieldContext(97, W8))
    assert pow(w97, 8, 97) == 1 and pow(w97, 4, 97) == 96
    # brute force: smallest element of order 8 in F_97
    assert w97 == min(x for x in range(1, 97) if _order(x, 97) == 8) == 33
    assert find_primitive_root_of_unity(2, FieldContext(13, W8)) == 5


def test_primitive_root_rejects_large_ell():
    with pytest.raises(ValueError):
        find_primitive_root_of_unity(3, FieldContext(13, W8))


@pytest.mark.parametrize("ell", [1, 5, 10, 11])
def test_primitive_root_62bit(ctx62, ell):
    w = find_primitive_root_of_unity(ell, ctx62)
    assert pow(w, 1 << ell, P62) == 1
    assert pow(w, 1 << (ell - 1), P62) == P62 - 1


def test_primitive_root_is_smallest_of_its_order():
    for p in [17, 41, 97, 193, 257, 769]:
        ctx = FieldContext(p, W16)
        for ell in range(1, 6):
            if (p - 1) % (1 << ell):
                continue
            L = 1 << ell
            assert find_primitive_root_of_unity(ell, ctx) == min(
                x for x in range(1, p) if _order(x, p) == L)


def test_find_ntt_prime_examples():
    assert find_ntt_prime(7, 5, Direction.SMALLEST_ABOVE) == 97
    assert find_ntt_prime(7, 5, Direction.LARGEST_BELOW) == 97
    assert find_ntt_prime(3, 2, Direction.SMALLEST_ABOVE) == 5
    assert find_ntt_prime(4, 2) == 13
    assert find_ntt_prime(62, 11) == P62
    with pytest.raises(SearchExhausted):
        find_ntt_prime(3, 5)
    with pytest.raises(ValueError):
        find_ntt_prime(65, 1)


def test_find_ntt_prime_brute_force():
    for bits in range(3, 12):
        for ell in range(0, bits):
            cands = [n for n in range(1 << (bits - 1), 1 << bits)
                     if n % (1 << ell) == 1 % (1 << ell) and is_prime(n)]
            for direction, pick in [(Direction.SMALLEST_ABOVE, min), (Direction.LARGEST_BELOW, max)]:
                if cands:
                    assert find_ntt_prime(bits, ell, direction) == pick(cands)
                else:
                    with pytest.raises(SearchExhausted):
                        find_ntt_prime(bits, ell, direction)


def test_full_range_add_sub_examples():
    ctx = FieldContext(65521, W16)
    assert add_mod_p_full(0, 0, ctx) == 0
    assert add_mod_p_full(65520, 65520, ctx) == 65519
    assert sub_mod_p_full(0, 1, ctx) == 65520


def test_full_range_add_sub_exhaustive_8bit():
    # every odd prime p < beta, including p > beta/2 where x + y overflows a word
    for p in odd_primes_below(256):
        ctx = FieldContext(p, W8)
        x, y = np.meshgrid(np.arange(p, dtype=np.uint64), np.arange(p, dtype=np.uint64))
        xi, yi = x.astype(np.int64), y.astype(np.int64)
        assert np.array_equal(add_mod_p_full(x, y, ctx).astype(np.int64), (xi + yi) % p)
        assert np.array_equal(sub_mod_p_full(x, y, ctx).astype(np.int64), (xi - yi) % p)


@given(st.integers(0, 2**64 - 60), st.integers(0, 2**64 - 60))
def test_full_range_add_sub_64(x, y):
    ctx = FieldContext(18446744073709551557)
    p = ctx.p
    x, y = x % p, y % p
    assert add_mod_p_full(x, y, ctx) == (x + y) % p
    assert sub_mod_p_full(x, y, ctx) == (x - y) % p
