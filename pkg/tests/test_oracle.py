import csv
import io
from dataclasses import replace

import pytest

from lazyntt import butterfly as bf
from lazyntt.oracle import (ALGORITHMS, bit_reversed, cyclic_fold, exhaustive_butterfly_check,
                            naive_dft, odd_primes_below, schoolbook_polymul, write_report_csv)
from lazyntt.word_arith import add_mod_beta, csub, sub_mod_beta


def test_naive_dft_examples():
    assert naive_dft([1, 0, 0, 0], 5, 13) == [1, 1, 1, 1]
    assert naive_dft([1, 2, 3, 4], 5, 13) == [10, 1, 11, 8]
    assert naive_dft([7] * 8, 64, 97) == [56, 0, 0, 0, 0, 0, 0, 0]


def test_naive_dft_matches_definition():
    a, w, p = [3, 1, 4, 1, 5, 9, 2, 6], 64, 97
    assert naive_dft(a, w, p) == [sum(pow(w, i * j, p) * a[i] for i in range(8)) % p for j in range(8)]


def test_schoolbook_examples():
    assert schoolbook_polymul([1], [4, 5, 6], 13) == [4, 5, 6]
    assert schoolbook_polymul([1, 1], [1, 1], 13) == [1, 2, 1]
    c = schoolbook_polymul([1, 2, 3, 4], [4, 3, 2, 1], 13)
    assert c == [4, 11, 20 % 13, 30 % 13, 20 % 13, 11, 4]
    assert cyclic_fold(c, 4, 13) == [24 % 13, 22 % 13, 24 % 13, 30 % 13]


def test_bit_reversed():
    assert bit_reversed(list("abcdefgh")) == list("aecgbfdh")
    assert bit_reversed([9]) == [9]


def test_odd_primes_below():
    assert odd_primes_below(30) == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(odd_primes_below(64)) == 17


@pytest.mark.parametrize("name", sorted(ALGORITHMS))
def test_every_kernel_exhaustive_8bit(name):
    rep = exhaustive_butterfly_check(8, name)
    assert rep.ok, rep.summary()
    assert rep.primes[0] == 3 and rep.cases > 0


def test_domain_sizes():
    rep = exhaustive_butterfly_check(8, "shoup-lazy", primes=[3, 5])
    assert rep.cases == 2 * 36 + 4 * 100
    rep = exhaustive_butterfly_check(8, "inverse-lazy", primes=[3])
    assert rep.cases == 2 * 144
    rep = exhaustive_butterfly_check(8, "unit-lazy", primes=[3])
    assert rep.cases == 36


def test_negative_control_shoup_lazy_above_quarter_beta():
    rep = exhaustive_butterfly_check(8, "shoup-lazy", primes=[67, 127])
    assert rep.interval_violations > 0 and rep.congruence_violations > 0
    assert rep.first_counterexample["reason"] == "interval"


def test_negative_control_baseline_above_half_beta():
    rep = exhaustive_butterfly_check(8, "baseline", primes=[131])
    assert not rep.ok


def _mutant_no_2p(x, y, tw, ctx):
    # lazy Shoup kernel without the +2p offset in T
    wp = ctx.wp
    xo = csub(add_mod_beta(x, y, wp), 2 * ctx.p, wp)
    return xo, bf.shoup_mul_candidate(sub_mod_beta(x, y, wp), tw.w, tw.w_shoup, ctx)


def _mutant_no_sum_correction(x, y, tw, ctx):
    xo, yo = bf.butterfly_shoup_lazy(x, y, tw, ctx)
    return add_mod_beta(x, y, ctx.wp), yo


@pytest.mark.parametrize("mutant", [_mutant_no_2p, _mutant_no_sum_correction])
def test_mutation_controls(mutant):
    kern = replace(ALGORITHMS["shoup-lazy"], name="mutant", fn=mutant)
    rep = exhaustive_butterfly_check(8, kern, primes=[61])
    assert not rep.ok
    assert rep.first_counterexample is not None


def test_report_csv():
    reps = [exhaustive_butterfly_check(8, "shoup-lazy", primes=[3]),
            exhaustive_butterfly_check(8, "shoup-lazy", primes=[67])]
    rows = list(csv.DictReader(io.StringIO(write_report_csv(reps))))
    assert rows[0]["interval_violations"] == "0" and rows[0]["p"] == ""
    assert rows[1]["p"] == "67" and int(rows[1]["interval_violations"]) > 0
    buf = io.StringIO()
    write_report_csv(reps, buf)
    assert buf.getvalue().startswith("algorithm,log2_beta")


def test_rejects_wide_words():
    with pytest.raises(ValueError):
        exhaustive_butterfly_check(32, "shoup-lazy")


def test_16bit_walk_on_small_primes():
    rep = exhaustive_butterfly_check(16, "montgomery-lazy", primes=[3, 17, 97])
    assert rep.ok, rep.summary()
