"""Map which primes each kernel survives at beta = 2^8, beyond its proven class.

For every odd prime below beta, runs the exhaustive walker and reports whether
the kernel keeps both contracts. Shows how much headroom each bound leaves:
the lazy forward kernel, for example, first breaks just above beta/4.

    python3 scripts/validity_region.py [--kernels shoup-lazy montgomery-lazy]
"""

import argparse

from lazyntt.oracle import ALGORITHMS, CORE_ALGORITHMS, exhaustive_butterfly_check, odd_primes_below


def scan(name, log2_beta=8):
    kern = ALGORITHMS[name]
    beta = 1 << log2_beta
    rows = []
    for p in odd_primes_below(beta):
        if kern.in_mult * p > beta:
            break  # inputs no longer fit in a word
        rep = exhaustive_butterfly_check(log2_beta, name, primes=[p])
        rows.append((p, rep.ok, rep.congruence_violations, rep.interval_violations))
    return beta // kern.beta_divisor, rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kernels", nargs="+", default=list(CORE_ALGORITHMS), choices=sorted(ALGORITHMS))
    args = ap.parse_args(argv)
    for name in args.kernels:
        bound, rows = scan(name)
        good = [p for p, ok, _, _ in rows if ok]
        first_bad = next((r for r in rows if not r[1]), None)
        print(f"{name}: class bound p < {bound}; largest passing p = {max(good)}; ", end="")
        if first_bad:
            p, _, c, i = first_bad
            print(f"first failure p = {p} ({c} congruence, {i} interval violations)")
        else:
            print("no failure among primes whose inputs fit a word")
        beyond = [p for p in good if p >= bound]
        if beyond:
            print(f"  passes above the bound: {beyond}")


if __name__ == "__main__":
    main()
