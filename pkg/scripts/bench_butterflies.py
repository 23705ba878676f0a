"""Time the three forward strategies across transform sizes.

Writes one CSV (the bench schema plus a min column) and prints the
shoup-lazy / baseline ratio per size.

    python3 scripts/bench_butterflies.py --ells 6 8 10 11 --trials 30 --out bench.csv
"""

import argparse
import csv
import sys

from lazyntt.bench import CSV_HEADER, pin_cpu_from_env, run_bench
from lazyntt.ntt import Strategy


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ells", type=int, nargs="+", default=[6, 8, 10, 11])
    ap.add_argument("--trials", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="-")
    args = ap.parse_args(argv)

    cpu = pin_cpu_from_env()
    if cpu is not None:
        print(f"pinned to cpu {cpu}", file=sys.stderr)
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER + ("ns_min",))
    for ell in args.ells:
        results = run_bench(ell=ell, trials=args.trials, seed=args.seed)
        by = {r.strategy: r for r in results}
        for r in results:
            w.writerow([r.strategy.value, r.p, r.ell, r.trials, f"{r.ns_median:.3f}", "",
                        f"{r.ns_min:.3f}"])
        ratio = by[Strategy.SHOUP_LAZY].ns_median / by[Strategy.BASELINE].ns_median
        print(f"ell={ell}: shoup-lazy / baseline = {ratio:.3f}", file=sys.stderr)
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()
