"""Command-line front end: bench, verify, find-prime, transform."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import oracle
from .bench import (WESTMERE_REFERENCE, butterfly_count, default_prime, pin_cpu_from_env,
                    results_csv, run_bench, shoup_not_slower)
from .modfield import Direction, FieldContext, SearchExhausted, find_ntt_prime
from .ntt import (Interval, ResidueVec, Strategy, forward, inverse, normalize, plan_build,
                  scale)
from .verify import run_exhaustive, run_quick


class InputError(ValueError):
    pass


def _strategies(text: str) -> list[Strategy]:
    try:
        return [Strategy(s.strip()) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"strategies are {', '.join(s.value for s in Strategy)}") from None


def cmd_bench(args) -> int:
    cpu = pin_cpu_from_env()
    results = run_bench(args.ell, args.strategies, args.trials, args.warmup, args.seed,
                        args.p, args.cpu_ghz)
    r0 = results[0]
    out = sys.stderr if args.csv == "-" else sys.stdout
    print(f"L = 2^{args.ell} = {1 << args.ell}, p = {r0.p} ({r0.p.bit_length()} bits), "
          f"butterflies per transform = {butterfly_count(args.ell)}", file=out)
    print(f"seed = {args.seed}, input sha256[:16] = {r0.input_digest}"
          + (f", pinned to cpu {cpu}" if cpu is not None else ""), file=out)
    for r in results:
        cyc = "" if r.cycles_median is None else f"  ~{r.cycles_median:.2f} cycles"
        print(f"  {r.strategy.value:16s} median {r.ns_median:8.3f} ns/butterfly  "
              f"min {r.ns_min:8.3f}{cyc}", file=out)
    flag = shoup_not_slower(results)
    if flag is not None:
        print(f"shoup-lazy <= baseline (time per butterfly): {'yes' if flag else 'no'}", file=out)
    ref = ", ".join(f"{k} {v}" for k, v in WESTMERE_REFERENCE.items())
    print(f"reference, cycles/butterfly on Westmere: {ref}", file=out)
    if args.csv:
        text = results_csv(results)
        if args.csv == "-":
            sys.stdout.write(text)
        else:
            with open(args.csv, "w") as fh:
                fh.write(text)
    return 0


def cmd_verify(args) -> int:
    run = run_exhaustive if args.level == "exhaustive" else run_quick
    results, reports = run(args.seed)
    for r in results:
        print(r.line())
    if args.report:
        with open(args.report, "w", newline="") as fh:
            oracle.write_report_csv(reports, fh)
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_find_prime(args) -> int:
    try:
        p = find_ntt_prime(args.bits, args.ell, Direction(args.direction))
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(p)
    return 0


def read_vector(fh, binary: bool) -> list[int]:
    if binary:
        raw = fh.read()
        if len(raw) % 8:
            raise InputError(f"binary input length {len(raw)} is not a multiple of 8")
        return [int(v) for v in np.frombuffer(raw, dtype="<u8")]
    values = []
    for lineno, line in enumerate(fh.read().decode().splitlines(), 1):
        if line.lstrip().startswith("#"):
            continue
        for tok in line.split():
            try:
                values.append(int(tok, 10))
            except ValueError:
                raise InputError(f"line {lineno}: not a decimal integer: {tok!r}") from None
    return values


def write_vector(fh, values: list[int], binary: bool, header: str) -> None:
    if binary:
        fh.write(np.array(values, dtype="<u8").tobytes())
    else:
        fh.write((f"# {header}\n" + "".join(f"{v}\n" for v in values)).encode())


def transform_values(values: list[int], p: int | None, ell: int | None, direction: str,
                     strategy: Strategy, do_scale: bool) -> tuple[list[int], str]:
    L = len(values)
    if L == 0 or L & (L - 1):
        raise InputError(f"input length {L} is not a power of two")
    if ell is None:
        ell = L.bit_length() - 1
    elif L != 1 << ell:
        raise InputError(f"input length {L} != 2^{ell}")
    if p is None:
        p = default_prime(ell)
    if any(v < 0 or v >= p for v in values):
        raise InputError(f"residue outside [0, {p})")
    ctx = FieldContext(p)
    plan = plan_build(ctx, ell, strategy)
    vec = ResidueVec.from_values(values, p, Interval.LT_P)
    if direction == "forward":
        out = normalize(forward(plan, vec), ctx)
        order = "bit-reversed order"
    else:
        out = inverse(plan, vec)
        out = scale(plan, out) if do_scale else normalize(out, ctx)
        order = "natural order" + ("" if do_scale else ", unscaled (L*a)")
    header = f"{direction} transform, {order}, p={p}, ell={ell}, omega={plan.omega}"
    return out.tolist(), header


def cmd_transform(args) -> int:
    src = sys.stdin.buffer if args.input == "-" else open(args.input, "rb")
    with src:
        values = read_vector(src, args.binary)
    out, header = transform_values(values, args.p, args.ell, args.direction,
                                   args.strategy, args.scale)
    dst = sys.stdout.buffer if args.output == "-" else open(args.output, "wb")
    try:
        write_vector(dst, out, args.binary, header)
    finally:
        if dst is not sys.stdout.buffer:
            dst.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lazyntt", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="time per butterfly of forward transforms")
    b.add_argument("--ell", type=int, default=11)
    b.add_argument("--strategies", type=_strategies, default=list(Strategy),
                   help="comma-separated subset of baseline,shoup-lazy,montgomery-lazy")
    b.add_argument("--trials", type=int, default=50)
    b.add_argument("--warmup", type=int, default=5)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--p", type=int, default=None, help="default: largest prime < 2^62, 1 mod 2^ell")
    b.add_argument("--cpu-ghz", type=float, default=None,
                   help="nominal clock used to convert ns to cycles")
    b.add_argument("--csv", default=None, help="write CSV here ('-' for stdout)")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("verify", help="run the oracle suites")
    v.add_argument("--level", choices=("quick", "exhaustive"), default="quick")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report", default=None, help="CSV violation report path")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("find-prime", help="prime p = 1 mod 2^ell with the given bit length")
    f.add_argument("--bits", type=int, required=True)
    f.add_argument("--ell", type=int, required=True)
    f.add_argument("--direction", choices=[d.value for d in Direction],
                   default=Direction.LARGEST_BELOW.value)
    f.set_defaults(func=cmd_find_prime)

    t = sub.add_parser("transform", help="transform a vector file")
    t.add_argument("input", help="input file ('-' for stdin)")
    t.add_argument("-o", "--output", default="-")
    t.add_argument("--p", type=int, default=None)
    t.add_argument("--ell", type=int, default=None)
    t.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    t.add_argument("--strategy", type=Strategy, default=Strategy.SHOUP_LAZY)
    t.add_argument("--scale", action="store_true", help="multiply inverse output by 1/L")
    t.add_argument("--binary", action="store_true", help="little-endian 8-byte words")
    t.set_defaults(func=cmd_transform)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
