"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import IO, Iterator, Optional, Sequence

from . import geometry, intensity, oracle, series, sieve
from .intensity import IntensityProfile, format_float

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _add_range(sub: argparse.ArgumentParser, required: bool = True) -> None:
    sub.add_argument("--from", dest="x_min", type=float, required=required)
    sub.add_argument("--to", dest="x_max", type=float, required=required)
    sub.add_argument("--step", type=float, default=0.01)


def cmd_profile(args: argparse.Namespace) -> int:
    prof = intensity.profile(args.p, args.x_min, args.x_max, args.step)
    with _output(args.out) as fh:
        prof.write_csv(fh)
    return EXIT_OK


def _partial_sum(args: argparse.Namespace) -> series.OmegaPartialSum:
    if args.primes is not None and args.m is not None:
        raise UsageError("give either --primes or --m, not both")
    if args.primes is not None:
        return series.OmegaPartialSum(tuple(args.primes))
    if args.m is not None:
        return series.OmegaPartialSum.first(args.m)
    raise UsageError("one of --primes or --m is required")


def cmd_omega_m(args: argparse.Namespace) -> int:
    partial = _partial_sum(args)
    if args.mode == "exact":
        lo, hi = int(round(args.x_min)), int(round(args.x_max))
        if lo < 0 or hi <= lo:
            raise UsageError("exact mode needs 0 <= from < to")
        counts = series.omega_m_exact_range(partial.primes, lo, hi)
        rows = [f"{lo + i},{c}" for i, c in enumerate(counts.tolist())]
        csv_text = "n,omega_m\n" + "".join(r + "\n" for r in rows)
    else:
        grid = intensity.closed_grid(args.x_min, args.x_max, args.step)
        csv_text = IntensityProfile(grid, series.omega_m_array(partial, grid), "omega_m").to_csv()

    if args.zeros:
        zeros = sieve.locate_zeros_float(partial, args.x_min, args.x_max, args.step)
        if args.out is not None:
            with _output(args.out) as fh:
                fh.write(csv_text)
        sys.stdout.write("".join(f"{z}\n" for z in zeros))
    else:
        with _output(args.out) as fh:
            fh.write(csv_text)
    return EXIT_OK


def _series_view(n: int) -> tuple[str, int, int]:
    pairs = series.factor_series(n)
    text = str(oracle.Factorization(n, pairs))
    return text, series.omega_series(n), series.big_omega_series(n)


def _oracle_view(n: int) -> tuple[str, int, int]:
    f = oracle.factorize(n)
    return str(f), f.omega, f.big_omega


def cmd_factor(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        raise UsageError(f"--n must be >= 1, got {n}")
    if args.both:
        s_text, s_om, s_big = _series_view(n)
        o_text, o_om, o_big = _oracle_view(n)
        match = (s_text, s_om, s_big) == (o_text, o_om, o_big)
        print(f"{s_text}, omega={s_om}, Omega={s_big}, match={'true' if match else 'false'}")
        if not match:
            print(f"oracle: {o_text}, omega={o_om}, Omega={o_big}", file=sys.stderr)
            return EXIT_MISMATCH
        return EXIT_OK
    text, om, big = _series_view(n) if args.path == "series" else _oracle_view(n)
    print(f"{text}, omega={om}, Omega={big}")
    return EXIT_OK


def cmd_sieve(args: argparse.Namespace) -> int:
    seed = args.seed
    try:
        series.check_prime_prefix(seed)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.n < max(2, seed[-1]):
        raise UsageError(f"--n must be >= 2 and >= the seed frontier {seed[-1]}")

    rows: list[str] = []

    def record(ns, values) -> None:
        rows.extend(f"{n},{v}\n" for n, v in zip(ns.tolist(), values.tolist()))

    primes = sieve.sieve_to(args.n, seed, trace=record if args.trace else None)
    with _output(args.out) as fh:
        if args.trace:
            fh.write("n,omega_m_value\n")
            fh.writelines(rows)
        else:
            fh.writelines(f"{p}\n" for p in primes)

    if args.verify:
        expected = list(oracle.eratosthenes(args.n).primes)
        if primes != expected:
            print(
                f"mismatch: interference sieve found {len(primes)} primes, "
                f"Eratosthenes {len(expected)}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH
        print(f"verified {len(primes)} primes <= {args.n}", file=sys.stderr)
    return EXIT_OK


def cmd_zeta(args: argparse.Namespace) -> int:
    if not args.s > 1:
        raise UsageError(f"--s must be > 1, got {args.s}")
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    reports = series.zeta_convergence(args.s, series.log_checkpoints(args.n))
    with _output(args.out) as fh:
        fh.write(series.ZETA_CSV_HEADER + "\n")
        for rep in reports:
            fh.write(rep.csv_row() + "\n")
    return EXIT_OK


def cmd_geometry(args: argparse.Namespace) -> int:
    arr = geometry.build_arrangement(args.d, args.primes, args.placement)
    shared = geometry.overlaps(arr)
    if args.compare:
        if args.x_min is None or args.x_max is None:
            raise UsageError("--compare needs --from and --to")
        x, inc, coh = geometry.compare_curves(arr, args.x_min, args.x_max, args.step)
        with _output(args.out) as fh:
            fh.write("x,incoherent,coherent\n")
            for row in zip(x, inc, coh):
                fh.write(",".join(format_float(v) for v in row) + "\n")
        print(f"{len(shared)} overlapping position(s)", file=sys.stderr)
        return EXIT_OK
    with _output(args.out) as fh:
        arr.write_csv(fh)
        fh.write("\nposition,position_float,shared_by_sets\n")
        for y, sets in shared:
            fh.write(
                f"{y.numerator}/{y.denominator},{format_float(float(y))},"
                + ";".join(str(i) for i in sets)
                + "\n"
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slitprimes",
        description="Prime-factorization functions from multi-slit interference intensities.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("profile", help="intensity of one p-slit set")
    p.add_argument("--p", type=int, required=True)
    _add_range(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_profile)

    p = subs.add_parser("omega-m", help="partial sum over the first m prime sets")
    p.add_argument("--primes", type=_int_list)
    p.add_argument("--m", type=int)
    _add_range(p)
    p.add_argument("--mode", choices=("float", "exact"), default="float")
    p.add_argument("--zeros", action="store_true", help="print integer zeros on stdout")
    p.add_argument("--out")
    p.set_defaults(func=cmd_omega_m)

    p = subs.add_parser("factor", help="factorization, omega and Omega of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--path", choices=("series", "oracle"), default="series")
    p.add_argument("--both", action="store_true", help="run both paths and report agreement")
    p.set_defaults(func=cmd_factor)

    p = subs.add_parser("sieve", help="primes <= N by the interference sieve")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=_int_list, default=[2])
    p.add_argument("--verify", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sieve)

    p = subs.add_parser("zeta", help="check sum 2^omega(n)/n^s against zeta(s)^2/zeta(2s)")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_zeta)

    p = subs.add_parser("geometry", help="slit arrangement, overlaps, coherent vs incoherent")
    p.add_argument("--primes", type=_int_list, required=True)
    p.add_argument("--d", default="1")
    p.add_argument("--placement", choices=geometry.PLACEMENTS, default=geometry.CENTERED)
    p.add_argument("--compare", action="store_true")
    _add_range(p, required=False)
    p.add_argument("--out")
    p.set_defaults(func=cmd_geometry)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"slitprimes {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
