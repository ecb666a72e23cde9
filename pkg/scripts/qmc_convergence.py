"""Error of the cube estimate of zeta(n) against the series, as the Sobol
point count grows.  Prints a table; pass --csv to get machine-readable rows."""
import argparse
import csv
import sys

from zeta_crucible import cube, series


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--min-log2", type=int, default=10)
    p.add_argument("--max-log2", type=int, default=20)
    p.add_argument("--seed", type=int, default=cube.DEFAULT_SEED)
    p.add_argument("--csv", action="store_true")
    args = p.parse_args()

    rows = []
    for n in args.n:
        ref = series.zeta_series(n, 1e-12).value
        for m in range(args.min_log2, args.max_log2 + 1, 2):
            est = cube.zeta_from_cube_estimate(n, 2 ** m, seed=args.seed)
            rows.append((n, m, est.value, abs(est.value - ref), est.stat_error))

    if args.csv:
        w = csv.writer(sys.stdout)
        w.writerow(["n", "log2_points", "estimate", "abs_error", "stat_error"])
        w.writerows(rows)
        return
    print(f"{'n':>2} {'2^m':>4} {'estimate':>20} {'|err|':>10} {'sigma':>10}")
    for n, m, v, e, s in rows:
        print(f"{n:>2} {m:>4} {v:>20.15f} {e:>10.2e} {s:>10.2e}")


if __name__ == "__main__":
    main()
