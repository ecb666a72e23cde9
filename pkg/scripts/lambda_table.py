"""Tabulate the normalised log-coth integral against lambda(n) and the
resulting zeta(n) against the series and, for even n, the Bernoulli form."""
import argparse
import math

from zeta_crucible import bernoulli, pipeline, series


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--nmax", type=int, default=10)
    args = p.parse_args()
    print(f"{'n':>2} {'integral/(n-1)!':>20} {'lambda(n)':>20} {'diff':>9} "
          f"{'zeta (integral)':>20} {'vs closed form':>14}")
    for n in range(2, args.nmax + 1):
        r = pipeline.log_coth_power_integral(n)
        norm = r.value / math.factorial(n - 1)
        lam = series.lambda_series(n, 1e-12).value
        z = pipeline.zeta_n_corollary(n)
        closed = (f"{abs(z - bernoulli.zeta_even_closed_form(n // 2)):.1e}"
                  if n % 2 == 0 else "-")
        print(f"{n:>2} {norm:>20.16f} {lam:>20.16f} {abs(norm - lam):>9.1e} "
              f"{z:>20.16f} {closed:>14}")


if __name__ == "__main__":
    main()
