"""Run every verification suite and write JSON and CSV reports.

    python scripts/run_verification.py --out-dir results/
"""
import argparse
import pathlib
import sys

from zeta_crucible.suites import SUITES, SuiteConfig, run_suite


def main():
    p = argparse.ArgumentParser(description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("results"))
    p.add_argument("--qmc-log2", type=int, default=20)
    p.add_argument("--seed", type=int, default=None)
    args = p.parse_args()

    kwargs = {"suites": SUITES, "qmc_points": 2 ** args.qmc_log2}
    if args.seed is not None:
        kwargs["qmc_seed"] = args.seed
    report = run_suite(SuiteConfig(**kwargs))
    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / "report.json").write_text(report.to_json(), encoding="utf-8")
    (args.out_dir / "report.csv").write_text(report.to_csv(), encoding="utf-8")

    failed = [e.id for e in report.entries if not e.passed]
    print(f"{len(report.entries)} checks, {len(failed)} failed -> {args.out_dir}/")
    for i in failed:
        print("  FAIL", i)
    sys.exit(0 if not failed else 1)


if __name__ == "__main__":
    main()
