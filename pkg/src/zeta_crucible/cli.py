"""Command-line front end: ``zeta-crucible {verify,zeta,jacobian-check,invariance}``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import cube, hyperbolic
from .errors import ConfigError, MethodMismatch, NonConvergence, ZetaCrucibleError
from .report import ReportEntry, VerificationReport
from .suites import (
    DEFAULT_TOLS, SUITES, SuiteConfig, jacobian_entries, run_suite, zeta_command,
)


def power_of_two(text: str) -> int:
    """Accept ``2^k`` or a plain integer."""
    text = text.strip()
    try:
        value = 2 ** int(text[2:]) if text.startswith("2^") else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer or 2^k: {text!r}")
    if value < 1 or value & (value - 1):
        raise argparse.ArgumentTypeError(f"{text!r} is not a power of 2")
    return value


def parse_boxes(text: str) -> list:
    """``"a1,a2;b1,b2"`` -> list of BoxSpec."""
    boxes = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            boxes.append(hyperbolic.BoxSpec(tuple(_number(v) for v in chunk.split(","))))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad box {chunk!r}: {exc}")
    if not boxes:
        raise argparse.ArgumentTypeError("no boxes given")
    return boxes


def _number(text: str) -> float:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return float(num) / float(den)
    return float(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zeta-crucible",
                                description="Numerical verification of zeta(n) identities.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and emit a report")
    v.add_argument("--suites", default=",".join(SUITES),
                   help=f"comma-separated subset of {','.join(SUITES)}")
    v.add_argument("--tol", type=float, default=1e-8,
                   help="reference tolerance; all suite tolerances scale with tol/1e-8")
    v.add_argument("--qmc-points", type=power_of_two, default=2 ** 20)
    v.add_argument("--seed", type=int, default=cube.DEFAULT_SEED)
    v.add_argument("--nmax", type=int, default=10)
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", type=Path)
    v.add_argument("--no-timing", action="store_true",
                   help="omit runtime_ms so repeated runs are byte-identical")

    z = sub.add_parser("zeta", help="evaluate zeta(n) by one route")
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--method", choices=("series", "bernoulli-even", "integral", "cube"),
                   required=True)
    z.add_argument("--tol", type=float, default=1e-10)

    j = sub.add_parser("jacobian-check", help="closed-form vs numerical Jacobian determinant")
    j.add_argument("--n", type=int, required=True)
    j.add_argument("--samples", type=int, default=100)
    j.add_argument("--seed", type=int, default=cube.DEFAULT_SEED)

    i = sub.add_parser("invariance", help="QMC check that I_n(a) does not depend on the box")
    i.add_argument("--n", type=int, required=True)
    i.add_argument("--boxes", type=parse_boxes, required=True)
    i.add_argument("--points", type=power_of_two, default=2 ** 20)
    i.add_argument("--seed", type=int, default=cube.DEFAULT_SEED)
    return p


def _emit(report: VerificationReport, fmt: str, out, include_runtime: bool = True) -> None:
    text = report.to_csv() if fmt == "csv" else report.to_json(include_runtime)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            cfg = SuiteConfig(tuple(s.strip() for s in args.suites.split(",") if s.strip()),
                              args.tol, args.qmc_points, args.seed, args.nmax)
            report = run_suite(cfg)
            _emit(report, args.format, args.out, not args.no_timing)
            return 0 if report.all_passed else 1

        if args.command == "zeta":
            value, err = zeta_command(args.n, args.method, args.tol)
            print(f"zeta({args.n}) = {value!r} +/- {err:.3g}  [{args.method}]")
            return 0

        if args.command == "jacobian-check":
            if args.n < 2:
                raise ConfigError("n must be >= 2")
            entries = jacobian_entries(args.n, args.samples, args.seed,
                                       DEFAULT_TOLS["jacobian"], DEFAULT_TOLS["finite_difference"])
            report = VerificationReport(entries, {"n": args.n, "samples": args.samples,
                                                  "seed": args.seed})
            _emit(report, "json", None)
            return 0 if report.all_passed else 1

        if args.command == "invariance":
            if any(b.n != args.n for b in args.boxes):
                raise ConfigError(f"every box needs {args.n - 1} edges for n={args.n}")
            entries = [ReportEntry(**e) for e in
                       cube.invariance_check(args.n, args.boxes, args.points, seed=args.seed)]
            report = VerificationReport(entries, {"n": args.n, "points": args.points,
                                                  "seed": args.seed})
            _emit(report, "json", None)
            return 0 if report.all_passed else 1
    except MethodMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonConvergence as exc:
        print(f"error: no convergence: {exc}", file=sys.stderr)
        return 3
    except ZetaCrucibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
