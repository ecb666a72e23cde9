"""The verification suites and the orchestrator behind ``verify``."""
from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from . import bernoulli, cube, hyperbolic, pipeline, series
from .errors import ConfigError, MethodMismatch, NonConvergence
from .quadrature import EndpointSpec, integrate_finite
from .report import ReportEntry, VerificationReport

SUITES = ("series", "bernoulli", "jacobian", "cube", "pipeline", "theorem5")

# Reference tolerances at the default --tol of 1e-8; an override rescales all
# of them by tol / 1e-8.  QMC checks use 3 sigma + clip bias and are not scaled.
REFERENCE_TOL = 1e-8
DEFAULT_TOLS = {
    "series": 1e-12,
    "bernoulli": 1e-12,
    "pipeline": 1e-8,
    "jacobian": 1e-12,
    "finite_difference": 1e-5,
    "theorem5": 1e-9,
    "lemma4": 1e-10,
    "roundtrip": 1e-10,
}
JACOBIAN_SAMPLES = 100
ROUNDTRIP_POINTS = 10_000
REGION_POINTS = 10_000


@dataclass
class SuiteConfig:
    suites: tuple = SUITES
    tol: float = REFERENCE_TOL
    qmc_points: int = 2 ** 20
    qmc_seed: int = cube.DEFAULT_SEED
    n_max: int = 10

    def __post_init__(self):
        self.suites = tuple(self.suites)
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ConfigError(f"unknown suites: {sorted(unknown)}")
        if not self.suites:
            raise ConfigError("no suites selected")
        if not self.tol > 0.0:
            raise ConfigError("tol must be positive")
        if not 2 <= self.n_max <= 10:
            raise ConfigError("n_max must lie in [2, 10]")
        p = self.qmc_points
        if p < 2 ** 10 or p & (p - 1):
            raise ConfigError("qmc_points must be a power of 2, at least 2^10")

    def tolerance(self, key: str) -> float:
        return DEFAULT_TOLS[key] * self.tol / REFERENCE_TOL


def _timed(fn):
    t0 = time.perf_counter()
    entries = fn()
    ms = (time.perf_counter() - t0) * 1e3
    if isinstance(entries, ReportEntry):
        entries = [entries]
    for e in entries:
        e.runtime_ms = ms / len(entries)
    return entries


# -- series ------------------------------------------------------------------

def series_checks(cfg: SuiteConfig) -> list:
    tol = cfg.tolerance("series")
    out = []
    for n in range(2, cfg.n_max + 1):
        def zeta_vs_bridge(n=n):
            z = series.zeta_series(n, tol)
            b = series.zeta_from_lambda(n, tol)
            return ReportEntry.numeric(f"series.zeta_vs_lambda_bridge.n{n}",
                                       "zeta(n) = 2^n/(2^n-1) lambda(n)",
                                       z.value, b, z.tail_bound + 2.0 * tol)

        def lambda_identity(n=n):
            z = series.zeta_series(n, tol)
            lam = series.lambda_series(n, tol)
            return ReportEntry.numeric(f"series.lambda_identity.n{n}",
                                       "lambda(n) = (1 - 2^-n) zeta(n)",
                                       (1.0 - 2.0 ** -n) * z.value, lam.value,
                                       z.tail_bound + lam.tail_bound)

        out += [zeta_vs_bridge, lambda_identity]

    def euler():
        return ReportEntry.numeric("series.zeta2_euler", "zeta(2) = pi^2/6",
                                   math.pi ** 2 / 6, series.zeta_series(2, tol).value, tol)

    def bracket():
        coarse = series.zeta_series(3, 1e-6)
        fine = series.zeta_series(3, 1e-8)
        inside = coarse.value <= fine.value <= coarse.upper + fine.tail_bound
        return ReportEntry("series.bracketing.n3", "integral-test enclosure", "enclosed",
                           fine.value, 0.0 if inside else 1.0, 0.0, inside)

    return out + [euler, bracket]


# -- bernoulli ---------------------------------------------------------------

def bernoulli_checks(cfg: SuiteConfig) -> list:
    tol = cfg.tolerance("bernoulli")
    kmax = max(1, cfg.n_max // 2)
    m = 2 * max(kmax, 10)

    def exact(j, expected):
        def check():
            b = bernoulli.bernoulli_table(j)[j]
            return ReportEntry(f"bernoulli.B{j}", "Bernoulli numbers", str(expected),
                               float(b), float(abs(b - expected)), 0.0, b == expected)
        return check

    def odd_vanish():
        t = bernoulli.bernoulli_table(m)
        bad = sum(1 for j in range(3, m + 1, 2) if t[j] != 0)
        return ReportEntry(f"bernoulli.odd_vanishing.m{m}", "Bernoulli numbers",
                           "B_odd = 0", float(bad), float(bad), 0.0, bad == 0)

    def alternation():
        t = bernoulli.bernoulli_table(m)
        bad = sum(1 for k in range(1, m // 2 + 1) if (-1) ** (k - 1) * t[2 * k] <= 0)
        return ReportEntry(f"bernoulli.sign_alternation.m{m}", "zeta(2k) closed form",
                           "(-1)^(k-1) B_2k > 0", float(bad), float(bad), 0.0, bad == 0)

    out = [exact(0, Fraction(1)), exact(1, Fraction(-1, 2)),
           exact(2, Fraction(1, 6)), exact(4, Fraction(-1, 30)),
           odd_vanish, alternation]
    for k in range(1, kmax + 1):
        def closed_vs_series(k=k):
            c = bernoulli.zeta_even_closed_form(k)
            s = series.zeta_series(2 * k, min(tol, 1e-13))
            return ReportEntry.numeric(f"bernoulli.closed_form_vs_series.k{k}",
                                       "zeta(2k) = (-1)^(k-1) 2^(2k-1) B_2k pi^2k/(2k)!",
                                       c, s.value, s.tail_bound + tol * c)
        out.append(closed_vs_series)
    return out


# -- jacobian ----------------------------------------------------------------

def jacobian_entries(n: int, samples: int, seed: int, tol: float, fd_tol: float) -> list:
    rng = np.random.default_rng([seed, n])
    us = rng.uniform(0.0, 3.0, size=(samples, n))
    lu_err = fd_err = ident_err = 0.0
    for u in us:
        closed = hyperbolic.jacobian_det_closed_form(u)
        lu = hyperbolic.jacobian_det_lu(u)
        fd = float(np.linalg.det(hyperbolic.finite_difference_jacobian(u)))
        x = hyperbolic.forward_map(u).x
        lu_err = max(lu_err, abs(lu - closed) / abs(closed))
        fd_err = max(fd_err, abs(fd - closed) / abs(closed))
        ident_err = max(ident_err, abs((1.0 - np.prod(x * x)) - closed))
    return [
        ReportEntry(f"jacobian.det_lu.n{n}", "Lemma 2 det", 0.0, lu_err, lu_err, tol,
                    lu_err <= tol, seed),
        ReportEntry(f"jacobian.det_finite_difference.n{n}", "Lemma 2 Jacobian", 0.0,
                    fd_err, fd_err, fd_tol, fd_err <= fd_tol, seed),
        ReportEntry(f"jacobian.integrand_identity.n{n}", "Lemma 2 integrand -> 1", 0.0,
                    ident_err, ident_err, tol, ident_err <= tol, seed),
    ]


def roundtrip_max_error(points: int, seed: int) -> float:
    rng = np.random.default_rng([seed, 3, 3])
    worst = 0.0
    for u in rng.uniform(0.0, 2.0, size=(points, 3)):
        back = hyperbolic.inverse_map_n3(hyperbolic.forward_map(u)).u
        worst = max(worst, float(np.max(np.abs(back - u))))
    return worst


def region_disagreements(n: int, points: int, seed: int) -> int:
    rng = np.random.default_rng([seed, n, 7])
    bad = 0
    for _ in range(points):
        box = hyperbolic.BoxSpec(tuple(np.exp(rng.uniform(-1.0, 1.0, n - 1))))
        u = rng.uniform(0.0, 2.5, n)
        inside = hyperbolic.gamma_region_contains(u, box)
        bad += inside != box.contains(hyperbolic.forward_map(u).x)
    return bad


def jacobian_checks(cfg: SuiteConfig) -> list:
    tol, fd_tol = cfg.tolerance("jacobian"), cfg.tolerance("finite_difference")
    seed = cfg.qmc_seed
    out = [lambda n=n: jacobian_entries(n, JACOBIAN_SAMPLES, seed, tol, fd_tol)
           for n in range(2, min(6, cfg.n_max) + 1)]

    def roundtrip():
        rt_tol = cfg.tolerance("roundtrip")
        err = roundtrip_max_error(ROUNDTRIP_POINTS, seed)
        return ReportEntry("jacobian.inverse_roundtrip.n3", "Lemma 2 inverse (n=3)",
                           0.0, err, err, rt_tol, err <= rt_tol, seed)

    out.append(roundtrip)
    for n in (2, 3, 4):
        def region(n=n):
            bad = region_disagreements(n, REGION_POINTS, seed)
            return ReportEntry(f"jacobian.region_correspondence.n{n}", "Lemma 2 Gamma_n",
                               0.0, float(bad), float(bad), 0.0, bad == 0, seed)
        out.append(region)
    return out


# -- cube --------------------------------------------------------------------

def cube_checks(cfg: SuiteConfig) -> list:
    seed, pts = cfg.qmc_seed, cfg.qmc_points
    out = []
    for n in range(2, min(5, cfg.n_max) + 1):
        def zeta_cube(n=n):
            est = cube.zeta_from_cube_estimate(n, pts, seed=seed)
            ref = series.zeta_series(n, 1e-12)
            bias = 2.0 ** n / (2.0 ** n - 1.0) * cube.clip_bias_bound(
                n, cube.IntegrandKind.SQUARED, est.clip_epsilon)
            tol = 3.0 * est.stat_error + bias + ref.tail_bound
            return ReportEntry.numeric(f"cube.zeta_from_cube.n{n}",
                                       "zeta(n) = 2^n/(2^n-1) int 1/(1-prod x^2)",
                                       ref.value, est.value, tol, seed)
        out.append(zeta_cube)

    def plain2():
        est = cube.qmc_cube(2, cube.IntegrandKind.PLAIN, points=pts, seed=seed)
        bias = cube.clip_bias_bound(2, cube.IntegrandKind.PLAIN, est.clip_epsilon)
        return ReportEntry.numeric("cube.plain.n2", "zeta(n) = int 1/(1-prod x)",
                                   math.pi ** 2 / 6, est.value, 3.0 * est.stat_error + bias, seed)

    def inv2():
        boxes = [hyperbolic.BoxSpec((a,)) for a in (0.5, 1.0, 2.0)]
        return [ReportEntry(**e) for e in cube.invariance_check(2, boxes, pts, seed=seed)]

    def inv3():
        boxes = [hyperbolic.BoxSpec(a) for a in ((1.0, 1.0), (2.0, 0.5), (0.5, 3.0))]
        return [ReportEntry(**e) for e in cube.invariance_check(3, boxes, pts, seed=seed)]

    def volume():
        box = hyperbolic.BoxSpec((2.0, 0.5, 3.0))
        est = cube.qmc_box_integral(lambda x: np.ones(len(x)), box, 2 ** 10, seed=seed)
        return ReportEntry.numeric("cube.box_volume.n4", "Definition 1 box", 1.0,
                                   est.value, 1e-12, seed)

    return out + [plain2, inv2, inv3, volume]


# -- pipeline ----------------------------------------------------------------

def pipeline_checks(cfg: SuiteConfig) -> list:
    def run():
        entries = []
        for i, s in enumerate(pipeline.run_section3_pipeline(cfg.tolerance("pipeline"))):
            if isinstance(s.claimed, str):
                err = abs(s.computed)
            else:
                err = abs(s.computed - s.claimed)
            entries.append(ReportEntry(f"pipeline.{i:02d}.{_slug(s.label)}", s.paper_anchor,
                                       s.claimed, s.computed, err, s.tolerance, s.passed))
        return entries
    return [run]


def _slug(text: str) -> str:
    keep = [c if c.isalnum() or c in "._=" else "_" for c in text]
    return "_".join(filter(None, "".join(keep).split("_")))


# -- theorem5 ----------------------------------------------------------------

def lemma4_max_rel_error(kmax: int = 8, qmax: int = 5) -> float:
    worst = 0.0
    for k in range(1, kmax + 1):
        for q in range(0, qmax + 1):
            exact = float(series.lemma4_exact(k, q))
            r = integrate_finite(lambda z, k=k, q=q: math.log(z) ** k * z ** (2 * q),
                                 EndpointSpec("zero-plus", 1.0, True, False),
                                 abs(exact) * 1e-13, rtol=1e-13)
            worst = max(worst, abs(r.value - exact) / abs(exact))
    return worst


def theorem5_checks(cfg: SuiteConfig) -> list:
    tol = cfg.tolerance("theorem5")
    out = []
    for n in range(2, cfg.n_max + 1):
        def thm5(n=n):
            r = pipeline.log_coth_power_integral(n, 1e-12)
            lam = series.lambda_series(n, 1e-12)
            return ReportEntry.numeric(f"theorem5.n{n}", "Theorem 5",
                                       lam.value, r.value / math.factorial(n - 1),
                                       tol + lam.tail_bound)

        def cor6(n=n):
            z = series.zeta_series(n, 1e-12)
            return ReportEntry.numeric(f"corollary6.vs_series.n{n}", "Corollary 6",
                                       z.value, pipeline.zeta_n_corollary(n, 1e-12),
                                       tol + z.tail_bound)
        out += [thm5, cor6]
        if n % 2 == 0:
            def cor6_even(n=n):
                return ReportEntry.numeric(f"corollary6.vs_closed_form.n{n}", "Corollary 6",
                                           bernoulli.zeta_even_closed_form(n // 2),
                                           pipeline.zeta_n_corollary(n, 1e-12), tol)
            out.append(cor6_even)

    def lemma4():
        t = cfg.tolerance("lemma4")
        err = lemma4_max_rel_error()
        return ReportEntry("lemma4.max_rel_error.k8q5", "Lemma 4", 0.0, err, err, t, err <= t)
    out.append(lemma4)
    return out


SUITE_BUILDERS = {
    "series": series_checks,
    "bernoulli": bernoulli_checks,
    "jacobian": jacobian_checks,
    "cube": cube_checks,
    "pipeline": pipeline_checks,
    "theorem5": theorem5_checks,
}


def worker_count() -> int:
    raw = os.environ.get("ZETA_CRUCIBLE_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"ZETA_CRUCIBLE_THREADS must be an integer, got {raw!r}")
    if n < 0:
        raise ConfigError("ZETA_CRUCIBLE_THREADS must be >= 0")
    return n or min(len(SUITES), os.cpu_count() or 1)


def _run_checks(suite: str, checks: list) -> list:
    entries = []
    for i, check in enumerate(checks):
        try:
            entries.extend(_timed(check))
        except (NonConvergence, ValueError) as exc:
            entries.append(ReportEntry(f"{suite}.error.{i:02d}", "", str(exc), math.nan,
                                       math.nan, 0.0, False))
    return entries


def run_suite(config: SuiteConfig) -> VerificationReport:
    """Run every enabled suite and collect entries in fixed suite order."""
    order = [s for s in SUITES if s in config.suites]
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        futures = [pool.submit(_run_checks, s, SUITE_BUILDERS[s](config)) for s in order]
        chunks = [f.result() for f in futures]
    cfg = asdict(config)
    cfg["suites"] = list(order)
    report = VerificationReport([e for chunk in chunks for e in chunk], cfg)
    report.validate()
    return report


def zeta_command(n: int, method: str, tol: float = 1e-10) -> tuple:
    """(value, error bound) for zeta(n) by the chosen route."""
    if method == "series":
        r = series.zeta_series(n, tol)
        return r.value, r.tail_bound
    if method == "bernoulli-even":
        if n % 2:
            raise MethodMismatch("bernoulli-even needs an even n")
        v = bernoulli.zeta_even_closed_form(n // 2)
        return v, 4.0 * n * np.finfo(float).eps * v
    if method == "integral":
        series._check_order(n)
        scale = 2.0 ** n / (2.0 ** n - 1.0)
        r = pipeline.log_coth_power_integral(n, tol / scale)
        f = math.factorial(n - 1)
        return scale * r.value / f, scale * r.error_estimate / f
    if method == "cube":
        est = cube.zeta_from_cube_estimate(n)
        scale = 2.0 ** n / (2.0 ** n - 1.0)
        bias = scale * cube.clip_bias_bound(n, cube.IntegrandKind.SQUARED, est.clip_epsilon)
        return est.value, 3.0 * est.stat_error + bias
    raise ConfigError(f"unknown method {method!r}")
