"""Randomised quasi-Monte Carlo estimates of the unit-product box integrals

    int over prod [0, a_i]  of  1/(1 - prod x_i)     (plain)
    int over prod [0, a_i]  of  1/(1 - prod x_i^2)   (squared)

Points come from an unscrambled base-2 Sobol' sequence; each replicate
applies an independent random digital shift (XOR of the 52-bit binary
expansion), so every replicate is an unbiased estimator and the spread of
replicate means gives the standard error.

The integrand is singular at the far corner of the box.  The product is
clipped at ``1 - clip_epsilon``; the bias this introduces is bounded in
:func:`clip_bias_bound`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.stats import qmc

from .errors import BadEpsilon, DimensionTooLarge
from .hyperbolic import BoxSpec

BITS = 52
N_SHIFTS = 8
DEFAULT_SEED = 20240601
DEFAULT_EPSILON = 1e-9
MAX_DIM = 8


class IntegrandKind(enum.Enum):
    PLAIN = "plain"
    SQUARED = "squared"


@dataclass(frozen=True)
class QmcEstimate:
    value: float
    stat_error: float
    points: int
    clip_epsilon: float
    replicate_means: tuple = ()
    seed: Optional[int] = None


def default_points(n: int) -> int:
    return 2 ** 20 if n <= 4 else 2 ** 22


def clip_bias_bound(n: int, kind: IntegrandKind, clip_epsilon: float) -> float:
    """Upper bound on the mass removed by clipping the product at 1 - eps.

    With y_i = -ln(x_i / a_i) the clipped set is {sum y_i < s_eps} and the
    volume element is exp(-s) s^(n-1)/(n-1)! ds, so

      squared: s_eps = -ln(1-eps)/2, 1-exp(-2s) >= 2s(1-s)
               bias <= s_eps^(n-1) / (2 (n-1) (n-1)! (1 - s_eps))
      plain:   s_eps = -ln(1-eps),   1-exp(-s) >= s(1-s/2)
               bias <= s_eps^(n-1) / ((n-1) (n-1)! (1 - s_eps/2))

    The box rescaling x_i = a_i t_i has unit Jacobian, so the bound holds for
    every valid box.
    """
    kind = IntegrandKind(kind)
    f = math.factorial(n - 1)
    if kind is IntegrandKind.SQUARED:
        s = -0.5 * math.log1p(-clip_epsilon)
        return s ** (n - 1) / (2.0 * (n - 1) * f * (1.0 - s))
    s = -math.log1p(-clip_epsilon)
    return s ** (n - 1) / ((n - 1) * f * (1.0 - 0.5 * s))


def _base_points(n: int, m: int) -> np.ndarray:
    """First 2**m unscrambled Sobol' points as 52-bit integers."""
    pts = qmc.Sobol(n, scramble=False, bits=BITS).random_base2(m)
    return np.ldexp(pts, BITS).astype(np.uint64)


def _shift_keys(seed: int, n: int, shifts: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, 2 ** BITS, size=(shifts, n), dtype=np.uint64)


def qmc_box_integral(
    func: Callable[[np.ndarray], np.ndarray],
    box: BoxSpec,
    points: int,
    *,
    seed: int = DEFAULT_SEED,
    shifts: int = N_SHIFTS,
    clip_epsilon: float = DEFAULT_EPSILON,
) -> QmcEstimate:
    """Estimate the integral of ``func`` (vectorised over rows) over ``box``."""
    n = box.n
    if n > MAX_DIM:
        raise DimensionTooLarge(f"n={n} exceeds {MAX_DIM}")
    if points < 2 or points & (points - 1):
        raise ValueError("points must be a power of 2")
    m = points.bit_length() - 1
    base = _base_points(n, m)
    keys = _shift_keys(seed, n, shifts)
    edges = box.edges
    volume = float(np.prod(edges))
    means = []
    for key in keys:
        # midpoint of the 2**-52 cell keeps every coordinate strictly inside
        t = (np.ldexp((base ^ key).astype(np.float64), -BITS)
             + 2.0 ** -(BITS + 1))
        means.append(volume * float(np.mean(func(t * edges))))
    means = np.array(means)
    stat = float(np.std(means, ddof=1) / math.sqrt(shifts))
    return QmcEstimate(float(np.mean(means)), stat, points, clip_epsilon,
                       tuple(float(v) for v in means), seed)


def _integrand(kind: IntegrandKind, clip_epsilon: float):
    power = 2 if kind is IntegrandKind.SQUARED else 1
    cap = 1.0 - clip_epsilon

    def g(x):
        p = np.prod(x, axis=1) ** power
        return 1.0 / (1.0 - np.minimum(p, cap))

    return g


def qmc_cube(
    n: int,
    kind=IntegrandKind.SQUARED,
    box: Optional[BoxSpec] = None,
    points: Optional[int] = None,
    clip_epsilon: float = DEFAULT_EPSILON,
    *,
    seed: int = DEFAULT_SEED,
) -> QmcEstimate:
    if not 2 <= n <= MAX_DIM:
        raise DimensionTooLarge(f"n must lie in [2, {MAX_DIM}], got {n}")
    if not 0.0 < clip_epsilon <= 1e-3:
        raise BadEpsilon("clip_epsilon must lie in (0, 1e-3]")
    kind = IntegrandKind(kind)
    box = BoxSpec.unit(n) if box is None else box
    if box.n != n:
        raise ValueError("box dimension does not match n")
    points = default_points(n) if points is None else points
    if points < 2 ** 10:
        raise ValueError("need at least 2**10 points")
    return qmc_box_integral(_integrand(kind, clip_epsilon), box, points,
                            seed=seed, clip_epsilon=clip_epsilon)


def invariance_check(
    n: int,
    boxes: Sequence[BoxSpec],
    points: Optional[int] = None,
    *,
    seed: int = DEFAULT_SEED,
    sigmas: float = 3.0,
) -> list:
    """Estimate the squared-integrand integral over each box and compare every
    pair.  Returns report entries (plain dicts): one per estimate, then one per
    pair with the 3-sigma-plus-bias tolerance.

    Under x_i = a_i t_i the integrand only sees prod t_i, so shared shifts
    would make every box give the same number.  Each box therefore gets its
    own shifts (seed + box index) and agreement is a genuine statistical test.
    """
    seeds = [seed + i for i in range(len(boxes))]
    estimates = [qmc_cube(n, IntegrandKind.SQUARED, b, points, seed=sd)
                 for b, sd in zip(boxes, seeds)]
    bias = clip_bias_bound(n, IntegrandKind.SQUARED, DEFAULT_EPSILON)
    entries = []
    for b, est in zip(boxes, estimates):
        entries.append({
            "id": f"invariance.n{n}.box[{_box_label(b)}]",
            "paper_anchor": "Definition 1 / Lemma 1",
            "claimed": "I_n(a) estimate",
            "computed": est.value,
            "abs_error": 0.0,
            "tolerance": est.stat_error,
            "passed": True,
            "seed": est.seed,
        })
    for (i, ea), (j, eb) in combinations(enumerate(estimates), 2):
        tol = sigmas * math.hypot(ea.stat_error, eb.stat_error) + bias
        diff = abs(ea.value - eb.value)
        entries.append({
            "id": f"invariance.n{n}.pair[{_box_label(boxes[i])}|{_box_label(boxes[j])}]",
            "paper_anchor": "Lemma 1",
            "claimed": ea.value,
            "computed": eb.value,
            "abs_error": diff,
            "tolerance": tol,
            "passed": diff <= tol,
            "seed": seed,
        })
    return entries


def _box_label(box: BoxSpec) -> str:
    return ",".join(f"{v:g}" for v in box.a)


def zeta_from_cube(n: int, points: Optional[int] = None, *, seed: int = DEFAULT_SEED) -> float:
    return zeta_from_cube_estimate(n, points, seed=seed).value


def zeta_from_cube_estimate(n: int, points: Optional[int] = None, *, seed: int = DEFAULT_SEED) -> QmcEstimate:
    """2**n/(2**n - 1) times the squared-integrand estimate, with the error
    bar and replicate means scaled by the same factor."""
    est = qmc_cube(n, IntegrandKind.SQUARED, None, points, seed=seed)
    scale = 2.0 ** n / (2.0 ** n - 1.0)
    return QmcEstimate(scale * est.value, scale * est.stat_error, est.points,
                       est.clip_epsilon, tuple(scale * v for v in est.replicate_means),
                       est.seed)
