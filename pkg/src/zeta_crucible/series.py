"""Direct summation of zeta(n) and of the odd-denominator series
lambda(n) = sum_{q>=0} (2q+1)^-n, with certified remainders.

Both series have positive decreasing terms, so the integral test brackets
the remainder after the last summed term::

    int_{N+1}^inf f  <=  sum_{k>N} f(k)  <=  int_N^inf f.

``value`` is the partial sum plus the lower integral and ``tail_bound`` is
the width of the bracket (plus a rounding allowance), so the true sum lies in
``[value, value + tail_bound]``.  The bracket width is ~ N**-n, which keeps
N near 1e6 for n = 2 at tol = 1e-12.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidOrder

_EPS = sys.float_info.epsilon
_CHUNK = 1 << 20


@dataclass(frozen=True)
class SeriesResult:
    value: float
    tail_bound: float
    terms_used: int

    @property
    def upper(self) -> float:
        return self.value + self.tail_bound


def _check_order(n):
    if int(n) != n or n < 2:
        raise InvalidOrder(f"series order must be an integer >= 2, got {n!r}")


def _partial_sum(first: int, step: int, count: int, n: int) -> float:
    # smallest terms first; fsum makes the order irrelevant to rounding anyway
    parts = []
    for stop in range(count, 0, -_CHUNK):
        start = max(stop - _CHUNK, 0)
        k = first + step * np.arange(stop - 1, start - 1, -1, dtype=np.float64)
        parts.append(math.fsum(np.power(k, -float(n))))
    return math.fsum(parts)


def _rounding_slack(value: float) -> float:
    return 8.0 * _EPS * value


def zeta_series(n: int, tol: float = 1e-12) -> SeriesResult:
    """zeta(n) by summing k**-n for k = 1..N with an integral-test bracket."""
    _check_order(n)
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    n = int(n)
    # bracket width int_N^{N+1} x^-n dx <= N^-n
    budget = tol - _rounding_slack(2.0)
    if budget <= 0.0:
        raise ValueError(f"tol={tol:g} is below the rounding floor")
    N = max(1, math.ceil(budget ** (-1.0 / n)))
    partial = _partial_sum(1, 1, N, n)
    lo_tail = (N + 1.0) ** (1 - n) / (n - 1)
    hi_tail = N ** (1.0 - n) / (n - 1)
    value = partial + lo_tail
    return SeriesResult(value, (hi_tail - lo_tail) + _rounding_slack(value), N)


def lambda_series(n: int, tol: float = 1e-12) -> SeriesResult:
    """sum_{q>=0} (2q+1)**-n with an integral-test bracket."""
    _check_order(n)
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    n = int(n)
    budget = tol - _rounding_slack(2.0)
    if budget <= 0.0:
        raise ValueError(f"tol={tol:g} is below the rounding floor")
    # terms q = 0..Q-1; width int_{Q-1}^{Q} (2x+1)^-n dx <= (2Q-1)^-n
    Q = max(1, math.ceil(0.5 * (budget ** (-1.0 / n) + 1.0)))
    partial = _partial_sum(1, 2, Q, n)
    lo_tail = (2.0 * Q + 1.0) ** (1 - n) / (2 * (n - 1))
    hi_tail = (2.0 * Q - 1.0) ** (1 - n) / (2 * (n - 1))
    value = partial + lo_tail
    return SeriesResult(value, (hi_tail - lo_tail) + _rounding_slack(value), Q)


def zeta_from_lambda(n: int, tol: float = 1e-12) -> float:
    """zeta(n) = 2**n / (2**n - 1) * lambda(n)."""
    _check_order(n)
    scale = 2.0 ** n / (2.0 ** n - 1.0)
    return scale * lambda_series(n, tol / scale).value


def lemma4_exact(k: int, q: int) -> Fraction:
    """Exact value of int_0^1 ln(z)**k z**(2q) dz = (-1)**k k! / (2q+1)**(k+1)."""
    if k < 1 or q < 0:
        raise ValueError("need k >= 1 and q >= 0")
    return Fraction((-1) ** k * math.factorial(k), (2 * q + 1) ** (k + 1))
