"""Exact Bernoulli numbers and the even-zeta closed form."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# Fractions are always reduced with a positive denominator.
ExactRational = Fraction


@dataclass(frozen=True)
class BernoulliTable:
    """B_0..B_m with the B_1 = -1/2 convention."""

    values: tuple

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def _bernoulli_prefix(m: int) -> tuple:
    if m == 0:
        return (Fraction(1),)
    prev = _bernoulli_prefix(m - 1)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0
    acc = sum((math.comb(m + 1, j) * b for j, b in enumerate(prev)), Fraction(0))
    return prev + (-acc / (m + 1),)


def bernoulli_table(m: int) -> BernoulliTable:
    if m < 0:
        raise ValueError("m must be >= 0")
    # iterative warm-up keeps the recursion depth of the cache shallow
    for j in range(0, m + 1, 200):
        _bernoulli_prefix(j)
    return BernoulliTable(_bernoulli_prefix(m))


def even_zeta_coefficient(k: int) -> Fraction:
    """Rational c_k with zeta(2k) = c_k * pi**(2k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    b = bernoulli_table(2 * k)[2 * k]
    return (-1) ** (k - 1) * 2 ** (2 * k - 1) * b / math.factorial(2 * k)


def _pi_power(e: int) -> float:
    result, base = 1.0, math.pi
    while e:
        if e & 1:
            result *= base
        base *= base
        e >>= 1
    return result


def zeta_even_closed_form(k: int) -> float:
    """zeta(2k) = (-1)^(k-1) 2^(2k-1) B_2k pi^(2k) / (2k)!."""
    return float(even_zeta_coefficient(k)) * _pi_power(2 * k)
