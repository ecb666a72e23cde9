"""The cyclic hyperbolic substitution x_i = sinh(u_i) / cosh(u_{i+1}).

Indices wrap around (u_{n+1} = u_1).  Under this map the Jacobian
determinant equals 1 - prod tanh(u_i)**2, which is also 1 - prod x_i**2, so
the integrand 1/(1 - prod x_i**2) becomes 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MapOverflow, SingularPoint

U_MAX = 700.0


@dataclass(frozen=True)
class HyperCoords:
    u: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=float)
        if u.ndim != 1 or u.size < 2:
            raise ValueError("need a vector of at least 2 components")
        if not np.all(np.isfinite(u)) or np.any(u <= 0.0):
            raise ValueError("u components must be positive and finite")
        object.__setattr__(self, "u", u)

    @property
    def n(self) -> int:
        return self.u.size


@dataclass(frozen=True)
class CubeCoords:
    x: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        if x.ndim != 1:
            raise ValueError("x must be a vector")
        object.__setattr__(self, "x", x)

    @property
    def n(self) -> int:
        return self.x.size


@dataclass(frozen=True)
class BoxSpec:
    """Box with edges a_1..a_{n-1} and a_n = 1/(a_1...a_{n-1})."""

    a: tuple

    def __post_init__(self):
        a = tuple(float(v) for v in self.a)
        if len(a) < 1:
            raise ValueError("a box needs at least one free edge")
        if not all(math.isfinite(v) and v > 0.0 for v in a):
            raise ValueError("box edges must be positive and finite")
        object.__setattr__(self, "a", a)

    @classmethod
    def unit(cls, n: int) -> "BoxSpec":
        return cls((1.0,) * (n - 1))

    @property
    def n(self) -> int:
        return len(self.a) + 1

    @property
    def edges(self) -> np.ndarray:
        return np.array(self.a + (1.0 / math.prod(self.a),))

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x > 0.0) and np.all(x < self.edges))


def _as_u(u) -> np.ndarray:
    arr = u.u if isinstance(u, HyperCoords) else np.asarray(u, dtype=float)
    if np.any(np.abs(arr) > U_MAX):
        raise MapOverflow(f"|u_i| must stay below {U_MAX}")
    return arr


def forward_map(u) -> CubeCoords:
    u = _as_u(u)
    return CubeCoords(np.sinh(u) / np.cosh(np.roll(u, -1)))


def jacobian_matrix(u) -> np.ndarray:
    """d x_i / d u_j.  Diagonal cosh(u_i)/cosh(u_{i+1}); entry (i, i+1 mod n)
    is -sinh(u_i) sinh(u_{i+1}) / cosh(u_{i+1})**2; zero elsewhere."""
    u = _as_u(u)
    n = u.size
    nxt = np.roll(u, -1)
    A = np.zeros((n, n))
    idx = np.arange(n)
    A[idx, idx] = np.cosh(u) / np.cosh(nxt)
    A[idx, (idx + 1) % n] = -np.sinh(u) * np.sinh(nxt) / np.cosh(nxt) ** 2
    return A


def jacobian_det_closed_form(u) -> float:
    u = _as_u(u)
    return float(1.0 - np.prod(np.tanh(u) ** 2))


def jacobian_det_lu(u) -> float:
    """Partial-pivoting LU determinant of :func:`jacobian_matrix`."""
    return float(np.linalg.det(jacobian_matrix(u)))


def finite_difference_jacobian(u, h: float = 1e-5) -> np.ndarray:
    u = _as_u(u)
    n = u.size
    J = np.empty((n, n))
    for j in range(n):
        step = np.zeros(n)
        step[j] = h
        J[:, j] = (forward_map(u + step).x - forward_map(u - step).x) / (2.0 * h)
    return J


def inverse_map_n3(x) -> HyperCoords:
    """Closed-form inverse for n = 3:

    u_i = arcsinh(x_i sqrt((1 + x_{i+1}^2 + x_{i-1}^2 x_{i+1}^2) / (1 - x_1^2 x_2^2 x_3^2)))
    """
    x = x.x if isinstance(x, CubeCoords) else np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise ValueError("inverse_map_n3 needs exactly three coordinates")
    sq = x * x
    denom = 1.0 - sq.prod()
    if not denom > 0.0:
        raise SingularPoint("prod x_i^2 must be < 1")
    nxt, prv = np.roll(sq, -1), np.roll(sq, 1)
    return HyperCoords(np.arcsinh(x * np.sqrt((1.0 + nxt + prv * nxt) / denom)))


def gamma_region_contains(u, box: BoxSpec) -> bool:
    """0 < u_i < arcsinh(a_i cosh(u_{i+1})) for every i (cyclic)."""
    arr = u.u if isinstance(u, HyperCoords) else np.asarray(u, dtype=float)
    if arr.size != box.n:
        raise ValueError("dimension mismatch between u and box")
    if np.any(arr <= 0.0) or not np.all(np.isfinite(arr)):
        return False
    with np.errstate(over="ignore"):
        upper = np.arcsinh(box.edges * np.cosh(np.roll(arr, -1)))
    return bool(np.all(arr < upper))
