import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zeta_crucible.errors import InvalidDomain, NonConvergence, TailUnbounded
from zeta_crucible.quadrature import (
    EndpointSpec, QuadResult, integrate_finite, integrate_semi_infinite,
)
from zeta_crucible.series import lemma4_exact

ZERO_ONE = EndpointSpec("zero-plus", 1.0, lower_singular=True)


def test_log_on_unit_interval():
    r = integrate_finite(math.log, ZERO_ONE, 1e-12)
    assert r.value == pytest.approx(-1.0, abs=1e-12)
    assert r.error_estimate <= 1e-12


def test_lemma4_k1_q0_is_minus_one():
    r = integrate_finite(math.log, ZERO_ONE, 1e-12)
    assert r.value == pytest.approx(float(lemma4_exact(1, 0)), abs=1e-12)


def test_log_squared_times_z_squared():
    r = integrate_finite(lambda z: (-math.log(z)) ** 2 * z * z, ZERO_ONE, 1e-13)
    assert r.value == pytest.approx(2 / 27, abs=1e-13)


def test_pair_spec_accepted():
    r = integrate_finite(lambda x: x, (1.0, 3.0), 1e-12)
    assert r.value == pytest.approx(4.0, abs=1e-12)


@pytest.mark.parametrize("k", range(1, 9))
@pytest.mark.parametrize("q", range(0, 6))
def test_log_power_singularity_grid(k, q):
    exact = float(lemma4_exact(k, q))
    r = integrate_finite(lambda z: math.log(z) ** k * z ** (2 * q), ZERO_ONE,
                         abs(exact) * 1e-12, rtol=1e-12)
    assert abs(r.value - exact) <= 1e-10 * abs(exact)


@settings(max_examples=60, deadline=None)
@given(
    coeffs=st.lists(st.integers(-20, 20), min_size=1, max_size=11),
    a=st.integers(-8, 8),
    width=st.integers(1, 8),
)
def test_polynomials_up_to_degree_10(coeffs, a, width):
    b = a + width
    exact = sum(Fraction(c, k + 1) * (Fraction(b) ** (k + 1) - Fraction(a) ** (k + 1))
                for k, c in enumerate(coeffs))
    scale = sum(abs(c) * max(abs(a), abs(b)) ** k for k, c in enumerate(coeffs)) * width
    scale = max(scale, 1.0)

    def p(x):
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    r = integrate_finite(p, (float(a), float(b)), 1e-14 * scale)
    assert abs(r.value - float(exact)) <= 1e-13 * scale


@pytest.mark.parametrize("f", [math.exp, lambda x: 1.0 / (1.0 + x * x), math.cos])
def test_error_estimates_shrink_for_smooth_integrands(f):
    r = integrate_finite(f, (0.0, 1.0), 1e-15)
    errs = r.level_errors
    assert len(errs) >= 3
    assert all(later <= earlier for earlier, later in zip(errs, errs[1:]))


def test_deterministic():
    f = lambda z: math.log(z) ** 3 / (1.0 + z)
    assert integrate_finite(f, ZERO_ONE, 1e-12) == integrate_finite(f, ZERO_ONE, 1e-12)


def test_bounds_out_of_order():
    with pytest.raises(InvalidDomain):
        EndpointSpec(1.0, 0.0)
    with pytest.raises(InvalidDomain):
        integrate_finite(math.sin, (0.0, math.inf))


def test_nonintegrable_singularity_does_not_converge():
    with pytest.raises(NonConvergence):
        integrate_finite(lambda z: 1.0 / z, ZERO_ONE, 1e-10)


def test_distances_mode_reaches_endpoint_singularity():
    # int_0^1 dx / sqrt(1 - x) = 2; only accurate with the exact gap to 1
    r = integrate_finite(lambda x, da, db: 1.0 / math.sqrt(db),
                         EndpointSpec(0.0, 1.0, False, True), 1e-12, distances=True)
    assert r.value == pytest.approx(2.0, abs=1e-12)


def test_quad_result_invariants():
    with pytest.raises(ValueError):
        QuadResult(1.0, -1e-3, 3)
    with pytest.raises(ValueError):
        QuadResult(1.0, 0.0, 0)


class TestSemiInfinite:
    def test_algebraic_decay_folds_tail(self):
        r = integrate_semi_infinite(lambda u: 1.0 / (1.0 + u * u), 1e-12)
        assert r.value == pytest.approx(math.pi / 2, abs=1e-12)

    def test_two_x_over_sinh(self, pi2_8):
        r = integrate_semi_infinite(lambda x: 2 * x / math.sinh(2 * x) if x < 300 else 0.0,
                                    1e-12)
        assert r.value == pytest.approx(pi2_8, abs=1e-12)

    def test_log_coth(self, pi2_8):
        def log_coth(x):
            return math.log1p(2.0 / math.expm1(2.0 * x)) if x < 300 else 0.0
        r = integrate_semi_infinite(log_coth, 1e-12)
        assert r.value == pytest.approx(pi2_8, abs=1e-12)

    def test_explicit_tail_bound(self):
        r = integrate_semi_infinite(lambda x: math.exp(-x), 1e-13,
                                    tail_bound=lambda t: math.exp(-t))
        assert r.value == pytest.approx(1.0, abs=1e-13)

    def test_shifted_lower_limit(self):
        r = integrate_semi_infinite(lambda x: math.exp(-x), 1e-13, lower=2.0,
                                    lower_singular=False)
        assert r.value == pytest.approx(math.exp(-2.0), abs=1e-13)

    def test_divergent_tail_raises(self):
        with pytest.raises(TailUnbounded):
            integrate_semi_infinite(lambda u: 1.0 / (1.0 + u), 1e-8)
