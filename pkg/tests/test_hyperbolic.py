import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from zeta_crucible.errors import MapOverflow, SingularPoint
from zeta_crucible.hyperbolic import (
    BoxSpec, HyperCoords, finite_difference_jacobian, forward_map, gamma_region_contains,
    inverse_map_n3, jacobian_det_closed_form, jacobian_det_lu, jacobian_matrix,
)


def u_vectors(n, hi=3.0):
    return arrays(np.float64, n, elements=st.floats(1e-3, hi))


def test_forward_map_near_origin():
    x = forward_map(np.full(4, 1e-12)).x
    assert np.all(x < 1e-11)


def test_forward_map_symmetric_n2():
    x = forward_map([1.0, 1.0]).x
    np.testing.assert_allclose(x, [math.tanh(1.0)] * 2, rtol=1e-15)


def test_jacobian_at_origin_is_identity():
    np.testing.assert_allclose(jacobian_matrix(np.zeros(5)), np.eye(5), atol=0)


def test_jacobian_sparsity_pattern():
    A = jacobian_matrix([0.3, 0.7, 1.1, 0.2])
    mask = np.zeros((4, 4), bool)
    for i in range(4):
        mask[i, i] = mask[i, (i + 1) % 4] = True
    assert np.all(A[~mask] == 0)
    assert A[3, 0] < 0


def test_det_2x2_direct():
    u = [0.4, 1.3]
    A = jacobian_matrix(u)
    direct = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    expected = 1 - math.tanh(0.4) ** 2 * math.tanh(1.3) ** 2
    assert direct == pytest.approx(expected, rel=1e-14)


def test_closed_form_limits():
    assert jacobian_det_closed_form(np.zeros(3)) == 1.0
    assert 0.0 <= jacobian_det_closed_form(np.full(3, 40.0)) < 1e-15


@pytest.mark.parametrize("n", range(2, 7))
def test_det_closed_form_vs_lu_and_fd(n):
    rng = np.random.default_rng(n)
    for u in rng.uniform(0.0, 3.0, size=(100, n)):
        c = jacobian_det_closed_form(u)
        assert abs(jacobian_det_lu(u) - c) <= 1e-12 * max(1.0, abs(c))
        np.testing.assert_allclose(finite_difference_jacobian(u), jacobian_matrix(u), atol=1e-6)
        fd = np.linalg.det(finite_difference_jacobian(u))
        assert abs(fd - c) <= 1e-5 * abs(c)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 8).flatmap(u_vectors))
def test_integrand_reduces_to_jacobian(u):
    x = forward_map(u).x
    assert abs((1 - np.prod(x ** 2)) - jacobian_det_closed_form(u)) <= 1e-12


@settings(max_examples=200, deadline=None)
@given(u_vectors(3, hi=2.0))
def test_roundtrip_n3(u):
    back = inverse_map_n3(forward_map(u)).u
    np.testing.assert_allclose(back, u, atol=1e-10)


def test_inverse_half():
    x = np.full(3, 0.5)
    np.testing.assert_allclose(forward_map(inverse_map_n3(x)).x, x, atol=1e-12)


def test_inverse_near_singularity():
    x = np.full(3, (1 - 1e-12) ** (1 / 6))
    u = inverse_map_n3(x).u
    assert np.all(np.isfinite(u)) and np.all(u > 10)
    np.testing.assert_allclose(forward_map(u).x, x, atol=1e-6)


def test_inverse_rejects_singular_points():
    with pytest.raises(SingularPoint):
        inverse_map_n3([1.0, 1.0, 1.0])
    with pytest.raises(SingularPoint):
        inverse_map_n3([2.0, 1.0, 0.6])


def test_overflow_guard():
    with pytest.raises(MapOverflow):
        forward_map([701.0, 1.0])
    with pytest.raises(MapOverflow):
        jacobian_matrix([1.0, 800.0])


def test_hypercoords_validation():
    with pytest.raises(ValueError):
        HyperCoords([1.0, -0.1])
    with pytest.raises(ValueError):
        HyperCoords([1.0])


def test_box_spec():
    box = BoxSpec((2.0, 0.25))
    np.testing.assert_allclose(box.edges, [2.0, 0.25, 2.0])
    assert math.prod(box.edges) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(ValueError):
        BoxSpec((0.0,))


class TestGammaRegion:
    def test_nonpositive_component(self):
        assert not gamma_region_contains([0.0, 0.5], BoxSpec.unit(2))
        assert not gamma_region_contains([-0.2, 0.5], BoxSpec.unit(2))

    def test_half_half_inside(self):
        c = math.cosh(0.5)
        bound = math.log(c + math.sqrt(c * c + 1))  # 0.96880...
        assert math.asinh(c) == pytest.approx(bound, rel=1e-14)
        assert 0.5 < bound
        assert gamma_region_contains([0.5, 0.5], BoxSpec.unit(2))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_box_membership(self, n):
        rng = np.random.default_rng(100 + n)
        for _ in range(10_000):
            box = BoxSpec(tuple(np.exp(rng.uniform(-1, 1, n - 1))))
            u = rng.uniform(0.0, 2.5, n)
            assert gamma_region_contains(u, box) == box.contains(forward_map(u).x)

    def test_injective_on_samples(self):
        rng = np.random.default_rng(5)
        us = rng.uniform(0.0, 2.0, size=(2000, 5))
        xs = np.array([forward_map(u).x for u in us])
        rounded = {tuple(np.round(x, 9)) for x in xs}
        assert len(rounded) == len(xs)
