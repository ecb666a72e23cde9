import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zeta_crucible.bernoulli import zeta_even_closed_form
from zeta_crucible.errors import InvalidOrder
from zeta_crucible.series import lambda_series, lemma4_exact, zeta_from_lambda, zeta_series

ZETA3 = 1.2020569031595942853997  # Apery's constant, OEIS A002117


def test_zeta2():
    r = zeta_series(2, 1e-10)
    assert abs(r.value - math.pi ** 2 / 6) <= 1e-10
    assert r.value <= math.pi ** 2 / 6 <= r.upper


def test_zeta3_against_bridge():
    r = zeta_series(3, 1e-12)
    assert r.tail_bound <= 1e-12
    assert abs(r.value - zeta_from_lambda(3, 1e-12)) <= 2e-12
    assert r.value <= ZETA3 <= r.upper


@pytest.mark.parametrize("k", range(1, 6))
def test_even_values_match_closed_form(k):
    r = zeta_series(2 * k, 1e-13)
    assert abs(r.value - zeta_even_closed_form(k)) <= 1e-12


def test_lambda2():
    r = lambda_series(2, 1e-12)
    assert r.value <= math.pi ** 2 / 8 <= r.upper


def test_zeta2_is_four_thirds_lambda2():
    z, lam = zeta_series(2, 1e-12), lambda_series(2, 1e-12)
    assert abs(z.value - 4 / 3 * lam.value) <= z.tail_bound + 4 / 3 * lam.tail_bound


def test_lambda10_tail():
    r = lambda_series(10, 1e-14)
    assert r.tail_bound <= 1e-14
    assert r.terms_used >= 1


def test_zeta_from_lambda2():
    assert abs(zeta_from_lambda(2, 1e-10) - math.pi ** 2 / 6) <= 1e-10


@pytest.mark.parametrize("fn", [zeta_series, lambda_series, zeta_from_lambda])
@pytest.mark.parametrize("n", [1, 0, -3])
def test_invalid_order(fn, n):
    with pytest.raises(InvalidOrder):
        fn(n, 1e-6)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_bracket_nesting(n):
    coarse, fine = zeta_series(n, 1e-8), zeta_series(n, 1e-10)
    assert coarse.value <= fine.value <= fine.upper <= coarse.upper + 1e-15


@given(st.integers(2, 12))
def test_lambda_zeta_identity(n):
    z, lam = zeta_series(n, 1e-11), lambda_series(n, 1e-11)
    assert abs(lam.value - (1 - 2.0 ** -n) * z.value) <= z.tail_bound + lam.tail_bound


@pytest.mark.parametrize("k,q,expected", [(1, 0, -1), (2, 1, Fraction(2, 27)), (3, 0, -6)])
def test_lemma4_exact(k, q, expected):
    assert lemma4_exact(k, q) == expected


@given(st.integers(1, 15), st.integers(0, 20))
def test_lemma4_sign_and_reduction(k, q):
    v = lemma4_exact(k, q)
    assert (v > 0) == (k % 2 == 0)
    assert math.gcd(v.numerator, v.denominator) == 1
