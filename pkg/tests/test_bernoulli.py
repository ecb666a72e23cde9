import math
from fractions import Fraction

import pytest

from zeta_crucible.bernoulli import bernoulli_table, even_zeta_coefficient, zeta_even_closed_form
from zeta_crucible.series import zeta_series


def test_base_case():
    assert bernoulli_table(0).values == (Fraction(1),)


def test_b1_convention_and_b2():
    t = bernoulli_table(2)
    assert t[1] == Fraction(-1, 2)
    # 1 + 3 B_1 + 3 B_2 = 0
    assert t[2] == Fraction(1, 6)


def test_b4():
    assert bernoulli_table(4)[4] == Fraction(-1, 30)


def test_known_tail_values():
    t = bernoulli_table(20)
    assert t[12] == Fraction(-691, 2730)
    assert t[20] == Fraction(-174611, 330)


def test_odd_indices_vanish():
    t = bernoulli_table(60)
    assert all(t[j] == 0 for j in range(3, 61, 2))


def test_sign_alternation():
    t = bernoulli_table(60)
    assert all((-1) ** (k - 1) * t[2 * k] > 0 for k in range(1, 31))


def test_fractions_are_reduced():
    for b in bernoulli_table(30).values:
        assert b.denominator > 0
        assert math.gcd(abs(b.numerator), b.denominator) == 1


def test_zeta2_closed_form():
    assert zeta_even_closed_form(1) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)


def test_zeta4_closed_form():
    assert even_zeta_coefficient(2) == Fraction(1, 90)
    assert zeta_even_closed_form(2) == pytest.approx(1.0823232337111382, rel=1e-15)


@pytest.mark.parametrize("k", range(1, 11))
def test_closed_form_vs_series(k):
    s = zeta_series(2 * k, 1e-13)
    c = zeta_even_closed_form(k)
    assert abs(c - s.value) <= s.tail_bound + 1e-12 * c


def test_negative_m_rejected():
    with pytest.raises(ValueError):
        bernoulli_table(-1)
