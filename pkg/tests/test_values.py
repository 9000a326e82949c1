from fractions import Fraction

import pytest

from nonarch.values import INF, Val, vmin, vsum


def test_ordering_and_inf():
    assert Val(1) < Val(2) < INF
    assert min(Val(3), INF) == Val(3)
    assert INF == INF
    assert Val(Fraction(1, 2)) == Val(Fraction(2, 4))
    assert sorted([INF, Val(0), Val(-1)]) == [Val(-1), Val(0), INF]


def test_inf_absorbs_addition():
    assert Val(2) + INF == INF
    assert INF + INF == INF
    assert Val(1) + Val(Fraction(1, 3)) == Val(Fraction(4, 3))


def test_subtraction_rules():
    assert INF - Val(5) == INF
    assert Val(5) - Val(7) == Val(-2)
    with pytest.raises(ValueError):
        Val(1) - INF


def test_scalar_multiples():
    assert Val(Fraction(1, 2)) * 3 == Val(Fraction(3, 2))
    assert 2 * INF == INF
    with pytest.raises(ValueError):
        INF * 0


def test_vmin_vsum():
    assert vmin([]) == INF
    assert vmin([Val(3), Val(1), INF]) == Val(1)
    assert vsum([Val(1), Val(2)]) == Val(3)
    assert vsum([Val(1), INF]) == INF
    assert vsum([]) == Val(0)
