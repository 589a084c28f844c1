import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trikit.tower import EQUAL, GREATER, LESS, BudgetExceeded, TowerNat, TowerSum, fmt_nat, tower_cmp

towers = st.builds(TowerNat, st.integers(0, 6), st.integers(0, 70))


def test_normalization():
    assert TowerNat(2, 0) == TowerNat(0, 2)
    assert (TowerNat(3, 1).n, TowerNat(3, 1).x) == (2, 2)
    assert TowerNat(3, 1) == TowerNat(1, 4)


def test_examples():
    assert tower_cmp(TowerNat(2, 3), TowerNat(1, 8)) == EQUAL
    assert tower_cmp(TowerNat(0, 5), TowerNat(1, 2)) == GREATER
    big = 2 * 2**320 + 2
    assert tower_cmp(TowerNat(big, 2920), TowerNat(2**340, 2)) == LESS


def test_equal_values_hash_alike():
    assert hash(TowerNat(2, 3)) == hash(TowerNat(1, 8)) == hash(TowerNat(0, 256))
    assert len({TowerNat(2, 3), TowerNat(1, 8), TowerNat(0, 256)}) == 1


def test_materialize_budget():
    assert TowerNat(2, 3).materialize() == 256
    with pytest.raises(BudgetExceeded):
        TowerNat(3, 5).materialize(bit_budget=1000)


def test_sum_bounds():
    a = TowerNat(2, 5)
    lo, hi = TowerSum((a, a)).bounds()
    assert lo == a and hi == TowerNat(2, 6)
    assert 2 * a.materialize() <= hi.materialize()


def test_negative_rejected():
    with pytest.raises(ValueError):
        TowerNat(-1, 3)


@pytest.mark.parametrize("v,text", [(12, "12"), (2**300, "2^300"), (3 * 2**400, "3*2^400"),
                                    (2**1000 + 40, "2^1000+40")])
def test_fmt_nat(v, text):
    assert fmt_nat(v) == text


@settings(max_examples=400, deadline=None)
@given(towers, towers)
def test_antisymmetry(a, b):
    assert tower_cmp(a, b) == -tower_cmp(b, a)
    assert (tower_cmp(a, b) == EQUAL) == (a == b)


@settings(max_examples=400, deadline=None)
@given(towers, towers, towers)
def test_transitivity(a, b, c):
    if tower_cmp(a, b) <= 0 and tower_cmp(b, c) <= 0:
        assert tower_cmp(a, c) <= 0


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 3), st.integers(0, 12), st.integers(0, 3), st.integers(0, 12))
def test_agrees_with_materialized(n, x, m, y):
    a, b = TowerNat(n, x), TowerNat(m, y)
    try:
        va, vb = a.materialize(5000), b.materialize(5000)
    except BudgetExceeded:
        return
    assert tower_cmp(a, b) == (va > vb) - (va < vb)


@given(towers)
def test_lift_is_monotone(a):
    # 2^x > x for every natural x
    assert tower_cmp(a.lift(1), a) == GREATER
