import pytest
from hypothesis import given
from hypothesis import strategies as st

from trikit.bounds import (
    LEDGER,
    BoundError,
    Pow2,
    Scaled,
    Var,
    chain,
    compare,
    e,
    eval_bound,
    evaluate,
    format_value,
    t,
    verify_chain,
)
from trikit.tower import EQUAL, GREATER, LESS, TowerNat, TowerSum

PIPELINE = ["moves_s1", "s_of_t", "s2_discs", "moves_s1s2", "moves_s1s2_tower", "essential_annuli",
            "polyhedron_moves", "polyhedron_moves_tower", "final_moves"]


def test_canonical_surfaces_exact():
    v = eval_bound("canonical_surfaces", t=2)
    assert v == 2**320 and v.bit_length() == 321


def test_main_bound_is_symbolic_sum():
    v = eval_bound("main_bound", p=2, q=2, a=200)
    assert isinstance(v, TowerSum)
    assert v.terms == (TowerNat(2**400, 2), TowerNat(2**400, 2))
    assert format_value(v) == "e^2^400(2) + e^2^400(2)"


def test_main_bound_defaults_a():
    assert eval_bound("main_bound", p=1, q=1) == eval_bound("main_bound", p=1, q=1, a=200)


def test_disc_type_margin():
    assert eval_bound("disc_type_margin", t=2) == 2 * 20 * 4 * 2**14 == 2621440
    assert 2621440 <= 2**40


@pytest.mark.parametrize("params,needle", [
    ({"t": 1}, "minimum"),
    ({}, "missing"),
    ({"t": 2, "x": 1}, "unexpected"),
    ({"t": -1}, "minimum"),
])
def test_parameter_checks(params, needle):
    with pytest.raises(BoundError, match=needle):
        eval_bound("disc_type_margin", **params)


def test_a_is_capped():
    with pytest.raises(BoundError, match="maximum"):
        eval_bound("main_bound", p=1, q=1, a=201)


def test_unknown_bound():
    with pytest.raises(BoundError):
        eval_bound("nope", t=1)


@pytest.mark.parametrize("id", sorted(LEDGER))
def test_every_entry_evaluates(id):
    entry = LEDGER[id]
    params = {k: max(2, entry.minimum.get(k, 0)) for k in entry.params}
    params = {k: min(v, entry.maximum.get(k, v)) for k, v in params.items()}
    v = eval_bound(id, **params)
    assert format_value(v)


def test_fundamental_count_beats_disc_bound_growth():
    for tv in range(1, 5):
        assert eval_bound("fund_discs", t=tv) < eval_bound("canonical_surfaces", t=tv)


def test_compare_rules():
    assert compare(3, 5) == (LESS, "exact")
    assert compare(Scaled(3, 10**6), 2**100)[0] == GREATER
    assert compare(Scaled(3, 10**6), 2**100)[1] == "log2"
    assert compare(TowerNat(3, 5), TowerNat(2, 32)) == (EQUAL, "tower")


def test_huge_powers_are_scaled():
    v = evaluate(Pow2(Var("s") * Var("s")), {"s": 2**700})
    assert isinstance(v, (Scaled, TowerNat))


@given(st.integers(0, 200), st.integers(0, 200), st.integers(0, 50))
def test_arithmetic_is_exact(x, y, k):
    env = {"t": x}
    assert evaluate(t + y, env) == x + y
    assert evaluate(t * y, env) == x * y
    assert evaluate(Pow2(t + k), env) == 2 ** (x + k)
    assert evaluate(e(1, t), env) == 2**x


def test_chain_two_to_six_holds():
    report = verify_chain(2, 6)
    assert report.all_hold
    ids = {r.id for r in report.results}
    assert set(PIPELINE) <= ids
    assert "vertical_family" not in ids
    assert all(r.rule in ("exact", "log2", "tower", "sum-bounds") for r in report.results)


def test_chain_rejects_small_t():
    with pytest.raises(BoundError):
        verify_chain(1, 3)


def test_tamper_mild_still_holds():
    report = verify_chain(2, 4, overrides={"moves_coefficient": 2000})
    assert report.all_hold


def test_tamper_large_fails():
    report = verify_chain(2, 4, overrides={"moves_coefficient": Pow2(20 * t * t)})
    failed = {r.id for r in report.failures()}
    assert failed == {"moves_s1"}


def test_vertical_family_audit_fails_as_written():
    report = verify_chain(2, 3, audit=True)
    bad = report.failures()
    assert [r.id for r in bad] == ["vertical_family", "vertical_family"]
    for tv in (2, 3):
        # the left side is 2^{132t^2+12t}, beyond 2^{80t^2}
        assert eval_bound("vertical_family", t=tv) == 2 ** (132 * tv * tv + 12 * tv)


def test_chain_ids_unique():
    ids = [i.id for i in chain()]
    assert len(ids) == len(set(ids))
