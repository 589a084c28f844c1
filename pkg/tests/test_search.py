import pytest

from conftest import rows_of
from oracles.distance import distance
from trikit import census
from trikit.isosig import signature
from trikit.moves import BOUNDARY_KINDS, MoveKind, apply_move, enumerate_moves
from trikit.search import Exhausted, MovePath, SearchBudget, connect, scramble, verify_path
from trikit.triangulation import Triangulation, validate

FLIPS = frozenset({MoveKind.TwoThree, MoveKind.ThreeTwo})


def neighbours(rows, kinds):
    tri = Triangulation(rows)
    for site in enumerate_moves(tri, kinds):
        yield rows_of(apply_move(tri, site)[0])


def test_connect_to_itself(s3_2):
    path = connect(s3_2, s3_2, SearchBudget(max_tets=2))
    assert isinstance(path, MovePath) and len(path) == 0


def test_single_two_three(s3_2):
    b, _ = apply_move(s3_2, "23@f:1")
    path = connect(s3_2, b, SearchBudget(max_tets=3))
    assert len(path) == 1
    assert verify_path(s3_2, path)


def test_exhausted_when_wall_too_low(s3_2):
    b, _ = apply_move(s3_2, "23@f:1")
    res = connect(s3_2, b, SearchBudget(max_tets=2))
    assert isinstance(res, Exhausted)
    assert str(res).startswith("EXHAUSTED states=")


def test_exhausted_by_state_budget():
    a, b = census.load("l41_1"), census.load("s3_2")
    res = connect(a, b, SearchBudget(max_tets=4, max_states=50))
    assert isinstance(res, Exhausted)
    assert res.states <= 50 + 64  # one expansion may overshoot by its own fan-out


def test_budget_rejects_negative():
    with pytest.raises(ValueError):
        SearchBudget(max_tets=-1)


def test_scramble_zero(s3_2):
    tri, path = scramble(s3_2, 0, seed=1)
    assert tri == s3_2 and len(path) == 0


def test_scramble_is_deterministic(free):
    a, pa = scramble(free, 5, seed=11)
    b, pb = scramble(free, 5, seed=11)
    assert a == b and pa == pb
    assert validate(a) == []


@pytest.mark.parametrize("seed", range(5))
def test_scramble_then_connect(free, seed):
    b, witness = scramble(free, 5, seed=seed)
    assert verify_path(free, witness)
    sizes, cur = [free.size], free
    for tok in witness.moves:
        cur, _ = apply_move(cur, tok)
        sizes.append(cur.size)
    path = connect(free, b, SearchBudget(max_tets=max(sizes)))
    assert isinstance(path, MovePath) and len(path) <= 5
    assert verify_path(free, path)


def test_corrupted_path_fails_at_step(s3_2):
    b, witness = scramble(s3_2, 3, seed=4, kinds=FLIPS)
    moves = list(witness.moves)
    moves[1] = "32@e:999"
    bad = MovePath(tuple(moves), witness.start, witness.end)
    check = verify_path(s3_2, bad)
    assert not check and check.step == 1


def test_wrong_endpoint_detected(s3_2):
    _, witness = scramble(s3_2, 2, seed=4, kinds=FLIPS)
    bad = MovePath(witness.moves, witness.start, signature(s3_2))
    check = verify_path(s3_2, bad)
    assert not check and check.step == 2


@pytest.mark.parametrize("name,k,seed", [("s3_2", 3, 0), ("s3_2", 4, 1), ("ball_1", 3, 2), ("solid_torus_1", 3, 5)])
def test_length_matches_exhaustive_distance(name, k, seed):
    a = census.load(name)
    kinds = FLIPS if a.is_closed else FLIPS | BOUNDARY_KINDS
    b, _ = scramble(a, k, seed=seed, kinds=kinds)
    budget = SearchBudget(max_tets=a.size + k, allow_boundary_moves=not a.is_closed, move_kinds=kinds)
    path = connect(a, b, budget)
    want = distance(rows_of(a), rows_of(b), budget.kinds, a.size + k, k, neighbours)
    assert len(path) == want
