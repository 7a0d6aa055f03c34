"""Move generation, move application, and winning-move selection."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from greedynim import (
    GameSpec,
    Outcome,
    Play,
    SweepBounds,
    apply_move,
    best_move,
    classify,
    constructive_move,
    enumerate_positions,
    legal_moves,
    normalize,
    strategy_report,
    winning_moves,
)

MB2 = GameSpec.bounded(2, Play.MISERE)


def test_legal_moves():
    assert legal_moves(GameSpec.bounded(2, Play.NORMAL), normalize([3, 1])) == [1, 2]
    assert legal_moves(MB2, normalize([])) == []
    assert legal_moves(GameSpec.greedy(Play.NORMAL), normalize([4, 4])) == [1, 2, 3, 4]
    assert legal_moves(GameSpec.bounded(9, Play.NORMAL), normalize([3])) == [1, 2, 3]


def test_apply_move_examples():
    assert apply_move(normalize([4, 3, 1]), 2).heaps == (3, 2, 1, 0)
    assert apply_move(normalize([5, 5]), 5).heaps == (5, 0, 0, 0)
    assert apply_move(normalize([2, 2, 1]), 1).heaps == (2, 1, 1, 0)


def test_apply_move_rejects_bad_counts():
    pos = normalize([3, 1])
    with pytest.raises(ValueError):
        apply_move(pos, 0)
    with pytest.raises(ValueError):
        apply_move(pos, 4)
    with pytest.raises(ValueError):
        apply_move(pos, True)
    with pytest.raises(ValueError):
        apply_move(normalize([]), 1)


@given(st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=6))
def test_apply_move_conserves_stones(raw):
    pos = normalize(raw)
    for t in range(1, pos.x1 + 1):
        follower = apply_move(pos, t)
        assert follower.total == pos.total - t
        assert list(follower.heaps) == sorted(follower.heaps, reverse=True)
        assert len(follower) == len(pos)


def test_winning_moves_frozen_examples():
    assert winning_moves(MB2, normalize([2, 1])) == [2]
    assert winning_moves(MB2, normalize([1])) == []
    assert winning_moves(GameSpec.greedy(Play.MISERE), normalize([3, 2])) == [1]


def test_winning_moves_all_reach_p():
    specs = [MB2, GameSpec.bounded(3, Play.NORMAL), GameSpec.greedy(Play.MISERE)]
    bounds = SweepBounds(3, 6)
    for spec in specs:
        for pos in enumerate_positions(bounds):
            for t in winning_moves(spec, pos):
                assert classify(spec, apply_move(pos, t)).outcome is Outcome.P


def test_best_move():
    assert best_move(MB2, normalize([2, 1])) == 2
    assert best_move(MB2, normalize([2, 2])) is None
    assert best_move(GameSpec.greedy(Play.MISERE), normalize([])) is None
    wins = winning_moves(MB2, normalize([5, 3, 2]))
    assert best_move(MB2, normalize([5, 3, 2])) == min(wins)


def test_constructive_move_frozen_examples():
    assert constructive_move(2, normalize([2, 1])) == 2
    assert constructive_move(2, normalize([4, 2])) == 2
    assert constructive_move(2, normalize([4, 2, 2, 2])) == 2


def test_constructive_move_absent_cases():
    assert constructive_move(2, normalize([])) is None
    assert constructive_move(2, normalize([2, 2])) is None
    assert constructive_move(2, normalize([1])) is None
    with pytest.raises(ValueError):
        constructive_move(1, normalize([2, 1]))


def test_constructive_move_always_winning_small_space():
    for k in (2, 3):
        spec = GameSpec.bounded(k, Play.MISERE)
        for pos in enumerate_positions(SweepBounds(4, 7)):
            if pos.is_empty() or classify(spec, pos).outcome is not Outcome.N:
                continue
            t = constructive_move(k, pos)
            assert t is not None, pos
            assert t in winning_moves(spec, pos), (k, pos, t)


def test_strategy_report():
    report = strategy_report(MB2, normalize([2, 1]))
    assert report.outcome is Outcome.N
    assert report.winning == (2,)
    assert report.constructive == 2
    assert report.chosen == 2

    quiet = strategy_report(GameSpec.greedy(Play.NORMAL), normalize([2, 2]))
    assert quiet.outcome is Outcome.P
    assert quiet.winning == ()
    assert quiet.constructive is None
    assert quiet.chosen is None
