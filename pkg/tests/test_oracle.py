"""Brute-force oracle, enumeration, sweeps, and structural law checks."""

import math

import pytest

from greedynim import (
    GameSpec,
    MemoTable,
    Outcome,
    Play,
    SweepBounds,
    Variant,
    apply_move,
    check_base_cases,
    check_reduction,
    check_singularity,
    check_stable_moves,
    classify,
    enumerate_positions,
    grundy_value,
    legal_moves,
    normalize,
    oracle_outcome,
    run_law_checks,
    sweep,
)

ALL_SPECS = [
    GameSpec.bounded(k, play) for k in (1, 2, 3) for play in Play
] + [GameSpec.greedy(play) for play in Play]


def plain_outcome(spec, heaps):
    """Reference recursion with no memo table and no library plumbing.

    Deliberately independent of the oracle's internals: positions are bare
    sorted tuples and every subtree is recomputed from scratch.
    """
    heaps = tuple(sorted((h for h in heaps if h), reverse=True))
    if not heaps:
        return Outcome.P if spec.play is Play.NORMAL else Outcome.N
    x1 = heaps[0]
    cap = x1 if spec.k is None else min(x1, spec.k)
    for t in range(1, cap + 1):
        if plain_outcome(spec, heaps[1:] + (x1 - t,)) is Outcome.P:
            return Outcome.N
    return Outcome.P


# ------------------------------------------------------------------ oracle


def test_oracle_terminal_rules():
    empty = normalize([])
    assert oracle_outcome(GameSpec.greedy(Play.MISERE), empty) is Outcome.N
    assert oracle_outcome(GameSpec.greedy(Play.NORMAL), empty) is Outcome.P
    assert oracle_outcome(GameSpec.bounded(2, Play.MISERE), empty) is Outcome.N
    assert oracle_outcome(GameSpec.bounded(2, Play.NORMAL), empty) is Outcome.P


def test_oracle_hand_expanded_example():
    # (2,2) misere k=2: followers (2,1) and (2) are both N, so (2,2) is P
    spec = GameSpec.bounded(2, Play.MISERE)
    assert oracle_outcome(spec, normalize([2, 2])) is Outcome.P
    assert oracle_outcome(spec, normalize([2, 1])) is Outcome.N
    assert oracle_outcome(spec, normalize([2])) is Outcome.N


def test_oracle_matches_unmemoized_reference():
    for spec in ALL_SPECS:
        memo = MemoTable()
        for pos in enumerate_positions(SweepBounds(2, 5)):
            assert oracle_outcome(spec, pos, memo) is plain_outcome(spec, pos.heaps), (
                spec.label(),
                pos.canonical(),
            )


def test_oracle_matches_reference_on_three_heap_spots():
    for spec in ALL_SPECS:
        for raw in ([3, 2, 1], [4, 4, 2], [2, 2, 2]):
            pos = normalize(raw)
            assert oracle_outcome(spec, pos) is plain_outcome(spec, pos.heaps)


def test_oracle_memo_reuse_is_stable():
    spec = GameSpec.greedy(Play.MISERE)
    memo = MemoTable()
    first = oracle_outcome(spec, normalize([5, 4, 2]), memo)
    assert oracle_outcome(spec, normalize([5, 4, 2]), memo) is first
    assert oracle_outcome(spec, normalize([5, 4, 2, 0, 0]), memo) is first


def test_oracle_handles_tall_single_heap():
    # depth is bounded by the explicit stack, not the interpreter limit
    spec = GameSpec.bounded(1, Play.NORMAL)
    assert oracle_outcome(spec, normalize([4000])) is Outcome.P
    assert oracle_outcome(spec, normalize([4001])) is Outcome.N


# ------------------------------------------------------------------ grundy


def test_grundy_examples():
    assert grundy_value(GameSpec.greedy(Play.NORMAL), normalize([])) == 0
    assert grundy_value(GameSpec.bounded(2, Play.NORMAL), normalize([4])) == 1
    single = [grundy_value(GameSpec.bounded(2, Play.NORMAL), normalize([m])) for m in range(7)]
    assert single == [0, 1, 2, 0, 1, 2, 0]


def test_grundy_rejects_misere():
    with pytest.raises(ValueError):
        grundy_value(GameSpec.greedy(Play.MISERE), normalize([2, 1]))


def test_grundy_is_mex_of_followers():
    spec = GameSpec.bounded(3, Play.NORMAL)
    memo = MemoTable()
    for pos in enumerate_positions(SweepBounds(3, 5)):
        values = {
            grundy_value(spec, apply_move(pos, t), memo) for t in legal_moves(spec, pos)
        }
        want = 0
        while want in values:
            want += 1
        assert grundy_value(spec, pos, memo) == want


def test_grundy_zero_iff_normal_p():
    for spec in (GameSpec.bounded(2, Play.NORMAL), GameSpec.greedy(Play.NORMAL)):
        memo = MemoTable()
        for pos in enumerate_positions(SweepBounds(3, 6)):
            is_zero = grundy_value(spec, pos, memo) == 0
            assert is_zero == (oracle_outcome(spec, pos, memo) is Outcome.P)


# ------------------------------------------------------------- enumeration


def test_enumerate_positions_examples():
    got = [p.canonical() for p in enumerate_positions(SweepBounds(1, 2))]
    assert got == [(), (2,), (1,)]
    six = [p.canonical() for p in enumerate_positions(SweepBounds(2, 2))]
    assert set(six) == {(), (1,), (2,), (1, 1), (2, 1), (2, 2)}
    assert len(six) == 6


@pytest.mark.parametrize(("h", "m"), [(1, 5), (3, 4), (5, 3), (4, 0)])
def test_enumerate_positions_count_and_uniqueness(h, m):
    seen = set()
    for pos in enumerate_positions(SweepBounds(h, m)):
        assert pos.canonical() not in seen
        seen.add(pos.canonical())
        assert len(pos.canonical()) <= h
        assert all(1 <= x <= m for x in pos.canonical())
    assert len(seen) == math.comb(m + h, h)


# ------------------------------------------------------------------- sweep


def test_sweep_small_misere_bounded():
    bounds = SweepBounds(2, 3, k_values=(2,), variants=(Variant.BOUNDED,), plays=(Play.MISERE,))
    report = sweep(bounds)
    assert report.positions_checked == 10
    assert report.distinct_positions == 10
    assert report.spec_count == 1
    assert report.mismatches == []
    assert report.ok


def test_sweep_single_empty_position():
    bounds = SweepBounds(1, 0, k_values=(2,), variants=(Variant.BOUNDED,), plays=(Play.MISERE,))
    report = sweep(bounds)
    assert report.positions_checked == 1
    assert report.ok


def test_sweep_parallel_matches_sequential():
    bounds = SweepBounds(3, 6, k_values=(1, 2))
    seq = sweep(bounds, strategy_checks=True, workers=1)
    par = sweep(bounds, strategy_checks=True, workers=2)
    assert par.positions_checked == seq.positions_checked
    assert par.mismatches == seq.mismatches == []
    assert par.strategy_violations == seq.strategy_violations == []


def test_sweep_report_serialization():
    report = sweep(SweepBounds(2, 2, k_values=(2,)))
    doc = report.to_dict()
    assert doc["ok"] is True
    assert doc["mismatches"] == []
    assert doc["positionsChecked"] == report.positions_checked
    assert "result: OK" in report.to_text()


def test_sweep_bounds_validation():
    with pytest.raises(ValueError):
        SweepBounds(-1, 3)
    with pytest.raises(ValueError):
        SweepBounds(2, -3)
    with pytest.raises(ValueError):
        SweepBounds(2, 3, k_values=(0,))
    with pytest.raises(ValueError):
        SweepBounds(2, 3, k_values=(), variants=(Variant.BOUNDED,))


# ----------------------------------------------------------------- laws


def test_reduction_oracle_level():
    # once the cap covers every heap, bounded and greedy trees are identical
    for play in Play:
        bounded = GameSpec.bounded(5, play)
        greedy = GameSpec.greedy(play)
        memo = MemoTable()
        for pos in enumerate_positions(SweepBounds(3, 5)):
            assert oracle_outcome(bounded, pos, memo) is oracle_outcome(greedy, pos, memo)


def test_check_reduction():
    checked, violations = check_reduction(3, 6)
    assert checked == 2 * math.comb(9, 3)
    assert violations == []


def test_check_singularity():
    checked, violations = check_singularity(3, 6)
    assert checked == math.comb(9, 3)
    assert violations == []


def test_check_base_cases():
    checked, violations = check_base_cases((1, 2, 3, 7))
    assert checked == 2 * (4 * 2 + 2)
    assert violations == []


def test_check_stable_moves():
    checked, violations = check_stable_moves(SweepBounds(4, 7, k_values=(2, 3)))
    assert violations == []
    assert checked > 0


def test_run_law_checks_report():
    report = run_law_checks(SweepBounds(3, 5, k_values=(1, 2)))
    assert report.ok
    assert set(report.checks) == {"reduction", "singularity", "base-cases", "stable-moves"}
    doc = report.to_dict()
    assert doc["violations"] == []
    assert "laws: OK" in report.to_text()


def test_law_checks_skip_stable_moves_without_cap_two():
    report = run_law_checks(SweepBounds(2, 3, k_values=(1,)))
    assert "stable-moves" not in report.checks
    assert report.ok


def test_classify_agrees_with_oracle_spot_sample():
    # tiny cross-check inside the unit suite; the exhaustive version lives
    # in the acceptance tests
    memo = MemoTable()
    for spec in ALL_SPECS:
        for pos in enumerate_positions(SweepBounds(3, 5)):
            assert classify(spec, pos).outcome is oracle_outcome(spec, pos, memo)
