"""Move generation and perfect-play move selection.

Moves are plain removal counts: the rules only ever touch a heap tied for
the maximum, and all tied maxima give the same normalized follower, so a
move is fully described by how many stones it takes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GameSpec,
    Outcome,
    Play,
    Position,
    Variant,
    classify,
    third_tie_count,
)


def legal_moves(spec: GameSpec, pos: Position) -> list[int]:
    """Legal removal counts, ascending: 1..min(x1, k) bounded, 1..x1 greedy."""
    x1 = pos.heaps[0]
    if x1 == 0:
        return []
    cap = x1 if spec.variant is Variant.GREEDY else min(x1, spec.k)  # type: ignore[type-var]
    return list(range(1, cap + 1))


def apply_move(pos: Position, t: int) -> Position:
    """Remove ``t`` stones from the largest heap and renormalize."""
    h = pos.heaps
    x1 = h[0]
    if not isinstance(t, int) or isinstance(t, bool) or t < 1:
        raise ValueError(f"removal count must be a positive integer, got {t!r}")
    if t > x1:
        raise ValueError(f"cannot remove {t} stones from a heap of {x1}")
    rest = h[1:]
    new = x1 - t
    # rest is already sorted; slot the shrunken heap into place.
    i = 0
    while i < len(rest) and rest[i] > new:
        i += 1
    return Position(rest[:i] + (new,) + rest[i:])


def winning_moves(spec: GameSpec, pos: Position) -> list[int]:
    """All removal counts whose follower is a P-position, ascending.

    Empty exactly when the position is P, or is the empty position in
    misere play (an N-position won by immobility, with no move at all).
    """
    return [
        t
        for t in legal_moves(spec, pos)
        if classify(spec, apply_move(pos, t)).outcome is Outcome.P
    ]


def best_move(spec: GameSpec, pos: Position) -> int | None:
    """The engine's deterministic choice: the smallest winning removal.

    None when the position is P or has no legal move.
    """
    wins = winning_moves(spec, pos)
    return wins[0] if wins else None


def constructive_move(k: int, pos: Position) -> int | None:
    """Closed-form winning removal for a misere bounded N-position, k >= 2.

    Unlike :func:`winning_moves`, no follower search happens: the removal
    count comes straight from the position's residues.  With
    r1 = (x1 - x2) % (k+1) and R(a) = a % (k+1):

    * x3 <= 1, third-tie count even (pair not k-nice):
      t = r1 + 1 if R(x2) == 1;  t = r1 if R(x2) >= 2;  t = R(r1 - 1) if
      R(x2) == 0.
    * x3 <= 1, count odd:  t = r1.
    * x3 >= 2, count even: t = r1.
    * x3 >= 2, count odd (triple not k-good):
      t = r1 + 1 if R(x2 - x3) == 0;  t = r1 if 1 <= R(x2 - x3) <= k - 1;
      t = R(r1 - 1) if R(x2 - x3) == k.

    Returns None for P-positions and for the empty position (no move
    exists; in misere play that position is already won by immobility).
    """
    if k < 2:
        raise ValueError(f"constructive move selection needs k >= 2, got {k}")
    spec = GameSpec.bounded(k, Play.MISERE)
    if pos.is_empty() or classify(spec, pos).outcome is Outcome.P:
        return None

    h = pos.heaps
    x1, x2, x3 = h[0], h[1], h[2]
    m = k + 1
    r1 = (x1 - x2) % m
    b = third_tie_count(pos)

    if x3 <= 1:
        if b % 2 == 0:
            r2 = x2 % m
            if r2 == 1:
                t = r1 + 1
            elif r2 >= 2:
                t = r1
            else:
                t = (r1 - 1) % m
        else:
            t = r1
    else:
        if b % 2 == 0:
            t = r1
        else:
            r23 = (x2 - x3) % m
            if r23 == 0:
                t = r1 + 1
            elif r23 <= k - 1:
                t = r1
            else:
                t = (r1 - 1) % m

    if not 1 <= t <= min(x1, k):
        raise AssertionError(
            f"derived removal {t} out of range for {pos} with k={k}"
        )
    return t


@dataclass(frozen=True)
class StrategyReport:
    """Everything the engine knows about a position's moves.

    ``chosen`` is the minimum winning removal (the engine's move);
    ``constructive`` is the search-free removal, present only for misere
    bounded N-positions with k >= 2.
    """

    outcome: Outcome
    winning: tuple[int, ...]
    constructive: int | None
    chosen: int | None


def strategy_report(spec: GameSpec, pos: Position) -> StrategyReport:
    wins = winning_moves(spec, pos)
    constructive = None
    if (
        spec.variant is Variant.BOUNDED
        and spec.play is Play.MISERE
        and spec.k is not None
        and spec.k >= 2
    ):
        constructive = constructive_move(spec.k, pos)
    return StrategyReport(
        outcome=classify(spec, pos).outcome,
        winning=tuple(wins),
        constructive=constructive,
        chosen=wins[0] if wins else None,
    )
