"""Independent brute-force ground truth and exhaustive verification sweeps.

The oracle never consults the closed-form rules: outcomes come from the
game-tree recursion alone (a position is N iff some follower is P, with
the empty position P under normal play and N under misere play).  The
sweep machinery then compares :func:`greedynim.core.classify` against the
oracle over every position inside given bounds and reports any mismatch.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import (
    GameSpec,
    Outcome,
    Play,
    Position,
    Variant,
    classify,
    is_singular,
    is_stable_move,
    normalize,
    third_tie_count,
)
from .strategy import apply_move, constructive_move

Key = tuple[int, ...]


@dataclass
class MemoTable:
    """Insert-once caches keyed by (variant key, play, canonical heaps).

    Canonical heap keys drop trailing zeros, so padded and unpadded
    spellings of a position share entries.  Entries are never rewritten;
    concurrent fan-out uses one table per worker instead of sharing.
    """

    outcomes: dict[tuple, Outcome] = field(default_factory=dict)
    grundy: dict[tuple, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.outcomes) + len(self.grundy)


def _follower_keys(key: Key, cap: int | None) -> list[Key]:
    """Canonical keys of all followers; cap is k for bounded, None for greedy."""
    if not key:
        return []
    x1 = key[0]
    limit = x1 if cap is None else min(x1, cap)
    rest = key[1:]
    out = []
    for t in range(1, limit + 1):
        new = x1 - t
        if new == 0:
            out.append(rest)
            continue
        i = 0
        while i < len(rest) and rest[i] > new:
            i += 1
        out.append(rest[:i] + (new,) + rest[i:])
    return out


def oracle_outcome(spec: GameSpec, pos: Position, memo: MemoTable | None = None) -> Outcome:
    """Game-tree outcome, memoized, with an explicit stack.

    The stack (rather than recursion) keeps arbitrarily tall heaps safe:
    the dependency chain is as long as the total stone count.
    """
    if memo is None:
        memo = MemoTable()
    cap = spec.k if spec.variant is Variant.BOUNDED else None
    terminal = Outcome.P if spec.play is Play.NORMAL else Outcome.N
    base = spec.variant_key() + (spec.play,)
    table = memo.outcomes

    root = pos.canonical()
    stack = [root]
    while stack:
        cur = stack[-1]
        if base + (cur,) in table:
            stack.pop()
            continue
        followers = _follower_keys(cur, cap)
        pending = [f for f in followers if base + (f,) not in table]
        if pending:
            stack.extend(pending)
            continue
        if not followers:
            value = terminal
        elif any(table[base + (f,)] is Outcome.P for f in followers):
            value = Outcome.N
        else:
            value = Outcome.P
        table[base + (cur,)] = value
        stack.pop()
    return table[base + (root,)]


def grundy_value(spec: GameSpec, pos: Position, memo: MemoTable | None = None) -> int:
    """Normal-play Grundy value: mex over followers, 0 at the terminal.

    Misere play is rejected; misere outcomes are not determined by
    normal-play Grundy values.
    """
    if spec.play is not Play.NORMAL:
        raise ValueError("grundy values are defined for normal play only")
    if memo is None:
        memo = MemoTable()
    cap = spec.k if spec.variant is Variant.BOUNDED else None
    base = spec.variant_key()
    table = memo.grundy

    root = pos.canonical()
    stack = [root]
    while stack:
        cur = stack[-1]
        if base + (cur,) in table:
            stack.pop()
            continue
        followers = _follower_keys(cur, cap)
        pending = [f for f in followers if base + (f,) not in table]
        if pending:
            stack.extend(pending)
            continue
        seen = {table[base + (f,)] for f in followers}
        g = 0
        while g in seen:
            g += 1
        table[base + (cur,)] = g
        stack.pop()
    return table[base + (root,)]


@dataclass(frozen=True)
class SweepBounds:
    """A finite position space plus the game specs to check over it."""

    max_heaps: int
    max_heap_size: int
    k_values: tuple[int, ...] = (2,)
    variants: tuple[Variant, ...] = (Variant.BOUNDED, Variant.GREEDY)
    plays: tuple[Play, ...] = (Play.NORMAL, Play.MISERE)

    def __post_init__(self) -> None:
        if self.max_heaps < 0 or self.max_heap_size < 0:
            raise ValueError("bounds must be non-negative")
        if Variant.BOUNDED in self.variants and not self.k_values:
            raise ValueError("bounded sweeps need at least one k")
        for k in self.k_values:
            if k < 1:
                raise ValueError(f"k must be >= 1, got {k}")

    def specs(self) -> list[GameSpec]:
        out = []
        for variant in self.variants:
            if variant is Variant.BOUNDED:
                for k in self.k_values:
                    out.extend(GameSpec.bounded(k, play) for play in self.plays)
            else:
                out.extend(GameSpec.greedy(play) for play in self.plays)
        return out


def enumerate_positions(bounds: SweepBounds):
    """Every multiset of at most max_heaps nonzero heaps, each of size at
    most max_heap_size, exactly once, in normalized form.

    Yields C(max_heap_size + max_heaps, max_heaps) positions.
    """
    sizes = range(bounds.max_heap_size, 0, -1)
    for r in range(bounds.max_heaps + 1):
        for combo in itertools.combinations_with_replacement(sizes, r):
            yield normalize(combo)


@dataclass(frozen=True)
class Mismatch:
    """A position whose closed-form outcome disagrees with the oracle."""

    spec: GameSpec
    heaps: tuple[int, ...]
    closed_form: Outcome
    oracle: Outcome

    def to_dict(self) -> dict:
        return {
            "variant": self.spec.variant.value,
            "k": self.spec.k,
            "play": self.spec.play.value,
            "heaps": list(self.heaps),
            "closedForm": self.closed_form.value,
            "oracle": self.oracle.value,
        }


@dataclass(frozen=True)
class StrategyViolation:
    """A strategy guarantee that failed at some position."""

    spec: GameSpec
    heaps: tuple[int, ...]
    check: str
    detail: str

    def to_dict(self) -> dict:
        return {
            "variant": self.spec.variant.value,
            "k": self.spec.k,
            "play": self.spec.play.value,
            "heaps": list(self.heaps),
            "check": self.check,
            "detail": self.detail,
        }


@dataclass
class SweepReport:
    """Result of an exhaustive closed-form-vs-oracle comparison."""

    positions_checked: int
    distinct_positions: int
    spec_count: int
    mismatches: list[Mismatch]
    strategy_violations: list[StrategyViolation]
    elapsed_seconds: float

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.strategy_violations

    def to_dict(self) -> dict:
        return {
            "positionsChecked": self.positions_checked,
            "distinctPositions": self.distinct_positions,
            "specs": self.spec_count,
            "mismatches": [m.to_dict() for m in self.mismatches],
            "strategyViolations": [v.to_dict() for v in self.strategy_violations],
            "elapsedSeconds": round(self.elapsed_seconds, 6),
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"checked {self.positions_checked} (spec, position) pairs "
            f"({self.distinct_positions} positions x {self.spec_count} specs) "
            f"in {self.elapsed_seconds:.2f}s",
        ]
        for m in self.mismatches:
            lines.append(
                f"MISMATCH {m.spec.label()} {list(m.heaps)}: "
                f"closed form {m.closed_form.value}, oracle {m.oracle.value}"
            )
        for v in self.strategy_violations:
            lines.append(f"STRATEGY {v.spec.label()} {list(v.heaps)}: {v.check}: {v.detail}")
        lines.append("result: OK" if self.ok else "result: FAILED")
        return "\n".join(lines)


def _check_strategy(spec: GameSpec, pos: Position, out: list[StrategyViolation]) -> None:
    """Soundness of the search-free winning move on a misere bounded N-position."""
    from .strategy import winning_moves

    k = spec.k
    assert k is not None and k >= 2
    key = pos.canonical()
    t = constructive_move(k, pos)
    if t is None:
        out.append(StrategyViolation(spec, key, "constructive-missing", "no move derived"))
        return
    if not 1 <= t <= min(pos.x1, k):
        out.append(StrategyViolation(spec, key, "constructive-illegal", f"t={t}"))
        return
    follower = apply_move(pos, t)
    if classify(spec, follower).outcome is not Outcome.P:
        out.append(
            StrategyViolation(
                spec, key, "constructive-unsound", f"t={t} reaches N {follower.canonical()}"
            )
        )
        return
    if t not in winning_moves(spec, pos):
        out.append(StrategyViolation(spec, key, "constructive-not-winning", f"t={t}"))


def _sweep_one_spec(
    spec: GameSpec, bounds: SweepBounds, strategy_checks: bool
) -> tuple[int, list[Mismatch], list[StrategyViolation]]:
    memo = MemoTable()
    mismatches: list[Mismatch] = []
    violations: list[StrategyViolation] = []
    checked = 0
    constructive_applies = (
        strategy_checks
        and spec.variant is Variant.BOUNDED
        and spec.play is Play.MISERE
        and spec.k is not None
        and spec.k >= 2
    )
    for pos in enumerate_positions(bounds):
        checked += 1
        closed = classify(spec, pos).outcome
        truth = oracle_outcome(spec, pos, memo)
        if closed is not truth:
            mismatches.append(Mismatch(spec, pos.canonical(), closed, truth))
            continue
        if constructive_applies and closed is Outcome.N and not pos.is_empty():
            _check_strategy(spec, pos, violations)
    return checked, mismatches, violations


def sweep(bounds: SweepBounds, strategy_checks: bool = False, workers: int = 1) -> SweepReport:
    """Compare closed form vs oracle for every (spec, position) pair.

    With ``strategy_checks`` the sweep additionally asserts that the
    search-free constructive move is defined, legal, and winning on every
    misere bounded N-position (k >= 2).  ``workers`` > 1 fans specs out
    across processes, each with its own memo table; results are identical
    either way.
    """
    specs = bounds.specs()
    start = time.perf_counter()
    distinct = 0
    for _ in enumerate_positions(bounds):
        distinct += 1

    results: list[tuple[int, list[Mismatch], list[StrategyViolation]]]
    if workers > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    _sweep_one_spec,
                    specs,
                    itertools.repeat(bounds),
                    itertools.repeat(strategy_checks),
                )
            )
    else:
        results = [_sweep_one_spec(spec, bounds, strategy_checks) for spec in specs]

    checked = sum(r[0] for r in results)
    mismatches = [m for r in results for m in r[1]]
    violations = [v for r in results for v in r[2]]
    return SweepReport(
        positions_checked=checked,
        distinct_positions=distinct,
        spec_count=len(specs),
        mismatches=mismatches,
        strategy_violations=violations,
        elapsed_seconds=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class LawViolation:
    """A structural law that failed at some position."""

    law: str
    game: str
    heaps: tuple[int, ...]
    detail: str

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "game": self.game,
            "heaps": list(self.heaps),
            "detail": self.detail,
        }


def check_reduction(
    max_heaps: int, max_heap_size: int, plays: tuple[Play, ...] = (Play.NORMAL, Play.MISERE)
) -> tuple[int, list[LawViolation]]:
    """Bounded play with cap >= every heap size must match greedy play.

    Once k is at least the largest heap, the removal bound never binds, so
    the two classifiers must agree position by position under both plays.
    Returns (positions checked, violations).
    """
    k = max(max_heap_size, 1)
    bounds = SweepBounds(max_heaps, max_heap_size, k_values=(k,))
    checked = 0
    out: list[LawViolation] = []
    for play in plays:
        bounded = GameSpec.bounded(k, play)
        greedy = GameSpec.greedy(play)
        for pos in enumerate_positions(bounds):
            checked += 1
            b = classify(bounded, pos).outcome
            g = classify(greedy, pos).outcome
            if b is not g:
                out.append(
                    LawViolation(
                        "reduction",
                        f"k={k} vs greedy, {play.value}",
                        pos.canonical(),
                        f"bounded {b.value}, greedy {g.value}",
                    )
                )
    return checked, out


def check_singularity(max_heaps: int, max_heap_size: int) -> tuple[int, list[LawViolation]]:
    """Greedy outcomes flip between the play conventions exactly when x1 <= 1."""
    bounds = SweepBounds(max_heaps, max_heap_size, variants=(Variant.GREEDY,))
    spec = GameSpec.greedy(Play.NORMAL)
    checked = 0
    out: list[LawViolation] = []
    for pos in enumerate_positions(bounds):
        checked += 1
        singular = is_singular(spec, pos)
        if singular != (pos.x1 <= 1):
            out.append(
                LawViolation(
                    "singularity",
                    "greedy",
                    pos.canonical(),
                    f"is_singular={singular} but x1={pos.x1}",
                )
            )
    return checked, out


def check_base_cases(
    k_values: tuple[int, ...], include_greedy: bool = True
) -> tuple[int, list[LawViolation]]:
    """Stone totals 0 and 1 have fixed outcomes under every move rule.

    Total 0 leaves the mover immobile: P under normal play, N under misere
    play.  Total 1 forces a single move to the empty position, flipping
    both outcomes.
    """
    specs = []
    for k in k_values:
        specs.extend(GameSpec.bounded(k, play) for play in Play)
    if include_greedy:
        specs.extend(GameSpec.greedy(play) for play in Play)

    empty = normalize([])
    one = normalize([1])
    checked = 0
    out: list[LawViolation] = []
    for spec in specs:
        for pos, normal_want in ((empty, Outcome.P), (one, Outcome.N)):
            want = normal_want
            if spec.play is Play.MISERE:
                want = Outcome.N if normal_want is Outcome.P else Outcome.P
            checked += 1
            got = classify(spec, pos).outcome
            if got is not want:
                out.append(
                    LawViolation(
                        "base-case",
                        spec.label(),
                        pos.canonical(),
                        f"got {got.value}, want {want.value}",
                    )
                )
    return checked, out


def check_stable_moves(bounds: SweepBounds) -> tuple[int, list[LawViolation]]:
    """The stable-move facts behind the misere bounded strategy, checked raw.

    Over every position in bounds and every legal removal t (k >= 2,
    misere bounded):

    * stable t (x1 - x2 >= t): heaps two onward are untouched and the
      third-heap tie count is preserved;
    * stable t from a P-position: the follower is an N-position;
    * non-stable t: the follower's largest heap equals x2;
    * whenever r1 = (x1 - x2) mod (k+1) is nonzero: t = r1 is itself a
      stable legal move and the follower has r1 = 0.
    """
    from .strategy import legal_moves

    checked = 0
    out: list[LawViolation] = []

    def bad(law: str, spec: GameSpec, pos: Position, detail: str) -> None:
        out.append(LawViolation(law, spec.label(), pos.canonical(), detail))

    for k in bounds.k_values:
        if k < 2:
            continue
        spec = GameSpec.bounded(k, Play.MISERE)
        for pos in enumerate_positions(bounds):
            if pos.is_empty():
                continue
            outcome = classify(spec, pos).outcome
            x1, x2 = pos.x1, pos.x2
            beta = third_tie_count(pos)
            for t in legal_moves(spec, pos):
                checked += 1
                follower = apply_move(pos, t)
                if is_stable_move(pos, t):
                    if follower.heaps != (x1 - t,) + pos.heaps[1:]:
                        bad("stable-keeps-tail", spec, pos, f"t={t} -> {follower.canonical()}")
                    elif third_tie_count(follower) != beta:
                        bad(
                            "stable-keeps-third-ties",
                            spec,
                            pos,
                            f"t={t}: {beta} -> {third_tie_count(follower)}",
                        )
                    if outcome is Outcome.P and classify(spec, follower).outcome is not Outcome.N:
                        bad("stable-escapes-p", spec, pos, f"t={t} kept the follower P")
                elif follower.x1 != x2:
                    bad("unstable-new-max", spec, pos, f"t={t}: new max {follower.x1} != {x2}")
            r1 = (x1 - x2) % (k + 1)
            if r1 != 0:
                checked += 1
                if not is_stable_move(pos, r1):
                    bad("r1-move-stable", spec, pos, f"r1={r1} not stable")
                else:
                    follower = apply_move(pos, r1)
                    r1p = (follower.x1 - follower.x2) % (k + 1)
                    if r1p != 0:
                        bad("r1-move-clears-r1", spec, pos, f"r1={r1} left r1'={r1p}")
    return checked, out


@dataclass
class LawReport:
    """Aggregate result of the structural law checks."""

    checks: dict[str, int]
    violations: list[LawViolation]
    elapsed_seconds: float

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "checks": dict(self.checks),
            "violations": [v.to_dict() for v in self.violations],
            "elapsedSeconds": round(self.elapsed_seconds, 6),
            "ok": self.ok,
        }

    def to_text(self) -> str:
        lines = [
            "law checks: "
            + ", ".join(f"{name}={count}" for name, count in self.checks.items())
            + f" in {self.elapsed_seconds:.2f}s"
        ]
        for v in self.violations:
            lines.append(f"LAW {v.law} {v.game} {list(v.heaps)}: {v.detail}")
        lines.append("laws: OK" if self.ok else "laws: FAILED")
        return "\n".join(lines)


def run_law_checks(bounds: SweepBounds) -> LawReport:
    """Run every structural law over one set of bounds."""
    start = time.perf_counter()
    checks: dict[str, int] = {}
    violations: list[LawViolation] = []

    n, v = check_reduction(bounds.max_heaps, bounds.max_heap_size, bounds.plays)
    checks["reduction"] = n
    violations.extend(v)
    n, v = check_singularity(bounds.max_heaps, bounds.max_heap_size)
    checks["singularity"] = n
    violations.extend(v)
    n, v = check_base_cases(bounds.k_values)
    checks["base-cases"] = n
    violations.extend(v)
    if any(k >= 2 for k in bounds.k_values):
        n, v = check_stable_moves(bounds)
        checks["stable-moves"] = n
        violations.extend(v)
    return LawReport(checks, violations, time.perf_counter() - start)
