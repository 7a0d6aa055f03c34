"""Position model and closed-form outcome rules for Greedy Nim variants.

Two games are covered, each under both play conventions:

* **k-bounded Greedy Nim** -- remove 1..k stones from a heap tied for the
  maximum size.
* **Greedy Nim** -- remove any positive number of stones from a heap tied
  for the maximum size.

Under *normal* play the player who cannot move loses; under *misere* play
that player wins.  ``classify`` decides P/N for any position in time linear
in the number of heaps (independent of stone counts), while the game-tree
oracle in :mod:`greedynim.oracle` re-derives the same outcomes by brute
force and is used to certify the closed forms exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

MIN_HEAPS = 4


class Play(str, Enum):
    """Play convention: who wins when a player cannot move."""

    NORMAL = "normal"
    MISERE = "misere"


class Variant(str, Enum):
    BOUNDED = "bounded"
    GREEDY = "greedy"


class Outcome(str, Enum):
    """P: the previous player wins; N: the next (to-move) player wins."""

    P = "P"
    N = "N"


@dataclass(frozen=True)
class GameSpec:
    """A game variant plus play convention.

    ``k`` is the per-move removal cap and is required exactly when
    ``variant`` is bounded; it must be absent for greedy play.
    """

    variant: Variant
    play: Play
    k: int | None = None

    def __post_init__(self) -> None:
        if self.variant is Variant.BOUNDED:
            if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
                raise ValueError(f"bounded variant requires an integer k >= 1, got {self.k!r}")
        elif self.k is not None:
            raise ValueError("greedy variant takes no k")

    @classmethod
    def bounded(cls, k: int, play: Play) -> "GameSpec":
        return cls(Variant.BOUNDED, play, k)

    @classmethod
    def greedy(cls, play: Play) -> "GameSpec":
        return cls(Variant.GREEDY, play)

    def with_play(self, play: Play) -> "GameSpec":
        return GameSpec(self.variant, play, self.k)

    def variant_key(self) -> tuple:
        """Hashable id of the move rule alone (play convention excluded)."""
        if self.variant is Variant.BOUNDED:
            return ("bounded", self.k)
        return ("greedy",)

    def label(self) -> str:
        base = f"bounded(k={self.k})" if self.variant is Variant.BOUNDED else "greedy"
        return f"{base} {self.play.value}"


@dataclass(frozen=True)
class Position:
    """Heaps in non-increasing order, zero-padded to at least four entries.

    Positions are multisets: heap identity never matters, only the sorted
    stone counts.  Build positions with :func:`normalize`; direct
    construction re-checks the invariants.
    """

    heaps: tuple[int, ...]

    def __post_init__(self) -> None:
        h = self.heaps
        if len(h) < MIN_HEAPS:
            raise ValueError(f"position needs at least {MIN_HEAPS} entries, got {len(h)}")
        if h[-1] < 0:
            raise ValueError("negative heap size")
        if list(h) != sorted(h, reverse=True):
            raise ValueError(f"heaps not sorted non-increasing: {h}")

    @property
    def x1(self) -> int:
        return self.heaps[0]

    @property
    def x2(self) -> int:
        return self.heaps[1]

    @property
    def x3(self) -> int:
        return self.heaps[2]

    @property
    def total(self) -> int:
        return sum(self.heaps)

    def canonical(self) -> tuple[int, ...]:
        """The nonzero heaps only; the key under which positions are equal."""
        h = self.heaps
        i = len(h)
        while i and h[i - 1] == 0:
            i -= 1
        return h[:i]

    def nonzero_count(self) -> int:
        return len(self.canonical())

    def is_empty(self) -> bool:
        return self.heaps[0] == 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.heaps)

    def __len__(self) -> int:
        return len(self.heaps)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.heaps) + ")"


def normalize(raw: Iterable[int]) -> Position:
    """Sort heap sizes in non-increasing order and pad to four entries.

    The multiset of nonzero heaps is preserved; entries must be
    non-negative integers.  Input length above four is kept as-is.
    """
    heaps = sorted(raw, reverse=True)
    for x in heaps:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"heap sizes must be integers, got {x!r}")
        if x < 0:
            raise ValueError(f"negative heap size: {x}")
    if len(heaps) < MIN_HEAPS:
        heaps.extend([0] * (MIN_HEAPS - len(heaps)))
    return Position(tuple(heaps))


def remainder(a: int, k: int) -> int:
    """The representative of ``a`` modulo ``k + 1`` in the range [0, k].

    Negative ``a`` is fine: remainder(-1, 2) == 2.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return a % (k + 1)


def max_tie_count(pos: Position) -> int:
    """Number of heaps tied with the largest heap (0 for the empty position).

    This count's parity decides greedy play outright.
    """
    h = pos.heaps
    x1 = h[0]
    if x1 == 0:
        return 0
    i = 1
    n = len(h)
    while i < n and h[i] == x1:
        i += 1
    return i


def third_tie_count(pos: Position) -> int:
    """Number of heaps, from the third onward, tied with the third heap.

    Zero when the third heap is empty.  Because the heaps are sorted, the
    run of the third heap's value that starts at or before slot three always
    covers slot three, so this equals (last 1-based index holding that
    value) - 2.  Its parity drives the bounded-variant rules.
    """
    h = pos.heaps
    x3 = h[2]
    if x3 == 0:
        return 0
    i = 3
    n = len(h)
    while i < n and h[i] == x3:
        i += 1
    return i - 2


def _nice_clause(x1: int, x2: int, k: int) -> int:
    """Which residue clause (1..3) the pair satisfies, or 0 for none.

    Evaluated arithmetically for any non-negative values so the same test
    covers degenerate heaps (x2 = 0) and the stone totals 0 and 1.
    """
    m = k + 1
    if x1 % m == 0 and x2 % m == 1:
        return 1
    if (x1 - x2) % m == 0 and x2 % m >= 2:
        return 2
    if x1 % m == 1 and x2 % m == 0:
        return 3
    return 0


def _good_clause(x1: int, x2: int, x3: int, k: int) -> int:
    """Which residue clause (1..3) the triple satisfies, or 0 for none."""
    m = k + 1
    r12 = (x1 - x2) % m
    r23 = (x2 - x3) % m
    if r12 == k and r23 == 0:
        return 1
    if r12 == 0 and 1 <= r23 <= k - 1:
        return 2
    if r12 == 1 and r23 == k:
        return 3
    return 0


def is_k_nice(x1: int, x2: int, k: int) -> bool:
    """Whether the sorted pair of positive heap sizes is k-nice.

    A k-nice top pair marks the P-positions of misere bounded play when at
    most two heaps are nonzero (and the third-heap tie count is even).
    """
    if k < 2:
        raise ValueError(f"k-nice needs k >= 2, got {k}")
    if x2 < 1:
        raise ValueError("k-nice is defined for positive heap sizes")
    if x1 < x2:
        raise ValueError(f"pair must be sorted non-increasing: ({x1},{x2})")
    return _nice_clause(x1, x2, k) != 0


def is_k_good(x1: int, x2: int, x3: int, k: int) -> bool:
    """Whether the sorted triple of positive heap sizes is k-good.

    A k-good top triple marks the P-positions of bounded play whenever the
    third-heap tie count is odd (normal play, and misere play with x3 >= 2).
    """
    if k < 2:
        raise ValueError(f"k-good needs k >= 2, got {k}")
    if x3 < 1:
        raise ValueError("k-good is defined for positive heap sizes")
    if not (x1 >= x2 >= x3):
        raise ValueError(f"triple must be sorted non-increasing: ({x1},{x2},{x3})")
    return _good_clause(x1, x2, x3, k) != 0


def is_stable_move(pos: Position, t: int) -> bool:
    """True when removing ``t`` stones keeps the largest heap largest.

    Stable moves (x1 - x2 >= t) leave heaps two onward untouched, so every
    tie count below the top is preserved.
    """
    if t < 1:
        raise ValueError(f"removal count must be positive, got {t}")
    return pos.heaps[0] - pos.heaps[1] >= t


@dataclass(frozen=True)
class ClassificationDetail:
    """Outcome plus the arithmetic evidence that produced it.

    ``beta`` and ``alpha`` are the third-heap and max-heap tie counts.
    ``r1`` is (x1 - x2) mod (k + 1), present only for the bounded variant.
    ``k_good`` / ``k_nice`` report the residue predicates when they are
    defined (bounded, k >= 2; k_good additionally needs x3 >= 1).
    ``matched_clause`` names the winning-rule clause that fired, or "none"
    for N-positions.
    """

    outcome: Outcome
    beta: int
    alpha: int
    r1: int | None = None
    k_good: bool | None = None
    k_nice: bool | None = None
    matched_clause: str = "none"


def classify(spec: GameSpec, pos: Position) -> ClassificationDetail:
    """Decide P/N by the closed-form rules; linear in the heap count.

    Bounded, k = 1: every move removes exactly one stone, so only the
    total's parity matters (normal P iff even, misere P iff odd).

    Bounded, k >= 2, normal play: P iff the third-heap tie count is even
    and (x1 - x2) % (k+1) == 0, or that count is odd and the top triple is
    k-good.

    Bounded, k >= 2, misere play: P iff one of
      * x3 <= 1, tie count even, top pair satisfies a k-nice clause,
      * x3 <= 1, tie count odd,  (x1 - x2) % (k+1) == 0,
      * x3 >= 2, tie count even, (x1 - x2) % (k+1) == 0,
      * x3 >= 2, tie count odd,  top triple is k-good.

    Greedy, normal play: P iff the max-heap tie count is even.

    Greedy, misere play: P iff x1 <= 1 and the tie count is odd, or
    x1 >= 2 and the tie count is even.
    """
    h = pos.heaps
    b = third_tie_count(pos)
    a = max_tie_count(pos)

    if spec.variant is Variant.GREEDY:
        if spec.play is Play.NORMAL:
            matched = "alpha-even" if a % 2 == 0 else "none"
        elif h[0] <= 1:
            matched = "x1-le1-alpha-odd" if a % 2 == 1 else "none"
        else:
            matched = "x1-ge2-alpha-even" if a % 2 == 0 else "none"
        outcome = Outcome.P if matched != "none" else Outcome.N
        return ClassificationDetail(outcome, beta=b, alpha=a, matched_clause=matched)

    k = spec.k
    assert k is not None
    x1, x2, x3 = h[0], h[1], h[2]
    r1 = (x1 - x2) % (k + 1)

    if k == 1:
        even_total = pos.total % 2 == 0
        if spec.play is Play.NORMAL:
            matched = "total-even" if even_total else "none"
        else:
            matched = "total-odd" if not even_total else "none"
        outcome = Outcome.P if matched != "none" else Outcome.N
        return ClassificationDetail(outcome, beta=b, alpha=a, r1=r1, matched_clause=matched)

    good = _good_clause(x1, x2, x3, k) if x3 >= 1 else 0
    nice = _nice_clause(x1, x2, k)
    matched = "none"
    if spec.play is Play.NORMAL:
        if b % 2 == 0:
            if r1 == 0:
                matched = "beta-even-r1-zero"
        elif good:
            matched = f"beta-odd-k-good-{good}"
    elif x3 <= 1:
        if b % 2 == 0:
            if nice:
                matched = f"x3-le1-beta-even-k-nice-{nice}"
        elif r1 == 0:
            matched = "x3-le1-beta-odd-r1-zero"
    else:
        if b % 2 == 0:
            if r1 == 0:
                matched = "x3-ge2-beta-even-r1-zero"
        elif good:
            matched = f"x3-ge2-beta-odd-k-good-{good}"
    outcome = Outcome.P if matched != "none" else Outcome.N
    return ClassificationDetail(
        outcome,
        beta=b,
        alpha=a,
        r1=r1,
        k_good=bool(good) if x3 >= 1 else None,
        k_nice=bool(nice),
        matched_clause=matched,
    )


def is_singular(spec: GameSpec, pos: Position) -> bool:
    """Whether the outcome differs between normal and misere play.

    Only the move rule of ``spec`` matters; its play field is ignored.
    For greedy play this is equivalent to x1 <= 1.
    """
    normal = classify(spec.with_play(Play.NORMAL), pos).outcome
    misere = classify(spec.with_play(Play.MISERE), pos).outcome
    return normal is not misere
