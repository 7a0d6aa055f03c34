"""Perfect-play engine and verification workbench for Greedy Nim variants."""

from .core import (
    ClassificationDetail,
    GameSpec,
    Outcome,
    Play,
    Position,
    Variant,
    classify,
    is_k_good,
    is_k_nice,
    is_singular,
    is_stable_move,
    max_tie_count,
    normalize,
    remainder,
    third_tie_count,
)
from .oracle import (
    LawReport,
    LawViolation,
    MemoTable,
    Mismatch,
    StrategyViolation,
    SweepBounds,
    SweepReport,
    check_base_cases,
    check_reduction,
    check_singularity,
    check_stable_moves,
    enumerate_positions,
    grundy_value,
    oracle_outcome,
    run_law_checks,
    sweep,
)
from .strategy import (
    StrategyReport,
    apply_move,
    best_move,
    constructive_move,
    legal_moves,
    strategy_report,
    winning_moves,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationDetail",
    "GameSpec",
    "LawReport",
    "LawViolation",
    "MemoTable",
    "Mismatch",
    "Outcome",
    "Play",
    "Position",
    "StrategyReport",
    "StrategyViolation",
    "SweepBounds",
    "SweepReport",
    "Variant",
    "apply_move",
    "best_move",
    "check_base_cases",
    "check_reduction",
    "check_singularity",
    "check_stable_moves",
    "classify",
    "constructive_move",
    "enumerate_positions",
    "grundy_value",
    "is_k_good",
    "is_k_nice",
    "is_singular",
    "is_stable_move",
    "legal_moves",
    "max_tie_count",
    "normalize",
    "oracle_outcome",
    "remainder",
    "run_law_checks",
    "strategy_report",
    "sweep",
    "third_tie_count",
    "winning_moves",
    "__version__",
]
