"""Request parsing and response shaping shared by the HTTP service and CLI.

Both surfaces must emit byte-identical JSON schemas, so the payload
builders live here and nowhere else.  Field names are camelCase on the
wire; heap arrays are echoed in canonical form (sorted non-increasing,
trailing zeros dropped).
"""

from __future__ import annotations

from typing import Any

from .core import ClassificationDetail, GameSpec, Play, Position, Variant, classify, is_singular, normalize
from .strategy import apply_move, best_move, winning_moves

VARIANT_VALUES = tuple(v.value for v in Variant)
PLAY_VALUES = tuple(p.value for p in Play)


class RequestError(ValueError):
    """A client error with a stable machine-readable code."""

    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code
        self.message = message

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message}


def parse_spec(body: dict) -> GameSpec:
    """Read variant/play/k out of a request body, or raise RequestError."""
    variant = body.get("variant")
    if variant not in VARIANT_VALUES:
        raise RequestError(
            "invalid_variant", f"variant must be one of {list(VARIANT_VALUES)}, got {variant!r}"
        )
    play = body.get("play")
    if play not in PLAY_VALUES:
        raise RequestError("invalid_play", f"play must be one of {list(PLAY_VALUES)}, got {play!r}")
    k = body.get("k")
    if variant == Variant.GREEDY.value:
        if k is not None:
            raise RequestError("invalid_k", "the greedy variant takes no k")
        return GameSpec.greedy(Play(play))
    if k is None:
        raise RequestError("missing_k", "the bounded variant requires k")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise RequestError("invalid_k", f"k must be an integer >= 1, got {k!r}")
    return GameSpec.bounded(k, Play(play))


def parse_heaps(body: dict) -> Position:
    """Read and normalize the heaps array, or raise RequestError."""
    heaps = body.get("heaps")
    if not isinstance(heaps, list):
        raise RequestError("invalid_heap", "heaps must be an array of non-negative integers")
    for x in heaps:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise RequestError("invalid_heap", f"heap sizes must be non-negative integers, got {x!r}")
    return normalize(heaps)


def parse_request(body: Any) -> tuple[GameSpec, Position]:
    """Validate a classify/bestmove request body."""
    if not isinstance(body, dict):
        raise RequestError("invalid_body", "request body must be a JSON object")
    return parse_spec(body), parse_heaps(body)


def detail_payload(detail: ClassificationDetail) -> dict:
    return {
        "beta": detail.beta,
        "alpha": detail.alpha,
        "r1": detail.r1,
        "kGood": detail.k_good,
        "kNice": detail.k_nice,
        "matchedClause": detail.matched_clause,
    }


def classify_payload(spec: GameSpec, pos: Position) -> dict:
    """The classification document served by POST /api/classify."""
    detail = classify(spec, pos)
    return {
        "outcome": detail.outcome.value,
        "normalizedHeaps": list(pos.canonical()),
        "detail": detail_payload(detail),
        "singular": is_singular(spec, pos),
        "winningMoves": winning_moves(spec, pos),
    }


def bestmove_payload(spec: GameSpec, pos: Position) -> dict:
    """The engine-move document served by POST /api/bestmove.

    The empty position reports "immobile" (there is no move at all, so it
    outranks "p-position" even under normal play where the empty position
    is a P-position).
    """
    if pos.is_empty():
        return {"remove": None, "resulting": None, "resultingOutcome": None, "noMoveReason": "immobile"}
    t = best_move(spec, pos)
    if t is None:
        return {"remove": None, "resulting": None, "resultingOutcome": None, "noMoveReason": "p-position"}
    follower = apply_move(pos, t)
    return {
        "remove": t,
        "resulting": list(follower.canonical()),
        "resultingOutcome": classify(spec, follower).outcome.value,
        "noMoveReason": None,
    }
