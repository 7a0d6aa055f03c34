"""Command-line entry point.

Subcommands:

* ``classify`` -- closed-form outcome plus evidence for one position.
* ``play``     -- terminal loop, human vs engine.
* ``verify``   -- exhaustive closed-form-vs-oracle sweep, optional
  strategy/law/performance checks; exit 0 iff everything agrees.
* ``table``    -- list every P-position inside bounds.
* ``serve``    -- host the JSON service.

Exit codes: 0 success, 1 verification failure or bind failure, 2 bad
arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import socket
import sys
import time

from .core import GameSpec, Outcome, Play, Position, Variant, classify, normalize
from .oracle import SweepBounds, run_law_checks, sweep
from .strategy import apply_move, best_move, legal_moves, winning_moves
from .wire import classify_payload

DEFAULT_PORT_ENV = "GREEDYNIM_PORT"
PERF_BUDGET_SECONDS = 10.0


class CliError(Exception):
    """Bad arguments detected after argparse; maps to exit code 2."""


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def parse_k_values(text: str) -> tuple[int, ...]:
    """Parse a k list: comma-separated values and a..b spans, e.g. "1,3..5"."""
    values: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo_text, _, hi_text = part.partition("..")
            try:
                lo, hi = int(lo_text), int(hi_text)
            except ValueError:
                raise CliError(f"bad k span: {part!r}") from None
            if hi < lo:
                raise CliError(f"empty k span: {part!r}")
            values.update(range(lo, hi + 1))
        else:
            try:
                values.add(int(part))
            except ValueError:
                raise CliError(f"bad k value: {part!r}") from None
    if not values:
        raise CliError(f"no k values in {text!r}")
    if min(values) < 1:
        raise CliError("k values must be >= 1")
    return tuple(sorted(values))


def _spec_from_args(args: argparse.Namespace) -> GameSpec:
    variant = Variant(args.variant)
    play = Play(args.play)
    if variant is Variant.BOUNDED:
        if args.k is None:
            raise CliError("the bounded variant requires --k")
        if args.k < 1:
            raise CliError(f"--k must be >= 1, got {args.k}")
        return GameSpec.bounded(args.k, play)
    if args.k is not None:
        raise CliError("the greedy variant takes no --k")
    return GameSpec.greedy(play)


def _show(pos: Position) -> str:
    return "(" + ",".join(str(x) for x in pos.canonical()) + ")"


def _add_spec_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--variant", required=True, choices=[v.value for v in Variant])
    parser.add_argument("--play", required=True, choices=[p.value for p in Play])
    parser.add_argument("--k", type=int, default=None, help="removal cap (bounded variant only)")


# ---------------------------------------------------------------- classify


def run_classify(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    pos = normalize(args.heaps)
    payload = classify_payload(spec, pos)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
        return 0
    detail = payload["detail"]
    lines = [
        f"position: {_show(pos)}",
        f"game: {spec.label()}",
        f"outcome: {payload['outcome']}",
        f"matched clause: {detail['matchedClause']}",
        f"beta: {detail['beta']}",
        f"alpha: {detail['alpha']}",
    ]
    if detail["r1"] is not None:
        lines.append(f"r1: {detail['r1']}")
    if spec.variant is Variant.BOUNDED and spec.k is not None and spec.k >= 2:
        lines.append(f"k-good: {_flag(detail['kGood'])}")
        lines.append(f"k-nice: {_flag(detail['kNice'])}")
    lines.append(f"singular: {'yes' if payload['singular'] else 'no'}")
    lines.append(f"winning moves: {payload['winningMoves']}")
    print("\n".join(lines))
    return 0


def _flag(value: bool | None) -> str:
    if value is None:
        return "n/a"
    return "yes" if value else "no"


# -------------------------------------------------------------------- play


def run_play(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    pos = normalize(args.heaps)
    engine_turn = args.engine_first
    print(f"playing {spec.label()} from {_show(pos)}")
    while True:
        if pos.is_empty():
            mover = "engine" if engine_turn else "you"
            other = "you" if engine_turn else "engine"
            mover_wins = spec.play is Play.MISERE
            print(f"{mover} cannot move.")
            print(f"winner: {mover if mover_wins else other}")
            return 0
        if engine_turn:
            t = best_move(spec, pos)
            if t is None:
                t = min(legal_moves(spec, pos))
            pos = apply_move(pos, t)
            print(f"engine removes {t} -> {_show(pos)}")
        else:
            cap = max(legal_moves(spec, pos))
            try:
                raw = input(f"your move (1..{cap}, or hint)> ").strip()
            except EOFError:
                print("\ninput closed, game abandoned")
                return 0
            if raw in ("quit", "q"):
                print("game abandoned")
                return 0
            if raw == "hint":
                moves = winning_moves(spec, pos)
                if moves:
                    print(f"hint: winning moves {moves}")
                else:
                    print("hint: no winning move; every move loses to perfect play")
                continue
            try:
                t = int(raw)
            except ValueError:
                print(f"illegal move: {raw!r} is not a number")
                continue
            if not 1 <= t <= cap:
                print(f"illegal move: remove between 1 and {cap} stones")
                continue
            pos = apply_move(pos, t)
            print(f"you remove {t} -> {_show(pos)}")
        engine_turn = not engine_turn


# ------------------------------------------------------------------ verify


def run_perf_probe(
    positions: int = 1_000_000,
    heaps_per: int = 100,
    max_size: int = 10**9,
    budget_seconds: float = PERF_BUDGET_SECONDS,
    seed: int = 20260816,
    spec: GameSpec | None = None,
) -> dict:
    """Time the closed form over random wide, tall positions.

    Only the classify calls are timed; building the random positions is
    setup (numpy generates them quickly when available, plain ``random``
    otherwise).  The point is that classification cost depends on the heap
    count alone, never on stone counts, so a million positions with heaps
    up to a billion stones still classify in seconds.
    """
    if spec is None:
        spec = GameSpec.bounded(7, Play.MISERE)
    try:
        import numpy as np
    except ImportError:
        np = None
    rng = np.random.default_rng(seed) if np is not None else None
    rnd = random.Random(seed)

    chunk = 20_000
    remaining = positions
    elapsed = 0.0
    p_count = 0
    while remaining > 0:
        n = min(chunk, remaining)
        remaining -= n
        if rng is not None:
            arr = rng.integers(1, max_size + 1, size=(n, heaps_per), dtype=np.int64)
            arr.sort(axis=1)
            rows = arr[:, ::-1].tolist()
        else:
            rows = [
                sorted((rnd.randint(1, max_size) for _ in range(heaps_per)), reverse=True)
                for _ in range(n)
            ]
        batch = [Position(tuple(row)) for row in rows]
        start = time.perf_counter()
        for pos in batch:
            if classify(spec, pos).outcome is Outcome.P:
                p_count += 1
        elapsed += time.perf_counter() - start
    return {
        "positions": positions,
        "heapsPerPosition": heaps_per,
        "maxHeapSize": max_size,
        "game": spec.label(),
        "pPositions": p_count,
        "elapsedSeconds": round(elapsed, 3),
        "positionsPerSecond": int(positions / elapsed) if elapsed > 0 else positions,
        "budgetSeconds": budget_seconds,
        "ok": elapsed < budget_seconds,
    }


def run_verify(args: argparse.Namespace) -> int:
    k_values = parse_k_values(args.k)
    variant_map = {
        "bounded": (Variant.BOUNDED,),
        "greedy": (Variant.GREEDY,),
        "both": (Variant.BOUNDED, Variant.GREEDY),
    }
    play_map = {
        "normal": (Play.NORMAL,),
        "misere": (Play.MISERE,),
        "both": (Play.NORMAL, Play.MISERE),
    }
    try:
        bounds = SweepBounds(
            max_heaps=args.max_heaps,
            max_heap_size=args.max_size,
            k_values=k_values,
            variants=variant_map[args.variants],
            plays=play_map[args.plays],
        )
    except ValueError as err:
        raise CliError(str(err)) from None

    report = sweep(bounds, strategy_checks=args.strategy, workers=args.workers)
    laws = run_law_checks(bounds) if args.laws else None
    perf = run_perf_probe() if args.perf else None
    ok = report.ok and (laws is None or laws.ok) and (perf is None or perf["ok"])

    doc = {
        "sweep": report.to_dict(),
        "laws": laws.to_dict() if laws is not None else None,
        "perf": perf,
        "ok": ok,
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(report.to_text())
        if laws is not None:
            print(laws.to_text())
        if perf is not None:
            print(
                f"perf: classified {perf['positions']} positions "
                f"({perf['heapsPerPosition']} heaps, sizes <= {perf['maxHeapSize']}) "
                f"in {perf['elapsedSeconds']}s "
                f"({perf['positionsPerSecond']}/s, budget {perf['budgetSeconds']}s): "
                f"{'OK' if perf['ok'] else 'FAILED'}"
            )
        print(f"verify: {'OK' if ok else 'FAILED'}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    return 0 if ok else 1


# ------------------------------------------------------------------- table


def run_table(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    try:
        bounds = SweepBounds(
            max_heaps=args.max_heaps,
            max_heap_size=args.max_size,
            k_values=(spec.k,) if spec.k is not None else (),
            variants=(spec.variant,),
            plays=(spec.play,),
        )
    except ValueError as err:
        raise CliError(str(err)) from None

    from .oracle import enumerate_positions

    rows = sorted(
        pos.canonical()
        for pos in enumerate_positions(bounds)
        if classify(spec, pos).outcome is Outcome.P
    )
    if args.format == "json":
        doc = {
            "variant": spec.variant.value,
            "k": spec.k,
            "play": spec.play.value,
            "maxHeaps": args.max_heaps,
            "maxSize": args.max_size,
            "positions": [list(row) for row in rows],
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(
        f"# P-positions: {spec.label()}, max heaps {args.max_heaps}, max size {args.max_size}"
    )
    for row in rows:
        stones = " ".join(str(x) for x in row) if row else "0"
        print(f"{stones} : P")
    return 0


# ------------------------------------------------------------------- serve


def run_serve(args: argparse.Namespace) -> int:
    port = args.port
    if port is None:
        try:
            port = int(os.environ.get(DEFAULT_PORT_ENV, "8000"))
        except ValueError:
            raise CliError(f"bad {DEFAULT_PORT_ENV} value") from None
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.host, port))
    except OSError as err:
        print(f"cannot bind {args.host}:{port}: {err}", file=sys.stderr)
        return 1
    finally:
        probe.close()

    from .service import create_app

    try:
        app = create_app(
            static_dir=args.static, cors_origins=tuple(args.cors.split(","))
        )
    except ValueError as err:
        raise CliError(str(err)) from None
    import uvicorn

    uvicorn.run(app, host=args.host, port=port, log_level="info")
    return 0


# -------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greedynim",
        description="Perfect-play engine and verifier for bounded and greedy max-heap Nim.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="closed-form outcome for one position")
    _add_spec_arguments(p)
    p.add_argument("heaps", nargs="*", type=_nonneg_int, help="heap sizes, any order")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=run_classify)

    p = sub.add_parser("play", help="play against the engine in the terminal")
    _add_spec_arguments(p)
    p.add_argument("heaps", nargs="*", type=_nonneg_int, help="starting heaps")
    p.add_argument("--engine-first", action="store_true", help="engine moves first")
    p.set_defaults(func=run_play)

    p = sub.add_parser("verify", help="closed form vs brute-force oracle over all positions in bounds")
    p.add_argument("--max-heaps", type=_nonneg_int, default=5)
    p.add_argument("--max-size", type=_nonneg_int, default=12)
    p.add_argument("--k", default="1,2,3,4", help='k list, e.g. "1,2,3" or "2..4"')
    p.add_argument("--variants", choices=["bounded", "greedy", "both"], default="both")
    p.add_argument("--plays", choices=["normal", "misere", "both"], default="both")
    p.add_argument("--strategy", action="store_true", help="also check the constructive move")
    p.add_argument("--laws", action="store_true", help="also check structural laws")
    p.add_argument("--perf", action="store_true", help="also time the closed form at scale")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.set_defaults(func=run_verify)

    p = sub.add_parser("table", help="list all P-positions inside bounds")
    _add_spec_arguments(p)
    p.add_argument("--max-heaps", type=_nonneg_int, default=3)
    p.add_argument("--max-size", type=_nonneg_int, default=10)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=run_table)

    p = sub.add_parser("serve", help="host the JSON service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=_nonneg_int, default=None, help=f"default ${DEFAULT_PORT_ENV} or 8000")
    p.add_argument("--static", default=None, help="also serve this directory at the web root")
    p.add_argument("--cors", default="*", help="comma-separated allowed CORS origins")
    p.set_defaults(func=run_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        print("", file=sys.stderr)
        return 130
