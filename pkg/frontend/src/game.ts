import type { Api } from "./api.js";
import type { ClassifyResponse, GameSpec, Play } from "./types.js";

export type Mover = "human" | "engine";
export type Status = "ongoing" | "humanWins" | "engineWins";

export interface HistoryEntry {
  mover: Mover;
  removed: number;
  resulting: number[];
}

/**
 * Full client-side game state. `heaps` is always the server-normalized
 * form echoed by the last analysis; `history` replays from `start` to
 * the current heaps. The human always moves first.
 */
export interface GameState {
  spec: GameSpec;
  start: number[];
  heaps: number[];
  turn: Mover;
  history: HistoryEntry[];
  status: Status;
  analysis: ClassifyResponse;
}

export function other(mover: Mover): Mover {
  return mover === "human" ? "engine" : "human";
}

/** Largest legal removal from the current position, 0 when no move exists. */
export function maxRemoval(spec: GameSpec, heaps: number[]): number {
  if (heaps.length === 0) {
    return 0;
  }
  return spec.variant === "bounded" ? Math.min(heaps[0], spec.k) : heaps[0];
}

export function isLegalMove(spec: GameSpec, heaps: number[], t: number): boolean {
  return Number.isInteger(t) && t >= 1 && t <= maxRemoval(spec, heaps);
}

/**
 * Take `t` stones from the largest heap and renormalize, exactly as the
 * server does: sort descending, drop empty heaps.
 */
export function applyMove(spec: GameSpec, heaps: number[], t: number): number[] {
  if (!isLegalMove(spec, heaps, t)) {
    throw new Error(`illegal move: take between 1 and ${maxRemoval(spec, heaps)} stones`);
  }
  const next = [heaps[0] - t, ...heaps.slice(1)];
  next.sort((a, b) => b - a);
  return next.filter((x) => x > 0);
}

/** Who wins when `immobile` is to move with no move available. */
export function statusForImmobile(play: Play, immobile: Mover): Status {
  const winner = play === "misere" ? immobile : other(immobile);
  return winner === "human" ? "humanWins" : "engineWins";
}

function sameHeaps(a: number[], b: number[]): boolean {
  return a.length === b.length && a.every((x, i) => x === b[i]);
}

/** Apply one move for the player on turn, without touching the analysis. */
function applyStep(state: GameState, t: number): GameState {
  if (state.status !== "ongoing") {
    throw new Error("the game is over");
  }
  const heaps = applyMove(state.spec, state.heaps, t);
  const entry: HistoryEntry = { mover: state.turn, removed: t, resulting: heaps };
  const turn = other(state.turn);
  const status: Status =
    heaps.length === 0 ? statusForImmobile(state.spec.play, turn) : "ongoing";
  return { ...state, heaps, turn, status, history: [...state.history, entry] };
}

/**
 * Re-fetch the analysis for the current heaps and check that the server
 * normalizes the position to exactly what the client computed.
 */
async function refreshAnalysis(state: GameState, api: Api): Promise<GameState> {
  const analysis = await api.classify(state.spec, state.heaps);
  if (!sameHeaps(analysis.normalizedHeaps, state.heaps)) {
    throw new Error(
      `client heaps [${state.heaps}] disagree with server heaps [${analysis.normalizedHeaps}]`
    );
  }
  return { ...state, heaps: analysis.normalizedHeaps, analysis };
}

/**
 * Start a new game from `startingHeaps` with the human to move. The
 * initial analysis comes from the server, which also normalizes the
 * heaps; an empty start resolves immediately by immobility.
 */
export async function configureGame(
  api: Api,
  spec: GameSpec,
  startingHeaps: number[]
): Promise<GameState> {
  const analysis = await api.classify(spec, startingHeaps);
  const heaps = analysis.normalizedHeaps;
  const status: Status =
    heaps.length === 0 ? statusForImmobile(spec.play, "human") : "ongoing";
  return { spec, start: heaps, heaps, turn: "human", history: [], status, analysis };
}

/** Play the human's move; illegal input is rejected before any request. */
export async function humanMove(state: GameState, api: Api, t: number): Promise<GameState> {
  if (state.status !== "ongoing") {
    throw new Error("the game is over");
  }
  if (state.turn !== "human") {
    throw new Error("it is not your turn");
  }
  return refreshAnalysis(applyStep(state, t), api);
}

/**
 * Ask the service for the engine's move and play it. At a P-position the
 * service reports no winning move; every reply loses, so the engine
 * falls back to the minimum legal move and plays on.
 */
export async function engineMove(state: GameState, api: Api): Promise<GameState> {
  if (state.status !== "ongoing") {
    throw new Error("the game is over");
  }
  if (state.turn !== "engine") {
    throw new Error("it is the human's turn");
  }
  const reply = await api.bestMove(state.spec, state.heaps);
  if (reply.noMoveReason === "immobile") {
    return { ...state, status: statusForImmobile(state.spec.play, "engine") };
  }
  const t = reply.remove ?? 1;
  return refreshAnalysis(applyStep(state, t), api);
}

/** Winning removals for the player on turn, empty when none exist. */
export function currentHints(state: GameState): number[] {
  return state.analysis.winningMoves;
}

// Sessions: enough to rebuild a game after a page refresh. Movers are
// not stored because the human always starts and turns alternate.
export interface SessionRecord {
  spec: GameSpec;
  start: number[];
  removed: number[];
}

export function sessionRecord(state: GameState): SessionRecord {
  return {
    spec: state.spec,
    start: state.start,
    removed: state.history.map((entry) => entry.removed),
  };
}

export function encodeSession(state: GameState): string {
  return encodeURIComponent(JSON.stringify(sessionRecord(state)));
}

function isHeapArray(value: unknown): value is number[] {
  return Array.isArray(value) && value.every((x) => Number.isInteger(x) && x >= 0);
}

function isSpec(value: unknown): value is GameSpec {
  if (typeof value !== "object" || value === null) {
    return false;
  }
  const spec = value as Record<string, unknown>;
  if (spec.play !== "normal" && spec.play !== "misere") {
    return false;
  }
  if (spec.variant === "greedy") {
    return spec.k === undefined || spec.k === null;
  }
  return spec.variant === "bounded" && Number.isInteger(spec.k) && (spec.k as number) >= 1;
}

export function decodeSession(text: string): SessionRecord | null {
  let parsed: unknown;
  try {
    parsed = JSON.parse(decodeURIComponent(text));
  } catch {
    return null;
  }
  if (typeof parsed !== "object" || parsed === null) {
    return null;
  }
  const record = parsed as Record<string, unknown>;
  if (!isSpec(record.spec) || !isHeapArray(record.start)) {
    return null;
  }
  const removed = record.removed;
  if (!Array.isArray(removed) || !removed.every((t) => Number.isInteger(t) && t >= 1)) {
    return null;
  }
  return { spec: record.spec, start: record.start, removed };
}

/**
 * Rebuild a game from a stored session: configure, replay every recorded
 * move locally, then fetch a single fresh analysis for the final heaps.
 */
export async function replaySession(api: Api, record: SessionRecord): Promise<GameState> {
  let state = await configureGame(api, record.spec, record.start);
  for (const t of record.removed) {
    state = applyStep(state, t);
  }
  if (state.history.length === 0) {
    return state;
  }
  return refreshAnalysis(state, api);
}
