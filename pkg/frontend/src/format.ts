import type { ClassifyResponse, GameSpec, Play } from "./types.js";
import type { HistoryEntry, Status } from "./game.js";

export function formatHeaps(heaps: number[]): string {
  return heaps.length === 0 ? "(empty)" : `(${heaps.join(", ")})`;
}

export function gameLabel(spec: GameSpec): string {
  const rule = spec.variant === "bounded" ? `bounded(k=${spec.k})` : "greedy";
  return `${rule} ${spec.play}`;
}

/** One-line reading of the analysis for the player on turn. */
export function outcomeSummary(analysis: ClassifyResponse, play: Play): string {
  if (analysis.normalizedHeaps.length === 0) {
    return play === "misere"
      ? "N: no moves remain, and in misere play the immobile player wins"
      : "P: no moves remain, and the immobile player loses";
  }
  return analysis.outcome === "N"
    ? "N: the player to move can force a win"
    : "P: every move loses against perfect play";
}

/** Final banner text once a game has been decided. */
export function statusBanner(status: Status, play: Play): string {
  if (status === "ongoing") {
    return "";
  }
  const humanWon = status === "humanWins";
  if (play === "misere") {
    // The winner is the player who was left without a move.
    return humanWon
      ? "You win! You cannot move, and in misere play that wins."
      : "The engine wins: it cannot move, and in misere play that wins.";
  }
  return humanWon
    ? "You win! The engine cannot move."
    : "The engine wins: you cannot move.";
}

export function moveLine(entry: HistoryEntry): string {
  const who = entry.mover === "human" ? "you" : "engine";
  return `${who} removed ${entry.removed} -> ${formatHeaps(entry.resulting)}`;
}

export function hintLine(hints: number[]): string {
  if (hints.length === 0) {
    return "no winning move: every removal loses to perfect play";
  }
  return `winning moves: [${hints.join(", ")}]`;
}

function yesNo(flag: boolean): string {
  return flag ? "yes" : "no";
}

/** Label/value rows for the analysis panel, in display order. */
export function analysisRows(analysis: ClassifyResponse): Array<[string, string]> {
  const detail = analysis.detail;
  const rows: Array<[string, string]> = [
    ["outcome", analysis.outcome],
    ["matched clause", detail.matchedClause],
    ["beta (third-heap ties)", String(detail.beta)],
    ["alpha (max-heap ties)", String(detail.alpha)],
  ];
  if (detail.r1 !== null) {
    rows.push(["r1", String(detail.r1)]);
  }
  if (detail.kGood !== null) {
    rows.push(["k-good", yesNo(detail.kGood)]);
  }
  if (detail.kNice !== null) {
    rows.push(["k-nice", yesNo(detail.kNice)]);
  }
  rows.push(["position", analysis.singular ? "singular" : "standard"]);
  return rows;
}
