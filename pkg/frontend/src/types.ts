// Wire types for the engine's JSON service. Field names mirror the
// service payloads exactly; everything here is plain data.

export type Play = "normal" | "misere";
export type Outcome = "P" | "N";

/** Which game is being played. The bounded variant caps removals at k. */
export type GameSpec =
  | { variant: "bounded"; play: Play; k: number }
  | { variant: "greedy"; play: Play; k?: null };

export interface AnalysisDetail {
  beta: number;
  alpha: number;
  r1: number | null;
  kGood: boolean | null;
  kNice: boolean | null;
  matchedClause: string;
}

export interface ClassifyResponse {
  outcome: Outcome;
  normalizedHeaps: number[];
  detail: AnalysisDetail;
  singular: boolean;
  winningMoves: number[];
}

export interface BestMoveResponse {
  remove: number | null;
  resulting: number[] | null;
  resultingOutcome: Outcome | null;
  noMoveReason: "p-position" | "immobile" | null;
}

export interface ErrorBody {
  code: string;
  message: string;
}
