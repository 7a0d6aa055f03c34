import type { BestMoveResponse, ClassifyResponse, GameSpec } from "./types.js";

/** Error raised for any failed service call, carrying the server's code. */
export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.name = "ApiError";
    this.code = code;
    this.status = status;
  }
}

export interface Api {
  classify(spec: GameSpec, heaps: number[]): Promise<ClassifyResponse>;
  bestMove(spec: GameSpec, heaps: number[]): Promise<BestMoveResponse>;
}

/** Build a request body. The greedy variant must not carry a k field. */
export function requestBody(spec: GameSpec, heaps: number[]): Record<string, unknown> {
  const body: Record<string, unknown> = {
    variant: spec.variant,
    play: spec.play,
    heaps,
  };
  if (spec.variant === "bounded") {
    body.k = spec.k;
  }
  return body;
}

/**
 * Fetch-based client for the engine service. `baseUrl` is prepended to
 * every path; the empty string means same-origin.
 */
export function createApi(baseUrl = ""): Api {
  async function post<T>(path: string, body: unknown): Promise<T> {
    let response: Response;
    try {
      response = await fetch(baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      const reason = err instanceof Error ? err.message : String(err);
      throw new ApiError("network", `cannot reach the engine service: ${reason}`, 0);
    }
    const payload = await response.json().catch(() => null);
    if (!response.ok) {
      if (payload && typeof payload.code === "string" && typeof payload.message === "string") {
        throw new ApiError(payload.code, payload.message, response.status);
      }
      throw new ApiError(`http_${response.status}`, `request failed with status ${response.status}`, response.status);
    }
    return payload as T;
  }

  return {
    classify: (spec, heaps) => post<ClassifyResponse>("/api/classify", requestBody(spec, heaps)),
    bestMove: (spec, heaps) => post<BestMoveResponse>("/api/bestmove", requestBody(spec, heaps)),
  };
}
