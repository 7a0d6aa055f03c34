import { ApiError, createApi } from "./api.js";
import {
  configureGame,
  currentHints,
  decodeSession,
  encodeSession,
  engineMove,
  humanMove,
  maxRemoval,
  replaySession,
  type GameState,
} from "./game.js";
import {
  analysisRows,
  formatHeaps,
  gameLabel,
  hintLine,
  moveLine,
  outcomeSummary,
  statusBanner,
} from "./format.js";
import type { GameSpec, Play } from "./types.js";

// The page is normally served by the engine itself (serve --static), so
// the API lives on the same origin. ?api=http://host:port overrides that
// when the page is hosted elsewhere during development.
const apiBase = new URLSearchParams(window.location.search).get("api") ?? "";
const api = createApi(apiBase);

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
}

const configSection = byId<HTMLElement>("config");
const configForm = byId<HTMLFormElement>("config-form");
const variantSelect = byId<HTMLSelectElement>("variant");
const kField = byId<HTMLLabelElement>("k-field");
const kInput = byId<HTMLInputElement>("k");
const playSelect = byId<HTMLSelectElement>("play");
const heapsInput = byId<HTMLInputElement>("heaps-input");
const startButton = byId<HTMLButtonElement>("start");
const configError = byId<HTMLParagraphElement>("config-error");
const resumeBar = byId<HTMLParagraphElement>("resume-bar");
const resumeButton = byId<HTMLButtonElement>("resume");

const gameSection = byId<HTMLElement>("game");
const gameLabelSpan = byId<HTMLSpanElement>("game-label");
const heapsView = byId<HTMLDivElement>("heaps-view");
const turnLine = byId<HTMLParagraphElement>("turn-line");
const banner = byId<HTMLDivElement>("banner");
const moveForm = byId<HTMLFormElement>("move-form");
const takeInput = byId<HTMLInputElement>("take");
const moveButton = byId<HTMLButtonElement>("move");
const newGameButton = byId<HTMLButtonElement>("new-game");
const moveError = byId<HTMLParagraphElement>("move-error");
const engineError = byId<HTMLParagraphElement>("engine-error");
const engineErrorText = byId<HTMLSpanElement>("engine-error-text");
const retryButton = byId<HTMLButtonElement>("retry");

const analysisSection = byId<HTMLElement>("analysis");
const badge = byId<HTMLSpanElement>("badge");
const outcomeLine = byId<HTMLParagraphElement>("outcome-line");
const hintToggle = byId<HTMLInputElement>("hint-toggle");
const hintLineEl = byId<HTMLParagraphElement>("hint-line");
const analysisBody = byId<HTMLTableSectionElement>("analysis-rows");

const logSection = byId<HTMLElement>("log");
const historyList = byId<HTMLOListElement>("history");

let state: GameState | null = null;
let busy = false;
let engineFailed = false;

function specFromForm(): GameSpec {
  const play = playSelect.value as Play;
  if (variantSelect.value === "greedy") {
    return { variant: "greedy", play };
  }
  return { variant: "bounded", play, k: Number(kInput.value) };
}

function parseHeapsText(text: string): number[] {
  const parts = text.split(",").map((part) => part.trim()).filter((part) => part !== "");
  return parts.map((part) => {
    const n = Number(part);
    if (!Number.isInteger(n) || n < 0) {
      throw new Error(`heap sizes must be non-negative integers, got "${part}"`);
    }
    return n;
  });
}

function errorText(err: unknown): string {
  if (err instanceof ApiError || err instanceof Error) {
    return err.message;
  }
  return String(err);
}

function renderHeaps(heaps: number[]): void {
  heapsView.textContent = "";
  if (heaps.length === 0) {
    const line = document.createElement("p");
    line.className = "notice";
    line.textContent = "no stones remain";
    heapsView.appendChild(line);
    return;
  }
  const drawStones = heaps.length <= 12 && heaps[0] <= 30;
  for (const size of heaps) {
    const row = document.createElement("div");
    row.className = "heap";
    const count = document.createElement("span");
    count.className = "count";
    count.textContent = String(size);
    row.appendChild(count);
    if (drawStones) {
      const stones = document.createElement("span");
      stones.className = "stones";
      stones.textContent = "●".repeat(size);
      row.appendChild(stones);
    }
    heapsView.appendChild(row);
  }
}

function render(): void {
  startButton.disabled = busy;
  kField.classList.toggle("hidden", variantSelect.value === "greedy");

  if (!state) {
    gameSection.classList.add("hidden");
    analysisSection.classList.add("hidden");
    logSection.classList.add("hidden");
    return;
  }

  gameSection.classList.remove("hidden");
  analysisSection.classList.remove("hidden");
  logSection.classList.remove("hidden");

  gameLabelSpan.textContent = ` ${gameLabel(state.spec)}`;
  renderHeaps(state.heaps);

  const over = state.status !== "ongoing";
  if (over) {
    turnLine.textContent = `final position: ${formatHeaps(state.heaps)}`;
    banner.textContent = statusBanner(state.status, state.spec.play);
    banner.className = state.status === "humanWins" ? "win" : "loss";
  } else {
    turnLine.textContent =
      state.turn === "human" ? "your move" : "engine to move";
    banner.className = "";
    banner.textContent = "";
  }

  const humanTurn = !over && state.turn === "human";
  takeInput.disabled = busy || !humanTurn;
  moveButton.disabled = busy || !humanTurn;
  takeInput.max = String(maxRemoval(state.spec, state.heaps));
  newGameButton.disabled = busy;
  retryButton.disabled = busy;
  engineError.classList.toggle("hidden", !engineFailed);

  badge.textContent = state.analysis.singular ? "singular" : "standard";
  badge.className = state.analysis.singular ? "badge singular" : "badge";
  outcomeLine.textContent = outcomeSummary(state.analysis, state.spec.play);
  const showHints = hintToggle.checked && humanTurn;
  hintLineEl.textContent = showHints ? `hint: ${hintLine(currentHints(state))}` : "";

  analysisBody.textContent = "";
  for (const [label, value] of analysisRows(state.analysis)) {
    const row = document.createElement("tr");
    const labelCell = document.createElement("td");
    labelCell.className = "label";
    labelCell.textContent = label;
    const valueCell = document.createElement("td");
    valueCell.textContent = value;
    row.appendChild(labelCell);
    row.appendChild(valueCell);
    analysisBody.appendChild(row);
  }

  historyList.textContent = "";
  for (const entry of state.history) {
    const item = document.createElement("li");
    item.textContent = moveLine(entry);
    historyList.appendChild(item);
  }
}

function storeSession(): void {
  if (state) {
    window.history.replaceState(null, "", `#${encodeSession(state)}`);
  } else {
    window.history.replaceState(null, "", window.location.pathname + window.location.search);
  }
}

/** Run one user action with every control locked until it settles. */
async function guarded(action: () => Promise<void>): Promise<void> {
  if (busy) {
    return;
  }
  busy = true;
  render();
  try {
    await action();
  } finally {
    busy = false;
    render();
  }
}

async function runEngineTurn(): Promise<void> {
  if (!state || state.status !== "ongoing" || state.turn !== "engine") {
    return;
  }
  try {
    state = await engineMove(state, api);
    engineFailed = false;
    storeSession();
  } catch (err) {
    engineFailed = true;
    engineErrorText.textContent = `engine move failed: ${errorText(err)}`;
  }
}

configForm.addEventListener("submit", (event) => {
  event.preventDefault();
  void guarded(async () => {
    configError.textContent = "";
    let heaps: number[];
    try {
      heaps = parseHeapsText(heapsInput.value);
    } catch (err) {
      configError.textContent = errorText(err);
      return;
    }
    try {
      state = await configureGame(api, specFromForm(), heaps);
      engineFailed = false;
      moveError.textContent = "";
      storeSession();
      resumeBar.classList.add("hidden");
      configSection.classList.add("hidden");
    } catch (err) {
      configError.textContent = errorText(err);
    }
  });
});

variantSelect.addEventListener("change", () => {
  render();
});

moveForm.addEventListener("submit", (event) => {
  event.preventDefault();
  void guarded(async () => {
    if (!state) {
      return;
    }
    moveError.textContent = "";
    const t = Number(takeInput.value);
    try {
      state = await humanMove(state, api, t);
      storeSession();
    } catch (err) {
      moveError.textContent = errorText(err);
      return;
    }
    render();
    await runEngineTurn();
  });
});

retryButton.addEventListener("click", () => {
  void guarded(runEngineTurn);
});

newGameButton.addEventListener("click", () => {
  state = null;
  engineFailed = false;
  storeSession();
  configSection.classList.remove("hidden");
  render();
});

hintToggle.addEventListener("change", () => {
  render();
});

resumeButton.addEventListener("click", () => {
  const record = decodeSession(window.location.hash.slice(1));
  if (!record) {
    return;
  }
  void guarded(async () => {
    try {
      state = await replaySession(api, record);
      engineFailed = false;
      resumeBar.classList.add("hidden");
      configSection.classList.add("hidden");
      storeSession();
    } catch (err) {
      configError.textContent = `cannot resume the stored game: ${errorText(err)}`;
    }
  });
});

if (decodeSession(window.location.hash.slice(1))) {
  resumeBar.classList.remove("hidden");
}
render();
