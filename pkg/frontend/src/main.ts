/** DOM wiring for the playground: host panel, live play, solver explorer. */

import { ApiClient, ApiError } from "./api.js";
import { drawWinRateChart } from "./chart.js";
import { heatColor, traceStates, type TraceState } from "./explorer.js";
import { RoundFlow, type UiSessionState } from "./flow.js";
import { degenerateWarning, hostConfigFromSliders, isCrawl } from "./hostPanel.js";
import { adviceView, nashSummary, previewView, zeroSumSummary } from "./render.js";
import type { HostConfig, MatrixDoc } from "./types.js";

const client = new ApiClient("");
const flow = new RoundFlow(client);

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

// ---------------------------------------------------------------------------
// Host configuration panel

let currentHost: HostConfig = {
  pi: ["1/3", "1/3", "1/3"],
  lambda: ["1/2", "1/2", "1/2"],
};

function readSliders(): { pi: number[]; lambda: number[] } {
  const pi = [1, 2, 3].map((d) => Number(($(`pi-${d}`) as HTMLInputElement).value));
  const lambda = [1, 2, 3].map((d) => Number(($(`lam-${d}`) as HTMLInputElement).value));
  return { pi, lambda };
}

async function refreshPreview(): Promise<void> {
  const { pi, lambda } = readSliders();
  const config = hostConfigFromSliders(pi, lambda);
  currentHost = config;
  [1, 2, 3].forEach((d, i) => {
    $(`pi-label-${d}`).textContent = config.pi[i] ?? "";
    $(`lam-label-${d}`).textContent = config.lambda[i] ?? "";
  });
  const warning = degenerateWarning(config.pi);
  $("host-warning").textContent = warning ?? "";
  try {
    const bayes = await client.solveBayes(config);
    const view = previewView(
      bayes.value.exact,
      bayes.value.decimal,
      bayes.bestPicks,
      config.lambda,
    );
    $("preview").textContent =
      `${view.hostLabel}: best pick ${view.bestPicks}, ` +
      `value ${view.valueExact} (${view.valuePercent})`;
  } catch (error) {
    $("preview").textContent =
      error instanceof ApiError ? `${error.code}: ${error.message}` : String(error);
  }
}

async function startSession(): Promise<void> {
  await flow.startSession(currentHost);
  $("play-area").classList.remove("hidden");
  $("result").textContent = "";
}

// ---------------------------------------------------------------------------
// Play area

function describeDoor(door: number | null): string {
  return door === null ? "-" : `door ${door}`;
}

function renderPlay(state: UiSessionState): void {
  $("phase").textContent = state.phase;
  $("round").textContent = String(state.round);
  for (const door of [1, 2, 3]) {
    const button = $(`door-${door}`) as HTMLButtonElement;
    button.disabled =
      state.busy || !(state.phase === "awaiting-pick" || state.phase === "done");
    button.classList.toggle("picked", state.pick === door);
    button.classList.toggle(
      "revealed",
      state.phase === "awaiting-final" && state.revealed === door,
    );
    button.classList.toggle(
      "offered",
      state.phase === "awaiting-final" && state.offered === door,
    );
  }
  const inFinal = state.phase === "awaiting-final" && !state.busy;
  ($("hold") as HTMLButtonElement).disabled = !inFinal;
  ($("switch") as HTMLButtonElement).disabled = !inFinal;
  $("offer-line").textContent =
    state.phase === "awaiting-final"
      ? `you picked ${describeDoor(state.pick)}; ${describeDoor(state.revealed)} is empty; ` +
        `switch to ${describeDoor(state.offered)}?`
      : "";
  if (state.lastResult && state.phase === "done") {
    const r = state.lastResult;
    $("result").textContent = r.win
      ? `round won! the prize was behind door ${r.theta}`
      : `round lost; the prize was behind door ${r.theta}`;
  }
  $("notice").textContent = state.notice ?? "";
  $("score").textContent =
    state.rounds > 0
      ? `${state.wins}/${state.rounds} rounds won (${((100 * state.wins) / state.rounds).toFixed(1)}%)`
      : "no rounds yet";

  const adviceToggle = $("advice-toggle") as HTMLInputElement;
  $("advice-toggle-row").classList.toggle("hidden", !state.adviceAvailable);
  adviceToggle.checked = state.adviceEnabled;
  const panel = $("advice-panel");
  if (state.advice) {
    const view = adviceView(state.advice);
    panel.classList.remove("hidden");
    $("advice-posterior").textContent = view.posteriorExact;
    $("advice-posterior-percent").textContent = view.posteriorPercent;
    $("advice-recommendation").textContent = view.recommendation;
    $("advice-value").textContent = view.valueExact;
    $("advice-picks").textContent = view.bestPicks;
  } else {
    panel.classList.add("hidden");
  }

  const references = [
    { label: "2/3 safety level", value: 2 / 3, color: "#888888" },
  ];
  drawWinRateChart(
    $("chart") as HTMLCanvasElement,
    state.rateHistory,
    references,
  );
}

// ---------------------------------------------------------------------------
// Solver explorer

function renderMatrixTable(doc: MatrixDoc, target: HTMLElement): void {
  const table = document.createElement("table");
  table.className = "matrix";
  const head = table.insertRow();
  head.insertCell().textContent = "";
  for (const col of doc.cols) {
    const cell = head.insertCell();
    cell.textContent = col;
    cell.className = "head";
  }
  doc.rows.forEach((rowLabel, i) => {
    const row = table.insertRow();
    const label = row.insertCell();
    label.textContent = rowLabel;
    label.className = "head";
    (doc.entries[i] ?? []).forEach((value) => {
      const cell = row.insertCell();
      cell.textContent = String(value);
      cell.style.background = heatColor(value);
    });
  });
  target.replaceChildren(table);
}

let trace: TraceState[] = [];
let traceIndex = 0;

function renderTraceStep(): void {
  const state = trace[traceIndex];
  if (!state) return;
  $("trace-note").textContent = `step ${traceIndex}/${trace.length - 1}: ${state.note}`;
  renderMatrixTable(state.matrix, $("trace-table"));
  ($("trace-prev") as HTMLButtonElement).disabled = traceIndex === 0;
  ($("trace-next") as HTMLButtonElement).disabled = traceIndex === trace.length - 1;
}

async function loadExplorer(): Promise<void> {
  const matrix = await client.matrix();
  renderMatrixTable(matrix, $("matrix-table"));
  const reduced = await client.matrixReduced();
  trace = traceStates(matrix, reduced.steps);
  traceIndex = 0;
  renderTraceStep();
  const zerosum = await client.solveZerosum();
  $("zerosum-card").replaceChildren(
    ...zeroSumSummary(zerosum).map((line) => {
      const p = document.createElement("p");
      p.textContent = line;
      return p;
    }),
  );
}

async function runNash(): Promise<void> {
  const textarea = $("nash-input") as HTMLTextAreaElement;
  const errorBox = $("nash-error");
  errorBox.textContent = "";
  let body: Record<string, unknown>;
  const choice = ($("nash-builtin") as HTMLSelectElement).value;
  if (choice !== "custom") {
    body = { builtin: choice };
  } else {
    try {
      body = JSON.parse(textarea.value) as Record<string, unknown>;
    } catch (error) {
      errorBox.textContent = `not valid JSON: ${(error as Error).message}`;
      return;
    }
  }
  body.fullySupportedOnly = ($("nash-families-only") as HTMLInputElement).checked;
  try {
    const doc = await client.solveNash(body);
    $("nash-output").replaceChildren(
      ...nashSummary(doc).map((line) => {
        const p = document.createElement("p");
        p.textContent = line;
        return p;
      }),
    );
  } catch (error) {
    errorBox.textContent =
      error instanceof ApiError ? `${error.code}: ${error.message}` : String(error);
  }
}

function selectTab(name: string): void {
  for (const tab of ["play", "matrix", "dominance", "zerosum", "nash"]) {
    $(`tab-${tab}`).classList.toggle("active", tab === name);
    $(`panel-${tab}`).classList.toggle("hidden", tab !== name);
  }
}

// ---------------------------------------------------------------------------
// Wiring

function init(): void {
  flow.subscribe(renderPlay);
  for (const door of [1, 2, 3]) {
    $(`door-${door}`).addEventListener("click", () => void flow.pickDoor(door));
  }
  $("hold").addEventListener("click", () => void flow.decide("hold"));
  $("switch").addEventListener("click", () => void flow.decide("switch"));
  $("advice-toggle").addEventListener("change", () => flow.toggleAdvice());
  $("start").addEventListener("click", () => void startSession());
  for (const slider of document.querySelectorAll("input[type=range]")) {
    slider.addEventListener("input", () => void refreshPreview());
  }
  $("nash-run").addEventListener("click", () => void runNash());
  $("trace-prev").addEventListener("click", () => {
    traceIndex = Math.max(0, traceIndex - 1);
    renderTraceStep();
  });
  $("trace-next").addEventListener("click", () => {
    traceIndex = Math.min(trace.length - 1, traceIndex + 1);
    renderTraceStep();
  });
  for (const tab of ["play", "matrix", "dominance", "zerosum", "nash"]) {
    $(`tab-${tab}`).addEventListener("click", () => selectTab(tab));
  }
  selectTab("play");
  void refreshPreview();
  void loadExplorer();
}

document.addEventListener("DOMContentLoaded", init);
