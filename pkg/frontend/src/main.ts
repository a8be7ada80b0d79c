// Wiring: session + layout + DOM.  At most one service request chain is
// in flight; clicks arriving meanwhile are queued in order.

import { ApiClient, QuiverData } from "./api.js";
import { Layout } from "./layout.js";
import { Session } from "./session.js";
import { drawGraph, drawPanel } from "./render.js";
import { renderAnalysis } from "./viewmodel.js";

const D5_EXAMPLE: QuiverData = {
  n: 5,
  arrows: [
    [0, 1],
    [1, 2],
    [2, 0],
    [2, 3],
    [3, 1],
    [2, 4],
  ],
};

const api = new ApiClient("");
const session = new Session(api);
const layout = new Layout();

const svg = document.getElementById("graph") as unknown as SVGSVGElement;
const panel = document.getElementById("panel") as HTMLElement;
const banner = document.getElementById("banner") as HTMLElement;
const undoBtn = document.getElementById("undo") as HTMLButtonElement;
const loadBtn = document.getElementById("load") as HTMLButtonElement;
const input = document.getElementById("quiver-input") as HTMLTextAreaElement;

let busy = false;
const queue: number[] = [];

function refresh(): void {
  const vm = renderAnalysis(session);
  drawGraph(svg, vm, layout, (v) => onVertexClick(v));
  drawPanel(panel, vm);
  undoBtn.disabled = !vm.undoEnabled;
}

function showError(message: string): void {
  banner.textContent = message;
  banner.classList.add("visible");
  setTimeout(() => banner.classList.remove("visible"), 4000);
}

async function onVertexClick(v: number): Promise<void> {
  if (busy) {
    queue.push(v);
    return;
  }
  busy = true;
  try {
    await session.mutateAt(v);
    refresh();
  } catch (e) {
    showError(`service error: ${(e as Error).message}; quiver unchanged`);
  } finally {
    busy = false;
    const next = queue.shift();
    if (next !== undefined) void onVertexClick(next);
  }
}

function parseInput(text: string): QuiverData {
  const trimmed = text.trim();
  if (trimmed.startsWith("{")) {
    return JSON.parse(trimmed) as QuiverData;
  }
  const arrows: [number, number][] = [];
  let maxV = 0;
  for (const raw of trimmed.split("\n")) {
    const line = raw.split("#")[0].trim();
    if (!line) continue;
    const m = line.match(/^(\d+)\s*->\s*(\d+)$/);
    if (!m) throw new Error(`cannot parse line: ${raw}`);
    const a = parseInt(m[1], 10);
    const b = parseInt(m[2], 10);
    arrows.push([a, b]);
    maxV = Math.max(maxV, a, b);
  }
  return { n: maxV + 1, arrows };
}

async function load(q: QuiverData): Promise<void> {
  busy = true;
  try {
    await session.load(q);
    layout.forget(0);
    refresh();
  } catch (e) {
    showError(`cannot load quiver: ${(e as Error).message}`);
  } finally {
    busy = false;
  }
}

undoBtn.addEventListener("click", () => {
  session.undo();
  refresh();
});

loadBtn.addEventListener("click", () => {
  try {
    void load(parseInput(input.value));
  } catch (e) {
    showError((e as Error).message);
  }
});

input.value = D5_EXAMPLE.arrows.map(([a, b]) => `${a} -> ${b}`).join("\n");
void load(D5_EXAMPLE);
