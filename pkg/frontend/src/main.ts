// Application wiring: target picker, canvas editing, live verification,
// hull overlays, and exports.

import { ApiClient } from "./api.js";
import { hitTest, render, type DragTarget } from "./canvas.js";
import { configurationJson } from "./exporter.js";
import { defaultConfiguration } from "./layout.js";
import { subsetsFor, type Feature, type GeometryRecord } from "./model.js";
import {
  applyReport,
  checklist,
  loadTarget,
  marginalLabels,
  markStale,
  moveCircle,
  setRadius,
  toggleOverlay,
  type EditorState,
} from "./state.js";
import { VerifyScheduler } from "./verifier.js";
import { fitViewport, toModel, type Viewport } from "./viewport.js";

const api = new ApiClient("");

const canvas = document.getElementById("board") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const picker = document.getElementById("target-picker") as HTMLSelectElement;
const sizePicker = document.getElementById("size-picker") as HTMLSelectElement;
const badge = document.getElementById("verdict-badge")!;
const checklistEl = document.getElementById("checklist")!;
const detailsEl = document.getElementById("report-details")!;
const overlaysEl = document.getElementById("overlays")!;
const exportTikzBtn = document.getElementById("export-tikz")!;
const exportConfBtn = document.getElementById("export-conf")!;
const resetBtn = document.getElementById("reset-layout")!;

let state: EditorState | null = null;
let viewport: Viewport | null = null;
let drag: DragTarget | null = null;
const overlayFeatures = new Map<string, Feature[]>();

const scheduler = new VerifyScheduler(
  (circles) => api.verify(state!.target.id, circles),
  (report) => {
    if (!state) return;
    state = applyReport(state, report);
    refreshPanels();
    void refreshOverlays();
  },
  () => {
    if (!state) return;
    state = markStale(state);
    refreshPanels();
  },
);

function refreshPanels(): void {
  if (!state) return;
  const verdict = state.report?.verdict ?? "unverified";
  badge.textContent = state.dirty ? `${verdict}…` : verdict;
  badge.className = `badge ${state.report ? state.report.verdict : "none"}${
    state.stale ? " stale" : ""
  }`;
  checklistEl.innerHTML = "";
  for (const entry of checklist(state)) {
    const li = document.createElement("li");
    li.textContent = `${entry.met === null ? "?" : entry.met ? "✓" : "✗"} ${entry.text}`;
    li.className = entry.met === null ? "unknown" : entry.met ? "met" : "unmet";
    checklistEl.appendChild(li);
  }
  const report = state.report;
  if (report) {
    const marginals = report.marginal_pairs
      .map((p) => `${p.element} vs ${p.subset || "∅"} (${p.margin.toExponential(2)})`)
      .join(", ");
    detailsEl.textContent =
      `induced closed sets: ${report.induced_closed_sets
        .map((s) => (s === "" ? "∅" : s))
        .join(" ")}` + (marginals ? `\nmarginal: ${marginals}` : "");
  } else {
    detailsEl.textContent = "";
  }
  draw();
}

function draw(): void {
  if (!state || !viewport) return;
  render(ctx, state.circles, viewport, {
    marginal: marginalLabels(state),
    overlays: overlayFeatures,
  });
}

async function refreshOverlays(): Promise<void> {
  if (!state) return;
  overlayFeatures.clear();
  const wanted = [...state.overlays];
  await Promise.all(
    wanted.map(async (subset) => {
      try {
        overlayFeatures.set(subset, await api.hull(state!.circles, subset));
      } catch {
        overlayFeatures.delete(subset);
      }
    }),
  );
  draw();
}

function rebuildOverlayToggles(n: number): void {
  overlaysEl.innerHTML = "";
  for (const subset of subsetsFor(n)) {
    if (subset.length < 2) continue;
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.addEventListener("change", () => {
      if (!state) return;
      state = toggleOverlay(state, subset);
      void refreshOverlays();
    });
    label.appendChild(box);
    label.appendChild(document.createTextNode(` hull(${subset})`));
    overlaysEl.appendChild(label);
  }
}

async function loadTargetId(id: string): Promise<void> {
  const record: GeometryRecord = await api.getGeometry(id);
  state = loadTarget(record, defaultConfiguration(record.n));
  viewport = fitViewport(state.circles, canvas.width, canvas.height);
  overlayFeatures.clear();
  rebuildOverlayToggles(record.n);
  refreshPanels();
  scheduler.flushNow(state.circles);
}

async function populatePicker(n: number): Promise<void> {
  const records = await api.listGeometries({ n });
  picker.innerHTML = "";
  for (const rec of records) {
    const opt = document.createElement("option");
    opt.value = rec.id;
    opt.textContent = `${rec.id} (${rec.status}, cdim ${rec.cdim})`;
    picker.appendChild(opt);
  }
  if (records.length > 0) await loadTargetId(records[0]!.id);
}

canvas.addEventListener("pointerdown", (ev) => {
  if (!state || !viewport) return;
  const rect = canvas.getBoundingClientRect();
  drag = hitTest(state.circles, viewport, ev.clientX - rect.left, ev.clientY - rect.top);
  if (drag) canvas.setPointerCapture(ev.pointerId);
});

canvas.addEventListener("pointermove", (ev) => {
  if (!state || !viewport || !drag) return;
  const rect = canvas.getBoundingClientRect();
  const [mx, my] = toModel(
    viewport,
    ev.clientX - rect.left,
    ev.clientY - rect.top,
  );
  if (drag.kind === "center") {
    state = moveCircle(state, drag.index, mx, my);
  } else {
    const c = state.circles[drag.index]!;
    state = setRadius(state, drag.index, Math.hypot(mx - c.x, my - c.y));
  }
  scheduler.schedule(state.circles);
  refreshPanels();
});

canvas.addEventListener("pointerup", () => {
  drag = null;
});

picker.addEventListener("change", () => void loadTargetId(picker.value));
sizePicker.addEventListener("change", () => void populatePicker(Number(sizePicker.value)));

resetBtn.addEventListener("click", () => {
  if (!state) return;
  void loadTargetId(state.target.id);
});

function download(name: string, text: string, type: string): void {
  const blob = new Blob([text], { type });
  const url = URL.createObjectURL(blob);
  const a = document.createElement("a");
  a.href = url;
  a.download = name;
  a.click();
  URL.revokeObjectURL(url);
}

exportTikzBtn.addEventListener("click", () => {
  if (!state) return;
  void api
    .tikz(state.circles, 8.0)
    .then((text) => download(`${state!.target.id}.tex`, text, "text/plain"));
});

exportConfBtn.addEventListener("click", () => {
  if (!state) return;
  download(
    `${state.target.id}-circles.json`,
    configurationJson(state.circles),
    "application/json",
  );
});

void populatePicker(Number(sizePicker.value));
