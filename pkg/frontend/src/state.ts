// Pure editor state transitions; the DOM layer only dispatches these.

import type { CircleSpec, GeometryRecord, VerifyReport } from "./model.js";

export interface EditorState {
  target: GeometryRecord;
  circles: CircleSpec[];
  overlays: string[];
  report: VerifyReport | null;
  /** True while edits are newer than the report on display. */
  dirty: boolean;
  /** Service unreachable on the last attempt; report may be stale. */
  stale: boolean;
}

export function loadTarget(target: GeometryRecord, circles: CircleSpec[]): EditorState {
  if (circles.length !== target.n) {
    throw new Error(`target needs ${target.n} circles, got ${circles.length}`);
  }
  return {
    target,
    circles,
    overlays: [],
    report: null,
    dirty: true,
    stale: false,
  };
}

export function moveCircle(
  state: EditorState,
  index: number,
  x: number,
  y: number,
): EditorState {
  const circles = state.circles.map((c, i) => (i === index ? { ...c, x, y } : c));
  return { ...state, circles, dirty: true };
}

export function setRadius(state: EditorState, index: number, r: number): EditorState {
  const clamped = Math.max(0, r);
  const circles = state.circles.map((c, i) =>
    i === index ? { ...c, r: clamped } : c,
  );
  return { ...state, circles, dirty: true };
}

export function toggleOverlay(state: EditorState, subset: string): EditorState {
  const overlays = state.overlays.includes(subset)
    ? state.overlays.filter((s) => s !== subset)
    : [...state.overlays, subset].sort();
  return { ...state, overlays };
}

export function applyReport(state: EditorState, report: VerifyReport): EditorState {
  return { ...state, report, dirty: false, stale: false };
}

export function markStale(state: EditorState): EditorState {
  return { ...state, stale: true };
}

/** Labels of circles involved in marginal containments, for highlighting. */
export function marginalLabels(state: EditorState): Set<string> {
  const out = new Set<string>();
  if (state.report) {
    for (const pair of state.report.marginal_pairs) out.add(pair.element);
  }
  return out;
}

export interface ChecklistEntry {
  text: string;
  met: boolean | null; // null until a report exists
}

/** Basis rules and meet-irreducibles of the target, marked against the report. */
export function checklist(state: EditorState): ChecklistEntry[] {
  const { target, report } = state;
  const violated = new Set(
    (report?.violated_implications ?? []).map(([p, c]) => `${p}>${c}`),
  );
  const nonClosed = new Set(report?.non_closed_meet_irreducibles ?? []);
  const entries: ChecklistEntry[] = target.basis.map(([p, c]) => ({
    text: `${p} → ${c}`,
    met: report ? !violated.has(`${p}>${c}`) : null,
  }));
  for (const m of target.meet_irreducibles) {
    entries.push({
      text: `${m === "" ? "∅" : m} closed`,
      met: report ? !nonClosed.has(m) : null,
    });
  }
  return entries;
}
