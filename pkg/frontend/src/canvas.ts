// Canvas rendering and pointer interaction. All hit testing and drawing
// happens through the viewport transform; edits are reported as model
// coordinates.

import type { CircleSpec, Feature } from "./model.js";
import { hullDrawOps } from "./hullpath.js";
import { toCanvas, toModel, type Viewport } from "./viewport.js";

export type DragKind = "center" | "radius";

export interface DragTarget {
  index: number;
  kind: DragKind;
}

const HANDLE_PX = 12;

export function hitTest(
  circles: CircleSpec[],
  viewport: Viewport,
  px: number,
  py: number,
): DragTarget | null {
  const [mx, my] = toModel(viewport, px, py);
  const tol = HANDLE_PX / viewport.scale;
  // radius handles win over centers of other, larger circles
  for (let i = circles.length - 1; i >= 0; i--) {
    const c = circles[i]!;
    const d = Math.hypot(mx - c.x, my - c.y);
    if (c.r > 0 && Math.abs(d - c.r) <= tol) return { index: i, kind: "radius" };
  }
  for (let i = circles.length - 1; i >= 0; i--) {
    const c = circles[i]!;
    const d = Math.hypot(mx - c.x, my - c.y);
    if (d <= Math.max(tol, Math.min(c.r, 3 * tol))) return { index: i, kind: "center" };
  }
  return null;
}

export interface RenderOptions {
  marginal: Set<string>;
  overlays: Map<string, Feature[]>;
}

export function render(
  ctx: CanvasRenderingContext2D,
  circles: CircleSpec[],
  viewport: Viewport,
  options: RenderOptions,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);

  ctx.save();
  for (const [, features] of options.overlays) {
    drawHull(ctx, features, circles, viewport);
  }
  ctx.restore();

  for (const c of circles) {
    const [cx, cy] = toCanvas(viewport, c.x, c.y);
    const pr = c.r * viewport.scale;
    ctx.save();
    if (options.marginal.has(c.label)) {
      ctx.strokeStyle = "#c0392b";
      ctx.setLineDash([6, 4]);
      ctx.lineWidth = 2.5;
    } else {
      ctx.strokeStyle = "#2c3e50";
      ctx.lineWidth = 1.8;
    }
    if (pr > 0.5) {
      ctx.beginPath();
      ctx.arc(cx, cy, pr, 0, 2 * Math.PI);
      ctx.stroke();
    }
    ctx.setLineDash([]);
    ctx.fillStyle = "#2c3e50";
    ctx.beginPath();
    ctx.arc(cx, cy, 3, 0, 2 * Math.PI);
    ctx.fill();
    ctx.font = "14px sans-serif";
    ctx.fillText(c.label, cx + 6, cy - 6);
    ctx.restore();
  }
}

function drawHull(
  ctx: CanvasRenderingContext2D,
  features: Feature[],
  circles: CircleSpec[],
  viewport: Viewport,
): void {
  const ops = hullDrawOps(features, circles);
  ctx.beginPath();
  for (const op of ops) {
    if (op.kind === "moveTo") {
      const [x, y] = toCanvas(viewport, op.x, op.y);
      ctx.moveTo(x, y);
    } else if (op.kind === "lineTo") {
      const [x, y] = toCanvas(viewport, op.x, op.y);
      ctx.lineTo(x, y);
    } else {
      const [cx, cy] = toCanvas(viewport, op.cx, op.cy);
      // the viewport flips y, so counterclockwise model arcs render clockwise
      ctx.arc(cx, cy, op.r * viewport.scale, -op.start, -op.end, true);
    }
  }
  ctx.closePath();
  ctx.fillStyle = "rgba(52, 152, 219, 0.12)";
  ctx.strokeStyle = "rgba(41, 128, 185, 0.8)";
  ctx.lineWidth = 1.2;
  ctx.fill();
  ctx.stroke();
}
