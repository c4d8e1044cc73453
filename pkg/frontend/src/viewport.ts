// Affine map between model coordinates (y up) and canvas pixels (y down).
// Model coordinates are what gets verified and exported; the viewport is
// presentation only.

import type { CircleSpec } from "./model.js";

export interface Viewport {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export function toCanvas(v: Viewport, x: number, y: number): [number, number] {
  return [v.offsetX + x * v.scale, v.offsetY - y * v.scale];
}

export function toModel(v: Viewport, px: number, py: number): [number, number] {
  return [(px - v.offsetX) / v.scale, (v.offsetY - py) / v.scale];
}

/** Fit every disk into the canvas with the given pixel padding. */
export function fitViewport(
  circles: CircleSpec[],
  width: number,
  height: number,
  padding = 40,
): Viewport {
  const xs_lo = Math.min(...circles.map((c) => c.x - c.r));
  const xs_hi = Math.max(...circles.map((c) => c.x + c.r));
  const ys_lo = Math.min(...circles.map((c) => c.y - c.r));
  const ys_hi = Math.max(...circles.map((c) => c.y + c.r));
  const spanX = Math.max(xs_hi - xs_lo, 1e-9);
  const spanY = Math.max(ys_hi - ys_lo, 1e-9);
  const scale = Math.min(
    (width - 2 * padding) / spanX,
    (height - 2 * padding) / spanY,
  );
  const cx = (xs_lo + xs_hi) / 2;
  const cy = (ys_lo + ys_hi) / 2;
  return {
    scale,
    offsetX: width / 2 - cx * scale,
    offsetY: height / 2 + cy * scale,
  };
}
