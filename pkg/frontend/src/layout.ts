// Starting configuration for a freshly loaded target: circles on a regular
// polygon, far enough apart that the induced geometry is the powerset.

import { labelsFor, type CircleSpec } from "./model.js";

export const POLYGON_RADIUS = 10;
export const CIRCLE_RADIUS = 1.5;

export function defaultConfiguration(n: number): CircleSpec[] {
  return labelsFor(n).map((label, i) => {
    const angle = (2 * Math.PI * i) / n + Math.PI / 2;
    return {
      label,
      x: round6(POLYGON_RADIUS * Math.cos(angle)),
      y: round6(POLYGON_RADIUS * Math.sin(angle)),
      r: CIRCLE_RADIUS,
    };
  });
}

function round6(v: number): number {
  return Math.round(v * 1e6) / 1e6;
}
