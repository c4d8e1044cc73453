// Turn hull features (arcs on named circles plus tangent segments) into
// model-space drawing operations, and measure how well consecutive
// features meet, so overlays can be asserted to close.

import type { CircleSpec, Feature } from "./model.js";

export type DrawOp =
  | { kind: "moveTo"; x: number; y: number }
  | { kind: "lineTo"; x: number; y: number }
  | {
      kind: "arc";
      cx: number;
      cy: number;
      r: number;
      start: number;
      end: number;
    };

function arcPoint(c: CircleSpec, theta: number): [number, number] {
  return [c.x + c.r * Math.cos(theta), c.y + c.r * Math.sin(theta)];
}

export function featureEndpoints(
  feature: Feature,
  circles: CircleSpec[],
): [[number, number], [number, number]] {
  if (feature.type === "segment") {
    return [
      [feature.x1, feature.y1],
      [feature.x2, feature.y2],
    ];
  }
  const c = circles[feature.circle];
  if (!c) throw new Error(`feature references missing circle ${feature.circle}`);
  return [arcPoint(c, feature.start), arcPoint(c, feature.end)];
}

export function hullDrawOps(features: Feature[], circles: CircleSpec[]): DrawOp[] {
  const ops: DrawOp[] = [];
  features.forEach((feature, i) => {
    const [start] = featureEndpoints(feature, circles);
    if (i === 0) ops.push({ kind: "moveTo", x: start[0], y: start[1] });
    if (feature.type === "segment") {
      ops.push({ kind: "lineTo", x: feature.x2, y: feature.y2 });
    } else {
      const c = circles[feature.circle]!;
      ops.push({
        kind: "arc",
        cx: c.x,
        cy: c.y,
        r: c.r,
        start: feature.start,
        end: feature.end,
      });
    }
  });
  return ops;
}

/** Largest model-space gap between consecutive feature endpoints (cyclic). */
export function maxEndpointGap(features: Feature[], circles: CircleSpec[]): number {
  if (features.length < 2) return 0;
  let worst = 0;
  for (let i = 0; i < features.length; i++) {
    const [, end] = featureEndpoints(features[i]!, circles);
    const next = features[(i + 1) % features.length]!;
    const [start] = featureEndpoints(next, circles);
    worst = Math.max(worst, Math.hypot(end[0] - start[0], end[1] - start[1]));
  }
  return worst;
}

export function featureCounts(features: Feature[]): { arcs: number; segments: number } {
  return {
    arcs: features.filter((f) => f.type === "arc").length,
    segments: features.filter((f) => f.type === "segment").length,
  };
}
