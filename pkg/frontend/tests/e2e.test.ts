// End-to-end checks against a live service. Start one first, e.g.
//   circlegeom serve --port 8437
// then run: CIRCLEGEOM_SERVICE_URL=http://127.0.0.1:8437 npm run test:e2e

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { featureCounts, maxEndpointGap } from "../src/hullpath.js";
import { defaultConfiguration } from "../src/layout.js";
import { fitViewport } from "../src/viewport.js";
import { VerifyScheduler } from "../src/verifier.js";
import type { VerifyReport } from "../src/model.js";

const BASE = process.env.CIRCLEGEOM_SERVICE_URL;
const run = BASE ? describe : describe.skip;

run("live service", () => {
  const api = new ApiClient(BASE!);

  it("loads the two-element chain target with its checklist data", async () => {
    const rec = await api.getGeometry("G2-1");
    expect(rec.family_mask).toBe(11);
    expect(rec.basis).toEqual([["b", "a"]]);
  });

  it("default layout fails the chain, dragging the point inside verifies it within 500 ms", async () => {
    const start = defaultConfiguration(2);
    const initial = await api.verify("G2-1", start);
    expect(initial.verdict).toBe("failed");

    // drag circle a into circle b and turn it into a point
    const b = start[1]!;
    const dragged = [
      { label: "a", x: b.x + 0.2, y: b.y + 0.1, r: 0 },
      b,
    ];
    const reports: VerifyReport[] = [];
    let resolveDone!: () => void;
    const done = new Promise<void>((res) => (resolveDone = res));
    const scheduler = new VerifyScheduler(
      (circles) => api.verify("G2-1", circles),
      (report) => {
        reports.push(report);
        resolveDone();
      },
    );
    const t0 = performance.now();
    scheduler.schedule(dragged);
    await done;
    const elapsed = performance.now() - t0;
    expect(reports[0]!.verdict).toBe("verified");
    expect(elapsed).toBeLessThan(500);
  });

  it("hull overlay for a two-circle subset has 2 arcs + 2 segments that close", async () => {
    const circles = defaultConfiguration(3);
    const features = await api.hull(circles, "ab");
    expect(featureCounts(features)).toEqual({ arcs: 2, segments: 2 });
    const viewport = fitViewport(circles, 1000, 800);
    expect(maxEndpointGap(features, circles) * viewport.scale).toBeLessThan(1);
  });

  it("TikZ export is byte-stable and matches the service's canonical text", async () => {
    const circles = defaultConfiguration(2);
    const first = await api.tikz(circles, 8.0);
    const second = await api.tikz(circles, 8.0);
    expect(first).toBe(second);
    expect(first.startsWith("\\begin{tikzpicture}")).toBe(true);
    const raw = await fetch(`${BASE}/api/tikz`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ circles, width: 8.0 }),
    });
    expect(first).toBe(await raw.text());
  });
});
