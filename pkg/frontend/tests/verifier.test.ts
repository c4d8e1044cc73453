import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { VerifyScheduler, VERIFY_DEBOUNCE_MS } from "../src/verifier.js";
import type { CircleSpec, VerifyReport } from "../src/model.js";

const CIRCLES: CircleSpec[] = [{ label: "a", x: 0, y: 0, r: 1 }];

function reportFor(tag: number): VerifyReport {
  return {
    verdict: "verified",
    induced_family_mask: tag,
    induced_closed_sets: [],
    violated_implications: [],
    non_closed_meet_irreducibles: [],
    marginal_pairs: [],
  };
}

beforeEach(() => {
  vi.useFakeTimers();
});

afterEach(() => {
  vi.useRealTimers();
});

describe("VerifyScheduler", () => {
  it("debounces to a single request and reports well inside 500 ms", async () => {
    const calls: number[] = [];
    const reports: VerifyReport[] = [];
    const scheduler = new VerifyScheduler(
      async (c) => {
        calls.push(vi.getTimerCount());
        return reportFor(c.length);
      },
      (r) => reports.push(r),
    );
    // a burst of edits: only one request may fire, 200 ms after the last one
    scheduler.schedule(CIRCLES);
    await vi.advanceTimersByTimeAsync(100);
    scheduler.schedule(CIRCLES);
    await vi.advanceTimersByTimeAsync(100);
    scheduler.schedule(CIRCLES);
    expect(calls).toHaveLength(0);
    await vi.advanceTimersByTimeAsync(VERIFY_DEBOUNCE_MS);
    expect(calls).toHaveLength(1);
    expect(reports).toHaveLength(1);
    expect(VERIFY_DEBOUNCE_MS).toBeLessThanOrEqual(200);
    // debounce delay plus the (mock-instant) round trip stays under 500 ms
    await vi.advanceTimersByTimeAsync(500 - VERIFY_DEBOUNCE_MS);
    expect(reports).toHaveLength(1);
  });

  it("keeps at most one request in flight and re-fires for queued edits", async () => {
    let resolveFirst!: (r: VerifyReport) => void;
    const pending = new Promise<VerifyReport>((res) => (resolveFirst = res));
    const sent: CircleSpec[][] = [];
    const reports: VerifyReport[] = [];
    const scheduler = new VerifyScheduler(
      (c) => {
        sent.push(c);
        return sent.length === 1 ? pending : Promise.resolve(reportFor(99));
      },
      (r) => reports.push(r),
    );
    scheduler.schedule(CIRCLES);
    await vi.advanceTimersByTimeAsync(VERIFY_DEBOUNCE_MS);
    expect(sent).toHaveLength(1);
    // edit again while the first request is still in flight
    const moved = [{ ...CIRCLES[0]!, x: 5 }];
    scheduler.schedule(moved);
    await vi.advanceTimersByTimeAsync(VERIFY_DEBOUNCE_MS);
    expect(sent).toHaveLength(1); // still only one in flight
    resolveFirst(reportFor(1));
    await vi.runAllTimersAsync();
    expect(sent).toHaveLength(2);
    expect(sent[1]).toEqual(moved); // the re-fire uses the newest circles
    // the first response answered outdated circles; only the re-fired one lands
    expect(reports.map((r) => r.induced_family_mask)).toEqual([99]);
  });

  it("discards a stale response that loses the race", async () => {
    let resolveFirst!: (r: VerifyReport) => void;
    const first = new Promise<VerifyReport>((res) => (resolveFirst = res));
    const reports: number[] = [];
    let call = 0;
    const scheduler = new VerifyScheduler(
      () => {
        call += 1;
        return call === 1 ? first : Promise.resolve(reportFor(2));
      },
      (r) => reports.push(r.induced_family_mask),
    );
    scheduler.schedule(CIRCLES);
    await vi.advanceTimersByTimeAsync(VERIFY_DEBOUNCE_MS);
    scheduler.schedule(CIRCLES);
    await vi.advanceTimersByTimeAsync(VERIFY_DEBOUNCE_MS);
    // first response arrives only after the second was requested and applied
    resolveFirst(reportFor(1));
    await vi.runAllTimersAsync();
    expect(reports).toEqual([2]);
  });

  it("signals errors so the UI can show a stale indicator", async () => {
    const errors: unknown[] = [];
    const scheduler = new VerifyScheduler(
      () => Promise.reject(new Error("service unreachable")),
      () => {
        throw new Error("no report expected");
      },
      (e) => errors.push(e),
    );
    scheduler.schedule(CIRCLES);
    await vi.runAllTimersAsync();
    expect(errors).toHaveLength(1);
  });

  it("flushNow skips the debounce delay", async () => {
    const reports: VerifyReport[] = [];
    const scheduler = new VerifyScheduler(
      async () => reportFor(7),
      (r) => reports.push(r),
    );
    scheduler.flushNow(CIRCLES);
    await vi.runAllTimersAsync();
    expect(reports).toHaveLength(1);
  });
});
