// Debounced server-side verification: edits schedule a verify that fires
// 200 ms after the last event, at most one request is in flight, and only
// the newest response is ever applied (stale ones are discarded by
// sequence number).

import type { CircleSpec, VerifyReport } from "./model.js";

export const VERIFY_DEBOUNCE_MS = 200;

export class VerifyScheduler {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private seq = 0;
  private appliedSeq = 0;
  private inFlight = false;
  private queued = false;
  private pending: CircleSpec[] | null = null;

  constructor(
    private readonly send: (circles: CircleSpec[]) => Promise<VerifyReport>,
    private readonly onReport: (report: VerifyReport) => void,
    private readonly onError: (err: unknown) => void = () => {},
    private readonly delayMs: number = VERIFY_DEBOUNCE_MS,
  ) {}

  schedule(circles: CircleSpec[]): void {
    this.pending = circles;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.flush();
    }, this.delayMs);
  }

  /** Verify immediately, skipping the debounce delay. */
  flushNow(circles: CircleSpec[]): void {
    this.pending = circles;
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    void this.flush();
  }

  private async flush(): Promise<void> {
    if (this.inFlight) {
      this.queued = true;
      return;
    }
    const circles = this.pending;
    if (!circles) return;
    const seq = ++this.seq;
    this.inFlight = true;
    try {
      const report = await this.send(circles);
      // drop the response if a newer edit is already waiting or a newer
      // response has been applied; the re-fire below supersedes it
      if (!this.queued && seq > this.appliedSeq) {
        this.appliedSeq = seq;
        this.onReport(report);
      }
    } catch (err) {
      this.onError(err);
    } finally {
      this.inFlight = false;
      if (this.queued) {
        this.queued = false;
        void this.flush();
      }
    }
  }
}
