// File exports: the configuration format the CLI reads, and TikZ text
// fetched from the service so it is byte-identical to the CLI's output.

import type { CircleSpec, ConfigurationFile } from "./model.js";

export function toConfigurationFile(circles: CircleSpec[]): ConfigurationFile {
  return {
    n: circles.length,
    labels: circles.map((c) => c.label),
    circles: circles.map((c) => ({ label: c.label, x: c.x, y: c.y, r: c.r })),
  };
}

export function configurationJson(circles: CircleSpec[]): string {
  return JSON.stringify(toConfigurationFile(circles), null, 2) + "\n";
}

export function fromConfigurationFile(data: ConfigurationFile): CircleSpec[] {
  if (!Array.isArray(data.circles) || data.circles.length !== data.n) {
    throw new Error("configuration file must list exactly n circles");
  }
  return data.circles.map((c) => ({
    label: c.label,
    x: Number(c.x),
    y: Number(c.y),
    r: Number(c.r),
  }));
}
