// Shared wire and editor types. The service is the single source of
// geometric truth; the UI never re-derives containment or closures.

export interface CircleSpec {
  label: string;
  x: number;
  y: number;
  r: number;
}

export interface GeometryRecord {
  id: string;
  n: number;
  family_mask: number;
  closed_sets: string[];
  basis: [string, string][];
  meet_irreducibles: string[];
  cdim: number;
  unique_atom: boolean;
  unique_coatom: boolean;
  status: string;
}

export type Feature =
  | { type: "arc"; circle: number; start: number; end: number }
  | { type: "segment"; x1: number; y1: number; x2: number; y2: number };

export interface MarginalPair {
  element: string;
  subset: string;
  margin: number;
}

export type Verdict = "verified" | "failed" | "marginal";

export interface VerifyReport {
  verdict: Verdict;
  induced_family_mask: number;
  induced_closed_sets: string[];
  violated_implications: [string, string][];
  non_closed_meet_irreducibles: string[];
  marginal_pairs: MarginalPair[];
}

export interface ConfigurationFile {
  n: number;
  labels: string[];
  circles: CircleSpec[];
}

export const LABELS = "abcde";

export function labelsFor(n: number): string[] {
  return LABELS.slice(0, n).split("");
}

/** Nonempty subsets of the first n labels, in mask order ("a", "b", "ab", ...). */
export function subsetsFor(n: number): string[] {
  const out: string[] = [];
  for (let mask = 1; mask < 1 << n; mask++) {
    let s = "";
    for (let i = 0; i < n; i++) {
      if ((mask >> i) & 1) s += LABELS[i];
    }
    out.push(s);
  }
  return out;
}
