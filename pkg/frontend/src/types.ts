/** Wire formats of the shv command line. Scalars are exact rationals "p/q". */

export type Scalar = string;
export type Family = "L" | "I" | "G";
export type Algebra = "ramond" | "ns";

export interface ElementTerm {
  coeff: Scalar;
  family: Family;
  /** integer, or "n/2" for Neveu-Schwarz G-indices */
  index: number | string;
}

export interface ElementDoc {
  algebra?: Algebra;
  terms: ElementTerm[];
}

export interface MonomialDoc {
  i: Record<string, number>;
  j: number[];
  k: Record<string, number>;
}

export interface VectorTerm extends MonomialDoc {
  coord: Record<string, Scalar>;
}

export interface VectorDoc {
  terms: VectorTerm[];
}

export interface WordLetter {
  family: Family;
  index: number;
  coeff?: Scalar;
}

export interface WordDoc {
  word: WordLetter[];
}

export type ModuleDoc =
  | { type: "verma"; h: Scalar; c0: Scalar }
  | { type: "whittaker"; k: number; phi: Record<string, Scalar>; c0: Scalar }
  | {
      type: "table";
      alpha: number;
      beta: number;
      z: number;
      c0: Scalar;
      parities: Record<string, number>;
      actions: Record<string, Record<string, Record<string, Scalar>>>;
    };

export interface AxiomReport {
  skew: "pass" | "fail";
  jacobi: "pass" | "fail";
  skew_violations?: string[][];
  jacobi_violations?: string[][];
}

export interface FamilyDoc {
  a: Scalar;
  b: Scalar;
  c: Scalar;
  phi: string;
  psi: string;
}

export interface ClassifyReport {
  degree: number;
  families: FamilyDoc[];
}

export interface ProductsReport {
  pairs: { pair: [string, string]; products: [number, string][] }[];
}

export interface LieOfReport {
  range: number;
  matches: boolean;
  preshift_identity: boolean;
}

export interface NsCheckReport {
  range: number;
  passed: boolean;
  injective: boolean;
}

export interface QuotientReport {
  alpha: number;
  beta: number;
  z: number;
  survivors: string[];
  ideal_check: "pass" | "fail";
  jacobi: "pass" | "fail";
  nonzero_entries: number;
}

export interface ValidationReport {
  ok: boolean;
  z: number;
  failures: string[];
}

export interface ProbeStep {
  apply: string;
  degree: MonomialDoc;
}

export interface ProbeResult {
  vector: VectorDoc;
  ok: boolean;
  failure: string | null;
  steps: ProbeStep[];
  terminal: Record<string, Scalar> | null;
}

export interface ProbeReport {
  validation: ValidationReport;
  probes: ProbeResult[];
}
