/** Declarative verification plans executed against the shv CLI. */

import { ShvClient } from "./client.js";
import { elementsEqual, normalizeElement } from "./elements.js";
import type { Algebra, ElementDoc, ModuleDoc, VectorDoc, WordDoc } from "./types.js";

export type PlanStep =
  | { name?: string; op: "conformal-check"; algebra?: "s" | "v"; ansatz?: unknown; expect?: "pass" | "fail" }
  | { name?: string; op: "classify"; degree: number; expectFamilies?: number }
  | { name?: string; op: "lie-of"; range: number }
  | { name?: string; op: "ns-check"; range: number }
  | { name?: string; op: "quotient"; alpha: number; beta: number; z: number }
  | { name?: string; op: "bracket"; algebra?: Algebra; x: ElementDoc; y: ElementDoc; expect?: ElementDoc }
  | { name?: string; op: "normal-form"; module: ModuleDoc; word: WordDoc }
  | { name?: string; op: "validate-module"; module: ModuleDoc; expect?: "pass" | "fail" }
  | { name?: string; op: "probe-random"; module: ModuleDoc; count: number; maxWeight: number; seed: number };

export interface Plan {
  steps: PlanStep[];
}

export interface StepReport {
  name: string;
  op: string;
  ok: boolean;
  detail: unknown;
}

export interface PlanReport {
  ok: boolean;
  steps: StepReport[];
}

export class PlanError extends Error {}

export function parsePlan(doc: unknown): Plan {
  if (typeof doc !== "object" || doc === null || !Array.isArray((doc as Plan).steps)) {
    throw new PlanError("plan must be an object with a 'steps' array");
  }
  for (const step of (doc as Plan).steps) {
    if (typeof step !== "object" || step === null || typeof (step as PlanStep).op !== "string") {
      throw new PlanError(`bad plan step ${JSON.stringify(step)}`);
    }
  }
  return doc as Plan;
}

export function runPlan(plan: Plan, client: ShvClient = new ShvClient()): PlanReport {
  const steps: StepReport[] = [];
  for (const [idx, step] of plan.steps.entries()) {
    const name = step.name ?? `${step.op}#${idx}`;
    let ok: boolean;
    let detail: unknown;
    switch (step.op) {
      case "conformal-check": {
        const rep = client.conformalCheck({ algebra: step.algebra, ansatz: step.ansatz });
        const passed = rep.skew === "pass" && rep.jacobi === "pass";
        ok = (step.expect ?? "pass") === (passed ? "pass" : "fail");
        detail = rep;
        break;
      }
      case "classify": {
        const rep = client.classify(step.degree);
        ok = step.expectFamilies === undefined || rep.families.length === step.expectFamilies;
        detail = rep;
        break;
      }
      case "lie-of": {
        const rep = client.lieOf(step.range);
        ok = rep.matches && rep.preshift_identity;
        detail = rep;
        break;
      }
      case "ns-check": {
        const rep = client.nsCheck(step.range);
        ok = rep.passed;
        detail = rep;
        break;
      }
      case "quotient": {
        const rep = client.quotient(step.alpha, step.beta, step.z);
        ok = rep.ideal_check === "pass" && rep.jacobi === "pass";
        detail = rep;
        break;
      }
      case "bracket": {
        const out = client.bracket(step.x, step.y, step.algebra ?? "ramond");
        ok = step.expect === undefined || elementsEqual(out, step.expect);
        detail = normalizeElement(out);
        break;
      }
      case "normal-form": {
        const out = client.normalForm(step.module, step.word);
        ok = true;
        detail = out;
        break;
      }
      case "validate-module": {
        const rep = client.validateModule(step.module);
        ok = (step.expect ?? "pass") === (rep.ok ? "pass" : "fail");
        detail = rep;
        break;
      }
      case "probe-random": {
        const rep = client.probeRandom(step.module, step.count, step.maxWeight, step.seed);
        ok = rep.validation.ok && rep.probes.length === step.count && rep.probes.every((p) => p.ok);
        detail = {
          validation: rep.validation,
          probes: rep.probes.length,
          failures: rep.probes.filter((p) => !p.ok).length,
        };
        break;
      }
      default: {
        throw new PlanError(`unknown op ${JSON.stringify((step as { op: string }).op)}`);
      }
    }
    steps.push({ name, op: step.op, ok, detail });
  }
  return { ok: steps.every((s) => s.ok), steps };
}
