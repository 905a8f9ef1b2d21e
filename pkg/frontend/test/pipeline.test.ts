import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { main } from "../src/cli.js";
import { PlanError, parsePlan, runPlan } from "../src/pipeline.js";
import type { Plan } from "../src/pipeline.js";

const VERMA = { type: "verma", h: "2", c0: "1" } as const;

const FULL_PLAN: Plan = {
  steps: [
    { name: "axioms", op: "conformal-check" },
    { name: "classification", op: "classify", degree: 4, expectFamilies: 1 },
    { name: "indexed-algebra", op: "lie-of", range: 5 },
    { name: "ns-embedding", op: "ns-check", range: 5 },
    { name: "quotient", op: "quotient", alpha: 2, beta: 1, z: 1 },
    {
      name: "bracket-check",
      op: "bracket",
      x: { terms: [{ coeff: "1", family: "L", index: 2 }] },
      y: { terms: [{ coeff: "1", family: "L", index: 3 }] },
      expect: { terms: [{ coeff: "1", family: "L", index: 5 }] },
    },
    { name: "whittaker", op: "validate-module", module: { type: "whittaker", k: 1, phi: { I1: "1" }, c0: "1" } },
    { name: "probes", op: "probe-random", module: VERMA, count: 10, maxWeight: 5, seed: 3 },
  ],
};

describe("plan parsing", () => {
  it("accepts well-formed plans", () => {
    expect(parsePlan(FULL_PLAN).steps).toHaveLength(8);
  });

  it("rejects junk", () => {
    expect(() => parsePlan({})).toThrow(PlanError);
    expect(() => parsePlan({ steps: [42] })).toThrow(PlanError);
  });
});

describe("plan execution", () => {
  it("runs the full verification plan green", () => {
    const report = runPlan(FULL_PLAN);
    expect(report.steps.map((s) => [s.name, s.ok])).toEqual(
      FULL_PLAN.steps.map((s) => [s.name, true]),
    );
    expect(report.ok).toBe(true);
  });

  it("flags expectation mismatches without aborting", () => {
    const report = runPlan({
      steps: [
        {
          op: "validate-module",
          module: { type: "verma", h: "2", c0: "0" },
          expect: "pass",
        },
        { op: "lie-of", range: 3 },
      ],
    });
    expect(report.ok).toBe(false);
    expect(report.steps[0].ok).toBe(false);
    expect(report.steps[1].ok).toBe(true);
  });

  it("honors expect: fail for degenerate modules", () => {
    const report = runPlan({
      steps: [
        { op: "validate-module", module: { type: "verma", h: "2", c0: "0" }, expect: "fail" },
      ],
    });
    expect(report.ok).toBe(true);
  });
});

describe("shv-pipeline entry point", () => {
  it("returns 0 for a passing plan file", () => {
    const dir = mkdtempSync(join(tmpdir(), "shvplan-"));
    const path = join(dir, "plan.json");
    writeFileSync(path, JSON.stringify({ steps: [{ op: "lie-of", range: 3 }] }));
    expect(main([path])).toBe(0);
  });

  it("returns 1 when a step fails", () => {
    const plan = JSON.stringify({
      steps: [{ op: "validate-module", module: { type: "verma", h: "2", c0: "0" } }],
    });
    expect(main([plan])).toBe(1);
  });

  it("returns 2 for malformed plans and bad usage", () => {
    expect(main([])).toBe(2);
    expect(main(['{"nope": true}'])).toBe(2);
    expect(main(['{"steps": [{"op": "launch-missiles"}]}'])).toBe(2);
  });
});
