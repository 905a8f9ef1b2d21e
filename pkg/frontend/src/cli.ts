#!/usr/bin/env node
/** shv-pipeline: run a JSON verification plan against the shv executable.
 *
 * Usage: shv-pipeline <plan.json | ->
 * Exit codes: 0 all steps pass, 1 some step failed, 2 bad plan or usage.
 */

import { readFileSync } from "node:fs";
import { PlanError, parsePlan, runPlan } from "./pipeline.js";
import { ShvError } from "./client.js";

function readInput(arg: string): string {
  if (arg === "-") return readFileSync(0, "utf8");
  if (arg.trimStart().startsWith("{")) return arg;
  return readFileSync(arg, "utf8");
}

export function main(argv: string[]): number {
  if (argv.length !== 1) {
    console.error("usage: shv-pipeline <plan.json | - | inline JSON>");
    return 2;
  }
  let plan;
  try {
    plan = parsePlan(JSON.parse(readInput(argv[0])));
  } catch (err) {
    console.error(`shv-pipeline: ${err instanceof Error ? err.message : err}`);
    return 2;
  }
  try {
    const report = runPlan(plan);
    console.log(JSON.stringify(report, null, 2));
    return report.ok ? 0 : 1;
  } catch (err) {
    if (err instanceof PlanError) {
      console.error(`shv-pipeline: ${err.message}`);
      return 2;
    }
    if (err instanceof ShvError) {
      console.error(`shv-pipeline: ${err.message}`);
      return err.exitCode === 2 ? 2 : 1;
    }
    throw err;
  }
}

const entry = process.argv[1];
if (entry && (entry.endsWith("cli.js") || entry.endsWith("shv-pipeline"))) {
  process.exit(main(process.argv.slice(2)));
}
