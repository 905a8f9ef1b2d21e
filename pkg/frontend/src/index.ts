export { ShvClient, ShvError } from "./client.js";
export {
  addElements,
  addVectors,
  elementsEqual,
  normalizeElement,
  normalizeVector,
  scaleElement,
  vectorsEqual,
} from "./elements.js";
export { PlanError, parsePlan, runPlan } from "./pipeline.js";
export type { Plan, PlanReport, PlanStep, StepReport } from "./pipeline.js";
export * from "./rational.js";
export * from "./types.js";
