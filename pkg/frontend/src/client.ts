/** Typed client around the shv executable (JSON in, JSON out, exit codes). */

import { spawnSync } from "node:child_process";
import type {
  Algebra,
  AxiomReport,
  ClassifyReport,
  ElementDoc,
  LieOfReport,
  ModuleDoc,
  NsCheckReport,
  ProbeReport,
  ProductsReport,
  QuotientReport,
  ValidationReport,
  VectorDoc,
  WordDoc,
} from "./types.js";

export class ShvError extends Error {
  constructor(
    message: string,
    readonly exitCode: number,
    readonly stderr: string,
  ) {
    super(message);
    this.name = "ShvError";
  }
}

export interface RunResult {
  code: number;
  stdout: string;
  stderr: string;
}

export class ShvClient {
  constructor(readonly bin: string = process.env.SHV_BIN ?? "shv") {}

  runRaw(args: string[]): RunResult {
    const proc = spawnSync(this.bin, args, { encoding: "utf8", maxBuffer: 1 << 26 });
    if (proc.error) {
      throw new ShvError(`cannot run ${this.bin}: ${proc.error.message}`, -1, "");
    }
    return { code: proc.status ?? -1, stdout: proc.stdout, stderr: proc.stderr };
  }

  private runJson<T>(args: string[], allowed: number[] = [0]): T {
    const { code, stdout, stderr } = this.runRaw(args);
    if (!allowed.includes(code)) {
      throw new ShvError(`shv ${args[0]} exited ${code}: ${stderr.trim()}`, code, stderr);
    }
    return JSON.parse(stdout) as T;
  }

  bracket(x: ElementDoc, y: ElementDoc, algebra: Algebra = "ramond"): ElementDoc {
    return this.runJson(["bracket", "--algebra", algebra, JSON.stringify(x), JSON.stringify(y)]);
  }

  conformalCheck(opts: { algebra?: "s" | "v"; ansatz?: unknown } = {}): AxiomReport {
    const args = ["conformal", "check", "--algebra", opts.algebra ?? "s"];
    if (opts.ansatz !== undefined) args.push("--ansatz", JSON.stringify(opts.ansatz));
    return this.runJson(args, [0, 1]);
  }

  classify(degree: number, cNonzero = false): ClassifyReport {
    const args = ["conformal", "classify", "--degree", String(degree)];
    if (cNonzero) args.push("--c-nonzero");
    return this.runJson(args);
  }

  products(algebra: "s" | "v" = "s"): ProductsReport {
    return this.runJson(["conformal", "products", "--algebra", algebra]);
  }

  lieOf(range: number): LieOfReport {
    return this.runJson(["lie-of", "--range", String(range)]);
  }

  nsCheck(range: number): NsCheckReport {
    return this.runJson(["ns-check", "--range", String(range)]);
  }

  quotient(alpha: number, beta: number, z: number): QuotientReport {
    return this.runJson([
      "quotient",
      "--alpha",
      String(alpha),
      "--beta",
      String(beta),
      "--z",
      String(z),
    ]);
  }

  normalForm(module: ModuleDoc, word: WordDoc, strategy?: "leftmost" | "rightmost"): VectorDoc {
    const args = ["normal-form", "--module", JSON.stringify(module)];
    if (strategy) args.push("--strategy", strategy);
    args.push(JSON.stringify(word));
    return this.runJson(args);
  }

  act(module: ModuleDoc, generator: string, vector: VectorDoc): VectorDoc {
    return this.runJson([
      "act",
      "--module",
      JSON.stringify(module),
      "--generator",
      generator,
      JSON.stringify(vector),
    ]);
  }

  validateModule(module: ModuleDoc, sampleBound?: number): ValidationReport {
    const args = ["validate-module", "--module", JSON.stringify(module)];
    if (sampleBound !== undefined) args.push("--sample-bound", String(sampleBound));
    return this.runJson(args, [0, 1]);
  }

  probeVector(module: ModuleDoc, vector: VectorDoc): ProbeReport {
    return this.runJson(
      ["probe", "--module", JSON.stringify(module), JSON.stringify(vector)],
      [0, 1],
    );
  }

  probeRandom(module: ModuleDoc, count: number, maxWeight: number, seed: number): ProbeReport {
    return this.runJson(
      [
        "probe",
        "--module",
        JSON.stringify(module),
        "--random",
        String(count),
        "--max-weight",
        String(maxWeight),
        "--seed",
        String(seed),
      ],
      [0, 1],
    );
  }
}
