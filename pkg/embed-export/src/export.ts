/**
 * Corpus export: one document per input line, preprocess, embed, write the
 * clustering tool's CSV ingestion format (comma-separated feature rows, no
 * labels, a single comment header recording the model and dimension).
 */

import { readFileSync, writeFileSync } from "node:fs";

import { makeEmbedder, validateModelPooling, ModelName, Pooling } from "./embed.js";
import { DEFAULT_MIN_TOKENS, preprocess } from "./preprocess.js";

export interface ExportSpec {
  input: string;
  model: ModelName;
  output: string;
  minTokens?: number;
  pooling?: Pooling;
}

export interface ExportSummary {
  accepted: number;
  rejectedShort: number;
  rejectedOov: number;
  dim: number;
}

export function formatRow(vector: Float64Array): string {
  return Array.from(vector, (v) => v.toString()).join(",");
}

export async function exportCorpus(spec: ExportSpec): Promise<ExportSummary> {
  const minTokens = spec.minTokens ?? DEFAULT_MIN_TOKENS;
  const pooling = spec.pooling ?? "mean";
  if (minTokens < 1) {
    throw new Error("min-tokens must be >= 1");
  }
  validateModelPooling(spec.model, pooling);

  const docs = readFileSync(spec.input, "utf-8")
    .split("\n")
    .map((l) => l.trimEnd())
    .filter((l) => l.length > 0);

  const embedder = await makeEmbedder(spec.model, pooling);
  const rows: string[] = [];
  let accepted = 0;
  let rejectedShort = 0;
  let rejectedOov = 0;
  for (const doc of docs) {
    const result = preprocess(doc, minTokens);
    if (result.kind === "rejected") {
      rejectedShort++;
      continue;
    }
    const vector = await embedder.embed(result.tokens);
    if (vector === null) {
      rejectedOov++;
      continue;
    }
    rows.push(formatRow(vector));
    accepted++;
  }

  const dim = embedder.dim ?? 0;
  const header = `# model=${spec.model} dim=${dim} pooling=${pooling}`;
  writeFileSync(spec.output, [header, ...rows].join("\n") + "\n", "utf-8");
  return { accepted, rejectedShort, rejectedOov, dim };
}
