/**
 * Static word-vector models (word2vec / glove text formats) loaded from the
 * local asset cache, plus mean pooling over in-vocabulary tokens.
 */

import { readFileSync, existsSync } from "node:fs";
import { join } from "node:path";

export class MissingModelAssetError extends Error {
  constructor(model: string, asset: string) {
    super(
      `model asset for '${model}' not found: ${asset}. ` +
        `Place the vector file there or point ${CACHE_ENV} at its directory.`,
    );
    this.name = "MissingModelAssetError";
  }
}

export const CACHE_ENV = "EMBED_EXPORT_CACHE";

export function cacheDir(): string {
  return process.env[CACHE_ENV] ?? join(process.cwd(), ".embed-cache");
}

export interface WordVectors {
  dim: number;
  vectors: Map<string, Float64Array>;
}

/**
 * Parse the text vector format: one `token v1 .. vd` line per word. A
 * word2vec-style `count dim` header line is skipped when present (glove
 * files have no header).
 */
export function parseWordVectors(text: string): WordVectors {
  const lines = text.split("\n").filter((l) => l.trim().length > 0);
  if (lines.length === 0) {
    throw new Error("vector file is empty");
  }
  let start = 0;
  const first = lines[0].trim().split(/\s+/);
  if (first.length === 2 && first.every((c) => Number.isFinite(Number(c)))) {
    start = 1;
  }
  const vectors = new Map<string, Float64Array>();
  let dim = -1;
  for (let i = start; i < lines.length; i++) {
    const parts = lines[i].trim().split(/\s+/);
    const token = parts[0];
    const values = parts.slice(1).map(Number);
    if (values.some((v) => !Number.isFinite(v))) {
      throw new Error(`non-numeric vector entry for token '${token}' at line ${i + 1}`);
    }
    if (dim === -1) {
      dim = values.length;
    } else if (values.length !== dim) {
      throw new Error(
        `inconsistent dimension at line ${i + 1}: got ${values.length}, expected ${dim}`,
      );
    }
    vectors.set(token, Float64Array.from(values));
  }
  if (dim < 1) {
    throw new Error("vector file has no usable rows");
  }
  return { dim, vectors };
}

export function loadWordVectors(model: "word2vec" | "glove"): WordVectors {
  const asset = join(cacheDir(), `${model}.txt`);
  if (!existsSync(asset)) {
    throw new MissingModelAssetError(model, asset);
  }
  return parseWordVectors(readFileSync(asset, "utf-8"));
}

/** Mean of the in-vocabulary token vectors; null when every token is OOV. */
export function meanPool(tokens: string[], model: WordVectors): Float64Array | null {
  const acc = new Float64Array(model.dim);
  let count = 0;
  for (const token of tokens) {
    const vec = model.vectors.get(token);
    if (!vec) continue;
    for (let i = 0; i < model.dim; i++) acc[i] += vec[i];
    count++;
  }
  if (count === 0) return null;
  for (let i = 0; i < model.dim; i++) acc[i] /= count;
  return acc;
}
