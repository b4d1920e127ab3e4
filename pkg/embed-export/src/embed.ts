/**
 * Document embedding: static word vectors (word2vec, glove) are mean-pooled
 * per token; transformer models (bert, t5) run through a local
 * feature-extraction pipeline when the runtime and weights are present.
 */

import { MissingModelAssetError, cacheDir, loadWordVectors, meanPool, WordVectors } from "./vectors.js";

export const MODELS = ["word2vec", "glove", "bert", "t5"] as const;
export type ModelName = (typeof MODELS)[number];
export type Pooling = "mean" | "cls";

const TRANSFORMER_IDS: Record<string, string> = {
  bert: "Xenova/bert-base-uncased",
  t5: "Xenova/t5-small",
};

export function validateModelPooling(model: string, pooling: string): asserts model is ModelName {
  if (!MODELS.includes(model as ModelName)) {
    throw new Error(`unknown model '${model}'; choose one of ${MODELS.join(", ")}`);
  }
  if (pooling !== "mean" && pooling !== "cls") {
    throw new Error(`unknown pooling '${pooling}'; choose mean or cls`);
  }
  if (pooling === "cls" && model !== "bert") {
    throw new Error("cls pooling is only valid for the bert model");
  }
}

export interface Embedder {
  dim: number | null;
  embed(tokens: string[]): Promise<Float64Array | null>;
}

class StaticEmbedder implements Embedder {
  dim: number;
  private model: WordVectors;

  constructor(model: WordVectors) {
    this.model = model;
    this.dim = model.dim;
  }

  async embed(tokens: string[]): Promise<Float64Array | null> {
    return meanPool(tokens, this.model);
  }
}

class TransformerEmbedder implements Embedder {
  dim: number | null = null;
  private extractor: any;
  private pooling: Pooling;

  constructor(extractor: any, pooling: Pooling) {
    this.extractor = extractor;
    this.pooling = pooling;
  }

  async embed(tokens: string[]): Promise<Float64Array | null> {
    const output = await this.extractor(tokens.join(" "), {
      pooling: this.pooling === "cls" ? "cls" : "mean",
      normalize: false,
    });
    const values = Float64Array.from(output.data as Iterable<number>);
    this.dim = values.length;
    return values;
  }
}

async function loadTransformer(model: ModelName, pooling: Pooling): Promise<Embedder> {
  const modelId = TRANSFORMER_IDS[model];
  let transformers: any;
  try {
    transformers = await import("@xenova/transformers");
  } catch {
    throw new MissingModelAssetError(
      model,
      `transformer runtime (@xenova/transformers) for ${modelId}; install it to embed with ${model}`,
    );
  }
  transformers.env.localModelPath = cacheDir();
  transformers.env.allowRemoteModels = false;
  try {
    const extractor = await transformers.pipeline("feature-extraction", modelId);
    return new TransformerEmbedder(extractor, pooling);
  } catch (err) {
    throw new MissingModelAssetError(
      model,
      `${modelId} under ${cacheDir()} (${(err as Error).message})`,
    );
  }
}

export async function makeEmbedder(model: ModelName, pooling: Pooling): Promise<Embedder> {
  if (model === "word2vec" || model === "glove") {
    return new StaticEmbedder(loadWordVectors(model));
  }
  return loadTransformer(model, pooling);
}
