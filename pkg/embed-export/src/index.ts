export { preprocess, stripNoise, tokenize, DEFAULT_MIN_TOKENS } from "./preprocess.js";
export type { Accepted, Rejected, PreprocessResult } from "./preprocess.js";
export { parseWordVectors, loadWordVectors, meanPool, MissingModelAssetError, CACHE_ENV, cacheDir } from "./vectors.js";
export type { WordVectors } from "./vectors.js";
export { makeEmbedder, validateModelPooling, MODELS } from "./embed.js";
export type { Embedder, ModelName, Pooling } from "./embed.js";
export { exportCorpus, formatRow } from "./export.js";
export type { ExportSpec, ExportSummary } from "./export.js";
