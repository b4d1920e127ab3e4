#!/usr/bin/env node
/**
 * embed-export --input corpus.txt --model word2vec [--pooling mean]
 *              [--min-tokens 5] --output vectors.csv
 *
 * Model assets resolve from $EMBED_EXPORT_CACHE (default ./.embed-cache):
 * word2vec.txt / glove.txt vector files, or transformer weights for bert/t5.
 */

import { exportCorpus } from "./export.js";
import { MODELS } from "./embed.js";
import { CACHE_ENV } from "./vectors.js";

const USAGE = `usage: embed-export --input <corpus.txt> --model <${MODELS.join("|")}> --output <vectors.csv> [--pooling mean|cls] [--min-tokens N]
model assets are read from $${CACHE_ENV} (default ./.embed-cache)`;

function parseArgs(argv: string[]): Record<string, string> {
  const args: Record<string, string> = {};
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    if (!flag.startsWith("--")) {
      throw new Error(`unexpected argument '${flag}'`);
    }
    const value = argv[i + 1];
    if (value === undefined || value.startsWith("--")) {
      throw new Error(`flag ${flag} needs a value`);
    }
    args[flag.slice(2)] = value;
    i++;
  }
  return args;
}

export async function main(argv: string[]): Promise<number> {
  let args: Record<string, string>;
  try {
    args = parseArgs(argv);
    for (const required of ["input", "model", "output"]) {
      if (!(required in args)) {
        throw new Error(`missing --${required}`);
      }
    }
  } catch (err) {
    console.error(`embed-export: ${(err as Error).message}\n${USAGE}`);
    return 2;
  }

  try {
    const summary = await exportCorpus({
      input: args.input,
      model: args.model as any,
      output: args.output,
      minTokens: args["min-tokens"] !== undefined ? Number(args["min-tokens"]) : undefined,
      pooling: (args.pooling as any) ?? "mean",
    });
    console.error(
      `embed-export: wrote ${summary.accepted} vectors (dim ${summary.dim}) to ${args.output}; ` +
        `rejected ${summary.rejectedShort} short, ${summary.rejectedOov} out-of-vocabulary`,
    );
    return 0;
  } catch (err) {
    console.error(`embed-export: ${(err as Error).message}`);
    return 1;
  }
}

const invokedDirectly = process.argv[1] && import.meta.url.endsWith(
  process.argv[1].split("/").pop() as string,
);
if (invokedDirectly) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
