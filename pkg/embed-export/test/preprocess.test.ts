import { describe, expect, it } from "vitest";

import { preprocess, stripNoise, tokenize } from "../src/preprocess.js";

function tokensOf(doc: string, minTokens = 5): string[] {
  const result = preprocess(doc, minTokens);
  if (result.kind === "rejected") throw new Error(`unexpectedly rejected: ${result.reason}`);
  return result.tokens;
}

describe("preprocess", () => {
  it("strips urls, mentions and hashtags", () => {
    expect(tokensOf("check https://x.co @bob #covid stay safe everyone now")).toEqual([
      "check", "stay", "safe", "everyone", "now",
    ]);
  });

  it("rejects documents that are all noise", () => {
    const result = preprocess("@a @b #c");
    expect(result.kind).toBe("rejected");
    if (result.kind === "rejected") expect(result.tokenCount).toBe(0);
  });

  it("rejects four-token documents under the default threshold", () => {
    const result = preprocess("one two three four");
    expect(result.kind).toBe("rejected");
    if (result.kind === "rejected") expect(result.tokenCount).toBe(4);
  });

  it("accepts exactly five tokens", () => {
    expect(preprocess("one two three four five").kind).toBe("accepted");
  });

  it("strips emoji", () => {
    expect(tokensOf("stay home 😷 and stay safe 🏠 ok", 5)).toEqual([
      "stay", "home", "and", "stay", "safe", "ok",
    ]);
  });

  it("honors a custom minimum", () => {
    expect(preprocess("just three words", 3).kind).toBe("accepted");
    expect(preprocess("just three words", 4).kind).toBe("rejected");
  });

  it("is idempotent", () => {
    const docs = [
      "check https://x.co @bob #covid stay safe everyone now",
      "mixed foo@bar and x#tag tokens here folks",
      "emoji 😷 inside 🏠 a sentence with words",
      "plain words with no noise at all",
      "www.example.com leading url and trailing #tag",
    ];
    for (const doc of docs) {
      const once = tokenize(stripNoise(doc));
      const twice = tokenize(stripNoise(once.join(" ")));
      expect(twice).toEqual(once);
    }
  });

  it("rejection depends only on the post-strip token count", () => {
    const padded = "#aa #bb #cc @dd https://e.f only four tokens here";
    const plain = "only four tokens here";
    expect(preprocess(padded).kind).toBe(preprocess(plain).kind);
  });
});
