/**
 * Corpus preprocessing: strip URLs, @-mentions, #-hashtags and emoji, then
 * whitespace-tokenize. Documents with fewer than minTokens surviving tokens
 * are rejected (rejection is a value, not an error).
 */

const URL_PATTERN = /https?:\/\/\S+|www\.\S+/gi;
const MENTION_PATTERN = /@\w+/g;
const HASHTAG_PATTERN = /#\w+/g;
// surrogate pairs cover all astral-plane emoji; the BMP ranges cover legacy
// symbols, dingbats, variation selectors and the zero-width joiner
const EMOJI_PATTERN =
  /[\uD800-\uDBFF][\uDC00-\uDFFF]|[←-⇿⌀-➿⬀-⯿️‍]/g;

export const DEFAULT_MIN_TOKENS = 5;

export interface Accepted {
  kind: "accepted";
  tokens: string[];
}

export interface Rejected {
  kind: "rejected";
  reason: string;
  tokenCount: number;
}

export type PreprocessResult = Accepted | Rejected;

export function stripNoise(doc: string): string {
  return doc
    .replace(URL_PATTERN, " ")
    .replace(MENTION_PATTERN, " ")
    .replace(HASHTAG_PATTERN, " ")
    .replace(EMOJI_PATTERN, " ");
}

export function tokenize(text: string): string[] {
  return text.split(/\s+/).filter((t) => t.length > 0);
}

export function preprocess(doc: string, minTokens = DEFAULT_MIN_TOKENS): PreprocessResult {
  const tokens = tokenize(stripNoise(doc));
  if (tokens.length < minTokens) {
    return {
      kind: "rejected",
      reason: `only ${tokens.length} tokens after stripping (need ${minTokens})`,
      tokenCount: tokens.length,
    };
  }
  return { kind: "accepted", tokens };
}
