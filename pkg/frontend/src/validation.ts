// Live passphrase validation against the shipped wordlist.
//
// The list guarantees pairwise Levenshtein distance >= 3, so any single
// typing error leaves the original word as the unique entry within
// distance 1; two errors are always detectable but may have two equally
// close repairs, in which case no suggestion is offered.

export interface WordStatus {
  word: string;
  accepted: boolean;
  suggestion: string | null;
}

export interface EntryStatus {
  words: WordStatus[];
  complete: boolean;
}

export function levenshtein(a: string, b: string, bound?: number): number {
  if (a === b) return 0;
  if (bound !== undefined && Math.abs(a.length - b.length) >= bound) return bound;
  if (a.length < b.length) [a, b] = [b, a];
  let prev = Array.from({ length: b.length + 1 }, (_, j) => j);
  for (let i = 1; i <= a.length; i++) {
    const cur = [i];
    for (let j = 1; j <= b.length; j++) {
      cur.push(Math.min(
        prev[j] + 1,
        cur[j - 1] + 1,
        prev[j - 1] + (a[i - 1] === b[j - 1] ? 0 : 1),
      ));
    }
    if (bound !== undefined && Math.min(...cur) >= bound) return bound;
    prev = cur;
  }
  return bound !== undefined ? Math.min(prev[b.length], bound) : prev[b.length];
}

export class Wordlist {
  readonly words: string[];
  private index: Map<string, number>;

  constructor(words: string[]) {
    this.words = words;
    this.index = new Map(words.map((w, i) => [w, i]));
  }

  static fromText(text: string): Wordlist {
    return new Wordlist(text.split("\n").filter((w) => w.length > 0));
  }

  get size(): number {
    return this.words.length;
  }

  wordAt(i: number): string {
    return this.words[i];
  }

  has(word: string): boolean {
    return this.index.has(word);
  }

  indexOf(word: string): number | undefined {
    return this.index.get(word);
  }
}

/** The unique closest list word within distance 2, or null if ambiguous. */
export function suggest(word: string, wl: Wordlist): string | null {
  let best: string[] = [];
  let bestDistance = 3;
  for (const w of wl.words) {
    const d = levenshtein(w, word, 3);
    if (d < bestDistance) {
      best = [w];
      bestDistance = d;
    } else if (d === bestDistance) {
      best.push(w);
    }
  }
  return bestDistance <= 2 && best.length === 1 ? best[0] : null;
}

/**
 * Judge a (possibly partial) hyphen-separated entry. A trailing hyphen
 * marks the last word as still being typed, so it is not judged yet.
 */
export function validateEntry(partial: string, wl: Wordlist): EntryStatus {
  const text = partial.trim();
  let tokens = text.length > 0 ? text.split("-") : [];
  if (tokens.length > 0 && tokens[tokens.length - 1] === "") {
    tokens = tokens.slice(0, -1);
  }
  const words = tokens.map((word) =>
    wl.has(word)
      ? { word, accepted: true, suggestion: null }
      : { word, accepted: false, suggestion: suggest(word, wl) },
  );
  return { words, complete: words.length > 0 && words.every((w) => w.accepted) };
}
