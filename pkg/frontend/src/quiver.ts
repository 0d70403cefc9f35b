// Client-side quiver helpers: factoring is pure row/column deletion and is
// computed locally; mutation always goes through the service.

import type { ArrowJson, QuiverJson } from "./types.js";

export function stableStringify(value: unknown): string {
  if (Array.isArray(value)) {
    return "[" + value.map(stableStringify).join(",") + "]";
  }
  if (typeof value === "object" && value !== null) {
    const entries = Object.keys(value as Record<string, unknown>)
      .sort()
      .map(
        (k) =>
          JSON.stringify(k) +
          ":" +
          stableStringify((value as Record<string, unknown>)[k]),
      );
    return "{" + entries.join(",") + "}";
  }
  return JSON.stringify(value);
}

export function quiversEqual(a: QuiverJson, b: QuiverJson): boolean {
  return stableStringify(a) === stableStringify(b);
}

export function hasVertex(q: QuiverJson, vertex: string): boolean {
  return q.vertices.includes(vertex);
}

export function maxMultiplicity(q: QuiverJson): number {
  return q.arrows.reduce((m, a) => Math.max(m, a.mult), 0);
}

/** Delete a vertex and every arrow touching it, keeping vertex order. */
export function factorQuiver(q: QuiverJson, vertex: string): QuiverJson {
  if (!hasVertex(q, vertex)) {
    throw new Error(`unknown vertex ${vertex}`);
  }
  return {
    vertices: q.vertices.filter((v) => v !== vertex),
    arrows: q.arrows.filter((a) => a.from !== vertex && a.to !== vertex),
  };
}

function signedMatrix(q: QuiverJson): number[][] {
  const index = new Map(q.vertices.map((v, i) => [v, i]));
  const n = q.vertices.length;
  const m = Array.from({ length: n }, () => new Array<number>(n).fill(0));
  for (const a of q.arrows) {
    const i = index.get(a.from);
    const j = index.get(a.to);
    if (i === undefined || j === undefined) {
      throw new Error(`arrow ${a.from} -> ${a.to} uses an unknown vertex`);
    }
    m[i]![j]! += a.mult;
    m[j]![i]! -= a.mult;
  }
  return m;
}

function refinedColors(m: number[][]): number[] {
  const n = m.length;
  let colors = new Array<number>(n).fill(0);
  for (let round = 0; round < n; round++) {
    const keys = colors.map((c, i) => {
      const neigh: Array<[number, number]> = [];
      for (let j = 0; j < n; j++) {
        const entry = m[i]![j]!;
        if (entry !== 0) neigh.push([colors[j]!, entry]);
      }
      neigh.sort((a, b) => a[0] - b[0] || a[1] - b[1]);
      return JSON.stringify([c, neigh]);
    });
    const ranking = new Map(
      [...new Set(keys)].sort().map((k, r) => [k, r] as const),
    );
    const fresh = keys.map((k) => ranking.get(k)!);
    if (fresh.every((c, i) => c === colors[i])) break;
    colors = fresh;
  }
  return colors;
}

interface CanonResult {
  /** stable text encoding of the canonical matrix */
  key: string;
  /** original vertex label -> canonical position (0-based) */
  position: Map<string, number>;
}

/**
 * Canonical key of the isomorphism class: minimal matrix encoding over all
 * orderings compatible with the refined coloring.  Two quivers get equal
 * keys iff they are isomorphic; used to seed deterministic layouts.
 */
export function canonicalize(q: QuiverJson): CanonResult {
  const n = q.vertices.length;
  if (n === 0) return { key: "0:", position: new Map() };
  const m = signedMatrix(q);
  const colors = refinedColors(m);
  const target = [...colors].sort((a, b) => a - b);

  const SENT = Number.POSITIVE_INFINITY;
  const best: number[][] = Array.from({ length: n }, () => [SENT]);
  let bestPerm: number[] | null = null;
  const perm: number[] = [];
  const used = new Array<boolean>(n).fill(false);

  const signature = (v: number): number[] => {
    const sig: number[] = [];
    for (const a of perm) sig.push(m[a]![v]!);
    for (const a of perm) sig.push(m[v]![a]!);
    return sig;
  };

  const compare = (a: number[], b: number[]): number => {
    const len = Math.max(a.length, b.length);
    for (let i = 0; i < len; i++) {
      const x = a[i] ?? Number.NEGATIVE_INFINITY;
      const y = b[i] ?? Number.NEGATIVE_INFINITY;
      if (x !== y) return x < y ? -1 : 1;
    }
    return 0;
  };

  const place = (sig: number[], t: number): boolean => {
    const cmp = compare(sig, best[t]!);
    if (cmp > 0) return false;
    if (cmp < 0) {
      best[t] = sig;
      for (let u = t + 1; u < n; u++) best[u] = [SENT];
      bestPerm = null;
    }
    return true;
  };

  const dfs = (): void => {
    const t = perm.length;
    if (t === n) {
      if (bestPerm === null) bestPerm = [...perm];
      return;
    }
    for (let v = 0; v < n; v++) {
      if (used[v] || colors[v] !== target[t]) continue;
      if (!place(signature(v), t)) continue;
      perm.push(v);
      used[v] = true;
      dfs();
      perm.pop();
      used[v] = false;
    }
  };

  dfs();
  const chosen: number[] = bestPerm!;
  const rows: string[] = [];
  for (let a = 0; a < n; a++) {
    rows.push(
      Array.from({ length: n }, (_, b) => m[chosen[a]!]![chosen[b]!]!).join(","),
    );
  }
  const position = new Map<string, number>();
  chosen.forEach((orig, pos) => position.set(q.vertices[orig]!, pos));
  return { key: `${n}:` + rows.join(";"), position };
}

export function canonicalKey(q: QuiverJson): string {
  return canonicalize(q).key;
}

export function quiversIsomorphic(a: QuiverJson, b: QuiverJson): boolean {
  return canonicalKey(a) === canonicalKey(b);
}

export function arrowList(q: QuiverJson): ArrowJson[] {
  return [...q.arrows].sort(
    (a, b) =>
      q.vertices.indexOf(a.from) - q.vertices.indexOf(b.from) ||
      q.vertices.indexOf(a.to) - q.vertices.indexOf(b.to),
  );
}
