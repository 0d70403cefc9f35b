// Deterministic force-directed layout.  The PRNG is seeded from the
// canonical key and initial angles follow canonical positions, so isomorphic
// quivers always render the same shape regardless of labels.

import { canonicalize } from "./quiver.js";
import type { QuiverJson } from "./types.js";

export interface LayoutPoint {
  x: number;
  y: number;
}

export type Layout = Map<string, LayoutPoint>;

function fnv1a(text: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function computeLayout(
  q: QuiverJson,
  width = 480,
  height = 360,
  iterations = 150,
): Layout {
  const n = q.vertices.length;
  const layout: Layout = new Map();
  if (n === 0) return layout;
  const { key, position } = canonicalize(q);
  const rng = mulberry32(fnv1a(key));
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) / 2 - 40;

  const xs = new Array<number>(n);
  const ys = new Array<number>(n);
  for (const v of q.vertices) {
    const pos = position.get(v)!;
    const angle = (2 * Math.PI * pos) / n + 0.15 * (rng() - 0.5);
    const r = radius * (0.9 + 0.1 * rng());
    const i = q.vertices.indexOf(v);
    xs[i] = cx + r * Math.cos(angle);
    ys[i] = cy + r * Math.sin(angle);
  }

  const index = new Map(q.vertices.map((v, i) => [v, i]));
  const edges = q.arrows.map((a) => [index.get(a.from)!, index.get(a.to)!] as const);
  const spring = radius * (n > 1 ? 1.6 / Math.sqrt(n) : 1);

  for (let step = 0; step < iterations; step++) {
    const fx = new Array<number>(n).fill(0);
    const fy = new Array<number>(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = xs[i]! - xs[j]!;
        const dy = ys[i]! - ys[j]!;
        const d2 = dx * dx + dy * dy + 0.01;
        const f = (spring * spring) / d2;
        const d = Math.sqrt(d2);
        fx[i]! += (f * dx) / d;
        fy[i]! += (f * dy) / d;
        fx[j]! -= (f * dx) / d;
        fy[j]! -= (f * dy) / d;
      }
    }
    for (const [i, j] of edges) {
      const dx = xs[i]! - xs[j]!;
      const dy = ys[i]! - ys[j]!;
      const d = Math.sqrt(dx * dx + dy * dy) + 0.01;
      const f = (d - spring) / d;
      fx[i]! -= 0.5 * f * dx;
      fy[i]! -= 0.5 * f * dy;
      fx[j]! += 0.5 * f * dx;
      fy[j]! += 0.5 * f * dy;
    }
    const cool = 1 - step / iterations;
    for (let i = 0; i < n; i++) {
      xs[i]! += Math.max(-8, Math.min(8, fx[i]!)) * cool;
      ys[i]! += Math.max(-8, Math.min(8, fy[i]!)) * cool;
      xs[i] = Math.max(30, Math.min(width - 30, xs[i]!));
      ys[i] = Math.max(30, Math.min(height - 30, ys[i]!));
    }
  }

  q.vertices.forEach((v, i) => {
    layout.set(v, { x: Math.round(xs[i]! * 100) / 100, y: Math.round(ys[i]! * 100) / 100 });
  });
  return layout;
}
