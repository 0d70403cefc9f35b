// SVG rendering of a quiver: clickable vertices (data-vertex attributes),
// arrows drawn once per unit of multiplicity with parallel offsets, and an
// optional type badge.

import { computeLayout } from "./layout.js";
import type { QuiverJson, TypeVerdictJson } from "./types.js";

const WIDTH = 480;
const HEIGHT = 360;
const NODE_RADIUS = 16;

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function verdictBadge(verdict: TypeVerdictJson | undefined): string {
  if (!verdict) return "";
  if (verdict.kind === "finite" && verdict.dynkin) {
    return `Finite ${verdict.dynkin.family}_${verdict.dynkin.rank}`;
  }
  if (verdict.kind === "infinite") return "infinite type";
  return "budget exceeded";
}

export function renderQuiver(
  q: QuiverJson,
  options: { verdict?: TypeVerdictJson } = {},
): string {
  const layout = computeLayout(q, WIDTH, HEIGHT);
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${HEIGHT}" class="quiver">`,
  );
  parts.push(
    '<defs><marker id="arrowhead" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">' +
      '<path d="M0,0 L8,4 L0,8 z"/></marker></defs>',
  );

  for (const arrow of q.arrows) {
    const a = layout.get(arrow.from)!;
    const b = layout.get(arrow.to)!;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.sqrt(dx * dx + dy * dy) || 1;
    // shorten to the node boundary
    const sx = a.x + (dx / len) * NODE_RADIUS;
    const sy = a.y + (dy / len) * NODE_RADIUS;
    const tx = b.x - (dx / len) * NODE_RADIUS;
    const ty = b.y - (dy / len) * NODE_RADIUS;
    // parallel copies bend by multiplicity index
    for (let copy = 0; copy < arrow.mult; copy++) {
      const offset = (copy - (arrow.mult - 1) / 2) * 14;
      const mx = (sx + tx) / 2 - (dy / len) * offset;
      const my = (sy + ty) / 2 + (dx / len) * offset;
      parts.push(
        `<path class="arrow" data-from="${escapeXml(arrow.from)}" data-to="${escapeXml(arrow.to)}" ` +
          `d="M${sx.toFixed(2)},${sy.toFixed(2)} Q${mx.toFixed(2)},${my.toFixed(2)} ${tx.toFixed(2)},${ty.toFixed(2)}" ` +
          'fill="none" stroke="currentColor" marker-end="url(#arrowhead)"/>',
      );
    }
  }

  for (const v of q.vertices) {
    const p = layout.get(v)!;
    parts.push(
      `<g class="vertex" data-vertex="${escapeXml(v)}" transform="translate(${p.x},${p.y})">` +
        `<circle r="${NODE_RADIUS}" fill="white" stroke="currentColor"/>` +
        `<text text-anchor="middle" dy="5">${escapeXml(v)}</text></g>`,
    );
  }

  const badge = verdictBadge(options.verdict);
  if (badge) {
    parts.push(
      `<text class="badge" x="${WIDTH - 10}" y="20" text-anchor="end">${escapeXml(badge)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}

export function renderRelationsPanel(
  relations: { relations: { kind: string; paths: string[][] }[] } | undefined,
): string {
  if (!relations) return "<p class=\"muted\">no relations computed</p>";
  if (relations.relations.length === 0) return "<p>(no relations)</p>";
  const items = relations.relations.map((r) => {
    const chains = r.paths.map((p) => p.join("&#8594;"));
    const body =
      r.kind === "zero" ? `${chains[0]} = 0` : `${chains[0]} &#8722; ${chains[1]} = 0`;
    return `<li class="relation ${r.kind}">${body}</li>`;
  });
  return `<ul class="relations">${items.join("")}</ul>`;
}
