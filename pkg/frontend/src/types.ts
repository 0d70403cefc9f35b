// Wire formats of the cqt JSON service; the UI consumes these exclusively.

export interface ArrowJson {
  from: string;
  to: string;
  mult: number;
}

export interface QuiverJson {
  vertices: string[];
  arrows: ArrowJson[];
}

export interface DynkinJson {
  family: "A" | "D" | "E";
  rank: number;
}

export interface WitnessJson {
  quiver: QuiverJson;
  trace: string[];
}

export interface TypeVerdictJson {
  kind: "finite" | "infinite" | "budget-exceeded";
  dynkin?: DynkinJson;
  witness?: WitnessJson;
  reason?: string;
}

export interface RelationJson {
  arrow: { from: string; to: string };
  kind: "zero" | "commutativity";
  paths: string[][];
}

export interface RelationSetJson {
  quiver: QuiverJson;
  relations: RelationJson[];
}

export interface AlgebraReportJson {
  dimension: number;
  hom: { from: string; to: string; dim: number }[];
  projective_lengths: Record<string, number>;
  rules: { lhs: string[]; rhs: "0" | string[]; coeff?: string }[];
}

export interface RelationsResponse {
  relations: RelationSetJson;
  report: AlgebraReportJson;
}

export interface ErrorEnvelope {
  code: string;
  message: string;
  detail?: unknown;
}

export type Action =
  | { kind: "mutate"; vertex: string }
  | { kind: "drop"; vertex: string };

export const SESSION_FILE_VERSION = 1;

export interface SessionFile {
  version: number;
  initial: QuiverJson;
  actions: Action[];
}

export function isQuiverJson(value: unknown): value is QuiverJson {
  if (typeof value !== "object" || value === null) return false;
  const q = value as QuiverJson;
  return (
    Array.isArray(q.vertices) &&
    q.vertices.every((v) => typeof v === "string") &&
    Array.isArray(q.arrows) &&
    q.arrows.every(
      (a) =>
        typeof a === "object" &&
        a !== null &&
        typeof a.from === "string" &&
        typeof a.to === "string" &&
        typeof a.mult === "number" &&
        a.mult >= 1,
    )
  );
}

export function isAction(value: unknown): value is Action {
  if (typeof value !== "object" || value === null) return false;
  const a = value as Action;
  return (a.kind === "mutate" || a.kind === "drop") && typeof a.vertex === "string";
}
