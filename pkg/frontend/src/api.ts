// Service client: every mutation and every panel refresh goes through this
// interface, so tests can substitute recorded fixtures for live HTTP.

import type {
  ErrorEnvelope,
  QuiverJson,
  RelationsResponse,
  TypeVerdictJson,
} from "./types.js";

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly envelope: ErrorEnvelope,
  ) {
    super(envelope.message);
  }
}

export interface ServiceClient {
  mutate(quiver: QuiverJson, vertex: string): Promise<QuiverJson>;
  typecheck(quiver: QuiverJson): Promise<TypeVerdictJson>;
  relations(quiver: QuiverJson): Promise<RelationsResponse | ErrorEnvelope>;
}

type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export function createHttpClient(
  baseUrl: string,
  fetchImpl: FetchLike = fetch,
): ServiceClient {
  const post = async (endpoint: string, body: unknown): Promise<unknown> => {
    const response = await fetchImpl(baseUrl + endpoint, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = (await response.json()) as unknown;
    if (!response.ok) {
      const envelope = payload as ErrorEnvelope;
      if (response.status === 422 && envelope.code) {
        return envelope; // structured domain outcome, not a transport failure
      }
      throw new ServiceError(response.status, envelope);
    }
    return payload;
  };

  return {
    async mutate(quiver, vertex) {
      const out = (await post("/api/mutate", { quiver, vertex })) as {
        quiver: QuiverJson;
      };
      return out.quiver;
    },
    async typecheck(quiver) {
      return (await post("/api/typecheck", { quiver })) as TypeVerdictJson;
    },
    async relations(quiver) {
      return (await post("/api/relations", { quiver })) as
        | RelationsResponse
        | ErrorEnvelope;
    },
  };
}

/**
 * Latest-request gate: panel fetches are raced freely, but a response only
 * lands if no newer request was issued in the meantime.
 */
export function createRequestGate(): {
  next: () => number;
  isCurrent: (token: number) => boolean;
  invalidate: () => void;
} {
  let current = 0;
  return {
    next() {
      current += 1;
      return current;
    },
    isCurrent(token: number) {
      return token === current;
    },
    invalidate() {
      current += 1;
    },
  };
}

/** Trailing-edge debounce for panel refreshes; cancellable. */
export function debounce<Args extends unknown[]>(
  fn: (...args: Args) => void,
  waitMs: number,
): { call: (...args: Args) => void; cancel: () => void } {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return {
    call(...args: Args) {
      if (timer !== undefined) clearTimeout(timer);
      timer = setTimeout(() => {
        timer = undefined;
        fn(...args);
      }, waitMs);
    },
    cancel() {
      if (timer !== undefined) clearTimeout(timer);
      timer = undefined;
    },
  };
}
