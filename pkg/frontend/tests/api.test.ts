import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import {
  createHttpClient,
  createRequestGate,
  debounce,
  ServiceError,
} from "../src/api.js";
import { loadFixtures } from "./helpers.js";

const fixtures = loadFixtures();

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("http client", () => {
  it("posts mutate requests and unwraps the quiver", async () => {
    const calls: Array<{ url: string; body: unknown }> = [];
    const client = createHttpClient("http://svc", async (url, init) => {
      calls.push({ url, body: JSON.parse(init.body as string) });
      return jsonResponse({ quiver: fixtures.quivers["c3"] });
    });
    const got = await client.mutate(fixtures.quivers["a3-linear"]!, "2");
    expect(got).toEqual(fixtures.quivers["c3"]);
    expect(calls[0]!.url).toBe("http://svc/api/mutate");
  });

  it("returns 422 envelopes as structured outcomes", async () => {
    const client = createHttpClient("", async () =>
      jsonResponse({ code: "infinite-type", message: "nope", detail: null }, 422),
    );
    const out = await client.relations(fixtures.quivers["kronecker"]!);
    expect("code" in out && out.code).toBe("infinite-type");
  });

  it("throws ServiceError on transport-level failures", async () => {
    const client = createHttpClient("", async () =>
      jsonResponse({ code: "malformed-body", message: "bad", detail: null }, 400),
    );
    await expect(client.typecheck(fixtures.quivers["c3"]!)).rejects.toBeInstanceOf(
      ServiceError,
    );
  });
});

describe("request gate", () => {
  it("discards stale responses by sequence number", () => {
    const gate = createRequestGate();
    const first = gate.next();
    const second = gate.next();
    expect(gate.isCurrent(first)).toBe(false);
    expect(gate.isCurrent(second)).toBe(true);
    gate.invalidate();
    expect(gate.isCurrent(second)).toBe(false);
  });

  it("lets only the latest of racing fetches land", async () => {
    const gate = createRequestGate();
    const landed: string[] = [];
    const fire = async (name: string, delay: Promise<void>): Promise<void> => {
      const token = gate.next();
      await delay;
      if (gate.isCurrent(token)) landed.push(name);
    };
    let releaseSlow!: () => void;
    const slow = new Promise<void>((resolve) => (releaseSlow = resolve));
    const fast = Promise.resolve();
    const p1 = fire("stale", slow);
    const p2 = fire("fresh", fast);
    await p2;
    releaseSlow();
    await p1;
    expect(landed).toEqual(["fresh"]);
  });
});

describe("debounce", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("coalesces bursts into one trailing call", () => {
    const hits: number[] = [];
    const d = debounce((x: number) => hits.push(x), 100);
    d.call(1);
    d.call(2);
    d.call(3);
    vi.advanceTimersByTime(99);
    expect(hits).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(hits).toEqual([3]);
  });

  it("is cancellable", () => {
    const hits: number[] = [];
    const d = debounce((x: number) => hits.push(x), 50);
    d.call(1);
    d.cancel();
    vi.advanceTimersByTime(200);
    expect(hits).toEqual([]);
  });
});
