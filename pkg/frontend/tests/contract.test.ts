// Recorded-fixture contract tests: the UI's view of the service matches the
// service's actual payloads byte for byte.

import { describe, expect, it } from "vitest";

import { canonicalKey, stableStringify } from "../src/quiver.js";
import { applyAction, createSession, currentQuiver } from "../src/session.js";
import type { RelationsResponse } from "../src/types.js";
import { fixtureClient, loadFixtures, mutateLocal } from "./helpers.js";

const fixtures = loadFixtures();
const client = fixtureClient(fixtures);

describe("service contract", () => {
  it("click-mutate on A3-linear produces the service's C(3) payload", async () => {
    let session = createSession(fixtures.quivers["a3-linear"]!);
    session = await applyAction(session, { kind: "mutate", vertex: "2" }, client);
    const got = currentQuiver(session);
    const recorded = fixtures.exchanges.find(
      (e) =>
        e.endpoint === "/api/mutate" &&
        stableStringify(e.body) ===
          stableStringify({ quiver: fixtures.quivers["a3-linear"], vertex: "2" }),
    )!;
    expect(stableStringify(got)).toBe(
      stableStringify((recorded.response as { quiver: unknown }).quiver),
    );
    expect(canonicalKey(got)).toBe(canonicalKey(fixtures.quivers["c3"]!));
  });

  it("local mutation mock reproduces every recorded mutate payload", () => {
    for (const e of fixtures.exchanges) {
      if (e.endpoint !== "/api/mutate") continue;
      const body = e.body as { quiver: Parameters<typeof mutateLocal>[0]; vertex: string };
      const local = mutateLocal(body.quiver, body.vertex);
      const served = (e.response as { quiver: unknown }).quiver;
      expect(stableStringify(local)).toBe(stableStringify(served));
    }
  });

  it("G(2,2) panels report finite D_4 with one commutativity and four zero relations", async () => {
    const g22 = fixtures.quivers["g22"]!;
    const verdict = await client.typecheck(g22);
    expect(verdict.kind).toBe("finite");
    expect(verdict.dynkin).toEqual({ family: "D", rank: 4 });
    const relations = (await client.relations(g22)) as RelationsResponse;
    const kinds = relations.relations.relations.map((r) => r.kind);
    expect(kinds.filter((k) => k === "zero")).toHaveLength(4);
    expect(kinds.filter((k) => k === "commutativity")).toHaveLength(1);
    expect(relations.report.dimension).toBe(10);
  });

  it("kronecker typecheck yields the infinite badge and relations the error envelope", async () => {
    const kron = fixtures.quivers["kronecker"]!;
    const verdict = await client.typecheck(kron);
    expect(verdict.kind).toBe("infinite");
    const rel = await client.relations(kron);
    expect("code" in rel && rel.code).toBe("infinite-type");
  });
});
