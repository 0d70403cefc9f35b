import { describe, expect, it } from "vitest";

import { canonicalKey, factorQuiver, quiversIsomorphic } from "../src/quiver.js";
import type { QuiverJson } from "../src/types.js";
import { loadFixtures } from "./helpers.js";

const fixtures = loadFixtures();

const triangle = (labels: [string, string, string]): QuiverJson => ({
  vertices: [...labels],
  arrows: [
    { from: labels[0], to: labels[1], mult: 1 },
    { from: labels[1], to: labels[2], mult: 1 },
    { from: labels[2], to: labels[0], mult: 1 },
  ],
});

describe("canonical keys", () => {
  it("identify relabelings", () => {
    expect(canonicalKey(triangle(["1", "2", "3"]))).toBe(
      canonicalKey(triangle(["x", "y", "z"])),
    );
  });

  it("separate sink-in-middle from source-in-middle", () => {
    const sink: QuiverJson = {
      vertices: ["1", "2", "3"],
      arrows: [
        { from: "1", to: "2", mult: 1 },
        { from: "3", to: "2", mult: 1 },
      ],
    };
    const source: QuiverJson = {
      vertices: ["1", "2", "3"],
      arrows: [
        { from: "2", to: "1", mult: 1 },
        { from: "2", to: "3", mult: 1 },
      ],
    };
    expect(canonicalKey(sink)).not.toBe(canonicalKey(source));
  });

  it("track multiplicities", () => {
    const single: QuiverJson = {
      vertices: ["1", "2"],
      arrows: [{ from: "1", to: "2", mult: 1 }],
    };
    expect(quiversIsomorphic(fixtures.quivers["kronecker"]!, single)).toBe(false);
  });

  it("match the service's A3 -> C(3) mutation fixture", () => {
    const mutated = fixtures.exchanges.find((e) => e.endpoint === "/api/mutate")!;
    const got = (mutated.response as { quiver: QuiverJson }).quiver;
    expect(quiversIsomorphic(got, fixtures.quivers["c3"]!)).toBe(true);
    expect(quiversIsomorphic(got, fixtures.quivers["a3-linear"]!)).toBe(false);
  });
});

describe("client-side factoring", () => {
  it("drops a vertex and its arrows", () => {
    const smaller = factorQuiver(fixtures.quivers["g22"]!, "2");
    expect(smaller.vertices).toEqual(["1", "2'", "s"]);
    expect(quiversIsomorphic(smaller, fixtures.quivers["c3"]!)).toBe(true);
  });

  it("rejects unknown vertices", () => {
    expect(() => factorQuiver(fixtures.quivers["g22"]!, "zz")).toThrow(/unknown/);
  });
});
