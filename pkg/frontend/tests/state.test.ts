import { describe, expect, it } from "vitest";

import {
  clampBinding,
  defaultState,
  fromQuery,
  snapMover,
  toLocusRequest,
  toQuery,
} from "../src/state.js";
import type { ConstructionInfo } from "../src/types.js";

const KULP: ConstructionInfo = {
  name: "kulp",
  params: [{ name: "r", default: 1, min: 0.25, max: 4 }],
  mover: "u",
  source: "",
};

const GERONO: ConstructionInfo = {
  name: "gerono",
  params: [
    { name: "a", default: 2, min: 0.25, max: 4 },
    { name: "b", default: 1, min: 0.25, max: 4 },
  ],
  mover: "u",
  source: "",
};

const CATALOG = [KULP, GERONO];

describe("url round-trip", () => {
  it("reproduces the identical locus request", () => {
    const state = defaultState(GERONO);
    state.bindings.a = 3.5;
    state.bindings.b = 0.75;
    state.mover = -2.25;
    state.toggles.implicitContour = false;
    const reloaded = fromQuery(toQuery(state), CATALOG);
    expect(reloaded).not.toBeNull();
    expect(JSON.stringify(toLocusRequest(reloaded!))).toBe(
      JSON.stringify(toLocusRequest(state)),
    );
    expect(reloaded!.toggles).toEqual(state.toggles);
    expect(reloaded!.mover).toBe(state.mover);
  });

  it("is stable: query -> state -> query is a fixed point", () => {
    const q = toQuery(defaultState(KULP));
    const again = toQuery(fromQuery(q, CATALOG)!);
    expect(again).toBe(q);
  });

  it("never serializes the transient analysis summary", () => {
    const state = defaultState(KULP);
    state.lastAnalysis = "degree 4, irreducible";
    expect(toQuery(state)).not.toContain("degree");
    expect(fromQuery(toQuery(state), CATALOG)!.lastAnalysis).toBeNull();
  });

  it("rejects unknown constructions and unknown parameters", () => {
    expect(fromQuery("c=unknown", CATALOG)).toBeNull();
    expect(fromQuery("c=kulp&p.zz=1", CATALOG)).toBeNull();
    expect(fromQuery("", CATALOG)).toBeNull();
  });

  it("clamps out-of-range slider values from the query", () => {
    const state = fromQuery("c=kulp&p.r=99", CATALOG)!;
    expect(state.bindings.r).toBe(4);
    const low = fromQuery("c=kulp&p.r=-3", CATALOG)!;
    expect(low.bindings.r).toBe(0.25);
  });
});

describe("slider semantics", () => {
  it("default state request equals the request after a no-op slider move", () => {
    const state = defaultState(KULP);
    const untouched = JSON.stringify(toLocusRequest(state));
    state.bindings.r = clampBinding(KULP.params[0]!, 1); // slider at its default
    expect(JSON.stringify(toLocusRequest(state))).toBe(untouched);
  });

  it("clamps to the declared range and maps NaN to the default", () => {
    const spec = KULP.params[0]!;
    expect(clampBinding(spec, 100)).toBe(4);
    expect(clampBinding(spec, 0)).toBe(0.25);
    expect(clampBinding(spec, Number.NaN)).toBe(1);
    expect(clampBinding(spec, 2.5)).toBe(2.5);
  });

  it("sorts binding keys in the request regardless of insertion order", () => {
    const state = defaultState(GERONO);
    delete state.bindings.a;
    state.bindings.b = 1;
    state.bindings.a = 2;
    expect(Object.keys(toLocusRequest(state).bindings)).toEqual(["a", "b"]);
  });
});

describe("mover snapping", () => {
  const samples: [number, number, number][] = [
    [-1, 0, 0],
    [-0.5, 0, 0],
    [3, 0, 0],
  ];

  it("snaps to the nearest sampled parameter value", () => {
    expect(snapMover(-0.45, samples).value).toBe(-0.5);
    expect(snapMover(-0.8, samples).value).toBe(-1);
  });

  it("flags a gap when the nearest sample is far (excluded region)", () => {
    const near = snapMover(-0.5, samples);
    expect(near.gap).toBe(false);
    const inGap = snapMover(1.2, samples); // nowhere near a sample
    expect(inGap.value).toBe(-0.5);
    expect(inGap.gap).toBe(true);
  });

  it("reports a gap for an empty trace", () => {
    expect(snapMover(0, []).gap).toBe(true);
  });
});
