/**
 * Explorer state and its URL-query codec.
 *
 * The state is the single source of truth for what the explorer shows:
 * which construction is selected, the slider value bound to each of its
 * parameters, the mover's parameter value, and the display toggles. It is
 * serializable to a URL query string, and deserializing that string yields a
 * state that produces a byte-identical locus request — so a shared link
 * reproduces the same scene.
 */

import type { ConstructionInfo, LocusRequest, ParamSpec } from "./types.js";

export interface DisplayToggles {
  constructionLines: boolean;
  implicitContour: boolean;
  equationPanel: boolean;
}

export interface ExplorerState {
  construction: string;
  /** Slider value per parameter name; always within the catalog range. */
  bindings: Record<string, number>;
  /** Current mover parameter value. */
  mover: number;
  toggles: DisplayToggles;
  /** One-line summary of the last analysis; transient, never serialized. */
  lastAnalysis: string | null;
}

export const SAMPLE_LO = -8;
export const SAMPLE_HI = 8;
export const SAMPLE_N = 512;

const DEFAULT_TOGGLES: DisplayToggles = {
  constructionLines: true,
  implicitContour: true,
  equationPanel: true,
};

/** Clamp a slider value into its declared range (NaN falls to the default). */
export function clampBinding(spec: ParamSpec, value: number): number {
  if (!Number.isFinite(value)) return spec.default;
  return Math.min(spec.max, Math.max(spec.min, value));
}

export function defaultState(info: ConstructionInfo): ExplorerState {
  const bindings: Record<string, number> = {};
  for (const p of info.params) bindings[p.name] = p.default;
  return {
    construction: info.name,
    bindings,
    mover: 0,
    toggles: { ...DEFAULT_TOGGLES },
    lastAnalysis: null,
  };
}

/** The service request this state stands for (bindings in sorted key order). */
export function toLocusRequest(state: ExplorerState): LocusRequest {
  const bindings: Record<string, number> = {};
  for (const name of Object.keys(state.bindings).sort()) {
    bindings[name] = state.bindings[name] as number;
  }
  return {
    construction: state.construction,
    bindings,
    sample_lo: SAMPLE_LO,
    sample_hi: SAMPLE_HI,
    sample_n: SAMPLE_N,
  };
}

function encodeToggles(t: DisplayToggles): string {
  return (t.constructionLines ? "c" : "") + (t.implicitContour ? "i" : "") + (t.equationPanel ? "e" : "");
}

function decodeToggles(text: string | null): DisplayToggles {
  if (text === null) return { ...DEFAULT_TOGGLES };
  return {
    constructionLines: text.includes("c"),
    implicitContour: text.includes("i"),
    equationPanel: text.includes("e"),
  };
}

/** Serialize the shareable part of the state to a URL query string. */
export function toQuery(state: ExplorerState): string {
  const q = new URLSearchParams();
  q.set("c", state.construction);
  for (const name of Object.keys(state.bindings).sort()) {
    q.set(`p.${name}`, String(state.bindings[name]));
  }
  q.set("u", String(state.mover));
  q.set("show", encodeToggles(state.toggles));
  return q.toString();
}

/**
 * Rebuild a state from a query string. Unknown constructions and unknown
 * parameter names are rejected by returning null (the caller falls back to
 * the default state); out-of-range slider values are clamped.
 */
export function fromQuery(
  query: string,
  catalog: ConstructionInfo[],
): ExplorerState | null {
  const q = new URLSearchParams(query);
  const name = q.get("c");
  if (name === null) return null;
  const info = catalog.find((it) => it.name === name);
  if (info === undefined) return null;
  const state = defaultState(info);
  for (const [key, raw] of q.entries()) {
    if (!key.startsWith("p.")) continue;
    const param = key.slice(2);
    const spec = info.params.find((p) => p.name === param);
    if (spec === undefined) return null;
    state.bindings[param] = clampBinding(spec, Number(raw));
  }
  const u = Number(q.get("u"));
  if (Number.isFinite(u)) state.mover = u;
  state.toggles = decodeToggles(q.get("show"));
  return state;
}

/**
 * Snap a requested mover value to the nearest sampled parameter value.
 * Returns the snapped value plus a gap flag: true when the nearest sample is
 * farther away than two sampling steps (the mover sits in an excluded gap,
 * e.g. at a pole of the construction).
 */
export function snapMover(
  requested: number,
  samples: [number, number, number][],
): { value: number; gap: boolean } {
  if (samples.length === 0) return { value: requested, gap: true };
  let best = samples[0]![0];
  let bestDist = Math.abs(requested - best);
  for (const [t] of samples) {
    const d = Math.abs(requested - t);
    if (d < bestDist) {
      best = t;
      bestDist = d;
    }
  }
  const step = (SAMPLE_HI - SAMPLE_LO) / (SAMPLE_N - 1);
  return { value: best, gap: bestDist > 2 * step };
}
