/**
 * Client for the curvelab service. All algebra happens on the server; this
 * class only moves JSON. Slider changes are debounced (150 ms), at most one
 * request is in flight at a time, and every request carries a sequence
 * number so a response that arrives after a newer request has been issued is
 * discarded — the app keeps showing the last good scene until a fresher one
 * lands.
 */

import type { ExplorerState } from "./state.js";
import { toLocusRequest } from "./state.js";
import type { ApiError, LocusResponse, PlotResponse, Scene } from "./types.js";

export const DEBOUNCE_MS = 150;

export interface SceneResult {
  locus: LocusResponse;
  svg: string;
}

export type ResultHandler = (result: SceneResult, state: ExplorerState) => void;
export type ErrorHandler = (message: string) => void;

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as ApiError;
    if (body && typeof body.message === "string") {
      return body.code ? `${body.code}: ${body.message}` : body.message;
    }
  } catch {
    /* non-JSON error body */
  }
  return `HTTP ${response.status}`;
}

/** Drop contour layers when the contour toggle is off; the trace stays. */
export function visibleScene(scene: Scene, showContour: boolean): Scene {
  if (showContour) return scene;
  return { ...scene, layers: scene.layers.filter((l) => l.kind !== "segments") };
}

export class ExplorerClient {
  onResult: ResultHandler | null = null;
  onError: ErrorHandler | null = null;

  private readonly base: string;
  private readonly fetchFn: typeof fetch;
  private timer: ReturnType<typeof setTimeout> | null = null;
  /** Sequence number of the newest submitted state; older responses are stale. */
  private seq = 0;
  private inFlight = false;
  private pending: { state: ExplorerState; seq: number } | null = null;

  constructor(baseUrl = "", fetchFn: typeof fetch = (...a) => fetch(...a)) {
    this.base = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn;
  }

  async getCatalog(): Promise<unknown> {
    const r = await this.fetchFn(`${this.base}/api/v1/catalog`);
    if (!r.ok) throw new Error(await errorMessage(r));
    return r.json();
  }

  /** Debounced entry point for slider / selection changes. */
  scheduleLocus(state: ExplorerState): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      this.submit(state);
    }, DEBOUNCE_MS);
  }

  /** Immediate submission (initial load); still sequence-guarded. */
  submit(state: ExplorerState): void {
    const mySeq = ++this.seq;
    if (this.inFlight) {
      this.pending = { state, seq: mySeq }; // only the newest waits
      return;
    }
    void this.run(state, mySeq);
  }

  private async run(state: ExplorerState, mySeq: number): Promise<void> {
    this.inFlight = true;
    try {
      const locus = await this.postJson<LocusResponse>("/api/v1/locus", toLocusRequest(state));
      if (mySeq !== this.seq) return; // superseded while in flight: discard
      const scene = visibleScene(locus.scene, state.toggles.implicitContour);
      const plot = await this.postJson<PlotResponse>("/api/v1/plot", { scene });
      if (mySeq !== this.seq) return;
      this.onResult?.({ locus, svg: plot.svg }, state);
    } catch (err) {
      if (mySeq === this.seq) {
        this.onError?.(err instanceof Error ? err.message : String(err));
      }
    } finally {
      this.inFlight = false;
      if (this.pending !== null) {
        const next = this.pending;
        this.pending = null;
        void this.run(next.state, next.seq);
      }
    }
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const r = await this.fetchFn(`${this.base}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!r.ok) throw new Error(await errorMessage(r));
    return r.json() as Promise<T>;
  }
}
