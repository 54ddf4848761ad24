/** Payload shapes of the curvelab JSON API under /api/v1. */

export interface ParamSpec {
  name: string;
  default: number;
  min: number;
  max: number;
}

export interface ConstructionInfo {
  name: string;
  params: ParamSpec[];
  mover: string;
  source: string;
}

export interface CatalogResponse {
  curves: unknown[];
  constructions: ConstructionInfo[];
}

/** Body of POST /api/v1/locus. Field order here is the canonical request order. */
export interface LocusRequest {
  construction: string;
  bindings: Record<string, number>;
  sample_lo: number;
  sample_hi: number;
  sample_n: number;
}

export interface Viewport {
  x: [number, number];
  y: [number, number];
}

export interface SceneLayer {
  kind: string;
  [key: string]: unknown;
}

export interface Scene {
  viewport: Viewport;
  orthonormal: boolean;
  layers: SceneLayer[];
}

export interface LocusResponse {
  implicit: string;
  mover: string;
  free_parameters: string[];
  exclusions: string[];
  /** Sampled trace as [t, x, y] triples; excluded parameter values are absent. */
  samples: [number, number, number][];
  analysis: AnalysisReport;
  provenance: Record<string, unknown>;
  scene: Scene;
  notes: string[];
}

export interface AnalysisReport {
  curve: string;
  degree: number;
  irreducible: boolean;
  factors: { poly: string; multiplicity: number; degree: number }[];
  symmetry: Record<string, boolean>;
  singular_points: { x: string; y: string; kind: string }[];
  [key: string]: unknown;
}

export interface ApiError {
  code: string;
  message: string;
  location?: string;
}

export interface PlotResponse {
  svg: string;
}
