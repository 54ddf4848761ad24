/**
 * Pure presentation helpers: cosmetic equation typesetting and the
 * scene-to-pixel coordinate map for overlay markers. The pixel map mirrors
 * the service's fixed SVG layout (24 px margin, 600 px content width,
 * orthonormal axes) so client-drawn overlays land exactly on the server-drawn
 * curve.
 */

import type { Scene } from "./types.js";

const MARGIN = 24;
const CONTENT_W = 600;

export interface PixelMap {
  width: number;
  height: number;
  toX(x: number): number;
  toY(y: number): number;
}

export function pixelMap(scene: Scene): PixelMap {
  const [xmin, xmax] = scene.viewport.x;
  const [ymin, ymax] = scene.viewport.y;
  const sx = CONTENT_W / (xmax - xmin);
  const sy = scene.orthonormal ? sx : CONTENT_W / (ymax - ymin);
  const contentH = sy * (ymax - ymin);
  return {
    width: CONTENT_W + 2 * MARGIN,
    height: contentH + 2 * MARGIN,
    toX: (x) => MARGIN + (x - xmin) * sx,
    toY: (y) => MARGIN + (ymax - y) * sy,
  };
}

const HTML_ESCAPES: Record<string, string> = {
  "&": "&amp;",
  "<": "&lt;",
  ">": "&gt;",
};

function escapeHtml(text: string): string {
  return text.replace(/[&<>]/g, (ch) => HTML_ESCAPES[ch] as string);
}

/**
 * Cosmetic typeset view of canonical polynomial text: exponents become
 * superscripts and explicit multiplication dots replace '*'. The output is
 * display-only HTML and is never parsed back into algebra.
 */
export function typesetEquation(canonical: string): string {
  return (
    escapeHtml(canonical)
      .replace(/\^(\d+)/g, "<sup>$1</sup>")
      .replace(/\*/g, "·") + " = 0"
  );
}

/**
 * SVG fragment marking the mover's current sample point plus optional
 * construction guides (the ray from the origin and the vertical through the
 * point). Coordinates come straight from returned sample data.
 */
export function moverOverlay(
  scene: Scene,
  sample: [number, number, number],
  showGuides: boolean,
): string {
  const map = pixelMap(scene);
  const [, x, y] = sample;
  const px = map.toX(x).toFixed(4);
  const py = map.toY(y).toFixed(4);
  const parts: string[] = [];
  if (showGuides) {
    const ox = map.toX(0).toFixed(4);
    const oy = map.toY(0).toFixed(4);
    parts.push(
      `<line x1="${ox}" y1="${oy}" x2="${px}" y2="${py}" stroke="#c0392b" stroke-width="1" stroke-dasharray="4 3"/>`,
      `<line x1="${px}" y1="${map.toY(scene.viewport.y[0]).toFixed(4)}" x2="${px}" y2="${map.toY(scene.viewport.y[1]).toFixed(4)}" stroke="#c0392b" stroke-width="0.5" stroke-dasharray="2 3"/>`,
    );
  }
  parts.push(`<circle cx="${px}" cy="${py}" r="4" fill="#c0392b"/>`);
  return parts.join("");
}

/** One-line human summary of an analysis report for the status area. */
export function analysisSummary(report: {
  degree: number;
  irreducible: boolean;
  singular_points: { kind: string }[];
}): string {
  const sing =
    report.singular_points.length === 0
      ? "no singular points"
      : report.singular_points.map((p) => p.kind).join(", ");
  return `degree ${report.degree}, ${report.irreducible ? "irreducible" : "reducible"}, ${sing}`;
}
