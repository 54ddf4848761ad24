"""Deterministic curve plotting.

Implicit curves are contoured with marching squares (linear interpolation on
sign-changing cell edges, center sample to disambiguate saddle cells) and
scenes render to SVG 1.1 text with fixed 4-decimal coordinates and stable
element ordering, so identical scenes produce byte-identical documents.

Algebra stays exact upstream; coefficients are converted to double precision
only when a grid or an SVG coordinate is produced.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .poly import MultiPoly

_STYLE_RE = re.compile(r"^[a-z][a-z0-9_-]*$")

_PALETTE = {
    "axis": "#9a9a9a",
    "base": "#1f77b4",
    "locus": "#d62728",
    "contour": "#d62728",
    "construction": "#2ca02c",
    "guide": "#9467bd",
    "point": "#222222",
}
_DEFAULT_COLOR = "#333333"


def _finite(v, what):
    try:
        f = float(v)
    except (TypeError, ValueError):
        raise InputError(f"{what} must be a number, got {v!r}")
    if not math.isfinite(f):
        raise InputError(f"{what} must be finite")
    return f


def _style(token):
    if not isinstance(token, str) or not _STYLE_RE.match(token):
        raise InputError(f"style token must be a lowercase identifier, got {token!r}")
    return token


@dataclass(frozen=True)
class Viewport:
    """Axis-aligned world-coordinate window."""

    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self):
        for name in ("xmin", "xmax", "ymin", "ymax"):
            object.__setattr__(self, name, _finite(getattr(self, name), name))
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise InputError("viewport must have positive width and height")

    def to_json(self):
        return {"x": [self.xmin, self.xmax], "y": [self.ymin, self.ymax]}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or set(data) - {"x", "y"} or "x" not in data or "y" not in data:
            raise InputError('viewport must be {"x": [lo, hi], "y": [lo, hi]}')
        x, y = data["x"], data["y"]
        if not (isinstance(x, (list, tuple)) and len(x) == 2 and isinstance(y, (list, tuple)) and len(y) == 2):
            raise InputError("viewport ranges must be two-element lists")
        return cls(x[0], x[1], y[0], y[1])


def _check_points(points, what):
    out = []
    for p in points:
        if not isinstance(p, (list, tuple)) or len(p) != 2:
            raise InputError(f"{what} entries must be [x, y] pairs")
        out.append((_finite(p[0], what + " x"), _finite(p[1], what + " y")))
    return out


def polyline_layer(points, style="locus"):
    return {"kind": "polyline", "style": _style(style), "points": _check_points(points, "polyline")}


def segments_layer(segments, style="contour"):
    segs = []
    for s in segments:
        if not isinstance(s, (list, tuple)) or len(s) != 2:
            raise InputError("segment entries must be [[x1, y1], [x2, y2]] pairs")
        a = _check_points([s[0]], "segment")[0]
        b = _check_points([s[1]], "segment")[0]
        segs.append((a, b))
    return {"kind": "segments", "style": _style(style), "segments": segs}


def vline_layer(x, style="guide"):
    return {"kind": "vline", "style": _style(style), "x": _finite(x, "vline x")}


def hline_layer(y, style="guide"):
    return {"kind": "hline", "style": _style(style), "y": _finite(y, "hline y")}


def points_layer(points, style="point"):
    return {"kind": "points", "style": _style(style), "points": _check_points(points, "points")}


_LAYER_BUILDERS = {
    "polyline": lambda d: polyline_layer(d.get("points", []), d.get("style", "locus")),
    "segments": lambda d: segments_layer(d.get("segments", []), d.get("style", "contour")),
    "vline": lambda d: vline_layer(d.get("x", 0.0), d.get("style", "guide")),
    "hline": lambda d: hline_layer(d.get("y", 0.0), d.get("style", "guide")),
    "points": lambda d: points_layer(d.get("points", []), d.get("style", "point")),
}


@dataclass
class PlotScene:
    """Ordered drawing layers over a viewport.

    With ``orthonormal`` set, x and y share one scale so circles look like
    circles; otherwise each axis is scaled independently to fill the canvas.
    """

    viewport: Viewport
    layers: list = field(default_factory=list)
    orthonormal: bool = True

    def add(self, layer):
        self.layers.append(layer)
        return self

    def to_json(self):
        out = []
        for layer in self.layers:
            d = {"kind": layer["kind"], "style": layer["style"]}
            if layer["kind"] == "polyline":
                d["points"] = [[x, y] for x, y in layer["points"]]
            elif layer["kind"] == "segments":
                d["segments"] = [[[a[0], a[1]], [b[0], b[1]]] for a, b in layer["segments"]]
            elif layer["kind"] == "vline":
                d["x"] = layer["x"]
            elif layer["kind"] == "hline":
                d["y"] = layer["y"]
            elif layer["kind"] == "points":
                d["points"] = [[x, y] for x, y in layer["points"]]
            out.append(d)
        return {"viewport": self.viewport.to_json(), "orthonormal": self.orthonormal, "layers": out}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise InputError("scene must be a JSON object")
        unknown = set(data) - {"viewport", "orthonormal", "layers"}
        if unknown:
            raise InputError("unknown scene fields: " + ", ".join(sorted(unknown)))
        if "viewport" not in data:
            raise InputError("scene requires a viewport")
        viewport = Viewport.from_json(data["viewport"])
        orthonormal = data.get("orthonormal", True)
        if not isinstance(orthonormal, bool):
            raise InputError("orthonormal must be a boolean")
        layers = []
        for i, entry in enumerate(data.get("layers", [])):
            if not isinstance(entry, dict) or "kind" not in entry:
                raise InputError(f"layer {i} must be an object with a kind")
            builder = _LAYER_BUILDERS.get(entry["kind"])
            if builder is None:
                raise InputError(f"layer {i}: unknown kind {entry['kind']!r}")
            layers.append(builder(entry))
        return cls(viewport, layers, orthonormal)


def _as_fraction(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(v).limit_denominator(10**9)
    if isinstance(v, str):
        return Fraction(v)
    raise InputError(f"cannot interpret {v!r} as an exact number")


def _compile_xy(F: MultiPoly, bindings):
    """Bind parameters exactly, then lower to float (coeff, x-exp, y-exp) terms."""
    if bindings:
        F = F.substitute({k: MultiPoly.const(_as_fraction(v)) for k, v in bindings.items()})
    extra = F.variables() - {"x", "y"}
    if extra:
        raise InputError("unbound parameters: " + ", ".join(sorted(extra)))
    terms = []
    for mono, coeff in F.terms.items():
        d = dict(mono)
        terms.append((float(coeff), d.get("x", 0), d.get("y", 0)))
    terms.sort(key=lambda t: (t[1], t[2], t[0]))

    def ev(x, y):
        return sum(c * x**ex * y**ey for c, ex, ey in terms)

    return ev


# marching-squares case table: cell corner bits are 1 when F < 0, packed as
# bottom-left | bottom-right<<1 | top-right<<2 | top-left<<3; each entry lists
# the crossed-edge pairs to join. Cases 5 and 10 are saddles, resolved by the
# sign of F at the cell center.
_MS_CASES = {
    0: [],
    1: [("left", "bottom")],
    2: [("bottom", "right")],
    3: [("left", "right")],
    4: [("top", "right")],
    6: [("bottom", "top")],
    7: [("left", "top")],
    8: [("left", "top")],
    9: [("bottom", "top")],
    11: [("top", "right")],
    12: [("left", "right")],
    13: [("bottom", "right")],
    14: [("left", "bottom")],
    15: [],
}


def contour_implicit(F: MultiPoly, bindings, viewport: Viewport, grid_n: int = 64):
    """Marching-squares zero-set segments of F(x, y) over the viewport.

    Returns a deterministic list of ((x1, y1), (x2, y2)) float segments; an
    empty list means no sign change was seen on the grid.
    """
    if not isinstance(viewport, Viewport):
        viewport = Viewport.from_json(viewport)
    if grid_n < 8:
        raise InputError("contour grid must be at least 8 cells per side")
    ev = _compile_xy(F, bindings)
    n = int(grid_n)
    xs = [viewport.xmin + (viewport.xmax - viewport.xmin) * i / n for i in range(n + 1)]
    ys = [viewport.ymin + (viewport.ymax - viewport.ymin) * j / n for j in range(n + 1)]
    vals = [[ev(x, y) for x in xs] for y in ys]

    def interp(xa, ya, va, xb, yb, vb):
        t = va / (va - vb)
        return (xa + (xb - xa) * t, ya + (yb - ya) * t)

    segments = []
    for j in range(n):
        y0, y1 = ys[j], ys[j + 1]
        row0, row1 = vals[j], vals[j + 1]
        for i in range(n):
            x0, x1 = xs[i], xs[i + 1]
            v00, v10 = row0[i], row0[i + 1]
            v01, v11 = row1[i], row1[i + 1]
            idx = (v00 < 0) | (v10 < 0) << 1 | (v11 < 0) << 2 | (v01 < 0) << 3
            if idx in (0, 15):
                continue
            if idx in (5, 10):
                center_inside = ev((x0 + x1) / 2, (y0 + y1) / 2) < 0
                if idx == 5:
                    pairs = [("left", "top"), ("bottom", "right")] if center_inside else [
                        ("left", "bottom"), ("top", "right")]
                else:
                    pairs = [("left", "bottom"), ("top", "right")] if center_inside else [
                        ("left", "top"), ("bottom", "right")]
            else:
                pairs = _MS_CASES[idx]
            edge_pts = {}

            def edge(name):
                if name not in edge_pts:
                    if name == "bottom":
                        edge_pts[name] = interp(x0, y0, v00, x1, y0, v10)
                    elif name == "top":
                        edge_pts[name] = interp(x0, y1, v01, x1, y1, v11)
                    elif name == "left":
                        edge_pts[name] = interp(x0, y0, v00, x0, y1, v01)
                    else:
                        edge_pts[name] = interp(x1, y0, v10, x1, y1, v11)
                return edge_pts[name]

            for a, b in pairs:
                segments.append((edge(a), edge(b)))
    return segments


def implicit_layer(F: MultiPoly, bindings, viewport: Viewport, grid_n: int = 64, style="contour"):
    return segments_layer(contour_implicit(F, bindings, viewport, grid_n), style)


def sample_polylines(samples, style="locus"):
    """Split (t, x, y) samples into polyline layers at parameter gaps.

    A gap wider than 1.5 grid steps marks skipped samples (excluded values,
    poles, runaway branches) and breaks the polyline there instead of
    bridging it.
    """
    if not samples:
        return []
    steps = [samples[k + 1][0] - samples[k][0] for k in range(len(samples) - 1)]
    base = min((s for s in steps if s > 0), default=0.0)
    runs, current = [], [samples[0]]
    for k in range(1, len(samples)):
        if base and samples[k][0] - samples[k - 1][0] > 1.5 * base:
            runs.append(current)
            current = [samples[k]]
        else:
            current.append(samples[k])
    runs.append(current)
    return [
        polyline_layer([(x, y) for _, x, y in run], style)
        for run in runs
        if len(run) >= 2
    ]


def _fmt(v):
    s = f"{v:.4f}"
    return "0.0000" if s == "-0.0000" else s


def render_svg(scene: PlotScene) -> str:
    """SVG 1.1 text for the scene: stable element order, 4-decimal numbers."""
    vp = scene.viewport
    margin = 24.0
    content_w = 600.0
    sx = content_w / (vp.xmax - vp.xmin)
    if scene.orthonormal:
        sy = sx
        content_h = (vp.ymax - vp.ymin) * sy
    else:
        content_h = 400.0
        sy = content_h / (vp.ymax - vp.ymin)
    width = content_w + 2 * margin
    height = content_h + 2 * margin

    def px(x):
        return margin + (x - vp.xmin) * sx

    def py(y):
        return margin + (vp.ymax - y) * sy

    def line(x1, y1, x2, y2, extra=""):
        return (f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"{extra}/>')

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<g class="axis" stroke="{_PALETTE["axis"]}" stroke-width="1">',
    ]
    if vp.xmin < 0 < vp.xmax:
        parts.append(line(px(0), py(vp.ymin), px(0), py(vp.ymax)))
    if vp.ymin < 0 < vp.ymax:
        parts.append(line(px(vp.xmin), py(0), px(vp.xmax), py(0)))
    parts.append("</g>")

    for layer in scene.layers:
        color = _PALETTE.get(layer["style"], _DEFAULT_COLOR)
        kind = layer["kind"]
        if kind == "polyline":
            pts = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in layer["points"])
            parts.append(
                f'<polyline class="{layer["style"]}" fill="none" stroke="{color}" '
                f'stroke-width="1.5" points="{pts}"/>'
            )
        elif kind == "segments":
            parts.append(f'<g class="{layer["style"]}" stroke="{color}" stroke-width="1.5">')
            for (ax, ay), (bx, by) in layer["segments"]:
                parts.append(line(px(ax), py(ay), px(bx), py(by)))
            parts.append("</g>")
        elif kind == "vline":
            parts.append(
                f'<g class="{layer["style"]}" stroke="{color}" stroke-width="1" '
                'stroke-dasharray="4 3">'
            )
            parts.append(line(px(layer["x"]), py(vp.ymin), px(layer["x"]), py(vp.ymax)))
            parts.append("</g>")
        elif kind == "hline":
            parts.append(
                f'<g class="{layer["style"]}" stroke="{color}" stroke-width="1" '
                'stroke-dasharray="4 3">'
            )
            parts.append(line(px(vp.xmin), py(layer["y"]), px(vp.xmax), py(layer["y"])))
            parts.append("</g>")
        elif kind == "points":
            parts.append(f'<g class="{layer["style"]}" fill="{color}">')
            for x, y in layer["points"]:
                parts.append(f'<circle cx="{_fmt(px(x))}" cy="{_fmt(py(y))}" r="3"/>')
            parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_frames(scenes) -> list:
    """One SVG document per scene, e.g. for a parameter sweep."""
    return [render_svg(s) for s in scenes]
