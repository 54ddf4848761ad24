"""HTTP JSON API consumed by the explorer frontend.

Endpoints live under /api/v1 (with an /api alias):
  GET  /catalog      — curves and constructions with parameter ranges
  POST /locus        — construction + bindings -> samples, implicit, analysis
  POST /implicitize  — catalog curve (optionally line-transformed) -> implicit
  POST /plot         — scene JSON -> SVG text

Every error body is {"code", "message", "location"?}; bad input gives 400,
an expired deadline gives 408, and anything unexpected gives a generic 500.
The service is stateless: deadlines and seeds ride on each request, so equal
requests give equal responses in any order.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from fastapi import APIRouter, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, ConfigDict, Field

from . import catalog
from .analysis import analyze_curve
from .elim import Deadline, implicitize
from .errors import ComputationError, CurveLabError, DeadlineExceeded, InputError
from .exprio import ParamSpec
from .locus import antihyperbolism, compile_construction, hyperbolism, trace_samples
from .plotting import PlotScene, Viewport, implicit_layer, render_svg, sample_polylines

_SEED_DEFAULT = 20260826


def _bindings(raw) -> dict:
    out = {}
    for name, value in (raw or {}).items():
        if not isinstance(name, str) or not name.isidentifier():
            raise InputError(f"binding name must be an identifier, got {name!r}")
        if isinstance(value, bool):
            raise InputError(f"binding {name}: booleans are not numbers")
        if isinstance(value, int):
            out[name] = Fraction(value)
        elif isinstance(value, float):
            out[name] = Fraction(value).limit_denominator(10**9)
        elif isinstance(value, str):
            try:
                out[name] = Fraction(value)
            except (ValueError, ZeroDivisionError):
                raise InputError(
                    f"binding {name}: expected a rational like '3/2', got {value!r}",
                    location=f"bindings.{name}",
                ) from None
        else:
            raise InputError(f"binding {name}: unsupported value type")
    return out


def _line_expr(text: str) -> str:
    body = text.strip()
    if body.startswith("x") and "=" in body:
        head, _, expr = body.partition("=")
        if head.strip() == "x":
            return expr.strip()
    return body


class LocusRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    construction: str | None = None
    dsl: str | None = None
    bindings: dict[str, int | float | str] = Field(default_factory=dict)
    method: str = Field(default="auto", pattern="^(auto|groebner|resultant|both)$")
    deadline_ms: int = Field(default=60000, ge=100, le=600000)
    seed: int = _SEED_DEFAULT
    sample_lo: float = -8.0
    sample_hi: float = 8.0
    sample_n: int = Field(default=512, ge=2, le=4096)
    viewport: dict | None = None
    grid_n: int = Field(default=64, ge=8, le=256)


class ImplicitizeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    curve: str
    line: str | None = None
    anti: bool = False
    bindings: dict[str, int | float | str] = Field(default_factory=dict)
    method: str = Field(default="auto", pattern="^(auto|groebner|resultant|both)$")
    deadline_ms: int = Field(default=60000, ge=100, le=600000)
    seed: int = _SEED_DEFAULT


class PlotRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scene: dict


def _construction_param_json(prog, pname):
    """Slider spec for a construction parameter: when the parameter is passed
    straight through to a base-curve parameter, inherit that curve's range."""
    for step in prog.steps:
        if step.kind == "point" and step.body and step.body[0] == "on_curve":
            curve_name, bound = step.body[1]
            for q, ast in bound.items():
                if ast == ("var", pname):
                    doc = catalog.curve_document(curve_name)
                    for spec in doc.params:
                        if spec.name == q:
                            return ParamSpec(pname, spec.default, spec.min, spec.max).to_json()
    return ParamSpec(pname, Fraction(1), Fraction(1, 4), Fraction(4)).to_json()


def _resolve_point(name: str, bindings, line: str | None, anti: bool):
    if name in catalog.curve_names():
        if line is not None:
            transform = antihyperbolism if anti else hyperbolism
            return transform(name, _line_expr(line), bindings)
        if anti:
            raise InputError("'anti' needs a 'line'")
        return catalog.curve_point(name, bindings)
    if name in catalog.construction_names():
        if line is not None or anti:
            raise InputError("'line'/'anti' apply to catalog curves, not constructions")
        return compile_construction(catalog.construction_program(name), bindings)
    raise InputError(
        f"unknown curve {name!r}; known: " + ", ".join(catalog.curve_names()),
        location="curve",
    )


def create_app() -> FastAPI:
    app = FastAPI(title="curvelab", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    router = APIRouter()

    @router.get("/catalog")
    def get_catalog():
        curves = [catalog.curve_document(n).to_json() for n in catalog.curve_names()]
        constructions = []
        for name in catalog.construction_names():
            prog = catalog.construction_program(name)
            constructions.append({
                "name": name,
                "params": [_construction_param_json(prog, p) for p in prog.params],
                "mover": _mover_name(prog),
                "source": catalog.construction_source(name),
            })
        return {"curves": curves, "constructions": constructions}

    @router.post("/locus")
    def post_locus(req: LocusRequest):
        if (req.construction is None) == (req.dsl is None):
            raise InputError("provide exactly one of 'construction' or 'dsl'")
        bindings = _bindings(req.bindings)
        if req.construction is not None:
            if req.construction not in catalog.construction_names():
                raise InputError(
                    f"unknown construction {req.construction!r}; known: "
                    + ", ".join(catalog.construction_names()),
                    location="construction",
                )
            program = catalog.construction_program(req.construction)
        else:
            program = req.dsl
        point = compile_construction(program, bindings)
        deadline = Deadline(req.deadline_ms / 1000.0)
        result = implicitize(
            point,
            method=req.method,
            deadline=deadline,
            construction=req.construction,
        )
        F = result.defining
        notes = []
        samples = []
        deadline.check()
        if not point.parameters():
            try:
                samples = trace_samples(point, req.sample_lo, req.sample_hi, req.sample_n)
            except ComputationError as e:
                notes.append(str(e))
        else:
            notes.append("free parameters left symbolic; no numeric samples")

        deadline.check()
        analysis = analyze_curve(F, point=point, seed=req.seed)

        deadline.check()
        viewport = Viewport.from_json(req.viewport) if req.viewport else Viewport(-5, 5, -5, 5)
        layers = []
        if not F.variables() - {"x", "y"}:
            layers.append(implicit_layer(F, {}, viewport, req.grid_n, "contour"))
        layers.extend(sample_polylines(samples, "locus"))
        scene = PlotScene(viewport, layers)

        return {
            "implicit": F.canonical_text(),
            "mover": point.parameter,
            "free_parameters": sorted(point.parameters()),
            "exclusions": point.exclusions.describe(),
            "samples": [[t, x, y] for t, x, y in samples],
            "analysis": analysis,
            "provenance": result.provenance,
            "scene": scene.to_json(),
            "notes": notes,
        }

    @router.post("/implicitize")
    def post_implicitize(req: ImplicitizeRequest):
        bindings = _bindings(req.bindings)
        point = _resolve_point(req.curve, bindings, req.line, req.anti)
        result = implicitize(
            point, method=req.method, deadline=Deadline(req.deadline_ms / 1000.0)
        )
        return {
            "implicit": result.defining.canonical_text(),
            "provenance": result.provenance,
            "exclusions": point.exclusions.describe(),
        }

    @router.post("/plot")
    def post_plot(req: PlotRequest):
        return {"svg": render_svg(PlotScene.from_json(req.scene))}

    app.include_router(router, prefix="/api/v1")
    app.include_router(router, prefix="/api")

    @app.exception_handler(CurveLabError)
    async def _domain_error(request: Request, exc: CurveLabError):
        status = 408 if isinstance(exc, DeadlineExceeded) else 400
        body = {"code": exc.code, "message": exc.message}
        if exc.location:
            body["location"] = exc.location
        return JSONResponse(status_code=status, content=body)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        errors = exc.errors()
        first = errors[0] if errors else {}
        loc = ".".join(str(part) for part in first.get("loc", ()) if part != "body")
        body = {"code": "input-error", "message": first.get("msg", "invalid request")}
        if loc:
            body["location"] = loc
        return JSONResponse(status_code=400, content=body)

    @app.exception_handler(Exception)
    async def _internal_error(request: Request, exc: Exception):
        return JSONResponse(
            status_code=500,
            content={"code": "internal-error", "message": "internal error"},
        )

    static_dir = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if static_dir.is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="explorer")

    return app


def _mover_name(prog):
    for step in prog.steps:
        if step.kind == "point" and step.body and step.body[0] == "on_curve":
            curve_name, bound = step.body[1]
            doc = catalog.curve_document(curve_name)
            if doc.rational_param:
                return doc.rational_param.get("var", "u")
    return "u"
