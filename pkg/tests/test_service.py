"""HTTP JSON API: endpoints, error mapping, determinism."""
import json

import pytest
from fastapi.testclient import TestClient

from curvelab.service import create_app


@pytest.fixture(scope="module")
def client():
    app = create_app()
    with TestClient(app, raise_server_exceptions=False) as c:
        yield c


# -- catalog ---------------------------------------------------------------------

def test_catalog_endpoint(client):
    r = client.get("/api/v1/catalog")
    assert r.status_code == 200
    doc = r.json()
    names = [c["name"] for c in doc["constructions"]]
    assert len(names) >= 6
    assert "kulp" in names and "gerono" in names
    for entry in doc["constructions"]:
        assert entry["params"]
        assert entry["mover"]
        for p in entry["params"]:
            assert set(p) >= {"name", "default", "min", "max"}


def test_api_alias_matches_api_v1(client):
    a = client.get("/api/v1/catalog")
    b = client.get("/api/catalog")
    assert a.status_code == b.status_code == 200
    assert a.content == b.content


# -- locus --------------------------------------------------------------------------

def test_locus_gerono(client):
    r = client.post(
        "/api/v1/locus",
        json={"construction": "gerono", "bindings": {"a": 2, "b": 1}},
    )
    assert r.status_code == 200
    doc = r.json()
    assert doc["implicit"] == "x^4 - 4*x^2 + y^2"
    assert doc["mover"]
    assert doc["samples"]
    for t, x, y in doc["samples"]:
        assert abs(x**4 - 4 * x**2 + y**2) < 1e-8
    assert doc["analysis"]["singular_points"] == [{"x": 0, "y": 0, "kind": "node"}]
    assert doc["scene"]["viewport"]
    assert doc["provenance"]["eliminated"]


def test_locus_symbolic_parameters_listed(client):
    r = client.post("/api/v1/locus", json={"construction": "gerono"})
    assert r.status_code == 200
    doc = r.json()
    assert doc["implicit"] == "x^4 - a^2*x^2 + b^2*y^2"
    assert sorted(doc["free_parameters"]) == ["a", "b"]


def test_locus_accepts_dsl_source(client):
    from curvelab.catalog import construction_source

    r1 = client.post("/api/v1/locus", json={"construction": "gerono", "bindings": {"a": 2, "b": 1}})
    r2 = client.post(
        "/api/v1/locus",
        json={"dsl": construction_source("gerono"), "bindings": {"a": 2, "b": 1}},
    )
    assert r2.status_code == 200
    assert r1.json()["implicit"] == r2.json()["implicit"]


def test_locus_statelessness(client):
    body = {"construction": "kulp", "bindings": {"r": 4}}
    first = client.post("/api/v1/locus", json=body)
    second = client.post("/api/v1/locus", json=body)
    assert first.status_code == second.status_code == 200
    a, b = first.json(), second.json()
    # wall-clock timing is the only field allowed to differ between calls
    a["provenance"].pop("elapsed_ms")
    b["provenance"].pop("elapsed_ms")
    assert a == b
    assert a["implicit"] == b["implicit"]


# -- implicitize ------------------------------------------------------------------------

def test_implicitize_curve_with_line(client):
    r = client.post(
        "/api/v1/implicitize",
        json={"curve": "ellipse", "line": "x=a"},
    )
    assert r.status_code == 200
    assert r.json()["implicit"] == "b^2*x^2 + x^2*y^2 - a^2*b^2"


def test_implicitize_construction_via_curve_field(client):
    r = client.post("/api/v1/implicitize", json={"curve": "kulp"})
    assert r.status_code == 200
    assert r.json()["implicit"] == "r^2*x^2 + x^2*y^2 - r^4"


def test_implicitize_matches_cli_text(client, capsys):
    from curvelab.cli import main

    assert main(["implicitize", "circle", "--param", "r", "--line", "x=r"]) == 0
    cli_text = capsys.readouterr().out.strip()
    r = client.post("/api/v1/implicitize", json={"curve": "circle", "line": "x=r"})
    assert r.status_code == 200
    assert r.json()["implicit"] == cli_text


# -- plot ---------------------------------------------------------------------------------

def test_plot_endpoint_returns_svg(client):
    r = client.post(
        "/api/v1/plot",
        json={
            "scene": {
                "viewport": {"x": [-2, 2], "y": [-2, 2]},
                "orthonormal": True,
                "layers": [
                    {"kind": "polyline", "style": "locus", "points": [[0, 0], [1, 1]]}
                ],
            }
        },
    )
    assert r.status_code == 200
    svg = r.json()["svg"]
    assert svg.startswith("<?xml")
    assert svg.rstrip().endswith("</svg>")


# -- error mapping ----------------------------------------------------------------------------

def test_unknown_construction_maps_to_400(client):
    r = client.post("/api/v1/locus", json={"construction": "klein_bottle"})
    assert r.status_code == 400
    body = r.json()
    assert body["code"] == "input-error"
    assert "klein_bottle" in body["message"]


def test_validation_error_maps_to_400(client):
    r = client.post("/api/v1/locus", json={"construction": "gerono", "deadline_ms": 1})
    assert r.status_code == 400
    assert r.json()["code"] == "input-error"


def test_extra_fields_rejected(client):
    r = client.post("/api/v1/locus", json={"construction": "gerono", "bogus": 1})
    assert r.status_code == 400


def test_both_construction_and_dsl_rejected(client):
    r = client.post(
        "/api/v1/locus", json={"construction": "gerono", "dsl": "param a\nlocus P\n"}
    )
    assert r.status_code == 400


def test_deadline_maps_to_408(client):
    r = client.post(
        "/api/v1/locus",
        json={"construction": "nephroid_hyperbolism", "deadline_ms": 150},
    )
    assert r.status_code == 408
    assert r.json()["code"] == "deadline-exceeded"


def test_internal_errors_do_not_leak(client, monkeypatch):
    import curvelab.service as service_mod

    def boom(*args, **kwargs):
        raise RuntimeError("secret internals: s3cr3t-token")

    # break a real handler dependency so a genuine request path crashes
    monkeypatch.setattr(service_mod, "analyze_curve", boom)
    with TestClient(service_mod.create_app(), raise_server_exceptions=False) as c:
        r = c.post("/api/v1/locus", json={"construction": "kulp", "bindings": {"r": 4}})
    assert r.status_code == 500
    assert r.json()["code"] == "internal-error"
    assert "s3cr3t" not in r.text


def test_cors_preflight(client):
    r = client.options(
        "/api/v1/catalog",
        headers={
            "Origin": "http://localhost:5173",
            "Access-Control-Request-Method": "GET",
        },
    )
    assert r.status_code in (200, 204)
    assert r.headers.get("access-control-allow-origin") == "*"
