import pytest
from fastapi.testclient import TestClient

from circlegeom import GroundSet, build_catalog, export_tikz, load_configuration
from circlegeom.service import create_app

from conftest import FIXTURES


@pytest.fixture(scope="module")
def client():
    records = []
    for n in (1, 2, 3):
        records.extend(build_catalog(GroundSet(n)))
    return TestClient(create_app(records))


def _circles(*items):
    return [
        {"label": lab, "x": x, "y": y, "r": r} for (lab, x, y, r) in items
    ]


CHAIN2_CIRCLES = _circles(("a", 0.2, 0.1, 0.0), ("b", 0.0, 0.0, 1.0))
FAR3_CIRCLES = _circles(
    ("a", 0.0, 0.0, 1.0), ("b", 100.0, 10.0, 1.0), ("c", 50.0, 90.0, 1.0)
)


def test_list_geometries_with_filters(client):
    resp = client.get("/api/geometries", params={"n": 3})
    assert resp.status_code == 200
    assert len(resp.json()["geometries"]) == 6
    resp = client.get("/api/geometries", params={"n": 3, "cdim": 1})
    ids = [rec["id"] for rec in resp.json()["geometries"]]
    assert ids == ["G3-1"]
    resp = client.get("/api/geometries", params={"status": "open"})
    assert len(resp.json()["geometries"]) == 1 + 2 + 6


def test_get_geometry_by_id(client):
    resp = client.get("/api/geometries/G3-1")
    assert resp.status_code == 200
    assert resp.json()["family_mask"] == 139
    resp = client.get("/api/geometries/G9-1")
    assert resp.status_code == 404
    assert resp.json()["error"] == "not found"


def test_induce_far_circles_is_powerset(client):
    resp = client.post("/api/induce", json={"circles": FAR3_CIRCLES})
    assert resp.status_code == 200
    body = resp.json()
    assert body["family_mask"] == 255
    assert body["marginal_pairs"] == []
    assert "hulls" not in body


def test_induce_with_hulls(client):
    resp = client.post(
        "/api/induce", json={"circles": CHAIN2_CIRCLES, "include_hulls": True}
    )
    body = resp.json()
    assert body["family_mask"] == 11
    assert len(body["hulls"]) == 3
    by_subset = {h["subset"]: h["features"] for h in body["hulls"]}
    assert {f["type"] for f in by_subset["ab"]} == {"arc"}


def test_verify_chain_fixture(client):
    resp = client.post(
        "/api/verify", json={"geometry_id": "G2-1", "circles": CHAIN2_CIRCLES}
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["verdict"] == "verified"
    assert body["induced_family_mask"] == 11
    resp = client.post(
        "/api/verify",
        json={"geometry_id": "G2-2", "circles": CHAIN2_CIRCLES, "by_propositions": True},
    )
    assert resp.json()["verdict"] == "failed"
    assert resp.json()["non_closed_meet_irreducibles"] == ["b"]


def test_verify_matches_library(client, fixture_configurations):
    conf = load_configuration(FIXTURES / "chain2.json")
    from circlegeom import ConvexGeometry, verify_full

    report = verify_full(ConvexGeometry(GroundSet(2), 11), conf)
    resp = client.post(
        "/api/verify", json={"family_mask": 11, "circles": CHAIN2_CIRCLES}
    )
    assert resp.json()["verdict"] == report.verdict
    assert resp.json()["induced_family_mask"] == report.induced


def test_verify_error_codes(client):
    resp = client.post("/api/verify", json={"circles": CHAIN2_CIRCLES})
    assert resp.status_code == 422
    resp = client.post(
        "/api/verify",
        json={"geometry_id": "G2-1", "family_mask": 11, "circles": CHAIN2_CIRCLES},
    )
    assert resp.status_code == 422
    resp = client.post(
        "/api/verify", json={"geometry_id": "G9-9", "circles": CHAIN2_CIRCLES}
    )
    assert resp.status_code == 404
    resp = client.post(
        "/api/verify", json={"geometry_id": "G3-1", "circles": CHAIN2_CIRCLES}
    )
    assert resp.status_code == 422
    # a family mask that is not a convex geometry
    resp = client.post(
        "/api/verify", json={"family_mask": 9, "circles": CHAIN2_CIRCLES}
    )
    assert resp.status_code == 422


def test_malformed_requests_are_400(client):
    resp = client.post("/api/induce", json={"circles": [{"label": "a"}]})
    assert resp.status_code == 400
    assert resp.json()["error"] == "malformed request"
    resp = client.post(
        "/api/induce",
        json={"circles": _circles(("a", 0, 0, 1), ("z", 1, 1, 1))},
    )
    assert resp.status_code == 400
    resp = client.post(
        "/api/induce",
        json={"circles": _circles(("a", 0, 0, 1), ("a", 1, 1, 1))},
    )
    assert resp.status_code == 400


def test_hull_endpoint(client):
    resp = client.post(
        "/api/hull", json={"circles": FAR3_CIRCLES, "subset": "ab"}
    )
    assert resp.status_code == 200
    feats = resp.json()["features"]
    assert sum(1 for f in feats if f["type"] == "arc") == 2
    assert sum(1 for f in feats if f["type"] == "segment") == 2
    resp = client.post("/api/hull", json={"circles": FAR3_CIRCLES, "subset": ""})
    assert resp.status_code == 422


def test_tikz_endpoint_matches_cli_export(client):
    conf = load_configuration(FIXTURES / "chain2.json")
    resp = client.post(
        "/api/tikz", json={"circles": CHAIN2_CIRCLES, "width": 8.0}
    )
    assert resp.status_code == 200
    assert resp.text == export_tikz(conf, 8.0)
    resp = client.post("/api/tikz", json={"circles": CHAIN2_CIRCLES, "width": -1})
    assert resp.status_code == 422
