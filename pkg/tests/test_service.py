import json

import pytest
from fastapi.testclient import TestClient

from dbcompare.service import EngineState, create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(EngineState()))


def test_protocols_endpoint(client):
    doc = client.get("/api/protocols").json()
    assert len(doc["protocols"]) == 13
    ids = {p["id"] for p in doc["protocols"]}
    assert "SwissKnife" in ids
    ski = next(p for p in doc["protocols"] if p["id"] == "SKI")
    assert ski["provenance"]["p_d"] == "bound-only"
    assert ski["grid_size"] == 7936


def test_instances_paging(client):
    doc = client.get("/api/instances",
                     params={"protocol": "BC", "offset": 10, "limit": 5}).json()
    assert doc["total"] == 256
    assert [i["id"] for i in doc["items"]] == [
        "BC-{11}", "BC-{12}", "BC-{13}", "BC-{14}", "BC-{15}"]
    assert client.get("/api/instances",
                      params={"protocol": "NOPE"}).status_code == 404


def test_instance_lookup(client):
    doc = client.get("/api/instance/BC-{16}").json()
    assert doc["raw"]["log2_p_m"] == -16
    assert doc["raw"]["c"] == 2
    assert doc["raw"]["s"] is True
    assert doc["scaled"]["p_m"] == "2^-16"
    assert client.get("/api/instance/BC-{999}").status_code == 404


def test_pareto_endpoint(client):
    doc = client.post("/api/pareto", json={"y": "2^-16"}).json()
    assert "BC-{16}" in doc["member_ids"]
    assert doc["totals"]["BC"] == 241
    assert doc["totals"]["SwissKnife"] == 241
    assert doc["totals"]["SKI"] == 218
    row = next(r for r in doc["rows"] if r["id"] == "BC-{16}")
    assert row["p_m"] == "2^-16" and row["p_d"] == "2^-16"
    assert row["total"] == 241


def test_pareto_empty_and_errors(client):
    assert client.post("/api/pareto", json={"y": "0"}).json()["rows"] == []
    assert client.post("/api/pareto", json={"y": "junk"}).status_code == 400
    assert client.post("/api/pareto", json={"y": "1.5"}).status_code == 422
    assert client.post("/api/pareto",
                       json={"y": "0.5", "protocols": ["XX"]}).status_code == 404


def test_pareto_protocol_subset(client):
    doc = client.post("/api/pareto",
                      json={"y": "1", "protocols": ["BC"]}).json()
    assert doc["totals"] == {"BC": 256}
    assert len(doc["member_ids"]) == 256


def test_pareto_constants_override(client):
    base = client.post("/api/pareto", json={"y": "2^-16"}).json()
    alt = client.post("/api/pareto",
                      json={"y": "2^-16",
                            "constants": {"delta": 256, "sigma": 256}}).json()
    assert base["totals"]["BC"] == alt["totals"]["BC"] == 241
    bad = client.post("/api/pareto",
                      json={"y": "0.5", "constants": {"zzz": 1}})
    assert bad.status_code == 400


def test_stateless_identical_responses(client):
    a = client.post("/api/pareto", json={"y": "2^-32"}).text
    b = client.post("/api/pareto", json={"y": "2^-32"}).text
    assert a == b


def test_spider_endpoint(client):
    resp = client.post("/api/chart/spider",
                       json={"instance_ids": ["BC-{16}", "Tree-{16,8}"]})
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("image/svg+xml")
    assert resp.text.startswith("<svg")
    assert client.post("/api/chart/spider",
                       json={"instance_ids": []}).status_code == 400
    assert client.post("/api/chart/spider",
                       json={"instance_ids": ["ZZ-{1}"]}).status_code == 404
    norm = client.post("/api/chart/spider",
                       json={"instance_ids": ["SwissKnife-{128}", "SKI-{64,2}"],
                             "normalization": "BC-{128}"})
    assert norm.status_code == 200
