"""HTTP endpoints mirror the handlers."""

import pytest
from fastapi.testclient import TestClient

from koszulmin.serialize import canonical_dumps
from koszulmin.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200 and r.json() == {"status": "ok"}


def test_transfer_endpoint(client):
    r = client.post("/transfer", json={"n": 1, "d": 3, "potential": "x1^3"})
    assert r.status_code == 200
    doc = r.json()
    assert doc["n"] == 1 and doc["d"] == 3
    cube = [e for e in doc["entries"] if e["k"] == 3]
    assert cube[0]["output"] == [{"u": 1, "theta": [], "num": "1", "den": "1"}]


def test_transfer_endpoint_parallel_agrees(client):
    base = client.post("/transfer", json={"n": 2, "d": 3, "potential": "x1^3+x2^3"})
    par = client.post(
        "/transfer",
        json={"n": 2, "d": 3, "potential": "x1^3+x2^3", "parallelism": 4},
    )
    assert canonical_dumps(base.json()) == canonical_dumps(par.json())


def test_transfer_endpoint_rejects_bad_potential(client):
    r = client.post("/transfer", json={"n": 2, "d": 3, "potential": "x1^2"})
    assert r.status_code == 422
    r = client.post("/transfer", json={"n": 0, "d": 3, "potential": "x1^3"})
    assert r.status_code == 422  # pydantic bound


def test_check_endpoint(client):
    r = client.post(
        "/check",
        json={"n": 2, "d": 2, "potential": "x1*x2", "suite": "side"},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["all_pass"] is True
    assert body["reports"][0]["check_name"] == "side_conditions"


def test_sod_endpoint(client):
    r = client.post("/sod", json={"kind": "orlov", "dim": 5, "degree": 3})
    assert r.status_code == 200 and r.json()["case"] == 1
    r = client.post("/sod", json={"kind": "lefschetz", "rank": 5, "degree": 2})
    assert r.json() == {"i": 2, "k": 1}
    r = client.post("/sod", json={"kind": "orlov", "dim": 5})
    assert r.status_code == 422
    r = client.post("/sod", json={"kind": "orlov", "dim": 0, "degree": 3})
    assert r.status_code == 422
