from fastapi.testclient import TestClient

from weilsieve.service.app import app

client = TestClient(app)


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_analyze_f8_quartic():
    resp = client.post("/analyze", json={"q": 8, "h": [57, 102, 58, 13, 1]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["verdict"] == "ELIMINATED"
    assert body["g"] == 4
    last = body["tests"][-1]
    assert last["name"] == "pp_ordinary_simple"
    assert last["status"] == "no_pp"
    assert last["certificate"]["norm"] == 39601


def test_analyze_rejects_bad_inputs():
    assert client.post("/analyze",
                       json={"q": 6, "h": [1, 1]}).status_code == 422
    assert client.post("/analyze",
                       json={"q": 2, "h": [-3, 1]}).status_code == 422
    assert client.post("/analyze", json={
        "q": 2, "h": [1, 1],
        "options": {"tests": ["bogus"]}}).status_code == 422


def test_enumerate_empty_at_defect_zero():
    resp = client.post("/enumerate", json={"q": 2, "g": 2, "defect": 0})
    assert resp.status_code == 200
    assert resp.json()["candidates"] == []


def test_enumerate_degree_one():
    resp = client.post("/enumerate", json={"q": 2, "g": 1})
    assert resp.status_code == 200
    got = {tuple(c) for c in resp.json()["candidates"]}
    assert got == {(-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1)}


def test_run_batch_counts():
    resp = client.post("/run", json={"q": 2, "g": 2})
    assert resp.status_code == 200
    body = resp.json()
    counts = body["counts"]
    assert sum(counts.values()) == len(body["reports"])
    assert set(counts) == {"ELIMINATED", "CONSTRAINED", "OPEN"}
    for report in body["reports"]:
        assert report["q"] == 2 and report["g"] == 2
