"""HTTP facade: routes, schemas, validation codes, statelessness."""

import pytest
from fastapi.testclient import TestClient

from greedynim import GameSpec, Play, SweepBounds, enumerate_positions, normalize
from greedynim.service import create_app
from greedynim.wire import bestmove_payload, classify_payload


@pytest.fixture(scope="module")
def client() -> TestClient:
    return TestClient(create_app())


def test_health(client):
    first = client.get("/api/health")
    assert first.status_code == 200
    doc = first.json()
    assert doc["status"] == "ok"
    assert isinstance(doc["version"], str)
    assert client.get("/api/health").json() == doc


def test_classify_bounded_example(client):
    resp = client.post(
        "/api/classify",
        json={"variant": "bounded", "k": 2, "play": "misere", "heaps": [2, 1]},
    )
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["outcome"] == "N"
    assert doc["winningMoves"] == [2]
    assert doc["normalizedHeaps"] == [2, 1]
    assert doc["detail"]["matchedClause"] == "none"


def test_classify_empty_greedy(client):
    resp = client.post(
        "/api/classify", json={"variant": "greedy", "play": "misere", "heaps": []}
    )
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["outcome"] == "N"
    assert doc["winningMoves"] == []


def test_classify_normalizes_heap_order(client):
    resp = client.post(
        "/api/classify",
        json={"variant": "bounded", "k": 3, "play": "normal", "heaps": [1, 0, 4, 2]},
    )
    assert resp.json()["normalizedHeaps"] == [4, 2, 1]


def test_bestmove_examples(client):
    base = {"variant": "bounded", "k": 2, "play": "misere"}
    move = client.post("/api/bestmove", json={**base, "heaps": [2, 1]}).json()
    assert move == {
        "remove": 2,
        "resulting": [1],
        "resultingOutcome": "P",
        "noMoveReason": None,
    }
    stuck = client.post("/api/bestmove", json={**base, "heaps": [2, 2]}).json()
    assert stuck["remove"] is None
    assert stuck["noMoveReason"] == "p-position"
    empty = client.post(
        "/api/bestmove", json={"variant": "greedy", "play": "misere", "heaps": []}
    ).json()
    assert empty["noMoveReason"] == "immobile"


@pytest.mark.parametrize(
    ("body", "code"),
    [
        ({"variant": "bounded", "play": "misere", "heaps": [1]}, "missing_k"),
        ({"variant": "bounded", "k": 0, "play": "misere", "heaps": [1]}, "invalid_k"),
        ({"variant": "nim", "k": 2, "play": "misere", "heaps": [1]}, "invalid_variant"),
        ({"variant": "greedy", "play": "sudden", "heaps": [1]}, "invalid_play"),
        ({"variant": "greedy", "play": "normal", "heaps": [-2]}, "invalid_heap"),
        ({"variant": "greedy", "play": "normal"}, "invalid_heap"),
        ([1, 2, 3], "invalid_body"),
    ],
)
def test_validation_codes(client, body, code):
    for route in ("/api/classify", "/api/bestmove"):
        resp = client.post(route, json=body)
        assert resp.status_code == 400
        doc = resp.json()
        assert doc["code"] == code
        assert isinstance(doc["message"], str) and doc["message"]


def test_malformed_json_body(client):
    resp = client.post(
        "/api/classify", content=b"{nope", headers={"Content-Type": "application/json"}
    )
    assert resp.status_code == 400
    assert resp.json()["code"] == "invalid_body"


def test_unknown_route_is_404(client):
    assert client.get("/api/nope").status_code == 404
    assert client.get("/nope").status_code == 404


def test_statelessness(client):
    body = {"variant": "greedy", "play": "normal", "heaps": [5, 5, 2]}
    first = client.post("/api/classify", json=body).json()
    for _ in range(3):
        assert client.post("/api/classify", json=body).json() == first


def test_cors_headers_present(client):
    resp = client.post(
        "/api/classify",
        json={"variant": "greedy", "play": "normal", "heaps": [1]},
        headers={"Origin": "http://localhost:5173"},
    )
    assert resp.headers.get("access-control-allow-origin") == "*"


def test_http_layer_matches_library_over_vector_suite(client):
    """Replay the verification vectors through the HTTP layer."""
    specs = [
        ("bounded", 1, GameSpec.bounded(1, Play.MISERE)),
        ("bounded", 2, GameSpec.bounded(2, Play.MISERE)),
        ("bounded", 2, GameSpec.bounded(2, Play.NORMAL)),
        ("greedy", None, GameSpec.greedy(Play.MISERE)),
    ]
    for pos in enumerate_positions(SweepBounds(3, 4)):
        heaps = list(pos.canonical())
        for variant, k, spec in specs:
            body = {"variant": variant, "play": spec.play.value, "heaps": heaps}
            if k is not None:
                body["k"] = k
            got = client.post("/api/classify", json=body).json()
            assert got == classify_payload(spec, pos)
            move = client.post("/api/bestmove", json=body).json()
            assert move == bestmove_payload(spec, pos)


def test_static_mount(tmp_path):
    (tmp_path / "index.html").write_text("<h1>playground</h1>", encoding="utf-8")
    client = TestClient(create_app(static_dir=str(tmp_path)))
    page = client.get("/")
    assert page.status_code == 200
    assert "playground" in page.text
    assert client.get("/api/health").status_code == 200


def test_static_mount_requires_directory(tmp_path):
    with pytest.raises(ValueError):
        create_app(static_dir=str(tmp_path / "missing"))


def test_restrictive_cors_origin():
    client = TestClient(create_app(cors_origins=("http://example.com",)))
    resp = client.post(
        "/api/classify",
        json={"variant": "greedy", "play": "normal", "heaps": [1]},
        headers={"Origin": "http://example.com"},
    )
    assert resp.headers.get("access-control-allow-origin") == "http://example.com"
