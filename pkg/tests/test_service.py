import numpy as np
import pytest
from fastapi.testclient import TestClient

from focklab.adhm import from_json_dict, mu_complex, to_json_dict
from focklab.adhm.fixed_points import fixed_point_data
from focklab.partitions import Partition
from focklab.service.app import app

client = TestClient(app)


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_goettsche_endpoint_plane():
    resp = client.post("/goettsche", json={"betti": [1, 0, 0, 0, 0], "order": 3})
    assert resp.status_code == 200
    body = resp.json()
    polys = [row["polynomial"] for row in body["rows"]]
    assert polys == ["1", "1", "1 + t^2", "1 + t^2 + t^4"]
    assert [row["euler"] for row in body["rows"]] == [1, 1, 2, 3]
    assert body["config"]["betti"] == [1, 0, 0, 0, 0]


def test_goettsche_endpoint_k3_q1():
    resp = client.post("/goettsche", json={"betti": [1, 0, 22, 0, 1], "order": 1})
    assert resp.status_code == 200
    row = resp.json()["rows"][1]
    assert row["coefficients"] == [1, 0, 22, 0, 1]


def test_goettsche_validation():
    assert client.post("/goettsche", json={"betti": [1, 0, 0, 0], "order": 3}).status_code == 422
    assert client.post("/goettsche", json={"betti": [1, 0, 0, 0, -1], "order": 3}).status_code == 422
    assert client.post("/goettsche", json={"betti": [1, 0, 0, 0, 0], "order": -1}).status_code == 422


def test_verify_endpoint_identity():
    resp = client.post(
        "/verify", json={"suite": "identity", "order": 5, "betti": [1, 0, 22, 0, 1]}
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["all_passed"] is True
    assert len(body["checks"]) == 1


def test_verify_endpoint_characters():
    resp = client.post("/verify", json={"suite": "characters", "order": 12})
    assert resp.status_code == 200
    assert resp.json()["all_passed"] is True


def test_verify_unknown_suite_rejected():
    assert client.post("/verify", json={"suite": "everything"}).status_code == 422


def test_adhm_fixed_endpoint():
    resp = client.post("/adhm/fixed", json={"partition": [2, 1]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["mu_c_norm"] == 0.0
    assert body["stable"] is True
    assert body["complex_ok"] is True
    datum = from_json_dict(body["datum"])
    expected, _ = fixed_point_data(Partition((2, 1)))
    assert np.array_equal(datum.b1, expected.b1)
    assert sorted(map(tuple, body["weights"])) == [(1, 0), (1, 1), (2, 0)]


def test_adhm_fixed_invalid_partition():
    resp = client.post("/adhm/fixed", json={"partition": [1, 2]})
    assert resp.status_code == 400


def test_adhm_flow_endpoint():
    resp = client.post("/adhm/flow", json={"n": 2, "r": 1, "seed": 7})
    assert resp.status_code == 200
    body = resp.json()
    assert body["converged"] is True
    assert body["residual"] <= 1e-8
    assert body["mu_c_norm"] <= 1e-7


def test_adhm_flow_accepts_explicit_datum():
    d, _ = fixed_point_data(Partition((1, 1)))
    resp = client.post("/adhm/flow", json={"datum": to_json_dict(d)})
    assert resp.status_code == 200
    body = resp.json()
    assert body["converged"] is True
    moved = from_json_dict(body["datum"])
    assert abs(np.linalg.norm(moved.i) ** 2 - 2.0) < 1e-6
    assert float(np.linalg.norm(mu_complex(moved))) < 1e-8


def test_adhm_flow_unstable_rejected():
    unstable = {
        "n": 2,
        "r": 1,
        "B1": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
        "B2": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
        "i": [[[1, 0]], [[0, 0]]],
        "j": [[[0, 0], [0, 0]]],
    }
    resp = client.post("/adhm/flow", json={"datum": unstable})
    assert resp.status_code == 400
    assert "unstable" in resp.json()["detail"]


def test_adhm_dim_endpoint():
    resp = client.post("/adhm/dim", json={"n": 1, "r": 1})
    assert resp.status_code == 200
    body = resp.json()
    assert body["dimension"] == 4
    assert body["expected"] == 4


def test_responses_are_deterministic():
    a = client.post("/adhm/flow", json={"n": 2, "r": 1, "seed": 3}).content
    b = client.post("/adhm/flow", json={"n": 2, "r": 1, "seed": 3}).content
    assert a == b


@pytest.mark.parametrize("payload", [{"n": 0, "r": 1}, {"n": 1, "r": 1, "tol": 0.0}])
def test_flow_request_validation(payload):
    assert client.post("/adhm/flow", json=payload).status_code == 422
