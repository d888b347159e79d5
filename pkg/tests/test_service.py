import pytest
from fastapi.testclient import TestClient

from muvis.families import cycle_graph, path_graph, random_block_graph
from muvis.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def graph_payload(g):
    return {"n": g.n, "edges": g.edges()}


class TestHealth:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok"}


class TestGenerate:
    def test_cycle(self, client):
        resp = client.post(
            "/graphs/generate", json={"family": "cycle", "params": {"n": 5}}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["n"] == 5 and len(body["edges"]) == 5

    def test_cograph_recipe(self, client):
        resp = client.post(
            "/graphs/generate",
            json={
                "family": "cograph",
                "recipe": [["start", -1], ["true", 0], ["false", 0]],
            },
        )
        assert resp.status_code == 200
        assert resp.json()["n"] == 3

    def test_bad_family_422(self, client):
        resp = client.post("/graphs/generate", json={"family": "hypercube"})
        assert resp.status_code == 422

    def test_missing_param_422(self, client):
        resp = client.post("/graphs/generate", json={"family": "path"})
        assert resp.status_code == 422


class TestProduct:
    def test_p3_p3(self, client):
        p3 = graph_payload(path_graph(3))
        resp = client.post("/products/strong", json={"factors": [p3, p3]})
        assert resp.status_code == 200
        body = resp.json()
        assert body["graph"]["n"] == 9
        assert len(body["graph"]["edges"]) == 20
        assert body["factor_orders"] == [3, 3]

    def test_capacity_422(self, client):
        p9 = graph_payload(path_graph(9))
        resp = client.post("/products/strong", json={"factors": [p9, p9, p9]})
        assert resp.status_code == 422


class TestSolve:
    def test_mu_cycle(self, client):
        resp = client.post(
            "/solve", json={"graph": graph_payload(cycle_graph(7)), "kind": "mv"}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["value"] == 3 and body["exact"]
        assert len(body["vertices"]) == 3

    def test_mut_path(self, client):
        resp = client.post(
            "/solve", json={"graph": graph_payload(path_graph(5)), "kind": "tmv"}
        )
        assert resp.json()["value"] == 2

    def test_brute_solver(self, client):
        resp = client.post(
            "/solve",
            json={"graph": graph_payload(cycle_graph(6)), "solver": "brute"},
        )
        assert resp.status_code == 200
        assert resp.json()["value"] == 3

    def test_disconnected_422(self, client):
        resp = client.post(
            "/solve", json={"graph": {"n": 4, "edges": [[0, 1], [2, 3]]}}
        )
        assert resp.status_code == 422

    def test_bad_kind_422(self, client):
        resp = client.post(
            "/solve", json={"graph": graph_payload(path_graph(3)), "kind": "bogus"}
        )
        assert resp.status_code == 422


class TestCheck:
    def test_valid_set(self, client):
        resp = client.post(
            "/check",
            json={
                "graph": graph_payload(path_graph(4)),
                "kind": "tmv",
                "vertices": [0, 3],
            },
        )
        assert resp.status_code == 200
        assert resp.json() == {"verified": True, "kind": "tmv", "size": 2}

    def test_invalid_set(self, client):
        resp = client.post(
            "/check",
            json={
                "graph": graph_payload(path_graph(4)),
                "kind": "tmv",
                "vertices": [0, 1, 3],
            },
        )
        assert resp.json()["verified"] is False

    def test_out_of_range_422(self, client):
        resp = client.post(
            "/check",
            json={
                "graph": graph_payload(path_graph(3)),
                "kind": "mv",
                "vertices": [5],
            },
        )
        assert resp.status_code == 422


class TestConstruct:
    def test_product_tmv(self, client):
        p3 = graph_payload(path_graph(3))
        resp = client.post(
            "/construct", json={"theorem": "thm4.1", "factors": [p3, p3]}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["size"] == 8 == body["formula_value"]
        assert body["verified"] and body["kind"] == "feasible-tmv"
        assert len(body["product_tuples"]) == 8

    def test_grid(self, client):
        resp = client.post("/construct", json={"theorem": "thm4.4", "dims": [3, 4]})
        assert resp.status_code == 200
        assert resp.json()["size"] == 10

    def test_block_prism(self, client):
        g = random_block_graph(6, 1)
        resp = client.post(
            "/construct", json={"theorem": "thm5.4", "graph": graph_payload(g)}
        )
        assert resp.status_code == 200
        assert resp.json()["verified"]

    def test_hypothesis_failure_422(self, client):
        resp = client.post(
            "/construct",
            json={"theorem": "thm5.4", "graph": graph_payload(cycle_graph(5))},
        )
        assert resp.status_code == 422

    def test_missing_dims_422(self, client):
        resp = client.post("/construct", json={"theorem": "thm4.4"})
        assert resp.status_code == 422


class TestClassify:
    def test_cograph(self, client):
        resp = client.post(
            "/classify/cograph",
            json={"recipe": [["start", -1], ["true", 0], ["true", 1]]},
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["family"] == "cograph"
        assert body["verdicts"]["is_mu_mut_graph"] is True
        assert body["verdicts"]["mu"] == 3

    def test_cactus(self, client):
        resp = client.post(
            "/classify/cactus", json={"graph": graph_payload(cycle_graph(6))}
        )
        assert resp.status_code == 200
        assert resp.json()["verdicts"]["mut_zero"] is True

    def test_cactus_rejects_422(self, client):
        g = {"n": 4, "edges": [[0, 1], [1, 2], [2, 0], [1, 3], [3, 2]]}
        resp = client.post("/classify/cactus", json={"graph": g})
        assert resp.status_code == 422


class TestTables:
    def test_cycle_prism(self, client):
        resp = client.post(
            "/tables/run", json={"experiment": "cycle-prism", "n_max": 6}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["headers"] == ["n", "formula", "solver", "match"]
        assert all(row["match"] for row in body["rows"])

    def test_unknown_experiment_422(self, client):
        resp = client.post("/tables/run", json={"experiment": "nope"})
        assert resp.status_code == 422
