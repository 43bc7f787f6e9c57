"""HTTP service: session state machine, no-leak schema, solver endpoints."""

import hashlib
import math
import time
from fractions import Fraction

import pytest
from fastapi.testclient import TestClient

from montyhall.game import PlayRecord
from montyhall.matrix import MixedMonte
from montyhall.service import Session, create_app
from montyhall.solvers import BehavioralHost, host_to_mixed

F = Fraction

UNIFORM_HOST = {"pi": ["1/3", "1/3", "1/3"], "lambda": ["1/2", "1/2", "1/2"]}
CRAWL_HOST = {"pi": ["1/3", "1/3", "1/3"], "lambda": ["1", "1", "1"]}


@pytest.fixture
def client():
    return TestClient(create_app(default_seed=20260810))


def make_session(client, host=None, seed=None):
    body = {"host": host or UNIFORM_HOST}
    if seed is not None:
        body["seed"] = seed
    response = client.post("/sessions", json=body)
    assert response.status_code == 201
    return response.json()


def collect_keys(doc):
    keys = set()
    stack = [doc]
    while stack:
        node = stack.pop()
        if isinstance(node, dict):
            keys.update(node)
            stack.extend(node.values())
        elif isinstance(node, list):
            stack.extend(node)
    return keys


class TestSessionLifecycle:
    def test_create(self, client):
        doc = make_session(client)
        assert doc["phase"] == "awaiting-pick"
        assert doc["round"] == 1
        assert len(doc["commitment"]) == 64

    def test_invalid_distribution_rejected(self, client):
        response = client.post(
            "/sessions",
            json={"host": {"pi": ["0.3", "0.3", "0.3"], "lambda": ["1/2", "1/2", "1/2"]}},
        )
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "invalid-distribution"

    def test_missing_host_rejected(self, client):
        response = client.post("/sessions", json={})
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "parse-error"

    def test_unknown_session(self, client):
        assert client.get("/sessions/deadbeef/stats").status_code == 404

    def test_pick_then_advise_then_final(self, client):
        sid = make_session(client, seed=5)["id"]
        pick = client.post(f"/sessions/{sid}/pick", json={"door": 2}).json()
        assert pick["phase"] == "awaiting-final"
        assert pick["offered"] != 2
        assert pick["revealed"] not in (2, pick["offered"])
        advice = client.get(f"/sessions/{sid}/advice").json()
        assert advice["posteriorSwitchWin"]["exact"] == "2/3"
        assert advice["recommendedAction"] == "switch"
        assert advice["bayesValueForPriors"]["exact"] == "2/3"
        assert advice["bestPickForPriors"] == [1, 2, 3]
        final = client.post(f"/sessions/{sid}/final", json={"action": "switch"}).json()
        assert final["phase"] == "done"
        assert final["win"] == (final["theta"] == final["final"])
        assert final["stats"]["rounds"] == 1

    def test_phase_conflicts(self, client):
        sid = make_session(client)["id"]
        assert client.get(f"/sessions/{sid}/advice").status_code == 409
        assert client.post(f"/sessions/{sid}/final", json={"action": "hold"}).status_code == 409
        client.post(f"/sessions/{sid}/pick", json={"door": 1})
        second_pick = client.post(f"/sessions/{sid}/pick", json={"door": 2})
        assert second_pick.status_code == 409
        assert second_pick.json()["error"]["code"] == "wrong-phase"

    def test_invalid_door(self, client):
        sid = make_session(client)["id"]
        response = client.post(f"/sessions/{sid}/pick", json={"door": 4})
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "invalid-door"

    def test_invalid_action_is_parse_error(self, client):
        sid = make_session(client)["id"]
        client.post(f"/sessions/{sid}/pick", json={"door": 1})
        response = client.post(f"/sessions/{sid}/final", json={"action": "flee"})
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "parse-error"

    def test_round_reentry_after_done(self, client):
        sid = make_session(client, seed=11)["id"]
        client.post(f"/sessions/{sid}/pick", json={"door": 1})
        client.post(f"/sessions/{sid}/final", json={"action": "hold"})
        again = client.post(f"/sessions/{sid}/pick", json={"door": 3}).json()
        assert again["round"] == 2
        assert again["phase"] == "awaiting-final"

    def test_skewed_prior_advice(self, client):
        host = {"pi": ["1/2", "3/10", "1/5"], "lambda": ["1/2", "1/2", "1/2"]}
        sid = make_session(client, host=host, seed=6)["id"]
        pick = client.post(f"/sessions/{sid}/pick", json={"door": 3}).json()
        advice = client.get(f"/sessions/{sid}/advice").json()
        assert advice["bayesValueForPriors"]["exact"] == "4/5"
        assert advice["bestPickForPriors"] == [3]
        # Posterior depends on which door was offered: pi_y / (pi_y + pi_3/2).
        expected = {1: "5/6", 2: "3/4"}
        assert advice["posteriorSwitchWin"]["exact"] == expected[pick["offered"]]
        assert advice["recommendedAction"] == "switch"

    def test_crawl_advice_cases(self, client):
        # Crawl host: offered door 3 after picking 1 means the prize is there.
        sid = make_session(client, host=CRAWL_HOST, seed=1)["id"]
        seen = set()
        for _ in range(40):
            pick = client.post(f"/sessions/{sid}/pick", json={"door": 1}).json()
            advice = client.get(f"/sessions/{sid}/advice").json()
            if pick["offered"] == 3:
                assert advice["posteriorSwitchWin"]["exact"] == "1"
                assert advice["recommendedAction"] == "switch"
            else:
                assert advice["posteriorSwitchWin"]["exact"] == "1/2"
                assert advice["recommendedAction"] == "indifferent"
            seen.add(pick["offered"])
            client.post(f"/sessions/{sid}/final", json={"action": "switch"})
        assert seen == {2, 3}

    def test_session_expiry(self):
        client = TestClient(create_app(session_ttl=0.01))
        sid = make_session(client, seed=1)["id"]
        time.sleep(0.05)
        assert client.get(f"/sessions/{sid}/stats").status_code == 404


class TestNoLeak:
    def test_pre_resolution_payloads_carry_no_prize_information(self, client):
        sid_doc = make_session(client, seed=3)
        sid = sid_doc["id"]
        forbidden = {"theta", "strategy", "prize", "nonce"}
        assert not (collect_keys(sid_doc) & forbidden)
        pick = client.post(f"/sessions/{sid}/pick", json={"door": 2})
        assert not (collect_keys(pick.json()) & forbidden)
        assert set(pick.json()) == {"phase", "round", "pick", "offered", "revealed"}
        advice = client.get(f"/sessions/{sid}/advice")
        assert not (collect_keys(advice.json()) & forbidden)
        stats = client.get(f"/sessions/{sid}/stats")
        assert not (collect_keys(stats.json()) & forbidden)
        transcript = client.get(f"/sessions/{sid}/transcript").json()
        assert transcript["rounds"] == []  # nothing resolved yet
        assert not (collect_keys(transcript["current"]) & forbidden)

    def test_commitments_verify_after_reveal(self, client):
        sid = make_session(client, seed=8)["id"]
        commitments = [client.get(f"/sessions/{sid}/transcript").json()["current"]["commitment"]]
        reveals = []
        for _ in range(5):
            client.post(f"/sessions/{sid}/pick", json={"door": 1})
            final = client.post(f"/sessions/{sid}/final", json={"action": "switch"}).json()
            reveals.append(final["reveal"])
            commitments.append(final["nextCommitment"])
        for commitment, reveal in zip(commitments, reveals):
            digest = hashlib.sha256(
                f"{reveal['nonce']}:{reveal['strategy']}".encode()
            ).hexdigest()
            assert digest == commitment


class TestTranscript:
    def test_rounds_replay_through_play_record_invariants(self, client):
        sid = make_session(client, seed=21)["id"]
        for door, action in [(1, "switch"), (2, "hold"), (3, "switch"), (1, "hold")]:
            client.post(f"/sessions/{sid}/pick", json={"door": door})
            client.post(f"/sessions/{sid}/final", json={"action": action})
        transcript = client.get(f"/sessions/{sid}/transcript").json()
        assert [r["round"] for r in transcript["rounds"]] == [1, 2, 3, 4]
        for row in transcript["rounds"]:
            record = PlayRecord(
                theta=row["theta"],
                pick=row["pick"],
                offer=row["offered"],
                final=row["final"],
                revealed=row["revealed"],
                win=row["win"],
            )
            assert record.win == (record.final == record.theta)

    def test_stats_accumulate(self, client):
        sid = make_session(client, seed=2)["id"]
        rounds = 30
        for _ in range(rounds):
            client.post(f"/sessions/{sid}/pick", json={"door": 1})
            client.post(f"/sessions/{sid}/final", json={"action": "switch"})
        stats = client.get(f"/sessions/{sid}/stats").json()
        assert stats["rounds"] == rounds
        assert sum(t["visits"] for t in stats["perInfoSet"].values()) == rounds


class TestLongRun:
    def test_http_win_rate_near_exact(self, client):
        # Always-switch vs uniform host: exact payoff 2/3.
        sid = make_session(client, seed=77)["id"]
        rounds = 2000
        wins = 0
        for _ in range(rounds):
            client.post(f"/sessions/{sid}/pick", json={"door": 1})
            final = client.post(f"/sessions/{sid}/final", json={"action": "switch"}).json()
            wins += final["win"]
        exact = 2 / 3
        sigma = math.sqrt(exact * (1 - exact) / rounds)
        assert abs(wins / rounds - exact) < 4 * sigma

    def test_direct_state_machine_ten_thousand_rounds(self):
        import random

        host = BehavioralHost((F(1, 2), F(3, 10), F(1, 5)), (F(1, 2),) * 3)
        session = Session(
            id="local",
            host=host,
            mixed=host_to_mixed(host),
            rng=random.Random(99),
            seed=99,
        )
        rounds = 10_000
        for _ in range(rounds):
            session.do_pick(3)  # best response pick: least likely door
            session.do_final("switch")
        exact = 4 / 5
        sigma = math.sqrt(exact * (1 - exact) / rounds)
        assert abs(session.wins / rounds - exact) < 4 * sigma


class TestSolverEndpoints:
    def test_zerosum(self, client):
        doc = client.post("/solve/zerosum").json()
        assert doc["value"] == "2/3"
        assert doc["conieMinimax"].count("1/3") == 3

    def test_bayes_crawl(self, client):
        doc = client.post("/solve/bayes", json=CRAWL_HOST).json()
        assert doc["value"]["exact"] == "2/3"
        assert doc["pureBestResponses"] == ["1ss", "1ms", "2ss", "2ms", "3ss", "3ms"]

    def test_bayes_invalid(self, client):
        response = client.post(
            "/solve/bayes", json={"pi": ["1", "1", "1"], "lambda": ["0", "0", "0"]}
        )
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "invalid-distribution"

    def test_nash_builtin_families(self, client):
        doc = client.post(
            "/solve/nash", json={"builtin": "antagonistic", "fullySupportedOnly": True}
        ).json()
        assert len(doc["fullySupportedFamilies"]) == 1
        family = doc["fullySupportedFamilies"][0]
        assert family["case"] == 3
        assert family["weightVertices"] == [["1/3", "1/3", "1/3"]]
        assert "profiles" not in doc

    def test_nash_entries_roundtrip(self, client):
        from montyhall.solvers import HostPayoffMatrix

        body = HostPayoffMatrix.indifferent().to_dict()
        body["fullySupportedOnly"] = True
        doc = client.post("/solve/nash", json=body).json()
        assert len(doc["fullySupportedFamilies"]) == 7

    def test_nash_parse_error(self, client):
        response = client.post("/solve/nash", json={"entries": [["x"] * 6] * 12})
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "parse-error"

    def test_matrix_endpoints(self, client):
        matrix = client.get("/matrix").json()
        assert matrix["cols"] == ["12", "13", "21", "23", "31", "32"]
        assert len(matrix["entries"]) == 12
        reduced = client.get("/matrix/reduced").json()
        assert reduced["terminal"]["entries"] == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]

    def test_health(self, client):
        assert client.get("/health").json() == {"status": "ok"}


class TestMixedHostConfig:
    def test_pure_host_session(self, client):
        doc = make_session(client, host={"pure": "21"}, seed=1)
        sid = doc["id"]
        pick = client.post(f"/sessions/{sid}/pick", json={"door": 1}).json()
        # Mismatch forces the offer onto the prize door.
        assert pick["offered"] == 2
        final = client.post(f"/sessions/{sid}/final", json={"action": "switch"}).json()
        assert final["theta"] == 2 and final["win"]

    def test_mixed_host_session(self, client):
        mixed = {"mixed": ["1/3", "0", "1/3", "0", "1/3", "0"]}
        doc = make_session(client, host=mixed, seed=4)
        assert doc["host"]["lambda"] == ["1", "1", "1"]

    def test_bad_pure_code(self, client):
        response = client.post("/sessions", json={"host": {"pure": "11"}})
        assert response.status_code == 400
