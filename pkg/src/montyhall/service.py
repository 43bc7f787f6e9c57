"""Session-oriented HTTP service: live rounds against a configured host,
mid-round advice, and stateless solver endpoints.

Sessions live in memory with idle expiry.  Each round's host strategy is
sampled and committed (SHA-256 over a fresh nonce) before the contestant
moves, so transcripts can be audited after the fact: the nonce and strategy
code revealed at round end must hash back to the commitment published when
the round started.
"""

from __future__ import annotations

import hashlib
import random
import secrets
import threading
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from fastapi import Body, FastAPI, Request
from fastapi.responses import JSONResponse

from .game import MontePureStrategy, PlayRecord
from .matrix import (
    MixedMonte,
    build_payoff_matrix,
    conie_index,
    eliminate_dominated,
    format_rational,
    parse_rational,
)
from .simulate import INFO_SETS, _ExactCategorical
from .solvers import (
    BehavioralHost,
    HostPayoffMatrix,
    UnreachableInfoSet,
    bayes_best_response,
    bayes_value_formula,
    enumerate_nash_supports,
    fully_supported_equilibria,
    host_to_mixed,
    mixed_to_host,
    posterior_switch_win,
    solve_zero_sum,
)

_INFO_INDEX = {info: i for i, info in enumerate(INFO_SETS)}

PHASE_AWAITING_PICK = "awaiting-pick"
PHASE_AWAITING_FINAL = "awaiting-final"
PHASE_DONE = "done"


class ApiError(Exception):
    """Service error with a machine-readable code."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def wrong_phase(expected: str, actual: str) -> ApiError:
    return ApiError(409, "wrong-phase", f"expected phase {expected}, session is {actual}")


def _rational_doc(value: Fraction) -> dict:
    return {"exact": format_rational(value), "decimal": float(value)}


def _commitment(nonce: str, strategy_code: str) -> str:
    return hashlib.sha256(f"{nonce}:{strategy_code}".encode()).hexdigest()


@dataclass
class RoundResult:
    number: int
    record: PlayRecord
    nonce: str
    commitment: str

    def to_dict(self) -> dict:
        r = self.record
        return {
            "round": self.number,
            "theta": r.theta,
            "pick": r.pick,
            "offered": r.offer,
            "revealed": r.revealed,
            "final": r.final,
            "win": r.win,
            "nonce": self.nonce,
            "commitment": self.commitment,
        }


@dataclass
class Session:
    """One client's game: a small state machine with serialized transitions."""

    id: str
    host: BehavioralHost
    mixed: MixedMonte
    rng: random.Random
    seed: int
    lock: threading.Lock = field(default_factory=threading.Lock)
    phase: str = PHASE_AWAITING_PICK
    round: int = 1
    strategy: MontePureStrategy | None = None
    nonce: str = ""
    pick: int | None = None
    offer: int | None = None
    revealed: int | None = None
    wins: int = 0
    completed: int = 0
    visits: list[int] = field(default_factory=lambda: [0] * 6)
    switch_wins: list[int] = field(default_factory=lambda: [0] * 6)
    hold_wins: list[int] = field(default_factory=lambda: [0] * 6)
    transcript: list[RoundResult] = field(default_factory=list)
    next_strategy: MontePureStrategy | None = None
    next_nonce: str = ""
    last_access: float = field(default_factory=time.monotonic)

    def __post_init__(self) -> None:
        self._sampler = _ExactCategorical(self.mixed.weights)
        self._commit_current()

    def _draw_strategy(self) -> MontePureStrategy:
        from .matrix import MONTE_ORDER

        return MONTE_ORDER[self._sampler.draw(self.rng)]

    def _commit_current(self) -> None:
        self.strategy = self._draw_strategy()
        self.nonce = secrets.token_hex(16)

    @property
    def commitment(self) -> str:
        assert self.strategy is not None
        return _commitment(self.nonce, self.strategy.code)

    def _advance_to_committed_round(self) -> None:
        # The next round's strategy was committed when the previous one
        # finished; activate it.
        assert self.next_strategy is not None
        self.round += 1
        self.strategy = self.next_strategy
        self.nonce = self.next_nonce
        self.next_strategy = None
        self.next_nonce = ""
        self.pick = None
        self.offer = None
        self.revealed = None
        self.phase = PHASE_AWAITING_PICK

    def do_pick(self, door: int) -> dict:
        if self.phase == PHASE_DONE:
            self._advance_to_committed_round()
        if self.phase != PHASE_AWAITING_PICK:
            raise wrong_phase(PHASE_AWAITING_PICK, self.phase)
        if door not in (1, 2, 3):
            raise ApiError(400, "invalid-door", f"door must be 1, 2 or 3, got {door}")
        assert self.strategy is not None
        theta = self.strategy.theta
        self.pick = door
        self.offer = self.strategy.offer_on_match if door == theta else theta
        (self.revealed,) = (d for d in (1, 2, 3) if d not in (door, self.offer))
        self.phase = PHASE_AWAITING_FINAL
        return {
            "phase": self.phase,
            "round": self.round,
            "pick": self.pick,
            "offered": self.offer,
            "revealed": self.revealed,
        }

    def do_advice(self) -> dict:
        if self.phase != PHASE_AWAITING_FINAL:
            raise wrong_phase(PHASE_AWAITING_FINAL, self.phase)
        assert self.pick is not None and self.offer is not None
        posterior = posterior_switch_win(self.host, self.pick, self.offer)
        half = Fraction(1, 2)
        if posterior > half:
            recommended = "switch"
        elif posterior < half:
            recommended = "hold"
        else:
            recommended = "indifferent"
        least = min(self.host.pi)
        best_picks = [door for door in (1, 2, 3) if self.host.pi[door - 1] == least]
        return {
            "posteriorSwitchWin": _rational_doc(posterior),
            "recommendedAction": recommended,
            "bayesValueForPriors": _rational_doc(bayes_value_formula(self.host.pi)),
            "bestPickForPriors": best_picks,
        }

    def do_final(self, action: str) -> dict:
        if self.phase != PHASE_AWAITING_FINAL:
            raise wrong_phase(PHASE_AWAITING_FINAL, self.phase)
        if action not in ("hold", "switch"):
            raise ApiError(400, "parse-error", f"action must be 'hold' or 'switch', got {action!r}")
        assert self.strategy is not None
        assert self.pick is not None and self.offer is not None and self.revealed is not None
        theta = self.strategy.theta
        final = self.pick if action == "hold" else self.offer
        record = PlayRecord(
            theta=theta,
            pick=self.pick,
            offer=self.offer,
            final=final,
            revealed=self.revealed,
            win=final == theta,
        )
        result = RoundResult(self.round, record, self.nonce, self.commitment)
        self.transcript.append(result)
        self.completed += 1
        self.wins += record.win
        idx = _INFO_INDEX[record.info_set]
        self.visits[idx] += 1
        if record.theta == record.offer:
            self.switch_wins[idx] += 1
        else:
            self.hold_wins[idx] += 1
        # Commit the next round before telling the client this one's secret,
        # so every round's strategy predates the corresponding pick.
        self.next_strategy = self._draw_strategy()
        self.next_nonce = secrets.token_hex(16)
        self.phase = PHASE_DONE
        return {
            "phase": self.phase,
            "round": self.round,
            "theta": theta,
            "final": final,
            "win": record.win,
            "reveal": {"nonce": result.nonce, "strategy": self.strategy.code},
            "nextCommitment": _commitment(self.next_nonce, self.next_strategy.code),
            "stats": self.stats_dict(),
        }

    def stats_dict(self) -> dict:
        return {
            "rounds": self.completed,
            "wins": self.wins,
            "winRate": self.wins / self.completed if self.completed else None,
            "perInfoSet": {
                info.label: {
                    "visits": self.visits[i],
                    "switchWins": self.switch_wins[i],
                    "holdWins": self.hold_wins[i],
                }
                for i, info in enumerate(INFO_SETS)
            },
        }

    def current_round_dict(self) -> dict:
        doc: dict[str, Any] = {
            "round": self.round,
            "phase": self.phase,
            "commitment": self.commitment,
        }
        if self.pick is not None:
            doc["pick"] = self.pick
        if self.phase in (PHASE_AWAITING_FINAL,):
            doc["offered"] = self.offer
            doc["revealed"] = self.revealed
        return doc


class SessionStore:
    def __init__(self, ttl_seconds: float = 3600.0):
        self.ttl = ttl_seconds
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def _sweep(self) -> None:
        now = time.monotonic()
        stale = [sid for sid, s in self._sessions.items() if now - s.last_access > self.ttl]
        for sid in stale:
            del self._sessions[sid]

    def add(self, session: Session) -> None:
        with self._lock:
            self._sweep()
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            self._sweep()
            session = self._sessions.get(session_id)
            if session is None:
                raise ApiError(404, "unknown-session", f"no session {session_id}")
            session.last_access = time.monotonic()
            return session


def _parse_host_config(doc: Any) -> tuple[BehavioralHost, MixedMonte]:
    if not isinstance(doc, dict):
        raise ApiError(400, "parse-error", "host config must be an object")
    try:
        if "pi" in doc and "lambda" in doc:
            host = BehavioralHost.from_dict(doc)
            return host, host_to_mixed(host)
        if "mixed" in doc:
            mixed = MixedMonte(tuple(parse_rational(str(x)) for x in doc["mixed"]))
            return mixed_to_host(mixed), mixed
        if "pure" in doc:
            mixed = MixedMonte.point_mass(str(doc["pure"]))
            return mixed_to_host(mixed), mixed
    except ValueError as exc:
        message = str(exc)
        code = "parse-error" if "not a rational" in message or "code" in message else "invalid-distribution"
        raise ApiError(400, code, message) from exc
    raise ApiError(400, "parse-error", "host config needs pi+lambda, mixed, or pure")


def create_app(
    static_dir: Path | None = None,
    default_seed: int | None = None,
    session_ttl: float = 3600.0,
) -> FastAPI:
    app = FastAPI(title="montyhall", docs_url=None, redoc_url=None)
    store = SessionStore(ttl_seconds=session_ttl)

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError) -> JSONResponse:
        return JSONResponse(
            status_code=exc.status,
            content={"error": {"code": exc.code, "message": exc.message}},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/sessions", status_code=201)
    def create_session(body: dict = Body(...)) -> dict:
        host_doc = body.get("host")
        if host_doc is None:
            raise ApiError(400, "parse-error", "body needs a 'host' object")
        host, mixed = _parse_host_config(host_doc)
        seed = body.get("seed")
        if seed is None:
            seed = default_seed if default_seed is not None else secrets.randbits(32)
        if not isinstance(seed, int):
            raise ApiError(400, "parse-error", "seed must be an integer")
        session = Session(
            id=secrets.token_hex(8),
            host=host,
            mixed=mixed,
            rng=random.Random(seed),
            seed=seed,
        )
        store.add(session)
        return {
            "id": session.id,
            "phase": session.phase,
            "round": session.round,
            "commitment": session.commitment,
            "host": session.host.to_dict(),
        }

    @app.post("/sessions/{session_id}/pick")
    def pick_door(session_id: str, body: dict = Body(...)) -> dict:
        session = store.get(session_id)
        door = body.get("door")
        if not isinstance(door, int):
            raise ApiError(400, "invalid-door", "body needs an integer 'door'")
        with session.lock:
            return session.do_pick(door)

    @app.get("/sessions/{session_id}/advice")
    def get_advice(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            try:
                return session.do_advice()
            except UnreachableInfoSet as exc:
                raise ApiError(400, "invalid-distribution", str(exc)) from exc

    @app.post("/sessions/{session_id}/final")
    def final_choice(session_id: str, body: dict = Body(...)) -> dict:
        session = store.get(session_id)
        action = body.get("action")
        with session.lock:
            return session.do_final(str(action))

    @app.get("/sessions/{session_id}/stats")
    def get_stats(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            doc = session.stats_dict()
            doc["phase"] = session.phase
            doc["round"] = session.round
            return doc

    @app.get("/sessions/{session_id}/transcript")
    def get_transcript(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            return {
                "id": session.id,
                "seed": session.seed,
                "host": session.host.to_dict(),
                "rounds": [r.to_dict() for r in session.transcript],
                "current": session.current_round_dict(),
            }

    @app.post("/solve/zerosum")
    def solve_zerosum_endpoint(_body: dict | None = Body(default=None)) -> dict:
        return solve_zero_sum().to_dict()

    @app.post("/solve/bayes")
    def solve_bayes_endpoint(body: dict = Body(...)) -> dict:
        try:
            host = BehavioralHost.from_dict(body)
        except KeyError as exc:
            raise ApiError(400, "parse-error", f"missing field {exc}") from exc
        except ValueError as exc:
            message = str(exc)
            code = "parse-error" if "not a rational" in message else "invalid-distribution"
            raise ApiError(400, code, message) from exc
        q = host_to_mixed(host)
        result = bayes_best_response(q)
        best = sorted(result.pure_best_responses, key=conie_index)
        least = min(host.pi)
        return {
            "host": host.to_dict(),
            "value": _rational_doc(result.value),
            "pureBestResponses": [s.code for s in best],
            "bestPicks": [d for d in (1, 2, 3) if host.pi[d - 1] == least],
        }

    @app.post("/solve/nash")
    def solve_nash_endpoint(body: dict = Body(...)) -> dict:
        builtin = body.get("builtin")
        if builtin is not None:
            factories = {
                "antagonistic": HostPayoffMatrix.antagonistic,
                "sympathetic": HostPayoffMatrix.sympathetic,
                "indifferent": HostPayoffMatrix.indifferent,
            }
            if builtin not in factories:
                raise ApiError(400, "parse-error", f"unknown builtin {builtin!r}")
            h = factories[builtin]()
        elif "entries" in body:
            try:
                h = HostPayoffMatrix.from_dict(body)
            except ValueError as exc:
                raise ApiError(400, "parse-error", str(exc)) from exc
        else:
            raise ApiError(400, "parse-error", "body needs 'entries' or 'builtin'")
        doc: dict[str, Any] = {
            "fullySupportedFamilies": [f.to_dict() for f in fully_supported_equilibria(h)]
        }
        if not body.get("fullySupportedOnly"):
            doc["profiles"] = [p.to_dict() for p in enumerate_nash_supports(h)]
        return doc

    @app.get("/matrix")
    def get_matrix() -> dict:
        return build_payoff_matrix().to_dict()

    @app.get("/matrix/reduced")
    def get_matrix_reduced() -> dict:
        return eliminate_dominated().to_dict()

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="playground")

    return app


app = create_app()
