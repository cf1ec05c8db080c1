"""Session-oriented HTTP API for the live-play assistant.

Sessions live in memory behind a bounded LRU with a TTL; a daily-puzzle
assistant has no durability requirement, and any session can be rebuilt
by replaying its history. Mutations on one session are serialized: a
request that would interleave with an in-flight mutation gets 409 rather
than last-writer-wins.
"""

from __future__ import annotations

import os
import random
import secrets as secrets_module
import threading
import time
from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException, Response
from fastapi.responses import PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .embedding import Encoding, build_matrix
from .game import Feedback, HistoryEntry, filter_candidates
from .spectral import dominant_left_singular_vector, rank_candidates
from .simulator import _game_seed
from .strategy import DEFAULT_MAX_GUESSES, Strategy, StrategyKind, suggest
from .words import Lexicon, load_guesses, load_solutions

WEBUI_DIR_ENV = "RANK1WORDLE_WEBUI_DIR"
DEFAULT_MAX_SESSIONS = 1024
DEFAULT_TTL_SECONDS = 24 * 3600
TOP_K = 10


@dataclass
class Session:
    id: str
    created_at: float
    encoding: Encoding
    pool_label: str
    seed: int
    history: list[HistoryEntry] = field(default_factory=list)
    remaining: list[str] = field(default_factory=list)
    solved: bool = False
    lock: threading.Lock = field(default_factory=threading.Lock)
    suggestion_cache: dict[int, dict] = field(default_factory=dict)


class SessionStore:
    """Thread-safe LRU of sessions with a TTL."""

    def __init__(self, max_sessions: int = DEFAULT_MAX_SESSIONS, ttl: float = DEFAULT_TTL_SECONDS):
        self._sessions: OrderedDict[str, Session] = OrderedDict()
        self._lock = threading.Lock()
        self.max_sessions = max_sessions
        self.ttl = ttl

    def put(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session
            self._sessions.move_to_end(session.id)
            while len(self._sessions) > self.max_sessions:
                self._sessions.popitem(last=False)

    def get(self, session_id: str) -> Optional[Session]:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                return None
            if time.time() - session.created_at > self.ttl:
                del self._sessions[session_id]
                return None
            self._sessions.move_to_end(session_id)
            return session

    def delete(self, session_id: str) -> bool:
        with self._lock:
            return self._sessions.pop(session_id, None) is not None


class CreateSessionRequest(BaseModel):
    encoding: str = "positional"
    pool: str = "solutions"
    seed: Optional[int] = None


class FeedbackRequest(BaseModel):
    guess: str
    feedback: str


def create_app(
    default_encoding: Encoding = Encoding.POSITIONAL,
    default_pool: str = "solutions",
    webui_dir: Optional[str | Path] = None,
) -> FastAPI:
    app = FastAPI(title="rank1wordle assistant")
    store = SessionStore()
    pools: dict[str, Lexicon] = {}

    def get_pool(label: str) -> Lexicon:
        if label not in pools:
            if label == "guesses":
                pools[label] = load_guesses()
            elif label == "solutions":
                pools[label] = load_solutions()
            else:
                raise HTTPException(status_code=400, detail=f"unknown pool {label!r}")
        return pools[label]

    def get_session(session_id: str) -> Session:
        session = store.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="no such session")
        return session

    def session_summary(session: Session) -> dict:
        return {
            "id": session.id,
            "created_at": session.created_at,
            "encoding": session.encoding.value,
            "pool": session.pool_label,
            "seed": session.seed,
            "history": [
                {"guess": guess, "feedback": fb.to_string()} for guess, fb in session.history
            ],
            "remaining_count": len(session.remaining),
            "solved": session.solved,
        }

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.post("/api/v1/sessions", status_code=201)
    def create_session(body: CreateSessionRequest) -> dict:
        try:
            encoding = Encoding(body.encoding)
        except ValueError:
            raise HTTPException(status_code=400, detail=f"unknown encoding {body.encoding!r}")
        pool = get_pool(body.pool or default_pool)
        seed = body.seed if body.seed is not None else secrets_module.randbits(63)
        session = Session(
            id=secrets_module.token_hex(16),
            created_at=time.time(),
            encoding=encoding,
            pool_label=pool.source_label,
            seed=seed,
            remaining=list(pool.words),
        )
        store.put(session)
        return {"id": session.id, "remaining_count": len(session.remaining), "seed": seed}

    @app.get("/api/v1/sessions/{session_id}")
    def get_session_view(session_id: str) -> dict:
        return session_summary(get_session(session_id))

    @app.delete("/api/v1/sessions/{session_id}", status_code=204, response_class=Response)
    def delete_session(session_id: str) -> Response:
        if not store.delete(session_id):
            raise HTTPException(status_code=404, detail="no such session")
        return Response(status_code=204)

    @app.post("/api/v1/sessions/{session_id}/feedback")
    def post_feedback(session_id: str, body: FeedbackRequest) -> dict:
        session = get_session(session_id)
        try:
            guess = body.guess.strip().upper()
            if len(guess) != 5 or not guess.isalpha():
                raise ValueError(f"bad guess {body.guess!r}")
            feedback = Feedback.from_string(body.feedback)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        if not session.lock.acquire(blocking=False):
            raise HTTPException(status_code=409, detail="session is busy")
        try:
            if session.solved:
                raise HTTPException(status_code=409, detail="session already solved")
            if len(session.history) >= DEFAULT_MAX_GUESSES:
                raise HTTPException(status_code=409, detail="guess limit reached")
            session.history.append((guess, feedback))
            session.remaining = filter_candidates(session.remaining, [(guess, feedback)])
            if feedback.is_win:
                session.solved = True
            return {
                "remaining_count": len(session.remaining),
                "solved": session.solved,
                "empty_pool": len(session.remaining) == 0,
            }
        finally:
            session.lock.release()

    @app.get("/api/v1/sessions/{session_id}/suggestion")
    def get_suggestion(session_id: str) -> dict:
        session = get_session(session_id)
        with session.lock:
            if session.solved:
                raise HTTPException(status_code=409, detail="session already solved")
            if not session.remaining:
                raise HTTPException(status_code=409, detail="no candidates remain")
            state = len(session.history)
            cached = session.suggestion_cache.get(state)
            if cached is not None:
                return cached
            strategy = Strategy(
                kind=StrategyKind.RANK1_LSI,
                encoding=session.encoding,
                rng_seed=session.seed,
            )
            # the tie-break stream is keyed on (seed, turn) so a replayed
            # session reproduces the same picks
            rng = random.Random(_game_seed(session.seed, state))
            suggestion = suggest(strategy, session.remaining, rng)
            if len(session.remaining) == 1:
                top = [{"word": session.remaining[0], "theta_degrees": 0.0}]
            else:
                matrix = build_matrix(session.remaining, session.encoding)
                u1 = dominant_left_singular_vector(matrix)
                ranked = rank_candidates(matrix, u1)
                top = [
                    {"word": rc.word, "theta_degrees": _degrees(rc.theta)}
                    for rc in ranked[:TOP_K]
                ]
            payload = {
                "word": suggestion.word,
                "theta_degrees": _degrees(suggestion.theta),
                "remaining_count": len(session.remaining),
                "tied_count": suggestion.tied_count,
                "top": top,
            }
            session.suggestion_cache[state] = payload
            return payload

    webui = Path(webui_dir or os.environ.get(WEBUI_DIR_ENV) or _default_webui_dir())
    if webui.is_dir():
        app.mount("/", StaticFiles(directory=webui, html=True), name="webui")

    return app


def _degrees(theta: Optional[float]) -> float:
    import math

    return round(math.degrees(theta), 1) if theta is not None else 0.0


def _default_webui_dir() -> Path:
    return Path(__file__).resolve().parents[2] / "frontend" / "dist"
