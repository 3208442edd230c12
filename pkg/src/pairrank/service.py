"""Session-based HTTP API for interactive matrix building.

A session holds named elements and a reciprocal comparison matrix that the
client fills in one judgment at a time; every mutation returns fresh
priorities, error bars, rankings, and the method comparison so the client
can show which pairs remain indistinguishable. Reciprocity is enforced
server-side: writing a_ik also writes a_ki = 1/a_ik and the diagonal is
immutable.

Endpoints (JSON bodies/responses; indices are 0-based):
  POST   /sessions {labels}                  -> {id, revision}
  GET    /sessions/{id}                      -> session state
  PUT    /sessions/{id}/comparisons {i,k,value} -> results payload
  POST   /sessions/{id}/what-if {overrides}  -> results payload (no mutation)
  GET    /sessions/{id}/results?method=gmm|em|both -> results payload
  DELETE /sessions/{id}                      -> 204

Errors are {code, message}. Sessions live in memory; set the
PAIRRANK_SNAPSHOT environment variable to a file path to persist them
across restarts.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .analysis import compare_estimates, rank
from .core import ElementLabels, validate_matrix
from .em import em_estimate
from .errors import (
    BadIndex,
    BadLabels,
    NonPositiveEntry,
    NumericalError,
    SessionNotFound,
    ValidationError,
)
from .gmm import gmm_estimate, normalize
from .matrixio import SCHEMA_VERSION, estimate_to_dict, ranking_to_dict, comparison_to_dict

SNAPSHOT_ENV = "PAIRRANK_SNAPSHOT"
MAX_ELEMENTS = 50


@dataclass
class Session:
    id: str
    labels: ElementLabels
    matrix: np.ndarray
    revision: int = 0
    cache: dict = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """In-memory session registry. Mutations to one session are serialized
    by its lock; different sessions proceed independently."""

    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, labels: list[str]) -> Session:
        try:
            parsed = ElementLabels(tuple(labels))
        except BadLabels:
            raise
        n = len(parsed)
        if n < 2 or n > MAX_ELEMENTS:
            raise BadLabels(f"need between 2 and {MAX_ELEMENTS} elements, got {n}")
        session = Session(id=uuid.uuid4().hex, labels=parsed, matrix=np.ones((n, n)))
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionNotFound(session_id)
        return session

    def delete(self, session_id: str) -> None:
        with self._lock:
            if self._sessions.pop(session_id, None) is None:
                raise SessionNotFound(session_id)

    def ids(self) -> list[str]:
        with self._lock:
            return list(self._sessions)

    # --- persistence ---------------------------------------------------

    def save(self, path: str | Path) -> None:
        with self._lock:
            sessions = list(self._sessions.values())
        doc = {
            "schema_version": SCHEMA_VERSION,
            "sessions": [
                {
                    "id": s.id,
                    "labels": list(s.labels.labels),
                    "matrix": s.matrix.tolist(),
                    "revision": s.revision,
                }
                for s in sessions
            ],
        }
        Path(path).write_text(json.dumps(doc))

    def load(self, path: str | Path) -> None:
        doc = json.loads(Path(path).read_text())
        for raw in doc.get("sessions", []):
            session = Session(
                id=raw["id"],
                labels=ElementLabels(tuple(raw["labels"])),
                matrix=np.array(raw["matrix"], dtype=float),
                revision=int(raw["revision"]),
            )
            with self._lock:
                self._sessions[session.id] = session


def _check_pair(session: Session, i: int, k: int, value: float) -> None:
    n = len(session.labels)
    if not (0 <= i < n and 0 <= k < n):
        raise BadIndex(f"indices must be in [0, {n}), got ({i}, {k})")
    if i == k:
        raise BadIndex("diagonal entries are fixed at 1")
    if not (np.isfinite(value) and value > 0):
        raise NonPositiveEntry(i, k, value)


def _results_payload(session: Session, matrix: np.ndarray, revision: int,
                     what_if: bool = False) -> dict:
    a = validate_matrix(matrix)
    gmm_norm = normalize(gmm_estimate(a))
    em_est = em_estimate(a)
    comparison = compare_estimates(gmm_norm, em_est)
    return {
        "schema_version": SCHEMA_VERSION,
        "id": session.id,
        "revision": revision,
        "what_if": what_if,
        "labels": list(session.labels.labels),
        "matrix": matrix.tolist(),
        "results": {
            "gmm": {
                "estimate": estimate_to_dict(gmm_norm),
                "ranking": ranking_to_dict(rank(gmm_norm)),
            },
            "em": {
                "estimate": estimate_to_dict(em_est),
                "ranking": ranking_to_dict(rank(em_est)),
            },
            "comparison": comparison_to_dict(comparison),
        },
    }


def _cached_results(session: Session) -> dict:
    with session.lock:
        payload = session.cache.get(session.revision)
        if payload is None:
            payload = _results_payload(session, session.matrix.copy(), session.revision)
            session.cache = {session.revision: payload}
        return payload


def _filter_methods(payload: dict, method: str) -> dict:
    if method == "both":
        return payload
    if method not in ("gmm", "em"):
        raise ValidationError(f"unknown method {method!r} (expected gmm, em, or both)")
    filtered = dict(payload)
    filtered["results"] = {method: payload["results"][method]}
    return filtered


class ComparisonBody(BaseModel):
    i: int
    k: int
    value: float


class CreateSessionBody(BaseModel):
    labels: list[str]


class WhatIfBody(BaseModel):
    overrides: list[ComparisonBody] = []


def create_app(snapshot_path: str | None = None) -> FastAPI:
    snapshot = snapshot_path if snapshot_path is not None else os.environ.get(SNAPSHOT_ENV)
    store = SessionStore()

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        if snapshot and Path(snapshot).exists():
            store.load(snapshot)
        yield
        if snapshot:
            store.save(snapshot)

    app = FastAPI(title="pairrank", lifespan=lifespan)
    app.state.store = store
    # the browser UI is served from its own origin (static files), so the
    # API must answer preflights; sessions carry no credentials
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def error_response(status: int, code: str, message: str) -> JSONResponse:
        return JSONResponse(status_code=status, content={"code": code, "message": message})

    @app.exception_handler(SessionNotFound)
    async def _not_found(_: Request, exc: SessionNotFound):
        return error_response(404, "not_found", str(exc))

    @app.exception_handler(ValidationError)
    async def _bad_input(_: Request, exc: ValidationError):
        codes = {BadLabels: "bad_labels", BadIndex: "bad_index",
                 NonPositiveEntry: "non_positive_entry"}
        return error_response(400, codes.get(type(exc), "invalid_input"), str(exc))

    @app.exception_handler(NumericalError)
    async def _numerical(_: Request, exc: NumericalError):
        return error_response(500, "numerical_failure", str(exc))

    @app.exception_handler(RequestValidationError)
    async def _malformed(_: Request, exc: RequestValidationError):
        return error_response(400, "bad_request", str(exc.errors()))

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        session = store.create(body.labels)
        return {"id": session.id, "revision": session.revision}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return {
                "id": session.id,
                "revision": session.revision,
                "labels": list(session.labels.labels),
                "matrix": session.matrix.tolist(),
            }

    @app.put("/sessions/{session_id}/comparisons")
    def set_comparison(session_id: str, body: ComparisonBody):
        session = store.get(session_id)
        with session.lock:
            _check_pair(session, body.i, body.k, body.value)
            session.matrix[body.i, body.k] = body.value
            session.matrix[body.k, body.i] = 1.0 / body.value
            session.revision += 1
            payload = _results_payload(session, session.matrix.copy(), session.revision)
            session.cache = {session.revision: payload}
            return payload

    @app.post("/sessions/{session_id}/what-if")
    def what_if(session_id: str, body: WhatIfBody):
        session = store.get(session_id)
        with session.lock:
            matrix = session.matrix.copy()
            revision = session.revision
        for o in body.overrides:
            _check_pair(session, o.i, o.k, o.value)
            matrix[o.i, o.k] = o.value
            matrix[o.k, o.i] = 1.0 / o.value
        return _results_payload(session, matrix, revision, what_if=True)

    @app.get("/sessions/{session_id}/results")
    def get_results(session_id: str, method: str = "both"):
        session = store.get(session_id)
        return _filter_methods(_cached_results(session), method)

    @app.delete("/sessions/{session_id}", status_code=204)
    def delete_session(session_id: str):
        store.delete(session_id)
        return Response(status_code=204)

    return app
