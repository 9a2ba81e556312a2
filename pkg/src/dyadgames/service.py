"""Dual-blind quiz sessions over HTTP.

A session is created with a form and two capability tokens, one per
partner.  Each token can submit exactly once; until both have submitted,
report requests answer "waiting".  No endpoint ever returns one partner's
raw answers to the other: the completed report only carries the aggregate
scores (unless the session was created with ``reveal_answers`` on, in
which case both consented up front).

State lives in one JSON file per session under a storage directory and is
written atomically (temp file, then rename), so a restart resumes exactly
where the previous process stopped.  Per-session transitions are
serialized by an in-process lock around a read-modify-write of the file;
simultaneous submissions by the two partners cannot lose updates.
"""

from __future__ import annotations

import os
import secrets
import threading
import time
from pathlib import Path

from .documents import (
    SCHEMA_VERSION,
    dumps_canonical,
    form_from_doc,
    form_to_doc,
    loads,
    report_to_doc,
)
from .errors import DocumentError, ValidationError
from .quiz import PartnerResponse, QuizForm, default_form, score_auto, validate_response

STORAGE_ENV_VAR = "DYADGAMES_STORAGE"
DEFAULT_TTL_DAYS = 30.0

STATE_CREATED = "created"
STATE_ONE_SUBMITTED = "one_submitted"
STATE_COMPLETE = "complete"


class UnknownSession(KeyError):
    """No live session matches the id, or the token is not one of its two."""


class AlreadySubmitted(ValueError):
    """The token's answers are already in; resubmission is rejected."""


class NotCompleteYet(ValueError):
    """Report requested while the other partner has not submitted."""


def _new_token() -> str:
    return secrets.token_urlsafe(32)  # 256 bits


class SessionStore:
    def __init__(self, root: str | os.PathLike, ttl_days: float = DEFAULT_TTL_DAYS):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.ttl_days = ttl_days
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(session_id, threading.Lock())

    def _path(self, session_id: str) -> Path:
        if not session_id.replace("-", "").replace("_", "").isalnum():
            raise UnknownSession(session_id)
        return self.root / f"{session_id}.json"

    def _write(self, session: dict) -> None:
        path = self._path(session["session_id"])
        tmp = path.with_suffix(".tmp")
        tmp.write_text(dumps_canonical(session) + "\n", encoding="utf-8")
        os.replace(tmp, path)

    def _load(self, session_id: str) -> dict:
        path = self._path(session_id)
        if not path.exists():
            raise UnknownSession(session_id)
        session = loads(path.read_text(encoding="utf-8"))
        age_days = (time.time() - session["created_at"]) / 86400.0
        if age_days > session.get("ttl_days", self.ttl_days):
            raise UnknownSession(session_id)
        return session

    def create(self, form: QuizForm | None = None, reveal_answers: bool = False) -> dict:
        """New session; returns id, state, and the two partner tokens."""
        form = form or default_form()
        session = {
            "schema_version": SCHEMA_VERSION,
            "kind": "quiz_session",
            "session_id": secrets.token_urlsafe(12),
            "created_at": time.time(),
            "ttl_days": self.ttl_days,
            "state": STATE_CREATED,
            "reveal_answers": reveal_answers,
            "form": form_to_doc(form),
            "partners": {
                "1": {"token": _new_token(), "answers": None, "submitted_at": None},
                "2": {"token": _new_token(), "answers": None, "submitted_at": None},
            },
        }
        self._write(session)
        return {
            "session_id": session["session_id"],
            "state": session["state"],
            "partner_tokens": [
                session["partners"]["1"]["token"],
                session["partners"]["2"]["token"],
            ],
            "partner_links": [
                f"#sid={session['session_id']}&partner={pid}&token="
                f"{session['partners'][pid]['token']}"
                for pid in ("1", "2")
            ],
        }

    @staticmethod
    def _partner_for(session: dict, token: str) -> str:
        for pid, record in session["partners"].items():
            if secrets.compare_digest(record["token"], token):
                return pid
        raise UnknownSession(session["session_id"])

    def get_form(self, session_id: str, token: str) -> dict:
        """The form plus this partner's own progress; never the other's
        answers."""
        session = self._load(session_id)
        pid = self._partner_for(session, token)
        return {
            "session_id": session_id,
            "partner_id": int(pid),
            "state": session["state"],
            "already_submitted": session["partners"][pid]["answers"] is not None,
            "form": session["form"],
        }

    def submit(self, session_id: str, token: str, answers) -> dict:
        """Record one partner's answers; second submission completes the
        session.  Validation failures raise with per-question messages."""
        with self._lock_for(session_id):
            session = self._load(session_id)
            pid = self._partner_for(session, token)
            record = session["partners"][pid]
            if record["answers"] is not None:
                raise AlreadySubmitted(f"partner {pid} already submitted")
            form = form_from_doc(session["form"])
            if not isinstance(answers, list):
                raise ValidationError("answers must be a list of [a, b, c] triples")
            try:
                response = PartnerResponse(
                    partner_id=int(pid),
                    answers=tuple(tuple(t) for t in answers),
                )
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"malformed answers: {exc}") from exc
            violations = validate_response(form, response)
            if violations:
                raise ValidationError(
                    "invalid answers", issues=[str(v) for v in violations]
                )
            record["answers"] = [list(t) for t in response.answers]
            record["submitted_at"] = time.time()
            submitted = sum(
                1 for r in session["partners"].values() if r["answers"] is not None
            )
            session["state"] = (
                STATE_COMPLETE if submitted == 2 else STATE_ONE_SUBMITTED
            )
            self._write(session)
            return {"session_id": session_id, "state": session["state"]}

    def report(self, session_id: str, token: str) -> str:
        """Canonical report JSON; only available once both have submitted."""
        session = self._load(session_id)
        self._partner_for(session, token)
        if session["state"] != STATE_COMPLETE:
            raise NotCompleteYet(session["state"])
        form = form_from_doc(session["form"])
        r1 = PartnerResponse(
            partner_id=1,
            answers=tuple(tuple(t) for t in session["partners"]["1"]["answers"]),
        )
        r2 = PartnerResponse(
            partner_id=2,
            answers=tuple(tuple(t) for t in session["partners"]["2"]["answers"]),
        )
        doc = report_to_doc(score_auto(form, r1, r2), form)
        if session.get("reveal_answers"):
            doc["answers"] = {
                "partner1": session["partners"]["1"]["answers"],
                "partner2": session["partners"]["2"]["answers"],
            }
        return dumps_canonical(doc) + "\n"


def create_app(store: SessionStore):
    """The HTTP face of the store: create, form, answers, report."""
    from fastapi import Body, FastAPI, Query
    from fastapi.responses import JSONResponse, Response

    app = FastAPI(title="dyadgames quiz sessions")

    def _error(status: int, detail, **extra):
        return JSONResponse({"status": "error", "detail": detail, **extra}, status_code=status)

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/sessions", status_code=201)
    def create_session(body: dict | None = Body(default=None)):
        body = body or {}
        form = None
        if "form" in body:
            try:
                form = form_from_doc(body["form"])
            except DocumentError as exc:
                return _error(400, str(exc))
        created = store.create(
            form=form, reveal_answers=bool(body.get("reveal_answers", False))
        )
        return {"status": "created", **created}

    @app.get("/sessions/{session_id}/form")
    def get_form(session_id: str, token: str = Query()):
        try:
            return {"status": "ok", **store.get_form(session_id, token)}
        except UnknownSession:
            return _error(404, "unknown session or token")

    @app.post("/sessions/{session_id}/answers")
    def submit_answers(session_id: str, body: dict = Body()):
        token = body.get("token")
        if not isinstance(token, str):
            return _error(400, "missing token")
        try:
            result = store.submit(session_id, token, body.get("answers"))
        except UnknownSession:
            return _error(404, "unknown session or token")
        except AlreadySubmitted as exc:
            return _error(409, str(exc))
        except ValidationError as exc:
            return _error(400, str(exc), violations=exc.issues)
        return {"status": "ok", **result}

    @app.get("/sessions/{session_id}/report")
    def get_report(session_id: str, token: str = Query()):
        try:
            body = store.report(session_id, token)
        except UnknownSession:
            return _error(404, "unknown session or token")
        except NotCompleteYet:
            return JSONResponse(
                {"status": "waiting", "detail": "waiting for partner"}, status_code=202
            )
        return Response(content=body, media_type="application/json")

    return app


def serve(host: str, port: int, store: SessionStore) -> None:
    import uvicorn

    uvicorn.run(create_app(store), host=host, port=port, log_level="warning")
