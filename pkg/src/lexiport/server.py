"""HTTP API behind the annotation UI.

JSON over HTTP/1.1; decision payload fields use the AnnotationSheet column
names. Binds loopback unless explicitly told otherwise (annotation data may
contain violent content; accidental exposure is the failure mode to avoid).
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field

from .annotate import AnnotationDecision, REMOVE_MARKER
from .errors import ValidationError
from .session import SessionStore


class DecisionPayload(BaseModel):
    batch_id: str
    annotator: str = Field(min_length=1)
    id: str
    semantically_correct: bool
    contextually_correct: bool
    replacement: str = ""
    additions: list[str] = []


def create_app(store: SessionStore, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="lexiport annotation service")

    @app.get("/api/batches")
    def batches():
        return [{"id": bid, "size": len(sheet)}
                for bid, sheet in store.batches.items()]

    def _sheet(batch_id: str):
        sheet = store.batches.get(batch_id)
        if sheet is None:
            raise HTTPException(404, f"unknown batch {batch_id!r}")
        return sheet

    @app.get("/api/batches/{batch_id}/next")
    def next_record(batch_id: str, annotator: str = Query(min_length=1)):
        _sheet(batch_id)
        rec = store.next_record(batch_id, annotator)
        if rec is None:
            return {"done": True, "record": None}
        return {"done": False, "record": {
            "id": rec.id,
            "category": rec.source.category,
            "source": rec.source.surface,
            "candidate": rec.candidate,
        }}

    @app.get("/api/batches/{batch_id}/progress")
    def progress(batch_id: str):
        _sheet(batch_id)
        return store.progress(batch_id)

    @app.post("/api/decisions", status_code=201)
    def post_decision(payload: DecisionPayload):
        sheet = _sheet(payload.batch_id)
        record = next((r for r in sheet.records if r.id == payload.id), None)
        if record is None:
            raise HTTPException(
                404, f"unknown record {payload.id!r} in batch "
                     f"{payload.batch_id!r}")
        repl_cell = payload.replacement.strip()
        remove = repl_cell == REMOVE_MARKER
        replacement = None if (remove or repl_cell in ("", "-")) \
            else repl_cell.lower()
        try:
            decision = AnnotationDecision(
                record_id=payload.id,
                annotator=payload.annotator,
                category=record.source.category,
                semantically_correct=payload.semantically_correct,
                contextually_correct=payload.contextually_correct,
                replacement=replacement,
                remove=remove,
                additions=[a.strip().lower() for a in payload.additions
                           if a.strip()])
        except ValidationError as exc:
            raise HTTPException(400, str(exc))
        try:
            store.record_decision(payload.batch_id, decision)
        except KeyError as exc:
            raise HTTPException(404, str(exc))
        return {"ok": True, "record_id": payload.id}

    @app.get("/api/export/{batch_id}", response_class=PlainTextResponse)
    def export(batch_id: str, annotator: str = Query(min_length=1)):
        _sheet(batch_id)
        return PlainTextResponse(store.export_csv(batch_id, annotator),
                                 media_type="text/csv; charset=utf-8")

    if ui_dir and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True),
                  name="ui")

    return app


def serve(store: SessionStore, host: str = "127.0.0.1", port: int = 8710,
          ui_dir: str | Path | None = None):
    import uvicorn

    uvicorn.run(create_app(store, ui_dir=ui_dir), host=host, port=port)
