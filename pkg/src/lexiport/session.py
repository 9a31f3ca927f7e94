"""Annotation session state: batches plus an append-only decision log.

Decisions are never overwritten in the log; a newer entry for the same
(record, annotator) pair supersedes older ones at read time. The log is
JSONL, one decision per line, flushed per append, so a crashed session
loses at most the in-flight decision.
"""

from __future__ import annotations

import csv
import io
import json
import threading
import time
from pathlib import Path

from .annotate import (AnnotationDecision, AnnotationSheet, SHEET_COLUMNS,
                       REMOVE_MARKER, export_sheet)
from .errors import ValidationError
from .lexicon import TermEntry
from .translate import TranslationRecord


class SessionStore:
    """Single-writer decision log with lock-free snapshot reads."""

    def __init__(self, log_path: str | Path):
        self.log_path = Path(log_path)
        self.batches: dict[str, AnnotationSheet] = {}
        # (record_id, annotator) -> (seq, AnnotationDecision)
        self._latest: dict[tuple[str, str], tuple[int, AnnotationDecision]] = {}
        self._seq = 0
        self._write_lock = threading.Lock()
        if self.log_path.exists():
            self._replay()

    def _replay(self):
        with open(self.log_path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                obj = json.loads(line)
                d = AnnotationDecision(
                    record_id=obj["record_id"],
                    annotator=obj["annotator"],
                    category=obj["category"],
                    semantically_correct=obj["semantically_correct"],
                    contextually_correct=obj["contextually_correct"],
                    replacement=obj.get("replacement"),
                    remove=obj.get("remove", False),
                    additions=list(obj.get("additions", ())))
                self._seq += 1
                self._latest[(d.record_id, d.annotator)] = (self._seq, d)

    def add_batch(self, sheet: AnnotationSheet):
        if sheet.batch_id in self.batches:
            raise ValidationError(f"batch {sheet.batch_id!r} already loaded")
        self.batches[sheet.batch_id] = sheet

    def record_decision(self, batch_id: str, d: AnnotationDecision):
        sheet = self.batches.get(batch_id)
        if sheet is None:
            raise KeyError(f"unknown batch {batch_id!r}")
        if d.record_id not in {r.id for r in sheet.records}:
            raise KeyError(f"unknown record {d.record_id!r} "
                           f"in batch {batch_id!r}")
        entry = {
            "ts": time.time(),
            "batch": batch_id,
            "record_id": d.record_id,
            "annotator": d.annotator,
            "category": d.category,
            "semantically_correct": d.semantically_correct,
            "contextually_correct": d.contextually_correct,
            "replacement": d.replacement,
            "remove": d.remove,
            "additions": d.additions,
        }
        with self._write_lock:
            with open(self.log_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(entry, ensure_ascii=False) + "\n")
                fh.flush()
            self._seq += 1
            self._latest[(d.record_id, d.annotator)] = (self._seq, d)

    def decisions_for(self, batch_id: str,
                      annotator: str) -> dict[str, AnnotationDecision]:
        sheet = self.batches[batch_id]
        out = {}
        for r in sheet.records:
            hit = self._latest.get((r.id, annotator))
            if hit:
                out[r.id] = hit[1]
        return out

    def next_record(self, batch_id: str,
                    annotator: str) -> TranslationRecord | None:
        sheet = self.batches[batch_id]
        done = self.decisions_for(batch_id, annotator)
        for r in sheet.records:
            if r.id not in done:
                return r
        return None

    def progress(self, batch_id: str) -> dict:
        sheet = self.batches[batch_id]
        annotators = sorted({a for (_, a) in self._latest})
        return {
            "batch": batch_id,
            "total": len(sheet.records),
            "by_annotator": {a: len(self.decisions_for(batch_id, a))
                             for a in annotators},
        }

    def export_csv(self, batch_id: str, annotator: str) -> str:
        """Sheet CSV with this annotator's latest decisions filled in.

        Shared with the file-path export command so both routes are
        byte-identical.
        """
        sheet = self.batches[batch_id]
        return export_sheet(sheet.records,
                            self.decisions_for(batch_id, annotator))


def sheet_from_csv(text: str, batch_id: str) -> AnnotationSheet:
    """Rebuild an AnnotationSheet from an (annotated or blank) sheet CSV."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != SHEET_COLUMNS:
        raise ValidationError(
            f"bad sheet header {header!r}, expected {SHEET_COLUMNS}")
    records = []
    for row in reader:
        if not row or all(not c.strip() for c in row):
            continue
        rid, category, source, candidate = (c.strip() for c in row[:4])
        records.append(TranslationRecord(
            id=rid, source=TermEntry(source.lower(), category.lower()),
            candidate=candidate.lower(), provider="sheet"))
    return AnnotationSheet(batch_id, records)


__all__ = ["SessionStore", "sheet_from_csv", "REMOVE_MARKER"]
