"""Corpus ingestion: CSV, JSONL, or a directory of .txt files.

Document order follows the source file order (directories: lexicographic
filename order); this ordering is load-bearing for row alignment between
paired score matrices, so corpora are never sorted or shuffled after load.
Documents that tokenize to zero tokens are dropped at load time with a
logged count.
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .errors import LexiportError, ValidationError
from .tokenizer import tokenize

log = logging.getLogger(__name__)


@dataclass
class Corpus:
    id: str
    language: str
    documents: list[tuple[str, str]]  # (doc_id, raw text), stable order
    provenance: str = ""
    dropped_empty: int = 0

    def __post_init__(self):
        ids = [d[0] for d in self.documents]
        if len(set(ids)) != len(ids):
            raise ValidationError(f"duplicate doc_ids in corpus {self.id!r}")

    def __len__(self):
        return len(self.documents)


def _read_text(path: Path) -> str:
    data = path.read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise LexiportError(
            f"{path}: undecodable byte at offset {exc.start}") from exc


def load_corpus(path: str | Path, format: str, text_field: str = "text",
                language: str = "en", corpus_id: str | None = None,
                id_field: str | None = None) -> Corpus:
    path = Path(path)
    cid = corpus_id or path.stem
    raw_docs: list[tuple[str, str]] = []

    if format == "dir-of-txt":
        files = sorted(p for p in path.iterdir() if p.suffix == ".txt")
        for p in files:
            raw_docs.append((p.stem, _read_text(p)))
    elif format == "csv":
        with open(path, newline="", encoding="utf-8") as fh:
            try:
                reader = csv.DictReader(fh)
                rows = list(reader)
            except UnicodeDecodeError as exc:
                raise LexiportError(
                    f"{path}: undecodable byte at offset {exc.start}") from exc
        if rows and text_field not in rows[0]:
            raise LexiportError(
                f"{path}: missing text field {text_field!r} "
                f"(columns: {list(rows[0])})")
        for i, row in enumerate(rows):
            doc_id = row[id_field] if id_field else f"{cid}-{i:06d}"
            raw_docs.append((doc_id, row[text_field] or ""))
    elif format == "jsonl":
        text = _read_text(path)
        for i, line in enumerate(text.splitlines()):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LexiportError(f"{path}:{i + 1}: bad JSON: {exc}") from exc
            if text_field not in obj:
                raise LexiportError(
                    f"{path}:{i + 1}: missing text field {text_field!r}")
            doc_id = str(obj[id_field]) if id_field else f"{cid}-{i:06d}"
            raw_docs.append((doc_id, str(obj[text_field])))
    else:
        raise ValidationError(f"unknown corpus format {format!r}")

    kept = [(d, t) for d, t in raw_docs if tokenize(t, language)]
    dropped = len(raw_docs) - len(kept)
    if dropped:
        log.info("corpus %s: dropped %d empty document(s)", cid, dropped)
    return Corpus(cid, language, kept, provenance=str(path),
                  dropped_empty=dropped)
