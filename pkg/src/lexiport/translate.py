"""Machine-translation of dictionary terms via pluggable providers.

Providers translate batches of bare terms (an optional category hint is part
of the interface but unused by default). Responses are cached on disk, one
atomically-written JSON file per (provider, source language, target
language, term), so reruns issue zero network requests for cached terms.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import os
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, ProviderError, ValidationError
from .lexicon import Dictionary, TermEntry

log = logging.getLogger(__name__)

STATUSES = ("pending", "accepted", "corrected", "removed")


@dataclass
class TranslationRecord:
    id: str
    source: TermEntry
    candidate: str
    provider: str
    status: str = "pending"
    replacement: str | None = None
    additions: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValidationError(f"bad status {self.status!r}")
        if self.status == "corrected" and not self.replacement:
            raise ValidationError(f"{self.id}: corrected without replacement")
        if self.status == "removed" and self.replacement:
            raise ValidationError(f"{self.id}: removed with replacement")
        for a in self.additions:
            if not a or a != a.lower():
                raise ValidationError(f"{self.id}: bad addition {a!r}")


@dataclass
class TranslationSet:
    source_language: str
    target_language: str
    records: list[TranslationRecord]

    def __len__(self):
        return len(self.records)

    def by_id(self) -> dict[str, TranslationRecord]:
        return {r.id: r for r in self.records}


def record_id(entry: TermEntry) -> str:
    return f"{entry.category}:{entry.surface}"


# ---------------------------------------------------------------------------
# Providers

class TranslationProvider:
    """Interface: translate a batch of terms between two languages."""

    name = "abstract"

    def translate_batch(self, terms: list[str], source_lang: str,
                        target_lang: str,
                        category_hint: str | None = None) -> dict[str, str]:
        raise NotImplementedError


class OfflineFixtureProvider(TranslationProvider):
    """Deterministic provider backed by a two-column (source, translation)
    CSV fixture; terms absent from the fixture are reported untranslated."""

    name = "offline-fixture"

    def __init__(self, fixture_path: str | Path):
        self.table: dict[str, str] = {}
        with open(fixture_path, newline="", encoding="utf-8") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row or row[0].startswith("#"):
                    continue
                if len(row) != 2:
                    raise ParseError("fixture rows must be source,translation",
                                     line=lineno)
                self.table[row[0].strip().lower()] = row[1].strip().lower()

    def translate_batch(self, terms, source_lang, target_lang,
                        category_hint=None):
        return {t: self.table[t] for t in terms if t in self.table}


class HttpProvider(TranslationProvider):
    """Generic JSON-over-HTTP translation endpoint.

    POSTs ``{"source": ..., "target": ..., "terms": [...]}`` and expects
    ``{"translations": {term: translation, ...}}``. The API key is read from
    the environment variable named by `api_key_env` and sent as a Bearer
    token. Retries with exponential backoff up to `max_retries`.
    """

    name = "http"

    def __init__(self, endpoint: str, api_key_env: str = "TRANSLATE_API_KEY",
                 max_retries: int = 3, timeout: float = 30.0,
                 session=None):
        import requests

        self.endpoint = endpoint
        self.api_key = os.environ.get(api_key_env, "")
        self.max_retries = max_retries
        self.timeout = timeout
        self.session = session or requests.Session()

    def translate_batch(self, terms, source_lang, target_lang,
                        category_hint=None):
        payload = {"source": source_lang, "target": target_lang,
                   "terms": list(terms)}
        if category_hint:
            payload["category"] = category_hint
        headers = {}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        delay = 1.0
        last_exc = None
        for attempt in range(self.max_retries):
            try:
                resp = self.session.post(self.endpoint, json=payload,
                                         headers=headers,
                                         timeout=self.timeout)
                resp.raise_for_status()
                return {k: str(v).lower()
                        for k, v in resp.json()["translations"].items()}
            except Exception as exc:  # noqa: BLE001 - retried, then surfaced
                last_exc = exc
                if attempt + 1 < self.max_retries:
                    time.sleep(delay)
                    delay *= 2
        raise ProviderError(f"provider request failed: {last_exc}")


# ---------------------------------------------------------------------------
# Response cache

class ResponseCache:
    """One JSON file per (provider, source, target, term), written atomically."""

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def _path(self, provider: str, src: str, tgt: str, term: str) -> Path:
        digest = hashlib.sha256(term.encode("utf-8")).hexdigest()[:24]
        return self.root / provider / f"{src}-{tgt}" / f"{digest}.json"

    def get(self, provider, src, tgt, term):
        p = self._path(provider, src, tgt, term)
        if not p.exists():
            return None
        entry = json.loads(p.read_text(encoding="utf-8"))
        return entry["translation"] if entry["term"] == term else None

    def put(self, provider, src, tgt, term, translation):
        p = self._path(provider, src, tgt, term)
        p.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=p.parent, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump({"term": term, "translation": translation}, fh,
                      ensure_ascii=False)
        os.replace(tmp, p)


# ---------------------------------------------------------------------------

def translate_terms(d: Dictionary, provider: TranslationProvider,
                    target_language: str,
                    cache: ResponseCache | None = None,
                    batch_size: int = 128,
                    category_hint: bool = False) -> TranslationSet:
    """One pending TranslationRecord per source entry.

    Raises ProviderError listing every untranslated record id when the
    provider cannot supply all candidates; terms are never silently dropped.
    """
    src = d.language
    candidates: dict[str, str] = {}
    todo: list[TermEntry] = []
    for e in d.entries:
        cached = cache.get(provider.name, src, target_language,
                           e.surface) if cache else None
        if cached is not None:
            candidates[record_id(e)] = cached
        else:
            todo.append(e)

    for i in range(0, len(todo), batch_size):
        batch = todo[i:i + batch_size]
        hint = batch[0].category if (category_hint and batch) else None
        got = provider.translate_batch([e.surface for e in batch], src,
                                       target_language, category_hint=hint)
        for e in batch:
            if e.surface in got:
                t = got[e.surface].lower()
                candidates[record_id(e)] = t
                if cache:
                    cache.put(provider.name, src, target_language,
                              e.surface, t)

    missing = [record_id(e) for e in d.entries
               if record_id(e) not in candidates]
    if missing:
        raise ProviderError(
            f"{len(missing)} term(s) left untranslated", untranslated=missing)

    records = [TranslationRecord(record_id(e), e, candidates[record_id(e)],
                                 provider.name)
               for e in d.entries]
    return TranslationSet(src, target_language, records)


def translations_to_json(ts: TranslationSet) -> str:
    return json.dumps({
        "source_language": ts.source_language,
        "target_language": ts.target_language,
        "records": [{
            "id": r.id,
            "source": r.source.surface,
            "category": r.source.category,
            "goodness": r.source.goodness,
            "candidate": r.candidate,
            "provider": r.provider,
            "status": r.status,
            "replacement": r.replacement,
            "additions": r.additions,
        } for r in ts.records],
    }, ensure_ascii=False, indent=1)


def translations_from_json(text: str) -> TranslationSet:
    obj = json.loads(text)
    records = [TranslationRecord(
        id=r["id"],
        source=TermEntry(r["source"], r["category"], r.get("goodness")),
        candidate=r["candidate"],
        provider=r.get("provider", "unknown"),
        status=r.get("status", "pending"),
        replacement=r.get("replacement"),
        additions=list(r.get("additions", ())),
    ) for r in obj["records"]]
    return TranslationSet(obj["source_language"], obj["target_language"],
                          records)
