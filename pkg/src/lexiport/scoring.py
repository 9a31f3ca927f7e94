"""Per-document and per-corpus proportional category scoring."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyDocumentError, ValidationError
from .matcher import Matcher
from .stemming import stem
from .tokenizer import tokenize


@dataclass
class CategoryScores:
    """Per-category proportional scores for one document."""
    scores: dict[str, float]
    token_count: int


@dataclass
class ScoreMatrix:
    """documents x categories matrix of proportional scores."""
    doc_ids: list[str]
    columns: list[str]
    values: np.ndarray  # shape (len(doc_ids), len(columns)), float64
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != (len(self.doc_ids), len(self.columns)):
            raise ValidationError("matrix shape does not match labels")

    def column(self, name: str) -> np.ndarray:
        return self.values[:, self.columns.index(name)]


@dataclass
class ItemMatrix:
    """documents x word-entries matrix for a single category."""
    category: str
    doc_ids: list[str]
    columns: list[str]  # entry surfaces, stable dictionary order
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != (len(self.doc_ids), len(self.columns)):
            raise ValidationError("matrix shape does not match labels")


def _prepare_tokens(tokens: list[str], stemmed_mode: bool,
                    language: str) -> list[str]:
    if stemmed_mode:
        return [stem(t, language) for t in tokens]
    return tokens


def _check_mode(m: Matcher, stemmed_mode: bool):
    if m.dictionary.stemmed != stemmed_mode:
        raise ValidationError(
            "stemmed_mode=%s does not match dictionary (stemmed=%s); "
            "a stemmed dictionary must be matched against stemmed tokens"
            % (stemmed_mode, m.dictionary.stemmed))


def score_tokens(m: Matcher, tokens: list[str], stemmed_mode: bool = False,
                 language: str = "en") -> CategoryScores:
    """Score an already-tokenized document."""
    _check_mode(m, stemmed_mode)
    n = len(tokens)
    if n == 0:
        raise EmptyDocumentError("cannot score a document with zero tokens")
    toks = _prepare_tokens(tokens, stemmed_mode, language)
    counts = m.scan_categories(toks)
    return CategoryScores(
        {c: counts[i] / n for i, c in enumerate(m.categories)}, n)


def score_document(m: Matcher, text: str, stemmed_mode: bool = False,
                   language: str = "en") -> CategoryScores:
    return score_tokens(m, tokenize(text, language), stemmed_mode, language)


def score_corpus(m: Matcher, corpus, stemmed_mode: bool = False,
                 language: str | None = None,
                 workers: int = 1) -> ScoreMatrix:
    """Score every document of a corpus; row order follows corpus order.

    Parallel execution (workers > 1) yields output identical to serial.
    """
    _check_mode(m, stemmed_mode)
    lang = language or corpus.language
    docs = list(corpus.documents)
    if not docs:
        raise ValidationError(f"corpus {corpus.id!r} has no scorable documents")

    def row(doc):
        return score_tokens(m, tokenize(doc[1], lang), stemmed_mode, lang)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            scored = list(pool.map(row, docs))
    else:
        scored = [row(d) for d in docs]

    values = np.array([[s.scores[c] for c in m.categories] for s in scored])
    return ScoreMatrix(
        doc_ids=[d[0] for d in docs],
        columns=list(m.categories),
        values=values,
        provenance={"dictionary": m.dictionary.language
                    + (":stemmed" if m.dictionary.stemmed else ""),
                    "corpus": corpus.id},
    )


def word_occurrence_matrix(m: Matcher, corpus, category: str,
                           stemmed_mode: bool = False,
                           language: str | None = None) -> ItemMatrix:
    """Per-word proportional occurrence matrix for one category."""
    _check_mode(m, stemmed_mode)
    category = category.strip().lower()
    if category not in m.categories:
        raise ValidationError(f"category {category!r} not in dictionary")
    lang = language or corpus.language
    surfaces = [e.surface for e in m.entries if e.category == category]
    rows = []
    ids = []
    for doc_id, text in corpus.documents:
        tokens = _prepare_tokens(tokenize(text, lang), stemmed_mode, lang)
        n = len(tokens)
        if n == 0:
            raise EmptyDocumentError(f"document {doc_id!r} has zero tokens")
        counts = m.entry_occurrences(tokens, category)
        rows.append([c / n for c in counts])
        ids.append(doc_id)
    return ItemMatrix(category, ids, surfaces,
                      np.array(rows, dtype=np.float64).reshape(len(ids),
                                                               len(surfaces)))
