"""Annotation sheets, stratified sampling, decision merging, and stemming of
merged dictionaries.

Sheet CSV columns (UTF-8, LF):
``id,category,source,candidate,semantically_correct,contextually_correct,replacement,additions``

Booleans are ``true``/``false`` (blank allowed only in unannotated sheets).
The replacement cell is empty or ``-`` for "no replacement"; the literal
marker ``!remove`` requests deletion (the column list is fixed, so removal
rides in the replacement column). Additions are ``;``-separated lowercase
surfaces.
"""

from __future__ import annotations

import csv
import io
import random
from collections import Counter
from dataclasses import dataclass, field

from .errors import ValidationError
from .lexicon import GRIEVANCE_CATEGORIES, Dictionary, TermEntry
from .stats import PairedRatings
from .stemming import stem_words
from .translate import TranslationRecord, TranslationSet

SHEET_COLUMNS = ["id", "category", "source", "candidate",
                 "semantically_correct", "contextually_correct",
                 "replacement", "additions"]
REMOVE_MARKER = "!remove"


@dataclass
class AnnotationDecision:
    record_id: str
    annotator: str
    category: str
    semantically_correct: bool
    contextually_correct: bool
    replacement: str | None = None
    remove: bool = False
    additions: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.correct and (self.replacement or self.remove):
            raise ValidationError(
                f"{self.record_id}: marked correct but has a correction")
        if not self.correct and not (self.replacement or self.remove):
            raise ValidationError(
                f"{self.record_id}: marked incorrect without a replacement "
                f"or the {REMOVE_MARKER} marker")
        if self.replacement and self.remove:
            raise ValidationError(
                f"{self.record_id}: replacement and removal are exclusive")

    @property
    def correct(self) -> bool:
        # the binary reduction used for inter-annotator agreement
        return self.semantically_correct and self.contextually_correct


@dataclass
class AnnotationSheet:
    """A batch of records put in front of annotators."""
    batch_id: str
    records: list[TranslationRecord]

    def __len__(self):
        return len(self.records)


def sample_annotation_batch(ts: TranslationSet, per_category: int = 25,
                            seed: int = 0,
                            batch_id: str | None = None) -> AnnotationSheet:
    """Stratified uniform sample without replacement, `per_category` records
    per category (whole category when smaller). Deterministic per seed."""
    if per_category < 1:
        raise ValidationError("per_category must be >= 1")
    rng = random.Random(seed)
    by_cat: dict[str, list[TranslationRecord]] = {}
    for r in ts.records:
        by_cat.setdefault(r.source.category, []).append(r)
    cats = [c for c in GRIEVANCE_CATEGORIES if c in by_cat]
    cats += [c for c in by_cat if c not in cats]
    chosen = []
    for c in cats:
        pool = by_cat[c]
        take = min(per_category, len(pool))
        chosen.extend(rng.sample(pool, take))
    return AnnotationSheet(batch_id or f"batch-{seed}", chosen)


# ---------------------------------------------------------------------------
# Sheet CSV

def _bool_cell(v: bool | None) -> str:
    return "" if v is None else ("true" if v else "false")


def export_sheet(records: list[TranslationRecord],
                 decisions: dict[str, AnnotationDecision] | None = None) -> str:
    """Render a sheet CSV; decision columns are blank when unannotated."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SHEET_COLUMNS)
    decisions = decisions or {}
    for r in records:
        d = decisions.get(r.id)
        if d is None:
            w.writerow([r.id, r.source.category, r.source.surface,
                        r.candidate, "", "", "", ""])
        else:
            repl = REMOVE_MARKER if d.remove else (d.replacement or "")
            w.writerow([r.id, r.source.category, r.source.surface,
                        r.candidate, _bool_cell(d.semantically_correct),
                        _bool_cell(d.contextually_correct), repl,
                        ";".join(d.additions)])
    return buf.getvalue()


def _parse_bool(cell: str, lineno: int, column: str) -> bool:
    v = cell.strip().lower()
    if v in ("true", "1", "yes", "y"):
        return True
    if v in ("false", "0", "no", "n"):
        return False
    raise ValidationError(f"row {lineno}: non-boolean {column}={cell!r}")


def import_annotations(text: str, annotator: str,
                       known_ids: set[str] | None = None
                       ) -> list[AnnotationDecision]:
    """Parse a filled sheet. Any bad row rejects the whole batch; the error
    message reports every problem found."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != SHEET_COLUMNS:
        raise ValidationError(
            f"bad sheet header {header!r}, expected {SHEET_COLUMNS}")
    decisions = []
    problems = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(SHEET_COLUMNS):
            problems.append(f"row {lineno}: expected "
                            f"{len(SHEET_COLUMNS)} columns, got {len(row)}")
            continue
        rid, category = row[0].strip(), row[1].strip().lower()
        if known_ids is not None and rid not in known_ids:
            problems.append(f"row {lineno}: unknown record id {rid!r}")
            continue
        repl_cell = row[6].strip()
        remove = repl_cell == REMOVE_MARKER
        replacement = None if (remove or repl_cell in ("", "-")) \
            else repl_cell.lower()
        additions = [a.strip().lower() for a in row[7].split(";")
                     if a.strip()]
        try:
            decisions.append(AnnotationDecision(
                record_id=rid, annotator=annotator, category=category,
                semantically_correct=_parse_bool(row[4], lineno,
                                                 "semantically_correct"),
                contextually_correct=_parse_bool(row[5], lineno,
                                                 "contextually_correct"),
                replacement=replacement, remove=remove,
                additions=additions))
        except ValidationError as exc:
            problems.append(str(exc))
    if problems:
        raise ValidationError("sheet rejected: " + "; ".join(problems))
    return decisions


# ---------------------------------------------------------------------------
# Agreement

def agreement_table(a: list[AnnotationDecision],
                    b: list[AnnotationDecision]) -> list[PairedRatings]:
    """Pair two annotators' binary correct/incorrect judgments per category."""
    amap = {d.record_id: d for d in a}
    bmap = {d.record_id: d for d in b}
    if set(amap) != set(bmap):
        only_a = sorted(set(amap) - set(bmap))[:5]
        only_b = sorted(set(bmap) - set(amap))[:5]
        raise ValidationError(
            f"record id mismatch between annotators "
            f"(only first: {only_a}, only second: {only_b})")
    by_cat: dict[str, list[tuple[bool, bool]]] = {}
    for rid in sorted(amap):
        d1, d2 = amap[rid], bmap[rid]
        by_cat.setdefault(d1.category, []).append((d1.correct, d2.correct))
    cats = [c for c in GRIEVANCE_CATEGORIES if c in by_cat]
    cats += sorted(c for c in by_cat if c not in cats)
    return [PairedRatings(c, by_cat[c]) for c in cats]


# ---------------------------------------------------------------------------
# Merging

@dataclass
class CorrectionStats:
    """Bookkeeping of the correction pass.

    `unstemmed_size` counts kept-plus-added surfaces before (surface,
    category) deduplication, so correctly_translated + words_corrected +
    new_words always sums to it even if two sources share a translation.
    """
    input_size: int
    correctly_translated: int
    words_corrected: int
    words_removed: int
    new_words: int
    unstemmed_size: int
    stemmed_size: int | None = None
    added_provenance: list[tuple[str, str, str]] = field(default_factory=list)
    # (surface, category, source record id) for downstream audits

    def __post_init__(self):
        assert self.unstemmed_size == (self.correctly_translated
                                       + self.words_corrected + self.new_words)
        assert self.words_removed == (self.input_size
                                      - self.correctly_translated
                                      - self.words_corrected)


def merge_decisions(ts: TranslationSet,
                    decisions: list[AnnotationDecision],
                    strict: bool = False
                    ) -> tuple[Dictionary, CorrectionStats]:
    """Fold the first annotator's decisions into a target-language dictionary.

    Undecided records default to accepted unless `strict`, which rejects
    incomplete decision sets.
    """
    dmap: dict[str, AnnotationDecision] = {}
    for d in decisions:
        if d.record_id in dmap:
            raise ValidationError(f"duplicate decision for {d.record_id}")
        dmap[d.record_id] = d
    known = {r.id for r in ts.records}
    unknown = set(dmap) - known
    if unknown:
        raise ValidationError(f"decisions for unknown records: "
                              f"{sorted(unknown)[:5]}")
    if strict:
        undecided = known - set(dmap)
        if undecided:
            raise ValidationError(
                f"{len(undecided)} record(s) without a decision "
                f"(strict mode): {sorted(undecided)[:5]}")

    accepted = corrected = removed = 0
    entries: list[TermEntry] = []
    added: list[tuple[str, str, str]] = []
    categories: list[str] = []
    for r in ts.records:
        cat = r.source.category
        if cat not in categories:
            categories.append(cat)
        d = dmap.get(r.id)
        if d is None or d.correct:
            accepted += 1
            entries.append(TermEntry(r.candidate, cat))
        elif d.remove:
            removed += 1
        else:
            corrected += 1
            entries.append(TermEntry(d.replacement, cat))
        if d is not None:
            for a in d.additions:
                added.append((a, cat, r.id))
                entries.append(TermEntry(a, cat))

    stats = CorrectionStats(
        input_size=len(ts.records),
        correctly_translated=accepted,
        words_corrected=corrected,
        words_removed=removed,
        new_words=len(added),
        unstemmed_size=accepted + corrected + len(added),
        added_provenance=added,
    )
    merged = Dictionary(ts.target_language, categories, entries)
    return merged, stats


def stem_dictionary(d: Dictionary, language: str | None = None) -> Dictionary:
    """Stem every surface; duplicate (stem, category) pairs collapse."""
    if d.stemmed:
        raise ValidationError("dictionary is already stemmed")
    lang = language or d.language
    entries = [TermEntry(stem_words(e.surface, lang), e.category, e.goodness)
               for e in d.entries]
    return Dictionary(d.language, list(d.categories), entries, stemmed=True)


def category_counts(decisions: list[AnnotationDecision]) -> Counter:
    return Counter(d.category for d in decisions)
