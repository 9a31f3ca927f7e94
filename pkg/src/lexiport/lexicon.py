"""Dictionary data model plus parsers/serializers for the two on-disk formats.

Supported formats:

* "grievance-csv": ``word,category[,goodness]`` rows, UTF-8, LF or CRLF.
* "liwc-dic": ``%``-delimited header of ``id<TAB>name`` lines followed by
  ``word<TAB>id[<TAB>id...]`` body lines.

Both grammars are documented in ``docs/formats.md``.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field

from .errors import ParseError, ValidationError

log = logging.getLogger(__name__)

# The 22 grievance categories, in report order.
GRIEVANCE_CATEGORIES = [
    "deadline", "desperation", "fixation", "frustration", "god",
    "grievance", "hate", "help", "honour", "impostor", "jealousy",
    "loneliness", "murder", "paranoia", "planning", "relationship",
    "soldier", "suicide", "surveillance", "threat", "violence", "weaponry",
]

KNOWN_LANGUAGES = ("en", "nl", "de", "it")

# Phrase entries are limited to trigrams; longer patterns are rejected.
MAX_PHRASE_TOKENS = 3


def normalize_category(name: str) -> str:
    return name.strip().lower()


@dataclass(frozen=True)
class TermEntry:
    """One dictionary pattern: a literal token, a ``*``-suffixed prefix
    pattern, or a short phrase (at most three space-separated words)."""

    surface: str
    category: str
    goodness: float | None = None

    def __post_init__(self):
        s = self.surface
        if not s:
            raise ValidationError("empty surface")
        if s != s.lower():
            raise ValidationError(f"surface not lowercase: {s!r}")
        if s != " ".join(s.split()) or "\t" in s or "\n" in s:
            raise ValidationError(f"bad whitespace in surface: {s!r}")
        words = s.split(" ")
        if len(words) > MAX_PHRASE_TOKENS:
            raise ValidationError(
                f"phrase longer than {MAX_PHRASE_TOKENS} words: {s!r}")
        stars = s.count("*")
        if stars > 1:
            raise ValidationError(f"more than one '*' in {s!r}")
        if stars == 1 and not s.endswith("*"):
            raise ValidationError(f"'*' only allowed in final position: {s!r}")
        if s == "*" or s.endswith(" *"):
            raise ValidationError(f"bare wildcard is not a pattern: {s!r}")
        if self.goodness is not None and not (1.0 <= self.goodness <= 9.0):
            raise ValidationError(
                f"goodness {self.goodness} outside [1, 9] for {s!r}")

    @property
    def wildcard(self) -> bool:
        return self.surface.endswith("*")

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(self.surface.split(" "))


@dataclass
class Dictionary:
    """An immutable-by-convention category dictionary.

    ``entries`` keeps insertion order (the stable entry order used by item
    matrices); equality is entry-set equality.
    """

    language: str
    categories: list[str]
    entries: list[TermEntry] = field(default_factory=list)
    stemmed: bool = False

    def __post_init__(self):
        self.categories = [normalize_category(c) for c in self.categories]
        if len(set(self.categories)) != len(self.categories):
            raise ValidationError("duplicate category names")
        catset = set(self.categories)
        seen = set()
        deduped = []
        for e in self.entries:
            if e.category not in catset:
                raise ValidationError(f"entry category not declared: {e.category!r}")
            key = (e.surface, e.category)
            if key in seen:
                continue
            seen.add(key)
            deduped.append(e)
        self.entries = deduped

    def __eq__(self, other):
        if not isinstance(other, Dictionary):
            return NotImplemented
        return (self.language == other.language
                and self.stemmed == other.stemmed
                and self.categories == other.categories
                and set(self.entries) == set(other.entries))

    def __len__(self):
        return len(self.entries)

    def entries_for(self, category: str) -> list[TermEntry]:
        category = normalize_category(category)
        return [e for e in self.entries if e.category == category]

    def category_sizes(self) -> dict[str, int]:
        sizes = {c: 0 for c in self.categories}
        for e in self.entries:
            sizes[e.category] += 1
        return sizes


def filter_by_goodness(d: Dictionary, threshold: float) -> Dictionary:
    """Keep entries whose goodness rating is >= threshold.

    Entries without a rating are kept unconditionally so that translated
    dictionaries (which usually carry no ratings) survive filtering.
    """
    kept = [e for e in d.entries
            if e.goodness is None or e.goodness >= threshold]
    return Dictionary(d.language, list(d.categories), kept, stemmed=d.stemmed)


# ---------------------------------------------------------------------------
# Grievance CSV

def parse_grievance_csv(text: str, language: str = "en",
                        categories: list[str] | None = None,
                        stemmed: bool = False) -> Dictionary:
    """Parse ``word,category[,goodness]`` content.

    When `categories` is given, rows naming an unlisted category are an
    error; otherwise the category list is collected from the rows (grievance
    categories first, in canonical order).
    """
    if "\x00" in text:
        raise ParseError("NUL byte in input")
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty file, expected a header row")
    except csv.Error as exc:
        raise ParseError(f"malformed CSV: {exc}")
    header = [h.strip().lower() for h in header]
    if header[:2] != ["word", "category"] or len(header) > 3 or (
            len(header) == 3 and header[2] != "goodness"):
        raise ParseError(f"bad header {header!r}, "
                         "expected word,category[,goodness]", line=1)
    has_goodness = len(header) == 3
    fixed = None if categories is None else {normalize_category(c)
                                             for c in categories}

    entries = []
    seen_cats: list[str] = []
    dupes = 0
    seen_keys = set()
    try:
        rows = list(reader)
    except csv.Error as exc:
        raise ParseError(f"malformed CSV: {exc}")
    for lineno, row in enumerate(rows, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} columns, got {len(row)}",
                             line=lineno)
        word = row[0].strip().lower()
        cat = normalize_category(row[1])
        if fixed is not None and cat not in fixed:
            raise ParseError(f"unknown category {cat!r}", line=lineno)
        goodness = None
        if has_goodness and row[2].strip():
            try:
                goodness = float(row[2])
            except ValueError:
                raise ParseError(f"bad goodness value {row[2]!r}", line=lineno)
        try:
            entry = TermEntry(word, cat, goodness)
        except ValidationError as exc:
            raise ParseError(str(exc), line=lineno)
        key = (word, cat)
        if key in seen_keys:
            dupes += 1
            continue
        seen_keys.add(key)
        entries.append(entry)
        if cat not in seen_cats:
            seen_cats.append(cat)

    if dupes:
        log.warning("collapsed %d duplicate rows", dupes)
    if categories is not None:
        cat_list = [normalize_category(c) for c in categories]
    elif set(seen_cats) <= set(GRIEVANCE_CATEGORIES):
        cat_list = [c for c in GRIEVANCE_CATEGORIES if c in seen_cats] or list(
            GRIEVANCE_CATEGORIES)
    else:
        cat_list = seen_cats
    return Dictionary(language, cat_list, entries, stemmed=stemmed)


def serialize_grievance_csv(d: Dictionary) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    has_goodness = any(e.goodness is not None for e in d.entries)
    writer.writerow(["word", "category", "goodness"] if has_goodness
                    else ["word", "category"])
    for e in d.entries:
        row = [e.surface, e.category]
        if has_goodness:
            row.append("" if e.goodness is None else repr(e.goodness))
        writer.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# LIWC-style .dic

def parse_liwc_dic(text: str, language: str = "en",
                   stemmed: bool = False) -> Dictionary:
    lines = text.splitlines()
    delims = [i for i, ln in enumerate(lines) if ln.strip() == "%"]
    if len(delims) < 2:
        raise ParseError("missing '%' header delimiters")
    start, end = delims[0], delims[1]

    id_to_cat: dict[str, str] = {}
    cat_order: list[str] = []
    for lineno in range(start + 1, end):
        ln = lines[lineno].strip()
        if not ln:
            continue
        parts = ln.split("\t")
        if len(parts) != 2:
            parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad header line {ln!r}", line=lineno + 1)
        cid, name = parts[0].strip(), normalize_category(parts[1])
        if cid in id_to_cat:
            raise ParseError(f"duplicate category id {cid}", line=lineno + 1)
        id_to_cat[cid] = name
        cat_order.append(name)

    entries = []
    seen = set()
    dupes = 0
    for lineno in range(end + 1, len(lines)):
        ln = lines[lineno].rstrip("\r\n")
        if not ln.strip():
            continue
        parts = ln.split("\t")
        if len(parts) < 2:
            raise ParseError(f"body line without category ids: {ln!r}",
                             line=lineno + 1)
        word = parts[0].strip().lower()
        for cid in parts[1:]:
            cid = cid.strip()
            if not cid:
                continue
            if cid not in id_to_cat:
                raise ParseError(f"undeclared category id {cid}",
                                 line=lineno + 1)
            try:
                entry = TermEntry(word, id_to_cat[cid])
            except ValidationError as exc:
                raise ParseError(str(exc), line=lineno + 1)
            key = (word, entry.category)
            if key in seen:
                dupes += 1
                continue
            seen.add(key)
            entries.append(entry)
    if dupes:
        log.warning("collapsed %d duplicate word/category pairs", dupes)
    return Dictionary(language, cat_order, entries, stemmed=stemmed)


def serialize_liwc_dic(d: Dictionary) -> str:
    ids = {c: str(i + 1) for i, c in enumerate(d.categories)}
    out = ["%"]
    for c in d.categories:
        out.append(f"{ids[c]}\t{c}")
    out.append("%")
    by_word: dict[str, list[str]] = {}
    order: list[str] = []
    for e in d.entries:
        if e.surface not in by_word:
            by_word[e.surface] = []
            order.append(e.surface)
        by_word[e.surface].append(ids[e.category])
    for w in order:
        out.append("\t".join([w] + by_word[w]))
    return "\n".join(out) + "\n"


def serialize_dictionary(d: Dictionary, format: str) -> str:
    if format == "grievance-csv":
        return serialize_grievance_csv(d)
    if format == "liwc-dic":
        return serialize_liwc_dic(d)
    raise ValidationError(f"unknown format {format!r}")


def parse_dictionary(text: str, format: str, language: str = "en",
                     categories: list[str] | None = None,
                     stemmed: bool = False) -> Dictionary:
    if format == "grievance-csv":
        return parse_grievance_csv(text, language, categories, stemmed)
    if format == "liwc-dic":
        return parse_liwc_dic(text, language, stemmed)
    raise ValidationError(f"unknown format {format!r}")
