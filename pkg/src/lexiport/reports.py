"""Markdown and CSV renderings of the statistical outputs."""

from __future__ import annotations

import csv
import io

from .annotate import CorrectionStats
from .stats import (AgreementResult, CorrelationResult, ReliabilityResult,
                    top_k_correlations)


def _md_table(header: list[str], rows: list[list[str]]) -> str:
    out = ["| " + " | ".join(header) + " |",
           "| " + " | ".join("---" for _ in header) + " |"]
    for row in rows:
        out.append("| " + " | ".join(row) + " |")
    return "\n".join(out) + "\n"


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _ac1_cell(r: AgreementResult) -> str:
    if r.ci_low is None:
        return _fmt(r.ac1)
    return f"{_fmt(r.ac1)} [{_fmt(r.ci_low)} - {_fmt(r.ci_high)}]"


# ---------------------------------------------------------------------------
# Agreement (annotator reliability)

def agreement_markdown(results: list[AgreementResult]) -> str:
    rows = [[r.category.capitalize(), str(r.n_items), _ac1_cell(r)]
            for r in results]
    return _md_table(["Category", "No. terms", "AC1 [CI]"], rows)


def agreement_csv(results: list[AgreementResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["category", "n_items", "p_a", "p_e", "ac1",
                "ci_low", "ci_high"])
    for r in results:
        w.writerow([r.category, r.n_items, repr(r.p_a), repr(r.p_e),
                    repr(r.ac1),
                    "" if r.ci_low is None else repr(r.ci_low),
                    "" if r.ci_high is None else repr(r.ci_high)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Corrections

def corrections_markdown(language: str, stats: CorrectionStats) -> str:
    header = ["Language", "Correctly translated", "Words corrected",
              "Words removed", "New words", "Unstemmed dictionary",
              "Stemmed dictionary (final)"]
    row = [language, f"{stats.correctly_translated:,}",
           f"{stats.words_corrected:,}", f"{stats.words_removed:,}",
           f"{stats.new_words:,}", f"{stats.unstemmed_size:,}",
           "" if stats.stemmed_size is None else f"{stats.stemmed_size:,}"]
    return _md_table(header, [row])


def corrections_csv(language: str, stats: CorrectionStats) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["language", "correctly_translated", "words_corrected",
                "words_removed", "new_words", "unstemmed_size",
                "stemmed_size"])
    w.writerow([language, stats.correctly_translated, stats.words_corrected,
                stats.words_removed, stats.new_words, stats.unstemmed_size,
                "" if stats.stemmed_size is None else stats.stemmed_size])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Reliability

def reliability_markdown(results: list[ReliabilityResult],
                         corpus_ids: list[str]) -> str:
    header = ["Category"] + list(corpus_ids) + ["Mean alpha"]
    rows = []
    for r in results:
        rows.append([r.category.capitalize()]
                    + [_fmt(a) for a in r.per_corpus_alpha]
                    + [_fmt(r.mean_alpha)])
    return _md_table(header, rows)


def reliability_csv(results: list[ReliabilityResult],
                    corpus_ids: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["category"] + [f"alpha_{c}" for c in corpus_ids]
               + ["mean_alpha"])
    for r in results:
        w.writerow([r.category] + [repr(a) for a in r.per_corpus_alpha]
                   + [repr(r.mean_alpha)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Correlations

def correlation_cell(r: CorrelationResult | None) -> str:
    if r is None:
        return "NS"
    cell = f"{r.companion}: {_fmt(r.mean_r)} " \
           f"[{_fmt(r.range_low)}-{_fmt(r.range_high)}]"
    if r.mean_r < 0:
        cell += " (negative)"
    return cell


def render_threshold(alpha_level: float, m: int) -> str:
    return f"p < {alpha_level:g}/{m} (p < {alpha_level / m:.4f})"


def top_correlations_markdown(results: list[CorrelationResult],
                              categories: list[str],
                              alpha_level: float = 0.05,
                              m: int | None = None,
                              k: int = 3) -> str:
    m = m if m is not None else len(categories)
    by_cat: dict[str, list[CorrelationResult]] = {c: [] for c in categories}
    for r in results:
        by_cat.setdefault(r.category, []).append(r)
    rows = []
    for c in categories:
        top = top_k_correlations(by_cat[c], k=k) if by_cat[c] \
            else [None] * k
        rows.append([c.capitalize()] + [correlation_cell(t) for t in top])
    header = ["Category"] + [f"#{i + 1}" for i in range(k)]
    note = (f"\nAll shown correlations significant at "
            f"{render_threshold(alpha_level, m)}; NS = not significant.\n")
    return _md_table(header, rows) + note


def correlations_csv(results: list[CorrelationResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["category", "companion", "mean_r", "range_low", "range_high",
                "significant", "per_corpus_r", "per_corpus_p"])
    for r in results:
        w.writerow([r.category, r.companion, repr(r.mean_r),
                    repr(r.range_low), repr(r.range_high),
                    str(r.significant).lower(),
                    ";".join(repr(v) for v in r.per_corpus_r),
                    ";".join(repr(v) for v in r.per_corpus_p)])
    return buf.getvalue()
