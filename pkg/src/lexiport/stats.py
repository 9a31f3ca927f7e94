"""Reliability, agreement, and correlation statistics.

All functions are pure; sample (n-1) variances are used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats as sps

from .errors import DegenerateDataError, ValidationError
from .scoring import ItemMatrix, ScoreMatrix


# ---------------------------------------------------------------------------
# Cronbach's alpha

def cronbach_alpha(x: ItemMatrix | np.ndarray,
                   drop_constant_items: bool = False) -> float:
    """Internal-consistency alpha over an items-as-columns matrix.

    alpha = k/(k-1) * (1 - sum(item variances) / variance(total score)).
    Zero-variance items are retained by default (they keep k comparable
    across corpora and add 0 to the item-variance sum); pass
    `drop_constant_items=True` for the alternative convention.
    """
    values = x.values if isinstance(x, ItemMatrix) else np.asarray(x, float)
    if values.ndim != 2:
        raise ValidationError("expected a 2-D items matrix")
    if drop_constant_items:
        # range, not variance: the mean of a constant column can carry
        # rounding noise that makes its variance a tiny nonzero number
        keep = values.max(axis=0) > values.min(axis=0)
        values = values[:, keep]
    n, k = values.shape
    if k < 2:
        raise DegenerateDataError(f"need at least 2 items, got {k}")
    if n < 2:
        raise DegenerateDataError(f"need at least 2 rows, got {n}")
    item_vars = values.var(axis=0, ddof=1)
    total_var = values.sum(axis=1).var(ddof=1)
    if total_var == 0:
        raise DegenerateDataError("total-score variance is zero")
    return k / (k - 1) * (1.0 - item_vars.sum() / total_var)


@dataclass
class ReliabilityResult:
    category: str
    per_corpus_alpha: list[float]
    mean_alpha: float


def average_alpha(category: str, alphas: list[float]) -> ReliabilityResult:
    if not alphas:
        raise ValidationError("empty alpha list")
    return ReliabilityResult(category, list(alphas),
                             sum(alphas) / len(alphas))


# ---------------------------------------------------------------------------
# Gwet's AC1 (two raters, binary ratings)

@dataclass
class PairedRatings:
    """Binary correct/incorrect judgments from two annotators."""
    category: str
    items: list[tuple[bool, bool]]

    def __post_init__(self):
        if not self.items:
            raise ValidationError("PairedRatings must be non-empty")


@dataclass
class AgreementResult:
    category: str
    n_items: int
    p_a: float
    p_e: float
    ac1: float
    ci_low: float | None
    ci_high: float | None


def gwet_ac1(r: PairedRatings) -> AgreementResult:
    """AC1 point estimate, chance agreement, and 95% interval.

    p_e = 2*pi*(1-pi) with pi the mean proportion of "correct" marks across
    both raters. The variance is the two-rater subject-level linearization
    estimator from Gwet (2008); the normal-approximation interval is clipped
    to [-1, 1] and omitted entirely when the variance estimate is zero.
    """
    items = r.items
    n = len(items)
    agree = np.array([a == b for a, b in items], dtype=float)
    p_a = agree.mean()
    # per-item proportion of "correct" marks
    pi_i = np.array([(a + b) / 2.0 for a, b in items], dtype=float)
    pi = pi_i.mean()
    p_e = 2.0 * pi * (1.0 - pi)
    denom = 1.0 - p_e
    ac1 = (p_a - p_e) / denom

    ci_low = ci_high = None
    if n > 1:
        # linearized per-item components
        pe_i = pi_i * (1.0 - pi) + (1.0 - pi_i) * pi
        gamma_i = (agree - p_e) / denom
        star = gamma_i - 2.0 * (1.0 - ac1) * (pe_i - p_e) / denom
        var = float(((star - ac1) ** 2).sum() / (n * (n - 1)))
        if var > 0:
            half = 1.959963984540054 * math.sqrt(var)
            ci_low = max(-1.0, ac1 - half)
            ci_high = min(1.0, ac1 + half)
    return AgreementResult(r.category, n, float(p_a), float(p_e), float(ac1),
                           ci_low, ci_high)


def agreement_report(batches: list[PairedRatings]) -> list[AgreementResult]:
    """One AC1 row per category, in input order."""
    return [gwet_ac1(b) for b in batches]


# ---------------------------------------------------------------------------
# Pearson correlation

def pearson(x, y) -> tuple[float, float]:
    """Sample Pearson r and two-sided p from the t distribution (df = n-2)."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValidationError("x and y must be equal-length vectors")
    n = x.size
    if n < 3:
        raise DegenerateDataError(f"need at least 3 observations, got {n}")
    dx = x - x.mean()
    dy = y - y.mean()
    sx = float(dx @ dx)
    sy = float(dy @ dy)
    if sx == 0 or sy == 0:
        raise DegenerateDataError("zero variance in input vector")
    r = float(dx @ dy) / math.sqrt(sx * sy)
    r = max(-1.0, min(1.0, r))
    if abs(r) == 1.0:
        return r, 0.0
    t = r * math.sqrt((n - 2) / (1.0 - r * r))
    p = 2.0 * float(sps.t.sf(abs(t), n - 2))
    return r, p


# ---------------------------------------------------------------------------
# Cross-dictionary correlation tables

@dataclass
class CorrelationResult:
    category: str            # grievance-side category
    companion: str           # companion-dictionary category
    per_corpus_r: list[float]
    per_corpus_p: list[float]
    mean_r: float
    range_low: float
    range_high: float
    significant: bool


def bonferroni_threshold(alpha_level: float, m: int) -> float:
    return alpha_level / m


def correlate_dictionaries(a: list[ScoreMatrix], b: list[ScoreMatrix],
                           alpha_level: float = 0.05,
                           m: int | None = None) -> list[CorrelationResult]:
    """Per-corpus Pearson correlations for every category pair.

    `a` and `b` are parallel per-corpus score matrices with aligned rows.
    A pair is significant only when every per-corpus p-value clears the
    Bonferroni threshold alpha_level / m (m defaults to the number of
    categories in `a`).
    """
    if len(a) != len(b) or not a:
        raise ValidationError("need the same non-empty corpus list on both sides")
    for ma, mb in zip(a, b):
        if ma.doc_ids != mb.doc_ids:
            raise ValidationError(
                "misaligned score matrices: document rows differ "
                f"({ma.provenance} vs {mb.provenance})")
    if m is None:
        m = len(a[0].columns)
    threshold = bonferroni_threshold(alpha_level, m)

    results = []
    for g in a[0].columns:
        for c in b[0].columns:
            rs, ps = [], []
            degenerate = False
            for ma, mb in zip(a, b):
                try:
                    r, p = pearson(ma.column(g), mb.column(c))
                except DegenerateDataError:
                    degenerate = True
                    break
                rs.append(r)
                ps.append(p)
            if degenerate:
                continue
            results.append(CorrelationResult(
                category=g, companion=c,
                per_corpus_r=rs, per_corpus_p=ps,
                mean_r=sum(rs) / len(rs),
                range_low=min(rs), range_high=max(rs),
                significant=all(p < threshold for p in ps)))
    return results


def top_k_correlations(results: list[CorrelationResult],
                       k: int = 3) -> list[CorrelationResult | None]:
    """The k significant pairs with largest |mean_r| for one category.

    Ties break on companion name (ascending) so output is independent of
    input order. Missing slots are padded with None ("NS" in reports).
    """
    cats = {r.category for r in results}
    if len(cats) > 1:
        raise ValidationError(f"results span multiple categories: {sorted(cats)}")
    sig = [r for r in results if r.significant]
    sig.sort(key=lambda r: (-abs(r.mean_r), r.companion))
    top: list[CorrelationResult | None] = list(sig[:k])
    top.extend([None] * (k - len(top)))
    return top
