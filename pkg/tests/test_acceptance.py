"""Release gate: one test per acceptance criterion, tolerances pinned.

Each test prints a single PASS line via its pass/fail status; keep one
criterion per test so the -v output reads as a checklist.
"""

import itertools
import random
import time

import numpy as np
import pytest

from lexiport.annotate import merge_decisions, sample_annotation_batch
from lexiport.lexicon import GRIEVANCE_CATEGORIES, Dictionary, TermEntry
from lexiport.matcher import build_matcher
from lexiport.reports import correlation_cell, render_threshold
from lexiport.scoring import ScoreMatrix, score_tokens
from lexiport.stats import (CorrelationResult, PairedRatings,
                            bonferroni_threshold, correlate_dictionaries,
                            cronbach_alpha, gwet_ac1, pearson)
from lexiport.tokenizer import tokenize

from .conftest import (make_full_english_dictionary, make_correction_decisions,
                       make_translation_set, random_dictionary, random_tokens)
from .oracles import (covariance_alpha, exact_ac1, exact_pearson_r,
                      naive_category_counts)


def test_agreement_coefficient_oracle_suite():
    start = time.perf_counter()
    # exhaustive: every two-rater binary table with up to 6 items
    for n in range(1, 7):
        for combo in itertools.product([(True, True), (True, False),
                                        (False, True), (False, False)],
                                       repeat=n):
            got = gwet_ac1(PairedRatings("x", list(combo))).ac1
            assert abs(got - float(exact_ac1(list(combo)))) < 1e-12
    # worked example: 25 items, 2 disagreements
    worked = gwet_ac1(PairedRatings("x", [(True, True)] * 23
                                    + [(True, False)] * 2))
    assert worked.ac1 == pytest.approx(0.9133, abs=5e-5)
    # perfect agreement: exactly 1, no interval
    perfect = gwet_ac1(PairedRatings("x", [(True, True)] * 25))
    assert perfect.ac1 == 1.0
    assert perfect.ci_low is None and perfect.ci_high is None
    assert time.perf_counter() - start < 10.0


def test_internal_consistency_oracle_suite():
    rng = np.random.default_rng(20240817)
    for _ in range(200):
        x = rng.random((int(rng.integers(5, 60)), int(rng.integers(3, 25))))
        assert abs(cronbach_alpha(x) - covariance_alpha(x)) < 1e-10
    identical = np.tile(rng.random((30, 1)), (1, 4))
    assert cronbach_alpha(identical) == 1.0
    orthogonal = np.array([[0, 0], [0, 1], [1, 0], [1, 1]], dtype=float)
    assert abs(cronbach_alpha(orthogonal)) <= 1e-12


def test_matching_engine_oracle_equivalence():
    rng = random.Random(20240817)
    for _ in range(500):
        d = random_dictionary(rng)
        tokens = random_tokens(rng)
        m = build_matcher(d)
        got = dict(zip(m.categories, m.scan_categories(tokens)))
        assert got == naive_category_counts(d.entries, d.categories, tokens)


def test_matching_engine_throughput():
    rng = random.Random(5)
    entries = []
    for cat in GRIEVANCE_CATEGORIES:
        for i in range(5000 // len(GRIEVANCE_CATEGORIES) + 1):
            surface = f"{cat[:4]}{i:04d}"
            if i % 7 == 0:
                surface += "*"
            entries.append(TermEntry(surface, cat))
    d = Dictionary("en", list(GRIEVANCE_CATEGORIES), entries[:5000])
    assert len(d) == 5000
    m = build_matcher(d)

    vocab = [e.surface.rstrip("*") for e in d.entries[::50]]
    vocab += ["the", "quick", "brown", "fox", "jumps", "über", "naïve",
              "straße", "perché", "woord", "zo", "running", "files"]
    chunk = " ".join(rng.choice(vocab) for _ in range(200_000))
    text = chunk
    while len(text.encode("utf-8")) < 10 * 1024 * 1024:
        text += " " + chunk

    start = time.perf_counter()
    tokens = tokenize(text)
    scores = score_tokens(m, tokens)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"10 MB scan took {elapsed:.1f}s"
    assert all(0.0 <= v <= 1.0 for v in scores.scores.values())


def test_correlation_pipeline():
    rng = np.random.default_rng(20240817)
    # high-precision oracle, 200 random vector pairs
    for _ in range(200):
        n = int(rng.integers(3, 50))
        x, y = rng.random(n), rng.random(n)
        r, _ = pearson(x, y)
        assert abs(r - exact_pearson_r(x, y)) < 1e-12
    # multiple-testing threshold: full precision and rendering
    assert bonferroni_threshold(0.05, 22) == 0.05 / 22
    rendered = render_threshold(0.05, 22)
    assert "p < 0.05/22" in rendered and "p < 0.0023" in rendered
    # self-correlation: all-1 diagonal
    sm = ScoreMatrix([f"d{i}" for i in range(40)], ["a", "b", "c"],
                     rng.random((40, 3)), provenance={})
    for res in correlate_dictionaries([sm], [sm], m=3):
        if res.category == res.companion:
            assert res.mean_r == pytest.approx(1.0)
    # mean/range presentation arithmetic
    lo, hi = 0.29, 0.81
    res = CorrelationResult("desperation", "sad", [lo, hi], [1e-6, 1e-6],
                            mean_r=(lo + hi) / 2, range_low=lo, range_high=hi,
                            significant=True)
    assert correlation_cell(res) == "sad: 0.55 [0.29-0.81]"


@pytest.mark.parametrize(
    "lang,corrected,removed,added,accepted,expected",
    [("nl", 327, 163, 98, 5023, 5448),
     ("de", 66, 0, 149, 5447, 5662),
     ("it", 353, 0, 97, 5160, 5610)],
    ids=["dutch", "german", "italian"])
def test_merge_bookkeeping(lang, corrected, removed, added, accepted,
                           expected):
    ts = make_translation_set(make_full_english_dictionary(5513), lang)
    decisions = make_correction_decisions(ts, corrected, removed, added)
    merged, stats = merge_decisions(ts, decisions)
    assert (stats.correctly_translated, stats.words_corrected,
            stats.new_words) == (accepted, corrected, added)
    assert stats.words_removed == removed
    assert stats.unstemmed_size == expected
    assert len(merged) == expected


def test_stratified_sampling():
    ts = make_translation_set(make_full_english_dictionary(5513))
    a = sample_annotation_batch(ts, per_category=25, seed=11)
    b = sample_annotation_batch(ts, per_category=25, seed=11)
    assert len(a) == 22 * 25 == 550
    assert [r.id for r in a.records] == [r.id for r in b.records]
    ids = [r.id for r in a.records]
    assert len(set(ids)) == len(ids)
    per_cat = {}
    for r in a.records:
        per_cat[r.source.category] = per_cat.get(r.source.category, 0) + 1
    assert per_cat == {c: 25 for c in GRIEVANCE_CATEGORIES}


@pytest.mark.skip(reason="requires externally downloaded dictionaries and "
                         "corpora; run manually with real data")
def test_published_data_reliability_ranking():
    """Per-category mean alphas on the published Dutch data should fall
    within 0.05 of the reference column, with violence ranked highest."""
