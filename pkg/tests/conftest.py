import random

import pytest

from lexiport.annotate import AnnotationDecision
from lexiport.lexicon import GRIEVANCE_CATEGORIES, Dictionary, TermEntry
from lexiport.translate import TranslationRecord, TranslationSet, record_id


def make_full_english_dictionary(total: int = 5513) -> Dictionary:
    """Synthetic 22-category English dictionary with `total` entries."""
    base, extra = divmod(total, len(GRIEVANCE_CATEGORIES))
    entries = []
    for ci, cat in enumerate(GRIEVANCE_CATEGORIES):
        size = base + (1 if ci < extra else 0)
        for i in range(size):
            entries.append(TermEntry(f"{cat}{i:04d}", cat, goodness=8.0))
    d = Dictionary("en", list(GRIEVANCE_CATEGORIES), entries)
    assert len(d) == total
    return d


def make_translation_set(d: Dictionary, target: str = "nl") -> TranslationSet:
    records = [
        TranslationRecord(record_id(e), e, "x" + e.surface, "offline-fixture")
        for e in d.entries
    ]
    return TranslationSet("en", target, records)


def make_correction_decisions(ts: TranslationSet, corrected: int, removed: int,
                          additions: int, annotator: str = "annotator-1"):
    """Decision list hitting exact corrected/removed/addition counts.

    Records without a decision default to accepted at merge time.
    """
    decisions = []
    records = ts.records
    idx = 0
    for _ in range(corrected):
        r = records[idx]
        decisions.append(AnnotationDecision(
            r.id, annotator, r.source.category,
            semantically_correct=False, contextually_correct=True,
            replacement="c" + r.source.surface))
        idx += 1
    for _ in range(removed):
        r = records[idx]
        decisions.append(AnnotationDecision(
            r.id, annotator, r.source.category,
            semantically_correct=False, contextually_correct=False,
            remove=True))
        idx += 1
    # hang additions off accepted records beyond the corrected/removed block
    for i in range(additions):
        r = records[idx]
        decisions.append(AnnotationDecision(
            r.id, annotator, r.source.category,
            semantically_correct=True, contextually_correct=True,
            additions=[f"add{i:04d}"]))
        idx += 1
    return decisions


def random_dictionary(rng: random.Random, max_entries: int = 30,
                      with_phrases: bool = True) -> Dictionary:
    cats = ["alpha", "beta", "gamma"]
    vocab = ["kil", "kill", "killer", "attack", "bomb", "gun", "last",
             "resort", "plan", "plot", "threat", "war", "axe", "a", "ab"]
    entries = []
    seen = set()
    for _ in range(rng.randint(1, max_entries)):
        kind = rng.random()
        if with_phrases and kind < 0.2:
            n = rng.choice([2, 3])
            words = [rng.choice(vocab) for _ in range(n)]
            if rng.random() < 0.3:
                words[-1] = words[-1] + "*"
            surface = " ".join(words)
        elif kind < 0.5:
            surface = rng.choice(vocab) + "*"
        else:
            surface = rng.choice(vocab)
        cat = rng.choice(cats)
        if (surface, cat) in seen:
            continue
        seen.add((surface, cat))
        entries.append(TermEntry(surface, cat))
    if not entries:
        entries.append(TermEntry("kill", "alpha"))
    return Dictionary("en", cats, entries)


def random_tokens(rng: random.Random, max_len: int = 200) -> list[str]:
    vocab = ["kil", "kill", "killed", "killer", "killers", "attack",
             "attacks", "bomb", "gun", "guns", "last", "resort", "plan",
             "plot", "threat", "war", "axe", "a", "ab", "peace", "zz"]
    return [rng.choice(vocab) for _ in range(rng.randint(0, max_len))]


@pytest.fixture
def rng():
    return random.Random(20240817)
