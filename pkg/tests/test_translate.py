import json

import pytest

from lexiport.errors import ParseError, ProviderError
from lexiport.lexicon import Dictionary, TermEntry
from lexiport.translate import (OfflineFixtureProvider, ResponseCache,
                                TranslationRecord, record_id,
                                translate_terms, translations_from_json,
                                translations_to_json)

from .conftest import make_full_english_dictionary


class CountingProvider(OfflineFixtureProvider):
    """Wraps the fixture provider to count actual translate calls."""

    def __init__(self, fixture_path):
        super().__init__(fixture_path)
        self.calls = 0
        self.terms_seen = 0

    def translate_batch(self, terms, source_lang, target_lang,
                        category_hint=None):
        self.calls += 1
        self.terms_seen += len(terms)
        return super().translate_batch(terms, source_lang, target_lang,
                                       category_hint)


@pytest.fixture
def fixture_csv(tmp_path):
    p = tmp_path / "en-nl.csv"
    p.write_text("# source,translation\n"
                 "ammunition,munitie\n"
                 "prayer,gebed\n"
                 "kill,doden\n"
                 "weapon,wapen\n", encoding="utf-8")
    return p


@pytest.fixture
def small_dict():
    return Dictionary("en", ["weaponry", "god"],
                      [TermEntry("ammunition", "weaponry"),
                       TermEntry("weapon", "weaponry"),
                       TermEntry("prayer", "god")])


def test_offline_fixture_translates_known_terms(fixture_csv, small_dict):
    ts = translate_terms(small_dict, OfflineFixtureProvider(fixture_csv), "nl")
    by_id = ts.by_id()
    assert by_id["weaponry:ammunition"].candidate == "munitie"
    assert by_id["god:prayer"].candidate == "gebed"
    assert all(r.status == "pending" for r in ts.records)


def test_record_ids_are_category_qualified(fixture_csv, small_dict):
    ts = translate_terms(small_dict, OfflineFixtureProvider(fixture_csv), "nl")
    assert [r.id for r in ts.records] == [
        "weaponry:ammunition", "weaponry:weapon", "god:prayer"]


def test_missing_terms_raise_with_full_listing(fixture_csv):
    d = Dictionary("en", ["weaponry"],
                   [TermEntry("ammunition", "weaponry"),
                    TermEntry("howitzer", "weaponry"),
                    TermEntry("trebuchet", "weaponry")])
    with pytest.raises(ProviderError) as exc:
        translate_terms(d, OfflineFixtureProvider(fixture_csv), "nl")
    assert exc.value.untranslated == ["weaponry:howitzer",
                                      "weaponry:trebuchet"]


def test_malformed_fixture_rejected(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("only-one-column\n", encoding="utf-8")
    with pytest.raises(ParseError):
        OfflineFixtureProvider(p)


def test_cache_makes_second_run_zero_calls(fixture_csv, small_dict, tmp_path):
    cache = ResponseCache(tmp_path / "cache")
    p1 = CountingProvider(fixture_csv)
    first = translate_terms(small_dict, p1, "nl", cache=cache)
    assert p1.calls >= 1

    p2 = CountingProvider(fixture_csv)
    second = translate_terms(small_dict, p2, "nl", cache=cache)
    assert p2.calls == 0
    assert [(r.id, r.candidate) for r in first.records] == \
        [(r.id, r.candidate) for r in second.records]


def test_cache_is_language_pair_scoped(fixture_csv, small_dict, tmp_path):
    cache = ResponseCache(tmp_path / "cache")
    translate_terms(small_dict, CountingProvider(fixture_csv), "nl",
                    cache=cache)
    p = CountingProvider(fixture_csv)
    translate_terms(small_dict, p, "de", cache=cache)
    assert p.terms_seen == len(small_dict)


def test_batching_covers_every_term(fixture_csv, small_dict):
    p = CountingProvider(fixture_csv)
    translate_terms(small_dict, p, "nl", batch_size=1)
    assert p.calls == len(small_dict)
    assert p.terms_seen == len(small_dict)


def test_full_size_dictionary_round_trip(tmp_path):
    d = make_full_english_dictionary(5513)
    p = tmp_path / "full.csv"
    p.write_text("".join(f"{e.surface},x{e.surface}\n" for e in d.entries),
                 encoding="utf-8")
    ts = translate_terms(d, OfflineFixtureProvider(p), "nl", batch_size=512)
    assert len(ts) == 5513
    assert all(r.candidate == "x" + r.source.surface for r in ts.records)


class TestRecordInvariants:
    def _entry(self):
        return TermEntry("gun", "weaponry")

    def test_corrected_requires_replacement(self):
        with pytest.raises(Exception):
            TranslationRecord("weaponry:gun", self._entry(), "geweer", "t",
                              status="corrected")

    def test_removed_excludes_replacement(self):
        with pytest.raises(Exception):
            TranslationRecord("weaponry:gun", self._entry(), "geweer", "t",
                              status="removed", replacement="pistool")

    def test_unknown_status_rejected(self):
        with pytest.raises(Exception):
            TranslationRecord("weaponry:gun", self._entry(), "geweer", "t",
                              status="kept")


def test_json_round_trip(fixture_csv, small_dict):
    ts = translate_terms(small_dict, OfflineFixtureProvider(fixture_csv), "nl")
    ts.records[0].status = "accepted"
    ts.records[1].status = "corrected"
    ts.records[1].replacement = "projectiel"
    ts.records[2].additions = ["bidden"]
    text = translations_to_json(ts)
    back = translations_from_json(text)
    assert back.source_language == "en" and back.target_language == "nl"
    assert [(r.id, r.candidate, r.status, r.replacement, r.additions)
            for r in back.records] == \
        [(r.id, r.candidate, r.status, r.replacement, r.additions)
         for r in ts.records]
    # the serialized form is valid JSON with one object per record
    assert len(json.loads(text)["records"]) == 3


def test_record_id_format():
    assert record_id(TermEntry("last resort", "desperation")) == \
        "desperation:last resort"
