from lexiport.tokenizer import tokenize


def test_empty_text():
    assert tokenize("") == []


def test_punctuation_stripped():
    assert tokenize("Hello, world!") == ["hello", "world"]


def test_diacritics_preserved():
    assert tokenize("geïrriteerd…", "nl") == ["geïrriteerd"]


def test_lowercased():
    assert tokenize("KILL Kill kill") == ["kill"] * 3


def test_digits_only_dropped():
    assert tokenize("call 911 now") == ["call", "now"]


def test_mixed_alnum_kept():
    assert tokenize("ak47 rules") == ["ak47", "rules"]


def test_hyphenated_words_split():
    assert tokenize("self-defence") == ["self", "defence"]


def test_underscore_is_a_separator():
    assert tokenize("foo_bar") == ["foo", "bar"]


def test_deterministic():
    text = "Some, fairly! long-ish text; with 123 numbers and Ünïcödé."
    assert tokenize(text) == tokenize(text)
