import json

import pytest

from lexiport.corpus import Corpus, load_corpus
from lexiport.errors import LexiportError, ValidationError


def test_csv_corpus_basic(tmp_path):
    p = tmp_path / "posts.csv"
    p.write_text("text,author\nhello world,alice\nsecond doc,bob\n",
                 encoding="utf-8")
    c = load_corpus(p, "csv")
    assert c.id == "posts"
    assert [d for d, _ in c.documents] == ["posts-000000", "posts-000001"]
    assert c.documents[0][1] == "hello world"


def test_csv_custom_fields(tmp_path):
    p = tmp_path / "posts.csv"
    p.write_text("pid,body\n42,some text\n7,more text\n", encoding="utf-8")
    c = load_corpus(p, "csv", text_field="body", id_field="pid")
    assert [d for d, _ in c.documents] == ["42", "7"]


def test_csv_missing_text_field(tmp_path):
    p = tmp_path / "posts.csv"
    p.write_text("body\nhello\n", encoding="utf-8")
    with pytest.raises(LexiportError, match="text"):
        load_corpus(p, "csv")


def test_jsonl_corpus(tmp_path):
    p = tmp_path / "posts.jsonl"
    lines = [json.dumps({"id": i, "text": f"doc number {i}"})
             for i in range(3)]
    p.write_text("\n".join(lines) + "\n", encoding="utf-8")
    c = load_corpus(p, "jsonl", id_field="id")
    assert [d for d, _ in c.documents] == ["0", "1", "2"]


def test_jsonl_bad_line_reports_line_number(tmp_path):
    p = tmp_path / "posts.jsonl"
    p.write_text('{"text": "ok"}\nnot json\n', encoding="utf-8")
    with pytest.raises(LexiportError, match=":2:"):
        load_corpus(p, "jsonl")


def test_dir_of_txt_lexicographic_order(tmp_path):
    for name, body in [("b.txt", "second"), ("a.txt", "first"),
                       ("ignored.md", "not text")]:
        (tmp_path / name).write_text(body, encoding="utf-8")
    c = load_corpus(tmp_path, "dir-of-txt")
    assert [d for d, _ in c.documents] == ["a", "b"]
    assert [t for _, t in c.documents] == ["first", "second"]


def test_empty_documents_dropped_and_counted(tmp_path):
    p = tmp_path / "posts.csv"
    p.write_text("text\nreal words\n123 456\n...\n", encoding="utf-8")
    c = load_corpus(p, "csv")
    assert len(c) == 1
    assert c.dropped_empty == 2


def test_undecodable_bytes_reported_with_offset(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_bytes(b"ok so far \xff\xfe broken")
    (tmp_path / "dir").mkdir()
    target = tmp_path / "dir" / "doc.txt"
    target.write_bytes(p.read_bytes())
    with pytest.raises(LexiportError, match="offset 10"):
        load_corpus(tmp_path / "dir", "dir-of-txt")


def test_unknown_format_rejected(tmp_path):
    with pytest.raises(ValidationError):
        load_corpus(tmp_path, "parquet")


def test_duplicate_doc_ids_rejected():
    with pytest.raises(ValidationError):
        Corpus("c", "en", [("d1", "a"), ("d1", "b")])


def test_order_is_preserved_not_sorted(tmp_path):
    p = tmp_path / "posts.csv"
    p.write_text("pid,text\nz,zulu doc\na,alpha doc\nm,mid doc\n",
                 encoding="utf-8")
    c = load_corpus(p, "csv", id_field="pid")
    assert [d for d, _ in c.documents] == ["z", "a", "m"]
