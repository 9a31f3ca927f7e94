"""Score/item matrix persistence.

Two formats:

* CSV with a one-line header ``doc_id,<col>,...`` (cells as repr'd floats,
  so CSV round-trips are exact in practice and always within 1e-15);
* a compact binary cache: magic bytes ``LXMX``, one version byte (0x01),
  a big-endian u32 JSON-header length, the UTF-8 JSON header
  ``{"doc_ids": [...], "columns": [...], "provenance": {...}, "category": ...}``,
  then row-major little-endian float64 cells. Binary round-trips are
  bit-exact.
"""

from __future__ import annotations

import csv
import io
import json
import struct
from pathlib import Path

import numpy as np

from .errors import LexiportError, ValidationError
from .scoring import ItemMatrix, ScoreMatrix

MAGIC = b"LXMX"
VERSION = 1


def _check(matrix):
    if len(matrix.columns) == 0:
        raise ValidationError("refusing to save a matrix with no columns")
    if len(matrix.doc_ids) == 0:
        raise ValidationError("refusing to save a matrix with no rows")


def matrix_to_csv(matrix) -> str:
    _check(matrix)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["doc_id"] + list(matrix.columns))
    for doc_id, row in zip(matrix.doc_ids, matrix.values):
        w.writerow([doc_id] + [repr(float(v)) for v in row])
    return buf.getvalue()


def matrix_from_csv(text: str, provenance: dict | None = None) -> ScoreMatrix:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise LexiportError("empty matrix CSV")
    if not header or header[0] != "doc_id":
        raise LexiportError("matrix CSV must start with a doc_id column")
    columns = header[1:]
    doc_ids, rows = [], []
    for row in reader:
        if not row:
            continue
        doc_ids.append(row[0])
        rows.append([float(v) for v in row[1:]])
    return ScoreMatrix(doc_ids, columns, np.array(rows, dtype=np.float64),
                       provenance=provenance or {})


def save_matrix(matrix, path: str | Path, format: str = "binary"):
    path = Path(path)
    if format == "csv":
        path.write_text(matrix_to_csv(matrix), encoding="utf-8")
        return
    if format != "binary":
        raise ValidationError(f"unknown matrix format {format!r}")
    _check(matrix)
    header = {
        "doc_ids": list(matrix.doc_ids),
        "columns": list(matrix.columns),
        "provenance": getattr(matrix, "provenance", {}),
    }
    if isinstance(matrix, ItemMatrix):
        header["category"] = matrix.category
    hbytes = json.dumps(header, ensure_ascii=False).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(bytes([VERSION]))
        fh.write(struct.pack(">I", len(hbytes)))
        fh.write(hbytes)
        fh.write(np.ascontiguousarray(matrix.values,
                                      dtype="<f8").tobytes())


def load_matrix(path: str | Path):
    path = Path(path)
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != MAGIC:
            raise LexiportError(f"{path}: not a matrix cache (bad magic)")
        version = fh.read(1)
        if version != bytes([VERSION]):
            raise LexiportError(
                f"{path}: unsupported cache version {version!r}")
        (hlen,) = struct.unpack(">I", fh.read(4))
        header = json.loads(fh.read(hlen).decode("utf-8"))
        n = len(header["doc_ids"])
        k = len(header["columns"])
        data = fh.read(n * k * 8)
    values = np.frombuffer(data, dtype="<f8").reshape(n, k).copy()
    if "category" in header:
        return ItemMatrix(header["category"], header["doc_ids"],
                          header["columns"], values)
    return ScoreMatrix(header["doc_ids"], header["columns"], values,
                       provenance=header.get("provenance", {}))
