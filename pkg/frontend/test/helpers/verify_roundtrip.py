"""Check the browser session's exports against the file-based path.

Usage: python3 verify_roundtrip.py EXPORT_ANN1 EXPORT_ANN2

Rebuilds the same decisions, pushes them through import_annotations ->
export_sheet (the annotate-import route), and reports byte-equality plus
the per-category AC1 computed from the two exports, as JSON on stdout.
"""

import json
import sys
from fractions import Fraction
from pathlib import Path

from batch40 import decision_for, make_records
from lexiport.annotate import (agreement_table, export_sheet,
                               import_annotations)
from lexiport.stats import gwet_ac1


def expected_export(annotator: str) -> str:
    records = make_records()
    decisions = {r.id: decision_for(r.id, annotator) for r in records}
    filled = export_sheet(records, decisions)
    # run it through the sheet-import route, as annotate-import would
    imported = import_annotations(filled, annotator,
                                  known_ids={r.id for r in records})
    return export_sheet(records, {d.record_id: d for d in imported})


def exact_ac1(items):
    n = len(items)
    agree = sum(a == b for a, b in items)
    p_a = Fraction(agree, n)
    pi = Fraction(sum(a for a, _ in items) + sum(b for _, b in items), 2 * n)
    p_e = 2 * pi * (1 - pi)
    return float((p_a - p_e) / (1 - p_e))


def main():
    got_a = Path(sys.argv[1]).read_text(encoding="utf-8")
    got_b = Path(sys.argv[2]).read_text(encoding="utf-8")
    bytes_match = (got_a == expected_export("ann-1")
                   and got_b == expected_export("ann-2"))

    known = {r.id for r in make_records()}
    da = import_annotations(got_a, "ann-1", known_ids=known)
    db = import_annotations(got_b, "ann-2", known_ids=known)
    out = {"bytes_match": bytes_match, "categories": {}}
    for batch in agreement_table(da, db):
        r = gwet_ac1(batch)
        out["categories"][batch.category] = {
            "ac1": r.ac1,
            "expected": exact_ac1(batch.items),
        }
    print(json.dumps(out))


if __name__ == "__main__":
    main()
