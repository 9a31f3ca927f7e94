"""Unicode-aware word tokenization.

Rules (deterministic, documented in docs/formats.md):

* word characters are Unicode letters/digits; everything else separates
  tokens, so hyphenated words split at the hyphen and punctuation is dropped;
* tokens are lowercased;
* digits-only tokens are dropped.
"""

from __future__ import annotations

import re

# \w minus underscore keeps letters, digits and combining marks.
_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text: str, language: str = "en") -> list[str]:
    """Split raw text into lowercase word tokens.

    The language tag is accepted for interface symmetry with stemming; the
    segmentation rules are language-independent.
    """
    return [t for t in (m.group(0).lower() for m in _WORD_RE.finditer(text))
            if not t.isdigit()]
