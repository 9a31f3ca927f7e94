"""Multi-pattern token matching for dictionary scoring.

The matcher compiles a Dictionary into hash-map indexes:

* literal single tokens: one dict lookup per token;
* wildcard prefixes: one dict lookup per candidate prefix length that
  actually occurs among the patterns;
* 2-3 word phrases: n-gram lookups keyed by the leading tokens.

Matching semantics (shared with the naive oracle used in tests): per
category, tokens are scanned left to right; at each position the longest
phrase of that category is preferred and consumes its tokens; otherwise a
single-token match counts once. A token matching several entries of one
category therefore counts once, and a phrase counts as one match while the
denominator stays the document token count.
"""

from __future__ import annotations

from collections import defaultdict

from .lexicon import Dictionary, TermEntry


class Matcher:
    """Compiled, immutable matching automaton over a Dictionary."""

    def __init__(self, dictionary: Dictionary):
        self.dictionary = dictionary
        self.entries: list[TermEntry] = list(dictionary.entries)
        self.categories: list[str] = list(dictionary.categories)
        self._cat_index = {c: i for i, c in enumerate(self.categories)}

        # single-token entries
        self._literal: dict[str, tuple[int, ...]] = {}
        self._wild: dict[str, tuple[int, ...]] = {}
        # phrases: leading (n-1)-gram -> list of (last_word, wildcard, idx, n)
        self._phrases: dict[tuple[str, ...], list] = {}
        self.max_phrase_len = 1

        literal = defaultdict(list)
        wild = defaultdict(list)
        phrases = defaultdict(list)
        for idx, e in enumerate(self.entries):
            words = e.words
            if len(words) == 1:
                w = words[0]
                if e.wildcard:
                    wild[w[:-1]].append(idx)
                else:
                    literal[w].append(idx)
            else:
                last = words[-1]
                is_wild = last.endswith("*")
                if is_wild:
                    last = last[:-1]
                phrases[words[:-1]].append((last, is_wild, idx, len(words)))
                self.max_phrase_len = max(self.max_phrase_len, len(words))
        self._literal = {k: tuple(v) for k, v in literal.items()}
        self._wild = {k: tuple(v) for k, v in wild.items()}
        self._phrases = {k: v for k, v in phrases.items()}
        self._wild_lens = sorted({len(k) for k in self._wild})
        self.has_phrases = bool(self._phrases)

    def entry_category_index(self, idx: int) -> int:
        return self._cat_index[self.entries[idx].category]

    def match_token(self, token: str) -> list[int]:
        """Entry indices of single-token entries matching `token`."""
        out = list(self._literal.get(token, ()))
        wild = self._wild
        n = len(token)
        for ln in self._wild_lens:
            if ln > n:
                break
            hit = wild.get(token[:ln])
            if hit:
                out.extend(hit)
        return out

    def phrase_matches_at(self, tokens: list[str], i: int) -> list[tuple[int, int]]:
        """(entry index, length) for phrases starting at position `i`."""
        if not self.has_phrases:
            return []
        out = []
        n = len(tokens)
        for length in range(2, self.max_phrase_len + 1):
            if i + length > n:
                break
            lead = tuple(tokens[i:i + length - 1])
            cands = self._phrases.get(lead)
            if not cands:
                continue
            last = tokens[i + length - 1]
            for pat_last, is_wild, idx, plen in cands:
                if plen != length:
                    continue
                if (last.startswith(pat_last) if is_wild else last == pat_last):
                    out.append((idx, length))
        return out

    def scan_categories(self, tokens: list[str]) -> list[int]:
        """Per-category match counts for a token stream (greedy scan)."""
        ncat = len(self.categories)
        counts = [0] * ncat
        cat_of = self.entry_category_index
        if not self.has_phrases:
            # fast path: no consumption bookkeeping needed
            seen_cat = set()
            for tok in tokens:
                hits = self.match_token(tok)
                if not hits:
                    continue
                seen_cat.clear()
                for idx in hits:
                    c = cat_of(idx)
                    if c not in seen_cat:
                        seen_cat.add(c)
                        counts[c] += 1
            return counts

        next_free = [0] * ncat  # per-category first unconsumed position
        n = len(tokens)
        for i in range(n):
            # longest-first phrase matches per category
            best_len: dict[int, int] = {}
            for idx, length in self.phrase_matches_at(tokens, i):
                c = cat_of(idx)
                if length > best_len.get(c, 0):
                    best_len[c] = length
            singles = {cat_of(idx) for idx in self.match_token(tokens[i])}
            for c, length in best_len.items():
                if next_free[c] <= i:
                    counts[c] += 1
                    next_free[c] = i + length
            for c in singles:
                if c not in best_len and next_free[c] <= i:
                    counts[c] += 1
                    next_free[c] = i + 1
        return counts

    def entry_occurrences(self, tokens: list[str], category: str) -> list[int]:
        """Independent per-entry occurrence counts for one category.

        Single-token entries count matching tokens; phrase entries count
        greedy non-overlapping occurrences (per entry, independently).
        """
        cat_entries = [(i, e) for i, e in enumerate(self.entries)
                       if e.category == category]
        counts = []
        for idx, e in cat_entries:
            words = e.words
            if len(words) == 1:
                pat = words[0]
                if e.wildcard:
                    prefix = pat[:-1]
                    counts.append(sum(1 for t in tokens if t.startswith(prefix)))
                else:
                    counts.append(sum(1 for t in tokens if t == pat))
            else:
                last = words[-1]
                is_wild = last.endswith("*")
                if is_wild:
                    last = last[:-1]
                lead = words[:-1]
                n = len(words)
                c = 0
                i = 0
                while i + n <= len(tokens):
                    if (tuple(tokens[i:i + n - 1]) == lead
                            and (tokens[i + n - 1].startswith(last) if is_wild
                                 else tokens[i + n - 1] == last)):
                        c += 1
                        i += n
                    else:
                        i += 1
                counts.append(c)
        return counts


def build_matcher(d: Dictionary) -> Matcher:
    return Matcher(d)
