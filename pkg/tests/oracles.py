"""Independent reference implementations used to check the library.

Everything here is deliberately naive / exact-arithmetic and shares no code
with the package internals.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


# --- matching: naive per-entry, per-token scan -----------------------------

def _token_matches(pattern: str, token: str) -> bool:
    if pattern.endswith("*"):
        return token.startswith(pattern[:-1])
    return token == pattern


def _phrase_matches(words: tuple[str, ...], window: list[str]) -> bool:
    return all(_token_matches(p, t) for p, t in zip(words, window))


def naive_category_counts(entries, categories, tokens) -> dict[str, int]:
    """Greedy left-to-right scan per category, longest phrase first."""
    counts = {}
    for c in categories:
        ents = [e for e in entries if e.category == c]
        singles = [e for e in ents if len(e.words) == 1]
        phrases = [e for e in ents if len(e.words) > 1]
        count = 0
        i = 0
        n = len(tokens)
        while i < n:
            best = 0
            for e in phrases:
                plen = len(e.words)
                if plen > best and i + plen <= n \
                        and _phrase_matches(e.words, tokens[i:i + plen]):
                    best = plen
            if best:
                count += 1
                i += best
                continue
            if any(_token_matches(e.words[0], tokens[i]) for e in singles):
                count += 1
            i += 1
        counts[c] = count
    return counts


def naive_entry_counts(entries, category, tokens) -> list[int]:
    out = []
    for e in entries:
        if e.category != category:
            continue
        words = e.words
        if len(words) == 1:
            out.append(sum(1 for t in tokens if _token_matches(words[0], t)))
        else:
            c = 0
            i = 0
            while i + len(words) <= len(tokens):
                if _phrase_matches(words, tokens[i:i + len(words)]):
                    c += 1
                    i += len(words)
                else:
                    i += 1
            out.append(c)
    return out


# --- agreement -------------------------------------------------------------

def exact_ac1(items: list[tuple[bool, bool]]) -> Fraction:
    """AC1 point estimate via exact rational arithmetic."""
    n = len(items)
    agree = sum(1 for a, b in items if a == b)
    p_a = Fraction(agree, n)
    pi = Fraction(sum(a for a, _ in items) + sum(b for _, b in items), 2 * n)
    p_e = 2 * pi * (1 - pi)
    return (p_a - p_e) / (1 - p_e)


def cohen_kappa(items: list[tuple[bool, bool]]) -> Fraction:
    n = len(items)
    p_a = Fraction(sum(1 for a, b in items if a == b), n)
    p1 = Fraction(sum(a for a, _ in items), n)
    p2 = Fraction(sum(b for _, b in items), n)
    p_e = p1 * p2 + (1 - p1) * (1 - p2)
    if p_e == 1:
        raise ZeroDivisionError("kappa undefined")
    return (p_a - p_e) / (1 - p_e)


# --- reliability -----------------------------------------------------------

def covariance_alpha(values: np.ndarray) -> float:
    """alpha from the covariance matrix: k/(k-1) * (1 - tr(C)/sum(C))."""
    k = values.shape[1]
    cov = np.cov(values, rowvar=False, ddof=1)
    return k / (k - 1) * (1.0 - np.trace(cov) / cov.sum())


# --- correlation -----------------------------------------------------------

def exact_pearson_r(x, y) -> Fraction:
    """Pearson r over exact rationals (inputs converted via Fraction)."""
    xs = [Fraction(v) for v in x]
    ys = [Fraction(v) for v in y]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxy = sum((a - mx) * (b - my) for a, b in zip(xs, ys))
    sxx = sum((a - mx) ** 2 for a in xs)
    syy = sum((b - my) ** 2 for b in ys)
    # return r as a float computed from exact sums (single rounding step)
    return float(sxy) / (float(sxx) ** 0.5 * float(syy) ** 0.5)
