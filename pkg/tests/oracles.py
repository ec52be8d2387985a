"""Brute-force reference implementations used only by the tests.

None of these import the code paths they check; they work on plain tuples,
strings and dicts.
"""

from collections import defaultdict
from itertools import combinations


def ngram_counts(n, skip_window):
    """Count unigrams, bigrams and skip-bigrams by enumerating index pairs."""
    pairs = list(combinations(range(n), 2))
    bigrams = sum(1 for i, j in pairs if j - i == 1)
    skips = sum(1 for i, j in pairs if 2 <= j - i <= skip_window + 1)
    return n, bigrams, skips


def ngram_list(words, skip_window):
    """Expected n-gram sequence as (tokens, skip) tuples ordered by first index."""
    out = []
    for i in range(len(words)):
        out.append(((words[i],), False))
        for j in range(i + 1, len(words)):
            if j - i == 1:
                out.append(((words[i], words[j]), False))
        for j in range(i + 1, len(words)):
            if 2 <= j - i <= skip_window + 1:
                out.append(((words[i], words[j]), True))
    return out


def _tilings(words, terms, start=0):
    """Yield every tiling of words[start:] as a list of (length, matched)."""
    if start == len(words):
        yield []
        return
    for rest in _tilings(words, terms, start + 1):
        yield [(1, False)] + rest
    for k in range(1, len(words) - start + 1):
        if tuple(words[start:start + k]) in terms:
            for rest in _tilings(words, terms, start + k):
                yield [(k, True)] + rest


def leftmost_longest_tiling(words, terms):
    """The tiling that, segment by segment from the left, matches longest.

    Tilings are compared by their sequence of matched lengths (0 for an
    unmatched token); all tilings agree up to the first differing segment,
    which starts at the same position, so the lexicographic maximum prefers
    the longer match at the leftmost point of difference.
    """
    best = max(_tilings(words, terms),
               key=lambda t: [k if m else 0 for k, m in t])
    out, pos = [], 0
    for k, matched in best:
        if matched:
            out.append((tuple(words[pos:pos + k]), pos))
        pos += k
    return out


def projection(source, mapping, manual=()):
    """Expected builder output from (source term x target phrase) pairs.

    ``source``: {term: polarity}; ``mapping``: {term: [targets]};
    ``manual``: [(term, polarity)]. Returns (entries, report) where entries is
    {term: (polarity, source_tag, provenance)}.
    """
    pairs = [(s, t) for s in source for t in mapping.get(s, ())]
    by_target = defaultdict(set)
    for s, t in pairs:
        by_target[t].add(s)
    entries, conflicts = {}, []
    for t, roots in by_target.items():
        pols = {source[s] for s in roots}
        if len(pols) > 1:
            conflicts.append((t, frozenset(pols)))
        else:
            entries[t] = (pols.pop(), "auto-translated", min(roots))
    overrides = sorted({t for t, _ in manual if t in entries})
    for t, p in manual:
        entries[t] = (p, "manual-native", None)
    translated = sum(1 for v in entries.values() if v[1] == "auto-translated")
    return entries, {
        "fan_out": len(pairs),
        "distinct_targets": len(by_target),
        "translated_count": translated,
        "unmapped": sorted(s for s in source if s not in mapping),
        "conflicts": sorted(conflicts),
        "overrides": overrides,
    }
