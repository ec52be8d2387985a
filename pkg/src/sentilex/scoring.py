"""Document polarity scoring against a lexicon.

Matching is greedy longest-match-first, left to right, so the words of a
multiword entry are never counted again on their own. A skip-bigram ranks
below contiguous multiword entries and above a unigram at the same start.

A document's decision value is the sum of its matches' contributions (+1/-1
for categorical entries, the stored valence otherwise); its sign is the
polarity, with ties and no-match documents labelled Neutral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from typing import Iterable, List, Sequence, Tuple

from .lexicon import Lexicon, Polarity, Term
from .text import DEFAULT_SKIP_WINDOW, TokenStream, tokenize


@dataclass(frozen=True)
class Match:
    """A matched term; offsets are token indices, so results do not depend on
    how the source text was encoded."""

    term: Term
    positions: Tuple[int, ...]
    contribution: Decimal = Decimal(0)

    @property
    def offset(self) -> int:
        return self.positions[0]

    index = offset


@dataclass(frozen=True)
class ScoreResult:
    document_id: str
    lexicon_name: str
    positive_count: int
    negative_count: int
    valence_sum: Decimal
    matches: Tuple[Match, ...] = field(default=(), repr=False)

    @property
    def decision_value(self) -> Decimal:
        return self.valence_sum

    @property
    def polarity(self) -> Polarity:
        return Polarity.from_sign(self.valence_sum)


def match_terms(stream: TokenStream, lexicon: Lexicon,
                skip_window: int = DEFAULT_SKIP_WINDOW) -> List[Match]:
    """Find non-overlapping lexicon matches in ``stream``.

    Scanning left to right, the first free token starts the longest entry
    available there: contiguous terms of arity 2..5 first, then a skip-bigram
    pairing it with the nearest free token at most ``skip_window`` tokens
    further on, then a unigram. Matched tokens are consumed.
    """
    words = stream.texts()
    n = len(words)
    index = lexicon.token_index
    longest = lexicon.max_arity
    use_skip = lexicon.has_skip_terms
    consumed = [False] * n
    found = []

    for i in range(n):
        if consumed[i]:
            continue
        hit = None
        for arity in range(min(longest, n - i), 1, -1):
            span = range(i, i + arity)
            if any(consumed[k] for k in span):
                continue
            term = index.get((tuple(words[i:i + arity]), False))
            if term is not None:
                hit = (term, tuple(span))
                break
        if hit is None and use_skip:
            for gap in range(1, skip_window + 1):
                j = i + 1 + gap
                if j >= n:
                    break
                if consumed[j]:
                    continue
                term = index.get(((words[i], words[j]), True))
                if term is not None:
                    hit = (term, (i, j))
                    break
        if hit is None:
            term = index.get(((words[i],), False))
            if term is not None:
                hit = (term, (i,))
        if hit is not None:
            for k in hit[1]:
                consumed[k] = True
            found.append(hit)

    return [
        Match(term, pos, lexicon.entries[term].contribution)
        for term, pos in found
    ]


def score_stream(stream: TokenStream, lexicon: Lexicon,
                 skip_window: int = DEFAULT_SKIP_WINDOW) -> ScoreResult:
    matches = match_terms(stream, lexicon, skip_window)
    pos = sum(1 for m in matches if m.contribution > 0)
    neg = sum(1 for m in matches if m.contribution < 0)
    total = sum((m.contribution for m in matches), Decimal(0))
    return ScoreResult(stream.document_id, lexicon.name, pos, neg, total,
                       tuple(matches))


def score_document(document: str, document_id: str, lexicon: Lexicon,
                   skip_window: int = DEFAULT_SKIP_WINDOW) -> ScoreResult:
    return score_stream(tokenize(document, document_id), lexicon, skip_window)


class DuplicateDocumentError(ValueError):
    pass


def check_unique_ids(ids: Iterable[str]) -> None:
    seen = set()
    for doc_id in ids:
        if doc_id in seen:
            raise DuplicateDocumentError(f"duplicate document id {doc_id!r}")
        seen.add(doc_id)


def score_corpus(documents: Sequence[Tuple[str, str]], lexicon: Lexicon,
                 skip_window: int = DEFAULT_SKIP_WINDOW) -> List[ScoreResult]:
    check_unique_ids(doc_id for doc_id, _ in documents)
    return [score_document(text, doc_id, lexicon, skip_window)
            for doc_id, text in documents]
