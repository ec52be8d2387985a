"""Normalization, tokenization and n-gram extraction for diacritic-rich text.

Igbo writes dot-below vowels (ọ, ụ, ị) and ṅ, each of which has a composed
and a decomposed Unicode encoding. Everything downstream compares tokens
produced by :func:`normalize`, so both encodings land on the same key.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from typing import List, Tuple

SKIP_MARKER = "---"
DEFAULT_SKIP_WINDOW = 2

_CHUNK_RE = re.compile(r"\S+")


def normalize(text: str) -> str:
    """Return ``text`` case-folded and in NFC.

    Full Unicode case folding is applied to the decomposed form so that
    combining marks survive folding, then the result is recomposed.
    """
    out = unicodedata.normalize("NFC", unicodedata.normalize("NFD", text).casefold())
    # casefold and NFC do not commute for a handful of code points
    for _ in range(4):
        again = unicodedata.normalize(
            "NFC", unicodedata.normalize("NFD", out).casefold()
        )
        if again == out:
            break
        out = again
    return out


def _is_edge_punct(ch: str) -> bool:
    return unicodedata.category(ch)[0] in "PS"


@dataclass(frozen=True)
class Token:
    text: str
    start: int
    end: int


@dataclass(frozen=True)
class TokenStream:
    document_id: str
    tokens: Tuple[Token, ...]

    def texts(self) -> List[str]:
        return [t.text for t in self.tokens]

    def __len__(self) -> int:
        return len(self.tokens)


def tokenize(text: str, document_id: str = "") -> TokenStream:
    """Split ``text`` on whitespace and strip punctuation at token edges.

    Interior hyphens and apostrophes are kept. Offsets are codepoint indices
    into the original (unnormalized) ``text``.
    """
    tokens = []
    for m in _CHUNK_RE.finditer(text):
        start, end = m.span()
        while start < end and _is_edge_punct(text[start]):
            start += 1
        while end > start and _is_edge_punct(text[end - 1]):
            end -= 1
        if start == end:
            continue
        tokens.append(Token(normalize(text[start:end]), start, end))
    return TokenStream(document_id, tuple(tokens))


def extract_ngrams(stream: TokenStream, max_arity: int = 2,
                   skip_window: int = DEFAULT_SKIP_WINDOW):
    """All unigrams, adjacent bigrams and skip-bigrams of ``stream``.

    A skip-bigram pairs token ``i`` with token ``i + 1 + gap`` for every gap
    in ``1..skip_window``. Bigrams and skip-bigrams are only produced when
    ``max_arity`` is 2. Results are ordered by first-token position.
    """
    from .lexicon import Term

    if max_arity not in (1, 2):
        raise ValueError(f"max_arity must be 1 or 2, got {max_arity!r}")
    if skip_window < 0:
        raise ValueError(f"skip_window must be >= 0, got {skip_window!r}")
    words = stream.texts()
    n = len(words)
    out = []
    for i, w in enumerate(words):
        out.append(Term((w,)))
        if max_arity < 2:
            continue
        if i + 1 < n:
            out.append(Term((w, words[i + 1])))
        for gap in range(1, skip_window + 1):
            j = i + 1 + gap
            if j >= n:
                break
            out.append(Term((w, words[j]), skip=True))
    return out
