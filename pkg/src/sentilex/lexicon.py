"""Lexicon data types, source-format parsers and the canonical TSV format.

Three source layouts are understood:

* categorical word lists (one term per line, separate positive and negative
  files, ``;`` comments), as used by opinion word lists;
* valenced ``term<TAB>integer`` files with scores in ``[-5, 5]``;
* n-gram scored ``term<TAB>real`` files holding unigrams, bigrams and
  ``a---b`` skip-bigrams.

Every lexicon can be written to and read back from the canonical format::

    # lexicon name=<name> language=<tag> kind=<kind>
    term<TAB>kindvalue<TAB>source<TAB>provenance
    ...entries sorted by term...
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from functools import cached_property, total_ordering
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .text import SKIP_MARKER, normalize

MAX_ARITY = 5
MAX_NGRAM_ARITY = 2
VALENCE_RANGE = (-5, 5)

TextLike = Union[str, bytes]


class LexiconError(ValueError):
    """Invalid lexicon content."""


class ParseError(LexiconError):
    def __init__(self, message: str, line: Optional[int] = None,
                 byte_offset: Optional[int] = None):
        self.line = line
        self.byte_offset = byte_offset
        if line is not None:
            message = f"line {line}: {message}"
        elif byte_offset is not None:
            message = f"byte {byte_offset}: {message}"
        super().__init__(message)


class Polarity(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    @property
    def label(self) -> str:
        return self.value.capitalize()

    @classmethod
    def from_sign(cls, value) -> "Polarity":
        if value > 0:
            return cls.POSITIVE
        if value < 0:
            return cls.NEGATIVE
        return cls.NEUTRAL


class Source(enum.Enum):
    IMPORTED = "imported"
    AUTO_TRANSLATED = "auto-translated"
    MANUAL_NATIVE = "manual-native"


class Kind(enum.Enum):
    CATEGORICAL = "categorical"
    VALENCED = "valenced"
    NGRAM_SCORED = "ngram-scored"

    @cached_property
    def token_index(self) -> Dict[Tuple[Tuple[str, ...], bool], Term]:
        """``(tokens, skip) -> Term`` for lookups without re-validating tokens."""
        return {(t.tokens, t.skip): t for t in self.entries}

    @cached_property
    def max_arity(self) -> int:
        return MAX_NGRAM_ARITY if self is Kind.NGRAM_SCORED else MAX_ARITY


@total_ordering
@dataclass(frozen=True)
class Term:
    """A normalized word sequence; ``skip`` marks a two-token skip-bigram."""

    tokens: Tuple[str, ...]
    skip: bool = False

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not 1 <= len(self.tokens) <= MAX_ARITY:
            raise LexiconError(
                f"term must have 1..{MAX_ARITY} tokens, got {len(self.tokens)}")
        for tok in self.tokens:
            if not tok or any(ch.isspace() for ch in tok):
                raise LexiconError(f"bad token {tok!r}")
            if SKIP_MARKER in tok:
                raise LexiconError(f"token {tok!r} contains reserved {SKIP_MARKER!r}")
            if normalize(tok) != tok:
                raise LexiconError(f"token {tok!r} is not normalized")
        if self.skip and len(self.tokens) != 2:
            raise LexiconError("skip-bigram terms must have exactly 2 tokens")

    @classmethod
    def from_text(cls, text: str, skip_marker: bool = False) -> "Term":
        """Normalize ``text`` and split it into a term.

        With ``skip_marker`` set, ``a---b`` is read as a skip-bigram.
        """
        text = normalize(text)
        if skip_marker and SKIP_MARKER in text:
            parts = [p.strip() for p in text.split(SKIP_MARKER)]
            if len(parts) != 2 or any(len(p.split()) != 1 for p in parts):
                raise LexiconError(
                    f"skip-marked term {text!r} must join exactly two tokens")
            return cls(tuple(parts), skip=True)
        return cls(tuple(text.split()))

    @property
    def arity(self) -> int:
        return len(self.tokens)

    def render(self) -> str:
        return (SKIP_MARKER if self.skip else " ").join(self.tokens)

    def __str__(self) -> str:
        return self.render()

    def __lt__(self, other: "Term") -> bool:
        if not isinstance(other, Term):
            return NotImplemented
        return (self.render(), self.skip) < (other.render(), other.skip)


@dataclass(frozen=True)
class LexiconEntry:
    term: Term
    polarity: Optional[Polarity] = None
    valence: Optional[Decimal] = None
    source: Source = Source.IMPORTED
    provenance: Optional[str] = None

    def __post_init__(self):
        if (self.polarity is None) == (self.valence is None):
            raise LexiconError(
                f"{self.term}: exactly one of polarity/valence must be set")
        if self.polarity is Polarity.NEUTRAL:
            raise LexiconError(f"{self.term}: lexicon entries cannot be neutral")
        if self.valence is not None:
            if not isinstance(self.valence, Decimal):
                object.__setattr__(self, "valence", Decimal(self.valence))
            if not self.valence.is_finite():
                raise LexiconError(f"{self.term}: valence must be finite")
        if not self.provenance:
            object.__setattr__(self, "provenance", None)
        elif any(ch in self.provenance for ch in "\t\r\n"):
            raise LexiconError(f"{self.term}: provenance may not contain TAB or newline")
        if self.source is Source.AUTO_TRANSLATED and not self.provenance:
            raise LexiconError(
                f"{self.term}: auto-translated entries need a provenance")

    @property
    def contribution(self) -> Decimal:
        """Signed amount this entry adds to a document's decision value."""
        if self.valence is not None:
            return self.valence
        return Decimal(1) if self.polarity is Polarity.POSITIVE else Decimal(-1)


@dataclass(frozen=True, eq=True)
class Lexicon:
    """Immutable, language-tagged collection of entries keyed by term."""

    name: str
    language: str
    kind: Kind
    entries: Mapping[Term, LexiconEntry] = field(default_factory=dict)

    def __post_init__(self):
        if not self.name or any(ch.isspace() for ch in self.name):
            raise LexiconError(f"bad lexicon name {self.name!r}")
        if not self.language or not self.language.isascii() or any(
                ch.isspace() for ch in self.language):
            raise LexiconError(f"bad language tag {self.language!r}")
        entries = dict(self.entries)
        for term, entry in entries.items():
            if term != entry.term:
                raise LexiconError(f"entry keyed under {term} holds {entry.term}")
            self._check_entry(entry)
        object.__setattr__(self, "entries", entries)

    def _check_entry(self, entry: LexiconEntry) -> None:
        term = entry.term
        if term.arity > self.kind.max_arity:
            raise LexiconError(
                f"{term}: arity {term.arity} exceeds {self.kind.max_arity} "
                f"for {self.kind.value} lexicons")
        if self.kind is Kind.CATEGORICAL:
            if entry.polarity is None:
                raise LexiconError(f"{term}: categorical entries need a polarity")
        elif entry.valence is None:
            raise LexiconError(f"{term}: {self.kind.value} entries need a valence")
        if self.kind is Kind.VALENCED:
            lo, hi = VALENCE_RANGE
            if entry.valence != entry.valence.to_integral_value() or not (
                    lo <= entry.valence <= hi):
                raise LexiconError(
                    f"{term}: valence {entry.valence} not an integer in [{lo}, {hi}]")

    @classmethod
    def from_entries(cls, name: str, language: str, kind: Kind,
                     entries: Iterable[LexiconEntry]) -> "Lexicon":
        """Build a lexicon, rejecting two entries with the same term."""
        table: Dict[Term, LexiconEntry] = {}
        for entry in entries:
            if entry.term in table:
                raise LexiconError(f"duplicate term {entry.term}")
            table[entry.term] = entry
        return cls(name, language, kind, table)

    def get(self, term: Term) -> Optional[LexiconEntry]:
        return self.entries.get(term)

    def __contains__(self, term) -> bool:
        return term in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.sorted_entries())

    def sorted_entries(self):
        return [self.entries[t] for t in sorted(self.entries)]

    @cached_property
    def token_index(self) -> Dict[Tuple[Tuple[str, ...], bool], Term]:
        """``(tokens, skip) -> Term`` for lookups without re-validating tokens."""
        return {(t.tokens, t.skip): t for t in self.entries}

    @cached_property
    def max_arity(self) -> int:
        return max((t.arity for t in self.entries if not t.skip), default=0)

    @cached_property
    def has_skip_terms(self) -> bool:
        return any(t.skip for t in self.entries)


def lookup(lexicon: Lexicon, term: Term) -> Optional[LexiconEntry]:
    return lexicon.get(term)


def _decode(data: TextLike) -> str:
    if isinstance(data, str):
        return data
    try:
        return bytes(data).decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"malformed UTF-8 ({e.reason})", byte_offset=e.start) from None


def _lines(text: str):
    return enumerate(text.splitlines(), start=1)


def _term_or_error(raw: str, lineno: int, skip_marker: bool = False) -> Term:
    try:
        return Term.from_text(raw, skip_marker=skip_marker)
    except LexiconError as e:
        raise ParseError(str(e), line=lineno) from None


def _read_word_list(text: TextLike):
    for lineno, line in _lines(_decode(text)):
        stripped = line.strip()
        if not stripped or stripped.startswith(";"):
            continue
        yield lineno, _term_or_error(stripped, lineno)


def parse_categorical(positive_list_text: TextLike, negative_list_text: TextLike,
                      name: str = "liu", language: str = "en") -> Lexicon:
    """Read positive and negative word lists into a categorical lexicon.

    Repeated lines with the same polarity collapse to one entry; a term listed
    under both polarities is an error.
    """
    table: Dict[Term, LexiconEntry] = {}
    for text, polarity in ((positive_list_text, Polarity.POSITIVE),
                           (negative_list_text, Polarity.NEGATIVE)):
        for lineno, term in _read_word_list(text):
            prior = table.get(term)
            if prior is not None:
                if prior.polarity is not polarity:
                    raise ParseError(
                        f"term {term.render()!r} is listed as both positive and negative",
                        line=lineno)
                continue
            table[term] = LexiconEntry(term, polarity=polarity)
    return Lexicon(name, language, Kind.CATEGORICAL, table)


def _split_tsv(line: str, lineno: int, columns: int):
    parts = line.split("\t")
    if len(parts) < columns:
        raise ParseError(f"expected {columns} TAB-separated fields", line=lineno)
    return parts


def _add_scored(table, term, valence, lineno):
    prior = table.get(term)
    if prior is not None:
        if prior.valence != valence:
            raise ParseError(f"duplicate term {term.render()!r} with a different score",
                             line=lineno)
        return
    table[term] = LexiconEntry(term, valence=valence)


def parse_valenced(tsv_text: TextLike, name: str = "afinn",
                   language: str = "en") -> Lexicon:
    """Read ``term<TAB>integer`` lines; scores must lie in [-5, 5]."""
    table: Dict[Term, LexiconEntry] = {}
    lo, hi = VALENCE_RANGE
    for lineno, line in _lines(_decode(tsv_text)):
        if not line.strip():
            continue
        raw_term, raw_score = _split_tsv(line, lineno, 2)[:2]
        try:
            score = int(raw_score.strip())
        except ValueError:
            raise ParseError(f"score {raw_score!r} is not an integer", line=lineno) from None
        if not lo <= score <= hi:
            raise ParseError(f"score {score} outside [{lo}, {hi}]", line=lineno)
        term = _term_or_error(raw_term, lineno)
        _add_scored(table, term, Decimal(score), lineno)
    return Lexicon(name, language, Kind.VALENCED, table)


def _parse_decimal(raw: str, lineno: int) -> Decimal:
    try:
        value = Decimal(raw.strip())
    except InvalidOperation:
        raise ParseError(f"unparseable score {raw!r}", line=lineno) from None
    if not value.is_finite():
        raise ParseError(f"unparseable score {raw!r}", line=lineno)
    return value


def parse_ngram_scored(tsv_text: TextLike, name: str = "nrc",
                       language: str = "en") -> Lexicon:
    """Read ``term<TAB>score`` lines holding unigrams, bigrams and skip-bigrams.

    Extra trailing columns (e.g. occurrence counts) are ignored.
    """
    table: Dict[Term, LexiconEntry] = {}
    for lineno, line in _lines(_decode(tsv_text)):
        if not line.strip():
            continue
        raw_term, raw_score = _split_tsv(line, lineno, 2)[:2]
        term = _term_or_error(raw_term, lineno, skip_marker=True)
        if term.arity > MAX_NGRAM_ARITY:
            raise ParseError(
                f"n-gram terms have 1..{MAX_NGRAM_ARITY} tokens, "
                f"{term.render()!r} has {term.arity}", line=lineno)
        _add_scored(table, term, _parse_decimal(raw_score, lineno), lineno)
    return Lexicon(name, language, Kind.NGRAM_SCORED, table)


CANONICAL_HEADER = "term\tkindvalue\tsource\tprovenance"
_PREAMBLE_PREFIX = "# lexicon "


def serialize_canonical(lexicon: Lexicon) -> str:
    lines = [
        f"{_PREAMBLE_PREFIX}name={lexicon.name} language={lexicon.language} "
        f"kind={lexicon.kind.value}",
        CANONICAL_HEADER,
    ]
    for entry in lexicon.sorted_entries():
        if entry.polarity is not None:
            value = entry.polarity.value
        else:
            value = str(entry.valence)
        lines.append("\t".join(
            (entry.term.render(), value, entry.source.value, entry.provenance or "")))
    return "\n".join(lines) + "\n"


def _parse_preamble(line: str) -> Tuple[str, str, Kind]:
    if not line.startswith(_PREAMBLE_PREFIX):
        raise ParseError(f"expected {_PREAMBLE_PREFIX.strip()!r} preamble", line=1)
    fields = {}
    for item in line[len(_PREAMBLE_PREFIX):].split():
        key, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"bad preamble field {item!r}", line=1)
        fields[key] = value
    missing = {"name", "language", "kind"} - fields.keys()
    if missing:
        raise ParseError(f"preamble lacks {', '.join(sorted(missing))}", line=1)
    try:
        kind = Kind(fields["kind"])
    except ValueError:
        raise ParseError(f"unknown lexicon kind {fields['kind']!r}", line=1) from None
    return fields["name"], fields["language"], kind


def parse_canonical(text: TextLike) -> Lexicon:
    """Inverse of :func:`serialize_canonical`; blank lines are tolerated."""
    lines = _decode(text).splitlines()
    if not lines:
        raise ParseError("empty canonical lexicon", line=1)
    name, language, kind = _parse_preamble(lines[0])
    if len(lines) < 2 or lines[1] != CANONICAL_HEADER:
        raise ParseError(f"expected header {CANONICAL_HEADER!r}", line=2)
    table: Dict[Term, LexiconEntry] = {}
    for lineno, line in enumerate(lines[2:], start=3):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise ParseError("expected 4 TAB-separated fields", line=lineno)
        raw_term, raw_value, raw_source, provenance = parts
        term = _term_or_error(raw_term, lineno, skip_marker=True)
        try:
            source = Source(raw_source)
        except ValueError:
            raise ParseError(f"unknown source tag {raw_source!r}", line=lineno) from None
        if term in table:
            raise ParseError(f"duplicate term {term.render()!r}", line=lineno)
        try:
            if kind is Kind.CATEGORICAL:
                try:
                    polarity = Polarity(raw_value)
                except ValueError:
                    raise ParseError(f"unknown polarity {raw_value!r}",
                                     line=lineno) from None
                entry = LexiconEntry(term, polarity=polarity, source=source,
                                     provenance=provenance or None)
            else:
                entry = LexiconEntry(term, valence=_parse_decimal(raw_value, lineno),
                                     source=source, provenance=provenance or None)
        except ParseError:
            raise
        except LexiconError as e:
            raise ParseError(str(e), line=lineno) from None
        table[term] = entry
    try:
        return Lexicon(name, language, kind, table)
    except LexiconError as e:
        raise ParseError(str(e)) from None
