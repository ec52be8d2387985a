"""Project a source-language lexicon into a target language.

Each source entry is fanned out through a bilingual mapping to every target
phrase it translates to, keeping its polarity and remembering the source
word it came from. Target phrases reached from source words of opposite
polarity are dropped and reported. Manually curated native entries are then
merged on top and win every collision.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, List, Mapping, Sequence, Tuple

from .lexicon import (
    Kind,
    Lexicon,
    LexiconEntry,
    LexiconError,
    ParseError,
    Polarity,
    Source,
    Term,
    TextLike,
    _decode,
    parse_canonical,
)


class BuildError(LexiconError):
    pass


@dataclass(frozen=True)
class TranslationMapping:
    source_language: str
    target_language: str
    pairs: Mapping[Term, Tuple[Term, ...]] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for src, targets in self.pairs.items():
            targets = tuple(dict.fromkeys(targets))
            if not targets:
                raise LexiconError(f"mapping for {src} has no target phrases")
            clean[src] = targets
        object.__setattr__(self, "pairs", clean)

    @classmethod
    def from_pairs(cls, source_language: str, target_language: str,
                   pairs: Sequence[Tuple[str, str]]) -> "TranslationMapping":
        table: Dict[Term, List[Term]] = defaultdict(list)
        for src, tgt in pairs:
            table[Term.from_text(src)].append(Term.from_text(tgt))
        return cls(source_language, target_language, dict(table))


def parse_mapping(text: TextLike) -> TranslationMapping:
    """Read a ``#map <src> <tgt>`` headed file of ``source<TAB>target`` lines."""
    lines = _decode(text).splitlines()
    header = lines[0].split() if lines else []
    if len(header) != 3 or header[0] != "#map":
        raise ParseError("expected header '#map <source-tag> <target-tag>'", line=1)
    table: Dict[Term, List[Term]] = defaultdict(list)
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError("expected source<TAB>target", line=lineno)
        try:
            src, tgt = Term.from_text(parts[0]), Term.from_text(parts[1])
        except LexiconError as e:
            raise ParseError(str(e), line=lineno) from None
        table[src].append(tgt)
    return TranslationMapping(header[1], header[2], dict(table))


def parse_manual_entries(text: TextLike) -> List[LexiconEntry]:
    """Manual additions are a canonical categorical file of manual-native rows.

    An empty file means no manual additions.
    """
    text = _decode(text)
    if not text.strip():
        return []
    lexicon = parse_canonical(text)
    if lexicon.kind is not Kind.CATEGORICAL:
        raise ParseError(f"manual entries must be categorical, not {lexicon.kind.value}")
    for entry in lexicon.sorted_entries():
        if entry.source is not Source.MANUAL_NATIVE:
            raise ParseError(f"manual entry {entry.term} has source {entry.source.value}")
    return lexicon.sorted_entries()


@dataclass
class BuildReport:
    translated_count: int = 0
    unmapped_source_terms: List[Term] = field(default_factory=list)
    conflicts_dropped: List[Tuple[Term, FrozenSet[Polarity]]] = field(default_factory=list)
    manual_overrides: List[Term] = field(default_factory=list)

    def merged(self, later: "BuildReport") -> "BuildReport":
        """Field-wise union; the count is taken from the later stage."""
        return BuildReport(
            later.translated_count,
            sorted(set(self.unmapped_source_terms) | set(later.unmapped_source_terms)),
            sorted(set(self.conflicts_dropped) | set(later.conflicts_dropped),
                   key=lambda c: c[0]),
            sorted(set(self.manual_overrides) | set(later.manual_overrides)),
        )

    def render(self) -> str:
        def pols(ps):
            return ",".join(sorted(p.value for p in ps))

        lines = [f"translated_count: {self.translated_count}",
                 f"unmapped_source_terms: {len(self.unmapped_source_terms)}"]
        lines += [f"  {t}" for t in self.unmapped_source_terms]
        lines.append(f"conflicts_dropped: {len(self.conflicts_dropped)}")
        lines += [f"  {t}\t{pols(ps)}" for t, ps in self.conflicts_dropped]
        lines.append(f"manual_overrides: {len(self.manual_overrides)}")
        lines += [f"  {t}" for t in self.manual_overrides]
        return "\n".join(lines) + "\n"


def _count_auto(lexicon: Lexicon) -> int:
    return sum(1 for e in lexicon.entries.values() if e.source is Source.AUTO_TRANSLATED)


def translate_lexicon(source: Lexicon, mapping: TranslationMapping,
                      name: str = "") -> Tuple[Lexicon, BuildReport]:
    if source.kind is not Kind.CATEGORICAL:
        raise BuildError(f"can only translate categorical lexicons, not {source.kind.value}")
    if source.language != mapping.source_language:
        raise BuildError(
            f"lexicon language {source.language!r} does not match mapping "
            f"source language {mapping.source_language!r}")

    # target phrase -> [(source term, polarity), ...]
    reached: Dict[Term, List[Tuple[Term, Polarity]]] = defaultdict(list)
    unmapped = []
    for entry in source.sorted_entries():
        targets = mapping.pairs.get(entry.term)
        if targets is None:
            unmapped.append(entry.term)
            continue
        for target in targets:
            reached[target].append((entry.term, entry.polarity))

    entries = []
    conflicts = []
    for target in sorted(reached):
        origins = reached[target]
        polarities = frozenset(p for _, p in origins)
        if len(polarities) > 1:
            conflicts.append((target, polarities))
            continue
        root = min(origins, key=lambda o: o[0].render())[0]
        entries.append(LexiconEntry(target, polarity=next(iter(polarities)),
                                    source=Source.AUTO_TRANSLATED,
                                    provenance=root.render()))

    out = Lexicon.from_entries(name or f"{source.name}-{mapping.target_language}",
                               mapping.target_language, Kind.CATEGORICAL, entries)
    return out, BuildReport(len(entries), unmapped, conflicts, [])


def merge_manual(auto: Lexicon, manual_entries: Sequence[LexiconEntry]
                 ) -> Tuple[Lexicon, BuildReport]:
    if auto.kind is not Kind.CATEGORICAL:
        raise BuildError(f"can only merge into categorical lexicons, not {auto.kind.value}")
    manual: Dict[Term, LexiconEntry] = {}
    for entry in manual_entries:
        if entry.source is not Source.MANUAL_NATIVE or entry.polarity is None:
            raise BuildError(f"{entry.term}: manual entries must be manual-native "
                             "with a polarity")
        prior = manual.get(entry.term)
        if prior is not None and prior.polarity is not entry.polarity:
            raise BuildError(
                f"manual entries give {entry.term.render()!r} contradictory polarities")
        manual.setdefault(entry.term, entry)

    table = dict(auto.entries)
    overrides = sorted(t for t in manual if t in table)
    table.update(manual)
    out = Lexicon(auto.name, auto.language, Kind.CATEGORICAL, table)
    return out, BuildReport(_count_auto(out), [], [], overrides)


def build_target_lexicon(source: Lexicon, mapping: TranslationMapping,
                         manual_entries: Sequence[LexiconEntry],
                         name: str) -> Tuple[Lexicon, BuildReport]:
    """Translate ``source`` through ``mapping`` and merge ``manual_entries``."""
    auto, first = translate_lexicon(source, mapping, name)
    merged, second = merge_manual(auto, manual_entries)
    return replace(merged, name=name), first.merged(second)
