"""Sentiment lexicon projection, lexicon-based polarity scoring and
cross-lexicon agreement for low-resource languages."""

from .agreement import (
    AgreementReport,
    average_agreement,
    build_report,
    per_document_agreement,
)
from .builder import (
    BuildReport,
    TranslationMapping,
    build_target_lexicon,
    merge_manual,
    parse_manual_entries,
    parse_mapping,
    translate_lexicon,
)
from .lexicon import (
    Kind,
    Lexicon,
    LexiconEntry,
    LexiconError,
    ParseError,
    Polarity,
    Source,
    Term,
    lookup,
    parse_canonical,
    parse_categorical,
    parse_ngram_scored,
    parse_valenced,
    serialize_canonical,
)
from .scoring import ScoreResult, match_terms, score_corpus, score_document
from .text import TokenStream, extract_ngrams, normalize, tokenize

__version__ = "0.1.0"
