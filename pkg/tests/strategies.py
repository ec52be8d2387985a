"""Hypothesis strategies shared across test modules."""

from decimal import Decimal

from hypothesis import strategies as st

from sentilex.lexicon import Kind, Lexicon, LexiconEntry, Polarity, Source, Term


words = st.text(alphabet="abcdegikmnorstuwọụịṅ", min_size=1, max_size=6)

polarities = st.sampled_from([Polarity.POSITIVE, Polarity.NEGATIVE])


@st.composite
def terms(draw, max_arity=5, allow_skip=False):
    if allow_skip and draw(st.booleans()):
        return Term((draw(words), draw(words)), skip=True)
    n = draw(st.integers(1, max_arity))
    return Term(tuple(draw(words) for _ in range(n)))


valences = st.decimals(min_value=Decimal("-99"), max_value=Decimal("99"),
                       allow_nan=False, allow_infinity=False, places=3)


@st.composite
def entries_for(draw, kind, term):
    source = draw(st.sampled_from(list(Source)))
    provenance = draw(st.one_of(st.none(), words)) if source is not Source.AUTO_TRANSLATED \
        else draw(words)
    if kind is Kind.CATEGORICAL:
        return LexiconEntry(term, polarity=draw(polarities), source=source,
                            provenance=provenance)
    if kind is Kind.VALENCED:
        return LexiconEntry(term, valence=Decimal(draw(st.integers(-5, 5))),
                            source=source, provenance=provenance)
    return LexiconEntry(term, valence=draw(valences), source=source,
                        provenance=provenance)


@st.composite
def lexicons(draw, kind=None, max_size=12):
    kind = kind or draw(st.sampled_from(list(Kind)))
    ts = draw(st.lists(terms(kind.max_arity, allow_skip=kind is Kind.NGRAM_SCORED),
                       max_size=max_size, unique=True))
    name = draw(st.text(alphabet="abcxyz-_0123", min_size=1, max_size=8))
    lang = draw(st.sampled_from(["ig", "en", "yo", "ha", "en-GB"]))
    return Lexicon(name, lang, kind, {t: draw(entries_for(kind, t)) for t in ts})
