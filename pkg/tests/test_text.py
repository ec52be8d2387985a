import unicodedata

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import ngram_counts, ngram_list
from sentilex.lexicon import Term
from sentilex.text import TokenStream, Token, extract_ngrams, normalize, tokenize

NFD = lambda s: unicodedata.normalize("NFD", s)  # noqa: E731

igbo_text = st.text(
    alphabet=st.sampled_from(list("abdegikmnoruỌọỤụỊịṄṅ \t\n.,!?'-") + ["̣", "̇"]),
    max_size=40,
)


def test_normalize_folds_case_and_keeps_dot_below():
    assert normalize("Ọma") == "ọma"
    assert normalize("ỤTỌ") == "ụtọ"


def test_normalize_composes_decomposed_vowel():
    assert normalize("ọ") == "ọ"
    assert normalize(NFD("ṅụrịa")) == "ṅụrịa"


def test_normalize_uses_full_folding():
    assert normalize("STRASSE") == normalize("straße")
    assert normalize("İ") == "i̇"


@given(st.text())
def test_normalize_idempotent(s):
    once = normalize(s)
    assert normalize(once) == once
    assert unicodedata.is_normalized("NFC", once)


def test_tokenize_strips_edge_punctuation():
    stream = tokenize("Ọ dị mma!", "d1")
    assert stream.texts() == ["ọ", "dị", "mma"]
    assert stream.document_id == "d1"


def test_tokenize_keeps_interior_hyphen_and_apostrophe():
    assert tokenize("ga-eweta n'obodo (ụlọ).").texts() == ["ga-eweta", "n'obodo", "ụlọ"]


def test_tokenize_empty():
    assert tokenize("", "x") == TokenStream("x", ())
    assert tokenize(" ... !!", "x").tokens == ()


def test_tokenize_offsets_are_codepoints_of_original():
    text = "Ọ̣  mma, udo"
    toks = tokenize(text).tokens
    assert [(t.start, t.end) for t in toks] == [(0, 2), (4, 7), (9, 12)]


@given(st.one_of(igbo_text, st.text()))
def test_offsets_slice_back_to_tokens(text):
    stream = tokenize(text)
    prev_end = 0
    for tok in stream.tokens:
        assert tok.text and not any(c.isspace() for c in tok.text)
        assert normalize(text[tok.start:tok.end]) == tok.text
        assert tok.start >= prev_end and tok.end > tok.start
        prev_end = tok.end


@given(st.one_of(igbo_text, st.text()))
def test_tokenize_after_normalize_same_texts(text):
    assert tokenize(normalize(text)).texts() == tokenize(text).texts()


@given(igbo_text)
def test_composed_and_decomposed_tokenize_alike(text):
    composed = unicodedata.normalize("NFC", text)
    assert tokenize(NFD(composed)).texts() == tokenize(composed).texts()


def _stream(words):
    return TokenStream("d", tuple(Token(w, i, i + 1) for i, w in enumerate(words)))


def test_ngrams_small_example():
    got = extract_ngrams(_stream(["a", "b", "c"]), max_arity=2, skip_window=1)
    assert [g.render() for g in got] == ["a", "a b", "a---c", "b", "b c", "c"]
    assert [g for g in got if g.skip] == [Term(("a", "c"), skip=True)]


@pytest.mark.parametrize("arity,window", [(1, 0), (1, 3), (2, 0), (2, 5)])
def test_ngrams_single_token(arity, window):
    assert extract_ngrams(_stream(["a"]), arity, window) == [Term(("a",))]


def test_ngrams_zero_window_has_no_skips():
    got = extract_ngrams(_stream(list("abcde")), 2, 0)
    assert not any(g.skip for g in got)


def test_ngrams_unigram_only():
    got = extract_ngrams(_stream(list("abc")), 1, 2)
    assert [g.render() for g in got] == ["a", "b", "c"]


@pytest.mark.parametrize("arity", [0, 3, -1])
def test_ngrams_bad_arity(arity):
    with pytest.raises(ValueError):
        extract_ngrams(_stream(["a"]), arity, 1)


@settings(max_examples=200)
@given(st.lists(st.sampled_from("abcd"), max_size=12), st.integers(0, 6))
def test_ngram_counts_match_enumeration(words, window):
    got = extract_ngrams(_stream(words), 2, window)
    uni = sum(1 for g in got if g.arity == 1)
    bi = sum(1 for g in got if g.arity == 2 and not g.skip)
    skip = sum(1 for g in got if g.skip)
    n = len(words)
    assert (uni, bi, skip) == ngram_counts(n, window)
    assert skip == sum(max(n - 1 - g, 0) for g in range(1, window + 1))
    assert [(g.tokens, g.skip) for g in got] == ngram_list(words, window)
