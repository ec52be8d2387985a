import json
from decimal import Decimal

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sentilex.agreement import (
    AgreementError,
    AgreementReport,
    average_agreement,
    build_report,
    format_csv,
    format_json,
    format_table,
    per_document_agreement,
)
from sentilex.lexicon import Polarity, parse_categorical

P, N, Z = Polarity.POSITIVE, Polarity.NEGATIVE, Polarity.NEUTRAL


@pytest.mark.parametrize("labels,expected", [
    ([P, P, N], 66),
    ([N, N, N], 100),
    ([P], 100),
    ([P, N], 50),
    ([P, N, Z], 33),
    ([P, P, N, N], 50),
    ([Z, Z, P], 66),
])
def test_per_document(labels, expected):
    assert per_document_agreement(labels) == expected


def test_per_document_empty():
    with pytest.raises(AgreementError):
        per_document_agreement([])


@pytest.mark.parametrize("percents,expected", [
    ([100, 100, 66, 100, 100, 100, 100, 100], "95.75"),
    ([100, 100], "100.00"),
    ([66, 67], "66.50"),
    ([66, 66, 67], "66.33"),
    ([0, 1, 1, 1, 1, 1, 1, 1], "0.88"),   # 0.875 rounds half-up
    ([50], "50.00"),
])
def test_average(percents, expected):
    got = average_agreement(percents)
    assert str(got) == expected
    assert got == Decimal(expected)


def test_average_empty():
    with pytest.raises(AgreementError):
        average_agreement([])


labels_st = st.lists(st.sampled_from([P, N, Z]), min_size=1, max_size=9)


@given(labels_st, st.randoms())
def test_per_document_properties(labels, rnd):
    k = len(labels)
    v = per_document_agreement(labels)
    assert 100 // k <= v <= 100
    shuffled = labels[:]
    rnd.shuffle(shuffled)
    assert per_document_agreement(shuffled) == v
    # independent recount
    assert v == max(100 * labels.count(x) // k for x in set(labels))


@given(st.lists(st.integers(0, 100), min_size=1, max_size=20))
def test_average_bounds(percents):
    avg = average_agreement(percents)
    assert min(percents) <= avg <= max(percents)
    assert avg.as_tuple().exponent == -2


CORPUS = [("01", "agha ọnwụ"), ("02", "udo ememe"), ("03", "udo nsogbu ọnwụ"),
          ("04", "udo")]


def lexicons():
    a = parse_categorical("udo\nememe", "agha\nọnwụ\nnsogbu", "a", "ig")
    b = parse_categorical("udo\nememe", "agha\nọnwụ", "b", "ig")
    c = parse_categorical("udo\nememe", "agha\nọnwụ\nnsogbu", "c", "ig")
    return [a, b, c]


def test_build_report():
    rep = build_report(CORPUS, lexicons())
    assert rep.lexicon_names == ("a", "b", "c")
    assert rep.document_ids == ("01", "02", "03", "04")
    assert rep.label("b", "03") is Z
    assert rep.label("a", "03") is N
    assert rep.per_document_percent == (100, 100, 66, 100)
    assert rep.average_percent == Decimal("91.50")


def test_identical_lexicons_unanimous():
    a = lexicons()[0]
    b = parse_categorical("udo\nememe", "agha\nọnwụ\nnsogbu", "a2", "ig")
    rep = build_report(CORPUS, [a, b])
    assert set(rep.per_document_percent) == {100}
    assert str(rep.average_percent) == "100.00"


@given(st.permutations([0, 1, 2]))
def test_lexicon_order_irrelevant(order):
    lex = lexicons()
    base = build_report(CORPUS, lex)
    rep = build_report(CORPUS, [lex[i] for i in order])
    assert rep.per_document_percent == base.per_document_percent
    assert rep.average_percent == base.average_percent


def test_build_report_guards():
    lex = lexicons()
    with pytest.raises(AgreementError, match="two"):
        build_report(CORPUS, lex[:1])
    with pytest.raises(AgreementError, match="duplicate lexicon"):
        build_report(CORPUS, [lex[0], lex[0]])
    with pytest.raises(AgreementError, match="empty"):
        build_report([], lex)
    with pytest.raises(ValueError, match="duplicate document"):
        build_report(CORPUS + [("01", "x")], lex)


def test_emitters():
    rep = AgreementReport.from_matrix(["x", "y"], ["d1", "d2"], [[P, N], [P, Z]])
    table = format_table(rep)
    assert table.splitlines()[-1] == "Average polarity agreement (%): 75.00"
    assert "Neutral" in table
    data = json.loads(format_json(rep))
    assert data["matrix"]["y"]["d2"] == "neutral"
    assert data["per_document_percent"] == {"d1": 100, "d2": 50}
    assert data["average_percent"] == "75.00"
    assert format_csv(rep) == ("lexicon,d1,d2\nx,positive,negative\n"
                               "y,positive,neutral\nagreement_percent,100,50\n")


def test_table_without_neutral_has_two_rows_per_lexicon():
    rep = AgreementReport.from_matrix(["x", "y"], ["d1"], [[P], [N]])
    lines = format_table(rep).splitlines()
    assert len(lines) == 1 + 2 * 2 + 2
