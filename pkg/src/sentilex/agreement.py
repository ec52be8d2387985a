"""Polarity agreement between lexicons over a corpus.

For one document, agreement is the share of lexicons in the largest
same-label group, truncated to an integer percent: a 2-vs-1 split among
three lexicons gives 66. The corpus figure is the exact mean of those
integers, rounded half-up to two decimals (766/8 -> 95.75).
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import floor
from typing import Dict, List, Sequence, Tuple

from .lexicon import Lexicon, Polarity
from .scoring import check_unique_ids, score_corpus
from .text import DEFAULT_SKIP_WINDOW


class AgreementError(ValueError):
    pass


def per_document_agreement(labels: Sequence[Polarity]) -> int:
    if not labels:
        raise AgreementError("cannot compute agreement over zero labels")
    largest = max(Counter(labels).values())
    return (100 * largest) // len(labels)


def average_agreement(percents: Sequence[int]) -> Decimal:
    if not percents:
        raise AgreementError("cannot average zero documents")
    mean = Fraction(sum(percents), len(percents))
    hundredths = floor(mean * 100 + Fraction(1, 2))
    return Decimal(hundredths).scaleb(-2)


@dataclass(frozen=True)
class AgreementReport:
    lexicon_names: Tuple[str, ...]
    document_ids: Tuple[str, ...]
    matrix: Tuple[Tuple[Polarity, ...], ...]   # matrix[lexicon][document]
    per_document_percent: Tuple[int, ...]
    average_percent: Decimal

    @property
    def percent_total(self) -> int:
        return sum(self.per_document_percent)

    def label(self, lexicon_name: str, document_id: str) -> Polarity:
        return self.matrix[self.lexicon_names.index(lexicon_name)][
            self.document_ids.index(document_id)]

    @classmethod
    def from_matrix(cls, lexicon_names: Sequence[str], document_ids: Sequence[str],
                    matrix: Sequence[Sequence[Polarity]]) -> "AgreementReport":
        matrix = tuple(tuple(row) for row in matrix)
        if len(matrix) != len(lexicon_names) or any(
                len(row) != len(document_ids) for row in matrix):
            raise AgreementError("matrix shape does not match names and ids")
        per_doc = tuple(per_document_agreement([row[d] for row in matrix])
                        for d in range(len(document_ids)))
        return cls(tuple(lexicon_names), tuple(document_ids), matrix, per_doc,
                   average_agreement(per_doc))


def build_report(corpus: Sequence[Tuple[str, str]], lexicons: Sequence[Lexicon],
                 skip_window: int = DEFAULT_SKIP_WINDOW) -> AgreementReport:
    if len(lexicons) < 2:
        raise AgreementError("need at least two lexicons")
    if not corpus:
        raise AgreementError("empty corpus")
    names = [lex.name for lex in lexicons]
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise AgreementError(f"duplicate lexicon name {dup!r}")
    check_unique_ids(doc_id for doc_id, _ in corpus)
    matrix = [[r.polarity for r in score_corpus(corpus, lex, skip_window)]
              for lex in lexicons]
    return AgreementReport.from_matrix(names, [d for d, _ in corpus], matrix)


AVERAGE_CAPTION = "Average polarity agreement (%)"
PER_DOC_CAPTION = "Percentage polarity agreement per corpus (%)"


def format_table(report: AgreementReport) -> str:
    """Plain-text agreement table.

    Each lexicon gets a Yes/No row per polarity, documents are columns, then
    the per-document agreement row and the average line follow.
    """
    present = {p for row in report.matrix for p in row}
    shown = [Polarity.POSITIVE, Polarity.NEGATIVE]
    if Polarity.NEUTRAL in present:
        shown.append(Polarity.NEUTRAL)

    rows: List[List[str]] = [["Sentiment Lexica", "Corpus ID/Polarity",
                              *report.document_ids]]
    for name, labels in zip(report.lexicon_names, report.matrix):
        for k, pol in enumerate(shown):
            rows.append([name if k == 0 else "", pol.label,
                         *("Yes" if lab is pol else "No" for lab in labels)])
    rows.append([PER_DOC_CAPTION, "", *map(str, report.per_document_percent)])

    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    widths[0] = max(max(len(r[0]) for r in rows[:-1]),
                    len(PER_DOC_CAPTION) - 2 - widths[1])
    out = []
    for r in rows[:-1]:
        cells = [r[0].ljust(widths[0]), r[1].ljust(widths[1])]
        cells += [c.rjust(w) for c, w in zip(r[2:], widths[2:])]
        out.append("  ".join(cells).rstrip())
    last = rows[-1]
    lead = widths[0] + 2 + widths[1]
    out.append("  ".join([last[0].ljust(lead)]
                         + [c.rjust(w) for c, w in zip(last[2:], widths[2:])]))
    out.append(f"{AVERAGE_CAPTION}: {report.average_percent}")
    return "\n".join(out) + "\n"


def to_dict(report: AgreementReport) -> Dict:
    return {
        "lexicons": list(report.lexicon_names),
        "documents": list(report.document_ids),
        "matrix": {name: {doc: lab.value for doc, lab in zip(report.document_ids, row)}
                   for name, row in zip(report.lexicon_names, report.matrix)},
        "per_document_percent": dict(zip(report.document_ids,
                                         report.per_document_percent)),
        "percent_total": report.percent_total,
        "average_percent": str(report.average_percent),
    }


def format_json(report: AgreementReport) -> str:
    return json.dumps(to_dict(report), indent=2, ensure_ascii=False) + "\n"


def format_csv(report: AgreementReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lexicon", *report.document_ids])
    for name, row in zip(report.lexicon_names, report.matrix):
        w.writerow([name, *(lab.value for lab in row)])
    w.writerow(["agreement_percent", *report.per_document_percent])
    return buf.getvalue()


FORMATTERS = {"table": format_table, "json": format_json, "csv": format_csv}
EXTENSIONS = {"table": "txt", "json": "json", "csv": "csv"}
