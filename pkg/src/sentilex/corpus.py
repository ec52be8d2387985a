"""Corpus ingestion.

A corpus is either a directory of UTF-8 ``.txt`` files, one document per
file with the filename stem as its id, or a JSON-lines file whose records
carry ``id`` and ``text``. Documents come back sorted by id.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Tuple


class CorpusError(ValueError):
    pass


def _read_text(path: Path) -> str:
    try:
        return path.read_bytes().decode("utf-8")
    except OSError as e:
        raise CorpusError(f"cannot read document {path}: {e.strerror}") from None
    except UnicodeDecodeError as e:
        raise CorpusError(f"document {path} is not UTF-8 (byte {e.start})") from None


def load_corpus(path) -> List[Tuple[str, str]]:
    path = Path(path)
    docs: List[Tuple[str, str]] = []
    if path.is_dir():
        for f in path.iterdir():
            if f.suffix == ".txt" and not f.is_dir():
                docs.append((f.stem, _read_text(f)))
    else:
        for lineno, line in enumerate(_read_text(path).splitlines(), start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
                docs.append((str(record["id"]), str(record["text"])))
            except (ValueError, KeyError, TypeError):
                raise CorpusError(
                    f"{path}:{lineno}: expected a JSON object with 'id' and 'text'"
                ) from None
    if not docs:
        raise CorpusError("empty corpus")
    docs.sort(key=lambda d: d[0])
    for (a, _), (b, _) in zip(docs, docs[1:]):
        if a == b:
            raise CorpusError(f"duplicate document id {a!r} in {path}")
    return docs
