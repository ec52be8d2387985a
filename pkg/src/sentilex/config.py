"""Run configuration: an INI-style ``key = value`` file with sections.

Example::

    [corpus]
    path = corpus/

    [lexicon:liu]
    kind = categorical
    language = en
    positive = liu-positive.txt
    negative = liu-negative.txt

    [lexicon:nrc]
    kind = ngram-scored
    language = en
    path = nrc.tsv

    [lexicon:igbosentilex]
    kind = built

    [build]
    name = igbosentilex
    source = liu
    mapping = en-ig.map
    manual = manual.tsv

    [output]
    dir = out
    formats = table, json, csv
    skip_window = 2

Relative paths are resolved against the config file's directory.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .text import DEFAULT_SKIP_WINDOW

LEXICON_PREFIX = "lexicon:"
FILE_KINDS = {
    "categorical": ("positive", "negative"),
    "valenced": ("path",),
    "ngram-scored": ("path",),
    "canonical": ("path",),
}
KINDS = tuple(FILE_KINDS) + ("built",)
REPORT_FORMATS = ("table", "json", "csv")


class ConfigError(ValueError):
    def __init__(self, problems: List[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass
class LexiconSpec:
    name: str
    kind: str
    language: str = "und"
    paths: Dict[str, Path] = field(default_factory=dict)


@dataclass
class RunConfig:
    lexicons: List[LexiconSpec] = field(default_factory=list)
    corpus: Optional[Path] = None
    mapping: Optional[Path] = None
    manual: Optional[Path] = None
    build_name: Optional[str] = None
    build_source: Optional[str] = None
    score_lexicon: Optional[str] = None
    evaluate_lexicons: Optional[Tuple[str, ...]] = None
    output_dir: Path = Path("out")
    skip_window: int = DEFAULT_SKIP_WINDOW
    formats: Tuple[str, ...] = ("table",)

    def lexicon(self, name: str) -> LexiconSpec:
        for spec in self.lexicons:
            if spec.name == name:
                return spec
        raise KeyError(name)


def parse_formats(raw: str) -> Tuple[Tuple[str, ...], List[str]]:
    formats, problems = [], []
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        if item == "json-like":
            item = "json"
        if item not in REPORT_FORMATS:
            problems.append(f"unknown report format {item!r} "
                            f"(choose from {', '.join(REPORT_FORMATS)})")
        elif item not in formats:
            formats.append(item)
    if not formats and not problems:
        problems.append("no report formats selected")
    return tuple(formats), problems


def load_config(path, output_dir=None, formats=None) -> RunConfig:
    """Read and validate a config file, collecting every problem found."""
    path = Path(path)
    problems: List[str] = []
    parser = configparser.ConfigParser(
        inline_comment_prefixes=(";", "#"), interpolation=None)
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except OSError as e:
        raise ConfigError([f"cannot read config {path}: {e.strerror}"]) from None
    except (configparser.Error, UnicodeDecodeError) as e:
        raise ConfigError([f"malformed config {path}: {e}"]) from None

    base = path.parent
    cfg = RunConfig()

    def existing(section: str, key: str) -> Optional[Path]:
        raw = parser.get(section, key, fallback="").strip()
        if not raw:
            return None
        p = base / raw
        if not p.exists():
            problems.append(f"[{section}] {key}: path does not exist: {p}")
        return p

    known = {"corpus", "build", "score", "evaluate", "output"}
    for section in parser.sections():
        if section.startswith(LEXICON_PREFIX):
            name = section[len(LEXICON_PREFIX):].strip()
            kind = parser.get(section, "kind", fallback="").strip()
            if not name:
                problems.append(f"[{section}] lexicon name is empty")
                continue
            if kind not in KINDS:
                problems.append(f"[{section}] kind must be one of {', '.join(KINDS)}, "
                                f"got {kind!r}")
                continue
            spec = LexiconSpec(name, kind,
                               parser.get(section, "language", fallback="und").strip())
            for key in FILE_KINDS.get(kind, ()):
                if not parser.get(section, key, fallback="").strip():
                    problems.append(f"[{section}] missing {key}")
                    continue
                p = existing(section, key)
                if p is not None:
                    spec.paths[key] = p
            if any(s.name == name for s in cfg.lexicons):
                problems.append(f"duplicate lexicon name {name!r}")
            cfg.lexicons.append(spec)
        elif section not in known:
            problems.append(f"unknown section [{section}]")

    if parser.has_section("corpus"):
        if not parser.get("corpus", "path", fallback="").strip():
            problems.append("[corpus] missing path")
        cfg.corpus = existing("corpus", "path")

    if parser.has_section("build"):
        cfg.build_name = parser.get("build", "name", fallback="").strip() or None
        cfg.build_source = parser.get("build", "source", fallback="").strip() or None
        if not cfg.build_name:
            problems.append("[build] missing name")
        if not cfg.build_source:
            problems.append("[build] missing source")
        elif not any(s.name == cfg.build_source and s.kind == "categorical"
                     for s in cfg.lexicons):
            problems.append(f"[build] source {cfg.build_source!r} is not a "
                            "categorical [lexicon:...] section")
        if not parser.get("build", "mapping", fallback="").strip():
            problems.append("[build] missing mapping")
        cfg.mapping = existing("build", "mapping")
        cfg.manual = existing("build", "manual")

    for spec in cfg.lexicons:
        if spec.kind == "built" and spec.name != cfg.build_name:
            problems.append(f"[{LEXICON_PREFIX}{spec.name}] kind=built needs a "
                            f"[build] section with name = {spec.name}")

    names = {s.name for s in cfg.lexicons}
    if parser.has_section("score"):
        cfg.score_lexicon = parser.get("score", "lexicon", fallback="").strip() or None
        if cfg.score_lexicon and cfg.score_lexicon not in names:
            problems.append(f"[score] unknown lexicon {cfg.score_lexicon!r}")
    if parser.has_section("evaluate"):
        raw = parser.get("evaluate", "lexicons", fallback="")
        chosen = tuple(n.strip() for n in raw.split(",") if n.strip())
        for n in chosen:
            if n not in names:
                problems.append(f"[evaluate] unknown lexicon {n!r}")
        cfg.evaluate_lexicons = chosen or None

    raw_dir = output_dir if output_dir is not None else parser.get(
        "output", "dir", fallback="out")
    cfg.output_dir = Path(raw_dir) if output_dir is not None else base / raw_dir

    raw_window = parser.get("output", "skip_window", fallback=str(DEFAULT_SKIP_WINDOW))
    try:
        cfg.skip_window = int(raw_window)
        if cfg.skip_window < 0:
            raise ValueError
    except ValueError:
        problems.append(f"[output] skip_window must be an integer >= 0, got {raw_window!r}")

    raw_formats = formats if formats is not None else parser.get(
        "output", "formats", fallback="table")
    cfg.formats, format_problems = parse_formats(raw_formats)
    problems += format_problems

    if problems:
        raise ConfigError(problems)
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    return cfg
