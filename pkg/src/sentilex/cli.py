"""``sentilex build|score|evaluate --config <path> [--out <dir>] [--format ...]``"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Dict, List, Optional

from . import agreement
from .builder import BuildError, build_target_lexicon, parse_manual_entries, parse_mapping
from .config import ConfigError, RunConfig, load_config
from .corpus import CorpusError, load_corpus
from .lexicon import (
    Lexicon,
    LexiconError,
    parse_canonical,
    parse_categorical,
    parse_ngram_scored,
    parse_valenced,
    serialize_canonical,
)
from .scoring import score_corpus

log = logging.getLogger("sentilex")

LOG_LEVELS = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}


class CommandError(Exception):
    pass


def _read(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as e:
        raise CommandError(f"cannot read {path}: {e.strerror}") from None


def _parse_file(path: Path, parse, *args):
    try:
        return parse(_read(path), *args)
    except LexiconError as e:
        raise CommandError(f"{path}: {e}") from None


def write_outputs(files: Dict[Path, str]) -> None:
    """Write every file or none: stage to temp files, then rename."""
    staged = []
    try:
        for target, content in files.items():
            fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.")
            staged.append((tmp, target))
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(content)
        for tmp, target in staged:
            os.replace(tmp, target)
            log.info("wrote %s", target)
    finally:
        for tmp, _ in staged:
            if os.path.exists(tmp):
                os.unlink(tmp)


class Workspace:
    """Loads and caches the lexicons a config refers to."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self._cache: Dict[str, Lexicon] = {}
        self.build_report = None

    def lexicon(self, name: str) -> Lexicon:
        if name not in self._cache:
            self._cache[name] = self._load(name)
        return self._cache[name]

    def _load(self, name: str) -> Lexicon:
        spec = self.cfg.lexicon(name)
        log.debug("loading lexicon %s (%s)", name, spec.kind)
        if spec.kind == "categorical":
            pos, neg = spec.paths["positive"], spec.paths["negative"]
            try:
                return parse_categorical(_read(pos), _read(neg), name, spec.language)
            except LexiconError as e:
                raise CommandError(f"{pos} / {neg}: {e}") from None
        if spec.kind == "valenced":
            return _parse_file(spec.paths["path"], parse_valenced, name, spec.language)
        if spec.kind == "ngram-scored":
            return _parse_file(spec.paths["path"], parse_ngram_scored, name,
                               spec.language)
        if spec.kind == "canonical":
            lex = _parse_file(spec.paths["path"], parse_canonical)
            return Lexicon(name, lex.language, lex.kind, lex.entries)
        return self.build()

    def build(self) -> Lexicon:
        cfg = self.cfg
        if cfg.build_name is None or cfg.mapping is None:
            raise CommandError("config has no [build] section with a mapping")
        if cfg.build_name in self._cache:
            return self._cache[cfg.build_name]
        source = self.lexicon(cfg.build_source)
        mapping = _parse_file(cfg.mapping, parse_mapping)
        manual = _parse_file(cfg.manual, parse_manual_entries) if cfg.manual else []
        try:
            lexicon, report = build_target_lexicon(source, mapping, manual,
                                                   cfg.build_name)
        except LexiconError as e:
            raise CommandError(str(e)) from None
        self._cache[cfg.build_name] = lexicon
        self.build_report = report
        return lexicon

    def corpus(self):
        if self.cfg.corpus is None:
            raise CommandError("config has no [corpus] path")
        try:
            return load_corpus(self.cfg.corpus)
        except CorpusError as e:
            raise CommandError(str(e)) from None


def cmd_build(cfg: RunConfig) -> int:
    ws = Workspace(cfg)
    lexicon = ws.build()
    out = cfg.output_dir
    write_outputs({
        out / f"{lexicon.name}.tsv": serialize_canonical(lexicon),
        out / f"{lexicon.name}.report.txt": ws.build_report.render(),
    })
    log.info("built %s: %d entries", lexicon.name, len(lexicon))
    return 0


SCORE_HEADER = "id\tpositive_count\tnegative_count\tvalence_sum\tpolarity"


def cmd_score(cfg: RunConfig) -> int:
    ws = Workspace(cfg)
    name = cfg.score_lexicon
    if name is None:
        if len(cfg.lexicons) != 1:
            raise CommandError("set [score] lexicon = <name> to pick one lexicon")
        name = cfg.lexicons[0].name
    lexicon = ws.lexicon(name)
    results = score_corpus(ws.corpus(), lexicon, cfg.skip_window)
    lines = [SCORE_HEADER]
    for r in sorted(results, key=lambda r: r.document_id):
        lines.append(f"{r.document_id}\t{r.positive_count}\t{r.negative_count}\t"
                     f"{r.valence_sum}\t{r.polarity.value}")
    write_outputs({cfg.output_dir / f"scores-{lexicon.name}.tsv": "\n".join(lines) + "\n"})
    return 0


def cmd_evaluate(cfg: RunConfig) -> int:
    ws = Workspace(cfg)
    names = cfg.evaluate_lexicons or tuple(s.name for s in cfg.lexicons)
    if len(names) < 2:
        raise CommandError("need at least two lexicons")
    lexicons = [ws.lexicon(n) for n in names]
    try:
        report = agreement.build_report(ws.corpus(), lexicons, cfg.skip_window)
    except agreement.AgreementError as e:
        raise CommandError(str(e)) from None
    files = {
        cfg.output_dir / f"agreement.{agreement.EXTENSIONS[fmt]}":
            agreement.FORMATTERS[fmt](report)
        for fmt in cfg.formats
    }
    write_outputs(files)
    if "table" in cfg.formats:
        sys.stdout.write(agreement.format_table(report))
    return 0


COMMANDS = {"build": cmd_build, "score": cmd_score, "evaluate": cmd_evaluate}


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sentilex",
        description="Build projected sentiment lexicons, score documents and "
                    "measure cross-lexicon polarity agreement.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--config", required=True, type=Path, help="run config file")
    ap.add_argument("--out", type=Path, help="output directory (overrides config)")
    ap.add_argument("--format", help="comma-separated report formats: table,json,csv")
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    level = LOG_LEVELS.get(os.environ.get("SENTILEX_LOG", "").lower(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        cfg = load_config(args.config, output_dir=args.out, formats=args.format)
        return COMMANDS[args.command](cfg)
    except ConfigError as e:
        for problem in e.problems:
            print(f"sentilex: config error: {problem}", file=sys.stderr)
    except (CommandError, BuildError) as e:
        print(f"sentilex: error: {e}", file=sys.stderr)
    except OSError as e:
        print(f"sentilex: error: {e}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
