#!/usr/bin/env python3
"""Rebuild the projected Igbo lexicon from the fixture set, score the
fixture corpus with it and print the three-lexicon agreement table.

    python scripts/reproduce_agreement.py [--out DIR]
"""

import argparse
import sys
from pathlib import Path

from sentilex.cli import main

ROOT = Path(__file__).resolve().parents[1]
CONFIG = ROOT / "tests" / "fixtures" / "news8" / "sentilex.ini"


def run():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="out/news8", help="output directory")
    ap.add_argument("--config", default=str(CONFIG))
    args = ap.parse_args()

    for cmd in ("build", "score", "evaluate"):
        extra = ["--format", "table,json,csv"] if cmd == "evaluate" else []
        code = main([cmd, "--config", args.config, "--out", args.out, *extra])
        if code:
            return code
    print(f"\noutputs written to {args.out}/", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(run())
