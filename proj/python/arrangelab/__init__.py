"""Exact analysis of projective line arrangements."""

import json

from ._core import Arrangement, ParseError, family, family_names, run_cli
from . import _core

__all__ = [
    "Arrangement",
    "ParseError",
    "analyze",
    "family",
    "family_names",
    "kawanoue",
    "load",
    "run_cli",
    "search",
    "verify",
]


def load(path):
    with open(path, encoding="utf-8") as f:
        return Arrangement.from_json(f.read())


def analyze(arrangement, certify=False):
    return json.loads(_core._analyze_json(arrangement, certify))


def verify(arrangement, theorem="all", line=None, certify=False, allow_positive_char=False):
    """Theorem reports as dicts; theorem="all" runs every arrangement check."""
    return json.loads(_core._verify_json(arrangement, theorem, line, certify, allow_positive_char))


def kawanoue(certify=True):
    return json.loads(_core._kawanoue_json(certify))


def search(corpus="mixed", trials=100, seed=0, jobs=1, inject_fake=False):
    return json.loads(_core._search_json(corpus, trials, seed, jobs, inject_fake))
