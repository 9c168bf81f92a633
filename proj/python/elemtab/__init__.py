"""Exact analysis of involutive tableaux.

Tableaux come from spec text, the built-in fixtures or the random
generator. Reports are plain dicts with rationals as strings.
"""

import json

from ._elemtab import (
    Error,
    Tableau,
    char_ideal,
    fixture,
    fixture_names,
    from_spec,
    perturb,
    random_involutive,
)
from . import _elemtab

__all__ = [
    "Error",
    "Tableau",
    "analyze",
    "char_ideal",
    "fixture",
    "fixture_names",
    "from_spec",
    "involutivity",
    "perturb",
    "random_involutive",
]


def analyze(tableau, seed=0, max_minors=None, rounds=None):
    """Invariants, verdicts and the elementary flag as a dict."""
    return json.loads(_elemtab.analyze_json(tableau, seed, max_minors, rounds))


def involutivity(tableau):
    """Verdicts of the three involutivity tests as a dict."""
    return json.loads(_elemtab.involutivity_json(tableau))
