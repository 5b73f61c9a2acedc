"""Exact invariants, equivalence and fillability of circular spherical divisors.

Divisors are given as a literal string "(s1,...,sr)" or as a sequence of ints.
Reports are plain dicts with the same keys as the CLI's JSON output.
"""

import json

from . import _core
from ._core import CsdivError, canonical_form, charge, monodromy, signature

CsdivError.kind = property(lambda e: str(e).split(":", 1)[0])

__all__ = [
    "CsdivError",
    "canonical_form",
    "charge",
    "classify",
    "dual_cusp",
    "equiv",
    "geography",
    "invariants",
    "monodromy",
    "signature",
]


def invariants(divisor):
    return json.loads(_core.invariants_json(divisor))


def classify(divisor, max_bfs_nodes=None, max_length=None, min_entry=None):
    """Full report; report["inconclusive"] is True when a search budget ran out."""
    text, inconclusive = _core.classify_json(divisor, max_bfs_nodes, max_length, min_entry)
    report = json.loads(text)
    report["inconclusive"] = inconclusive
    return report


def equiv(first, second, max_bfs_nodes=None, max_length=None, min_entry=None):
    return json.loads(_core.equiv_json(first, second, max_bfs_nodes, max_length, min_entry))


def dual_cusp(cycle):
    return json.loads(_core.dual_json(list(cycle)))


def geography(divisor):
    return json.loads(_core.geography_json(divisor))
