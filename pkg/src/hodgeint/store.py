"""Shared memo tables for intersection numbers, plus rational serialization.

Every memoized integral lives in one of the tables here, keyed by
``(genus, exponents-sorted-descending)``.  Tables behave as insert-once maps:
recomputing a key must produce the same value, so concurrent or repeated
insertion is harmless.  The persistent cache (see :mod:`hodgeint.cache`) loads
into and drains from these tables.

Rationals are serialized as ``"p/q"`` with the ``/q`` omitted when q = 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

__all__ = [
    "TAG_PSI",
    "TAG_LAMBDA_G",
    "TAG_LAMBDA_G_GM1",
    "TAG_LAMBDA_GM1",
    "TAG_LAMBDA_G_GM2",
    "CACHED_TAGS",
    "tables",
    "lookup",
    "record",
    "preload",
    "computed_count",
    "reset",
    "format_rational",
    "parse_rational",
]

TAG_PSI = "psi"
TAG_LAMBDA_G = "lambda_g"
TAG_LAMBDA_G_GM1 = "lambda_g_gm1"
TAG_LAMBDA_GM1 = "lambda_gm1"
TAG_LAMBDA_G_GM2 = "lambda_g_gm2"

# Tags that are written through to the persistent cache.  Recursion-solver
# oracles keep private in-memory memos instead (see hodge.py): mixing them with
# the closed-form tables would break the dual-route checks.
CACHED_TAGS = (TAG_PSI, TAG_LAMBDA_G, TAG_LAMBDA_G_GM1, TAG_LAMBDA_GM1)

Key = Tuple[int, Tuple[int, ...]]

_tables: Dict[str, Dict[Key, Fraction]] = {t: {} for t in CACHED_TAGS}
_computed = 0


def tables() -> Dict[str, Dict[Key, Fraction]]:
    return _tables


def lookup(tag: str, key: Key):
    return _tables[tag].get(key)


def record(tag: str, key: Key, value: Fraction) -> Fraction:
    """Insert a freshly computed value (counts toward computed_count)."""
    global _computed
    _computed += 1
    _tables[tag][key] = value
    return value


def preload(tag: str, key: Key, value: Fraction) -> None:
    """Insert a value loaded from a cache file (does not count as computed)."""
    _tables[tag][key] = value


def computed_count() -> int:
    return _computed


def reset() -> None:
    global _computed
    for t in _tables.values():
        t.clear()
    _computed = 0


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)
