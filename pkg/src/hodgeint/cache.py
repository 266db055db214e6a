"""Persistent memo cache: JSON-lines file mirroring the in-memory tables.

Layout: a header line ``{"format": "hodgeint-cache-v1", ...}`` followed by one
record per integral::

    {"tag": "psi", "genus": 2, "exponents": [4], "value": "1/1152"}

Rationals are stored as ``"p/q"`` strings.  A header with an unknown format
version makes the loader refuse the file (returning 0 entries) so values are
recomputed rather than misread.  Writing always re-exports the full tables,
which compacts any duplicates an append-only writer may have left.
"""

from __future__ import annotations

import json
import os
from datetime import datetime, timezone
from pathlib import Path
from typing import Union

from . import store

__all__ = ["FORMAT_VERSION", "ENV_CACHE_PATH", "load_cache", "save_cache", "append_entry"]

FORMAT_VERSION = "hodgeint-cache-v1"
ENV_CACHE_PATH = "HODGEINT_CACHE"


def load_cache(path: Union[str, Path]) -> int:
    """Preload table entries from a cache file; returns the number loaded.

    Missing files and version mismatches load nothing (the caller recomputes);
    malformed records raise ValueError.
    """
    path = Path(path)
    if not path.exists():
        return 0
    loaded = 0
    with path.open("r", encoding="utf-8") as fh:
        header_line = fh.readline()
        if not header_line.strip():
            return 0
        header = json.loads(header_line)
        if header.get("format") != FORMAT_VERSION:
            return 0
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            tag = rec["tag"]
            if tag not in store.CACHED_TAGS:
                raise ValueError(f"unknown cache tag {tag!r}")
            key = (int(rec["genus"]), tuple(sorted(map(int, rec["exponents"]), reverse=True)))
            store.preload(tag, key, store.parse_rational(rec["value"]))
            loaded += 1
    return loaded


def save_cache(path: Union[str, Path]) -> int:
    """Export every memoized entry; returns the number written."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    written = 0
    tmp = path.with_suffix(path.suffix + ".tmp")
    with tmp.open("w", encoding="utf-8") as fh:
        fh.write(
            json.dumps(
                {
                    "format": FORMAT_VERSION,
                    "created": datetime.now(timezone.utc).isoformat(),
                },
                sort_keys=True,
            )
            + "\n"
        )
        for tag in store.CACHED_TAGS:
            for (g, ks), value in sorted(store.tables()[tag].items()):
                fh.write(
                    json.dumps(
                        {
                            "tag": tag,
                            "genus": g,
                            "exponents": list(ks),
                            "value": store.format_rational(value),
                        },
                        sort_keys=True,
                    )
                    + "\n"
                )
                written += 1
    os.replace(tmp, path)
    return written


def append_entry(path: Union[str, Path], tag: str, genus: int, exponents, value) -> None:
    """Append one record (crash-safe incremental writing; compacted on save)."""
    path = Path(path)
    new = not path.exists() or path.stat().st_size == 0
    with path.open("a", encoding="utf-8") as fh:
        if new:
            fh.write(
                json.dumps(
                    {
                        "format": FORMAT_VERSION,
                        "created": datetime.now(timezone.utc).isoformat(),
                    },
                    sort_keys=True,
                )
                + "\n"
            )
        fh.write(
            json.dumps(
                {
                    "tag": tag,
                    "genus": genus,
                    "exponents": list(exponents),
                    "value": store.format_rational(value),
                },
                sort_keys=True,
            )
            + "\n"
        )
