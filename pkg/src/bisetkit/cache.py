"""Disk cache for subgroup lattices, one JSON file per group table hash."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Optional

_CACHE_DIR: Optional[Path] = None
_DISABLED = False


def set_cache_dir(path: Optional[str]) -> None:
    """Override the cache directory; None re-enables the default resolution."""
    global _CACHE_DIR, _DISABLED
    if path is None:
        _CACHE_DIR = None
        _DISABLED = False
    elif path == "":
        _DISABLED = True
    else:
        _CACHE_DIR = Path(path)
        _DISABLED = False


def cache_dir() -> Optional[Path]:
    if _DISABLED:
        return None
    if _CACHE_DIR is not None:
        return _CACHE_DIR
    env = os.environ.get("BISETKIT_CACHE")
    if env:
        return Path(env)
    return Path(".bisetkit-cache")


def _path_for(fingerprint: str) -> Optional[Path]:
    d = cache_dir()
    if d is None:
        return None
    return d / f"{fingerprint}.json"


def load_lattice(fingerprint: str, order: int):
    """Return (subgroups, class_ids) from disk, or None on any problem."""
    p = _path_for(fingerprint)
    if p is None or not p.exists():
        return None
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
        if doc.get("order") != order or doc.get("hash") != fingerprint:
            return None
        subs = [tuple(int(x) for x in m) for m in doc["subgroups"]]
        classes = doc.get("classes")
        if classes is not None:
            classes = [[int(x) for x in ids] for ids in classes]
        return subs, classes
    except (OSError, ValueError, KeyError, TypeError):
        return None


def store_lattice(fingerprint: str, order: int, subgroups, class_ids) -> None:
    p = _path_for(fingerprint)
    if p is None:
        return
    doc = {
        "order": order,
        "hash": fingerprint,
        "subgroups": subgroups,
        "classes": class_ids,
    }
    try:
        p.parent.mkdir(parents=True, exist_ok=True)
        tmp = p.with_suffix(".tmp")
        tmp.write_text(json.dumps(doc, sort_keys=True), encoding="utf-8")
        tmp.replace(p)
    except OSError:
        pass
