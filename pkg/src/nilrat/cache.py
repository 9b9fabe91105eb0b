"""On-disk JSON cache.

Entries are advisory: anything unreadable or failing its digest is ignored
and recomputed. Writes go to a temporary file that is renamed into place.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import shutil
import tempfile
from pathlib import Path
from typing import Any, Optional

from . import __version__

log = logging.getLogger(__name__)

ENV_VAR = "NILRAT_CACHE"
DEFAULT_DIR = ".nilrat-cache"

_enabled = True


def cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR) or DEFAULT_DIR)


def set_enabled(flag: bool) -> None:
    global _enabled
    _enabled = flag


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _path(kind: str, key: str) -> Path:
    safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in key)
    return cache_dir() / f"{kind}-{safe}-v{__version__}.json"


def load(kind: str, key: str) -> Optional[Any]:
    if not _enabled:
        return None
    path = _path(kind, key)
    try:
        wrapper = json.loads(path.read_text())
        body = canonical_json(wrapper["payload"])
        if wrapper.get("key") != key or wrapper.get("digest") != _digest(body):
            raise ValueError("digest mismatch")
        return wrapper["payload"]
    except FileNotFoundError:
        return None
    except (OSError, ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring unusable cache file %s (%s)", path, exc)
        return None


def store(kind: str, key: str, payload: Any) -> None:
    if not _enabled:
        return
    path = _path(kind, key)
    body = canonical_json(payload)
    wrapper = {"key": key, "version": __version__, "digest": _digest(body),
               "payload": payload}
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
        with os.fdopen(fd, "w") as fh:
            fh.write(canonical_json(wrapper))
        os.replace(tmp, path)
    except OSError as exc:
        log.warning("could not write cache file %s (%s)", path, exc)


def clear() -> int:
    """Delete the cache directory; returns the number of files removed."""
    d = cache_dir()
    if not d.exists():
        return 0
    n = sum(1 for p in d.iterdir() if p.is_file())
    shutil.rmtree(d)
    return n
