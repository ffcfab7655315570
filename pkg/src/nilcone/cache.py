"""Optional on-disk memo tables, enabled by the NILCONE_CACHE_DIR variable.

Entries are content-addressed JSON files: the name is a hash of the request
payload, the file stores the payload together with the value, and a stale or
deleted file only costs a recomputation.  Loads validate the stored payload
against the request, so hash collisions cannot poison results.
"""

from __future__ import annotations

import hashlib
import json
import os


def _cache_dir():
    return os.environ.get("NILCONE_CACHE_DIR")


def _path_for(payload):
    digest = hashlib.sha256(payload.encode("utf-8")).hexdigest()
    return os.path.join(_cache_dir(), digest + ".json")


def fetch(request):
    """Return the cached value for a JSON-able request, or None."""
    if not _cache_dir():
        return None
    payload = json.dumps(request, sort_keys=True)
    path = _path_for(payload)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            blob = json.load(fh)
    except (OSError, ValueError):
        return None
    if blob.get("request") != request:
        return None
    return blob.get("value")


def store(request, value):
    """Persist a value; failures are silently ignored (pure-cache contract)."""
    directory = _cache_dir()
    if not directory:
        return
    payload = json.dumps(request, sort_keys=True)
    try:
        os.makedirs(directory, exist_ok=True)
        tmp = _path_for(payload) + ".tmp.%d" % os.getpid()
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump({"request": request, "value": value}, fh, sort_keys=True)
        os.replace(tmp, _path_for(payload))
    except OSError:
        pass
