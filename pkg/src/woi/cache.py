"""Content-addressed result cache.

Records are keyed by a digest of the canonical request JSON (operation
name, canonical input serialization, parameters, characteristic, tool
version), so a version bump or any input change misses cleanly.  Writes
are atomic (tempfile + rename); corrupt records degrade to a miss with a
warning on stderr.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

ENV_CACHE_DIR = "WOI_CACHE_DIR"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def request_key(request: dict) -> str:
    return hashlib.sha256(canonical_json(request).encode()).hexdigest()


@dataclass
class AuditReport:
    checked: int
    divergent: list[str]
    corrupt: list[str]


class ResultCache:
    def __init__(self, directory: str | os.PathLike):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        return self.dir / f"{key}.json"

    def get(self, key: str) -> dict | None:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            record = json.loads(path.read_text())
            if record.get("key") != key:
                raise ValueError("key mismatch")
            return record
        except (ValueError, OSError) as exc:
            print(f"warning: corrupt cache record {path.name}: {exc}",
                  file=sys.stderr)
            return None

    def put(self, key: str, request: dict, result) -> dict:
        record = {
            "schema": "woi/1",
            "key": key,
            "request": request,
            "result": result,
        }
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(canonical_json(record))
            os.replace(tmp, self._path(key))
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
        return record

    def keys(self) -> list[str]:
        return sorted(p.stem for p in self.dir.glob("*.json"))

    def audit(self, recompute, sample: int | None = None) -> AuditReport:
        """Recompute a sample of records and compare results byte for byte.

        ``recompute`` maps a request dict to a result; records whose
        stored version differs from the current tool version are
        recomputed like any other and so surface as divergences if the
        behavior changed.
        """
        keys = self.keys()
        if sample is not None:
            keys = keys[:sample]
        divergent, corrupt = [], []
        checked = 0
        for key in keys:
            record = self.get(key)
            if record is None:
                corrupt.append(key)
                continue
            checked += 1
            fresh = recompute(record["request"])
            if canonical_json(fresh) != canonical_json(record["result"]):
                divergent.append(key)
        return AuditReport(checked=checked, divergent=divergent, corrupt=corrupt)


def cache_from_env() -> ResultCache | None:
    directory = os.environ.get(ENV_CACHE_DIR)
    if not directory:
        return None
    return ResultCache(directory)
