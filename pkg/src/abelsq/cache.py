"""Append-only JSONL cache of MinimizationResult records, keyed by (n, x, version)."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Optional, Union

from filelock import FileLock

from .kernel import COUNTER_VERSION
from .search import MinimizationResult

log = logging.getLogger(__name__)

SCHEMA = 1
_REQUIRED = ("schema", "version", "n", "x", "min_theta", "minimizers", "words_examined", "elapsed_ms")


class ResultCache:
    """Results persisted one JSON object per line.

    Lines that fail to parse are logged and kept in ``corrupt`` as
    (line number, reason); records from another counter version are ignored.
    """

    def __init__(self, path: Union[str, Path], version: str = COUNTER_VERSION):
        self.path = Path(path)
        self.version = version
        self.corrupt: list[tuple[int, str]] = []
        self._lock = FileLock(str(self.path) + ".lock")
        self._records: Optional[dict[tuple[int, int], MinimizationResult]] = None

    def load(self) -> dict[tuple[int, int], MinimizationResult]:
        records: dict[tuple[int, int], MinimizationResult] = {}
        self.corrupt = []
        if self.path.exists():
            lines = self.path.read_text().split("\n")
            truncated = lines[-1] != ""
            for lineno, line in enumerate(lines, 1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    missing = [k for k in _REQUIRED if k not in rec]
                    if missing:
                        raise ValueError(f"missing fields {missing}")
                    if rec["schema"] != SCHEMA:
                        raise ValueError(f"unknown schema {rec['schema']!r}")
                    result = MinimizationResult.from_record(rec)
                except (ValueError, TypeError, KeyError) as exc:
                    is_tail = truncated and lineno == len(lines)
                    reason = "truncated final record" if is_tail else str(exc)
                    log.warning("%s:%d: skipping corrupt cache line (%s)", self.path, lineno, reason)
                    self.corrupt.append((lineno, reason))
                    continue
                if rec["version"] == self.version:
                    records[(result.n, result.x)] = result
        self._records = records
        return records

    def get(self, n: int, x: int) -> Optional[MinimizationResult]:
        if self._records is None:
            self.load()
        return self._records.get((n, x))

    def store(self, result: MinimizationResult) -> None:
        line = json.dumps(result.to_record(self.version), separators=(",", ":"))
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self._lock:
            with open(self.path, "a+b") as fh:
                fh.seek(0, 2)
                if fh.tell():
                    fh.seek(-1, 2)
                    if fh.read(1) != b"\n":
                        # never glue a new record onto a torn write
                        fh.write(b"\n")
                fh.write(line.encode() + b"\n")
        if self._records is None:
            self.load()
        else:
            self._records[(result.n, result.x)] = result


def cache_store(path: Union[str, Path], result: MinimizationResult) -> None:
    ResultCache(path).store(result)


def cache_load(path: Union[str, Path], n: int, x: int) -> Optional[MinimizationResult]:
    """Return the cached result for (n, x) or None when absent."""
    return ResultCache(path).get(n, x)
