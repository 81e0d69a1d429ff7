"""On-disk cache of signature fibers.

One line-delimited JSON file per cache directory. The first line is a
format header; every further line holds the fiber of one
(ambient genus, order, options fingerprint).
"""

import json
import logging
import os
import random
from pathlib import Path

from munch import Munch

from .enumeration.signatures import enumerate_signatures
from .models.options import EnumOptions
from .models.signature import Signature

logger = logging.getLogger(__name__)

CACHE_FORMAT = "orbivcd-signatures"
CACHE_VERSION = 1
CACHE_FILE = "signatures.jsonl"
CACHE_DIR_ENV = "ORBIVCD_CACHE_DIR"


class CacheCorruptionError(ValueError):
    def __init__(self, message: str, record: int | None = None):
        super().__init__(message if record is None else f"record {record}: {message}")
        self.record = record


def default_cache_dir() -> Path | None:
    value = os.environ.get(CACHE_DIR_ENV)
    return Path(value) if value else None


class SignatureCache:
    def __init__(self, cache_dir: str | Path):
        self.cache_dir = Path(cache_dir)
        self.path = self.cache_dir / CACHE_FILE

    def _header(self) -> str:
        return json.dumps({"format": CACHE_FORMAT, "version": CACHE_VERSION}, sort_keys=True)

    def records(self) -> list[Munch]:
        """Parse the whole file; each record keeps its line number as `record`."""
        if not self.path.exists():
            return []
        lines = self.path.read_text(encoding="utf-8").splitlines()
        if not lines:
            return []
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError as exc:
            raise CacheCorruptionError(f"unreadable header: {exc}", 1) from exc
        if header.get("format") != CACHE_FORMAT or header.get("version") != CACHE_VERSION:
            raise CacheCorruptionError(f"unsupported cache header {lines[0]!r}", 1)

        records = []
        for number, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            try:
                record = Munch.fromDict(json.loads(line))
                record.record = number
                record.signatures = [Signature.from_string(s) for s in record.signatures]
                if record.key != EnumOptions.from_dict(record.options).fingerprint():
                    raise ValueError(f"key {record.key} does not match its options")
                if not isinstance(record.g, int) or not isinstance(record.order, int):
                    raise ValueError("genus and order must be integers")
                if record.g < 2 or record.order < 1:
                    raise ValueError(f"invalid genus {record.g} or order {record.order}")
            except (ValueError, AttributeError, TypeError) as exc:
                raise CacheCorruptionError(str(exc), number) from exc
            records.append(record)
        return records

    def get(self, g: int, order: int, opts: EnumOptions) -> list[Signature] | None:
        key = opts.fingerprint()
        for record in self.records():
            if record.g == g and record.order == order and record.key == key:
                logger.debug("cache hit g=%d order=%d key=%s", g, order, key)
                return record.signatures
        return None

    def put(self, g: int, order: int, opts: EnumOptions, signatures: list[Signature]):
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        new_file = not self.path.exists() or self.path.stat().st_size == 0
        record = {
            "g": g,
            "order": order,
            "key": opts.fingerprint(),
            "options": opts.as_dict(),
            "signatures": [str(s) for s in signatures],
        }
        with self.path.open("a", encoding="utf-8") as f:
            if new_file:
                f.write(self._header() + "\n")
            f.write(json.dumps(record, sort_keys=True) + "\n")

    def signatures(self, g: int, order: int, opts: EnumOptions | None = None) -> list[Signature]:
        """enumerate_signatures, served from and stored to the cache."""
        opts = opts or EnumOptions()
        cached = self.get(g, order, opts)
        if cached is not None:
            return cached
        signatures = enumerate_signatures(g, order, opts)
        self.put(g, order, opts, signatures)
        return signatures

    def info(self) -> dict[str, any]:
        records = self.records()
        return {
            "path": str(self.path),
            "records": len(records),
            "bytes": self.path.stat().st_size if self.path.exists() else 0,
        }

    def clear(self) -> int:
        # works on corrupt files too: nothing is parsed
        if not self.path.exists():
            return 0
        lines = [line for line in self.path.read_text(encoding="utf-8").splitlines() if line.strip()]
        self.path.unlink()
        return max(len(lines) - 1, 0)

    def verify(self, sample: int | None = None, seed: int = 0) -> tuple[int, list[int]]:
        """Recompute stored fibers; returns (records checked, record ids that disagree)."""
        records = self.records()
        if sample is not None and sample < len(records):
            records = random.Random(seed).sample(records, sample)
        invalid = []
        for record in sorted(records, key=lambda r: r.record):
            fresh = enumerate_signatures(record.g, record.order, EnumOptions.from_dict(record.options))
            if fresh != record.signatures:
                logger.warning("cache record %d (g=%d order=%d) is stale", record.record, record.g, record.order)
                invalid.append(record.record)
        return len(records), invalid
