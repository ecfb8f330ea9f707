"""Append-only verdict store: a JSON-lines log plus per-sweep metadata.

Layout::

    <root>/records.jsonl               one VerdictRecord per line
    <root>/sweeps/<id>/sweep.meta.json spec and totals of each sweep
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

from .. import __version__


class ContradictionError(RuntimeError):
    """A new verdict disagrees with one already stored for the same class."""


@dataclass(frozen=True)
class VerdictRecord:
    hash: str
    sweep: str
    n: int
    r: int
    edges: list
    predicate: str
    status: str
    witness: list | None
    timestamp: str = ""
    tool_version: str = __version__

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "VerdictRecord":
        return cls(**json.loads(line))


def now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class VerdictStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.log = self.root / "records.jsonl"
        self._by_class: dict[tuple[str, str], str] = {}
        self._by_sweep: dict[str, dict[str, VerdictRecord]] = {}
        if self.log.exists():
            with self.log.open() as fh:
                for line in fh:
                    if line.strip():
                        self._index(VerdictRecord.from_json(line))

    def _index(self, rec: VerdictRecord) -> None:
        self._by_class.setdefault((rec.hash, rec.predicate), rec.status)
        self._by_sweep.setdefault(rec.sweep, {})[rec.hash] = rec

    def check(self, rec: VerdictRecord) -> None:
        old = self._by_class.get((rec.hash, rec.predicate))
        if old is not None and old != rec.status:
            raise ContradictionError(
                f"class {rec.hash}: stored {rec.predicate} status {old!r}, new {rec.status!r}"
            )

    def insert_many(self, records) -> int:
        """Append records, skipping ones already logged for the same sweep.

        Every record is checked against the index before anything is
        written, so a contradiction leaves the log untouched.
        """
        records = list(records)
        for rec in records:
            self.check(rec)
        fresh = [rec for rec in records if rec.hash not in self._by_sweep.get(rec.sweep, {})]
        if fresh:
            with self.log.open("a") as fh:
                for rec in fresh:
                    fh.write(rec.to_json() + "\n")
                    self._index(rec)
        return len(fresh)

    def insert(self, rec: VerdictRecord) -> bool:
        return self.insert_many([rec]) == 1

    def records(self, sweep: str) -> list[VerdictRecord]:
        return list(self._by_sweep.get(sweep, {}).values())

    def status_of(self, hash_: str, predicate: str = "colorable") -> str | None:
        return self._by_class.get((hash_, predicate))

    def meta_path(self, sweep: str) -> Path:
        return self.root / "sweeps" / sweep / "sweep.meta.json"

    def write_meta(self, sweep: str, meta: dict) -> None:
        path = self.meta_path(sweep)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")

    def meta(self, sweep: str) -> dict | None:
        path = self.meta_path(sweep)
        return json.loads(path.read_text()) if path.exists() else None

    def sweeps(self) -> list[str]:
        base = self.root / "sweeps"
        return sorted(p.name for p in base.iterdir()) if base.exists() else []
