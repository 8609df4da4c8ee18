"""Append-only JSONL cache of oracle results."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .graph import HostSpec, MultipartiteGraph
from .oracle import ExtremalResult

DEFAULT_CACHE = "turan-cache.jsonl"
ENV_VAR = "TURAN_CACHE"


def default_cache_path() -> Path:
    return Path(os.environ.get(ENV_VAR) or DEFAULT_CACHE)


def _key(spec: HostSpec) -> tuple:
    spec = spec.canonical()
    return (spec.parts, spec.r, spec.k)


class OracleCache:
    """One JSON record per line; the last record for a spec wins."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._records: dict[tuple, dict] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                self._records[(tuple(rec["parts"]), rec["r"], rec["k"])] = rec

    def __len__(self) -> int:
        return len(self._records)

    def get(self, spec: HostSpec) -> ExtremalResult | None:
        rec = self._records.get(_key(spec))
        if rec is None:
            return None
        return ExtremalResult(
            spec=spec.canonical(),
            max_edges=rec["max_edges"],
            witness=MultipartiteGraph.from_text(rec["witness"]),
            nodes_explored=rec["nodes"],
            elapsed=rec["elapsed"],
            cached=True,
        )

    def put(self, result: ExtremalResult) -> None:
        spec = result.spec.canonical()
        rec = {
            "parts": list(spec.parts),
            "r": spec.r,
            "k": spec.k,
            "max_edges": result.max_edges,
            "witness": result.witness.to_text(),
            "nodes": result.nodes_explored,
            "elapsed": round(result.elapsed, 6),
        }
        self._records[_key(spec)] = rec
        if self.path.parent != Path(""):
            self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
