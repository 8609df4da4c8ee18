"""Detection of k vertex-disjoint r-cliques in multipartite graphs.

In an r-partite graph every K_r meets each part exactly once, so the
cliques of interest are transversals. With fewer than all parts (``r``
smaller than the number of parts) a clique may use any ``r`` parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ._kernels import get_kernels
from .errors import GraphFormatError, ParameterError
from .graph import MultipartiteGraph, VertexId

Transversal = tuple[VertexId, ...]


@dataclass(frozen=True)
class CliquePacking:
    """k pairwise vertex-disjoint cliques, each a tuple of vertices in part order."""

    cliques: tuple[Transversal, ...]

    @property
    def k(self) -> int:
        return len(self.cliques)

    def verify(self, g: MultipartiteGraph, r: int | None = None) -> bool:
        """Independent re-check: each clique complete, sizes right, cliques disjoint."""
        r = g.n_parts if r is None else r
        seen = set()
        for clique in self.cliques:
            if len(clique) != r or len({v.part for v in clique}) != r:
                return False
            for a in range(r):
                for b in range(a + 1, r):
                    if not g.has_edge(clique[a], clique[b]):
                        return False
            if seen.intersection(clique):
                return False
            seen.update(clique)
        return True

    def to_text(self) -> str:
        return "".join(" ".join(str(v) for v in clique) + "\n" for clique in self.cliques)

    @classmethod
    def from_text(cls, text: str) -> CliquePacking:
        cliques = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                clique = tuple(VertexId(*map(int, tok.split(":"))) for tok in line.split())
            except (TypeError, ValueError):
                raise GraphFormatError(f"line {lineno}: expected 'part:index' tokens") from None
            cliques.append(clique)
        return cls(tuple(cliques))


def _clique_size(g: MultipartiteGraph, r: int | None) -> int:
    r = g.n_parts if r is None else int(r)
    if r < 1:
        raise ParameterError(f"clique size must be positive, got {r}")
    return r


def clique_array(g: MultipartiteGraph, r: int | None = None, *, backend: str | None = None) -> np.ndarray:
    """All r-cliques as an ``(m, r)`` array of flat ids, rows in lexicographic order."""
    r = _clique_size(g, r)
    if r > g.n_parts:
        return np.empty((0, r), dtype=np.int64)
    return get_kernels(backend).list_cliques(g.adj, r)


def enumerate_transversal_cliques(g: MultipartiteGraph, r: int | None = None) -> Iterator[Transversal]:
    """Yield every clique of size ``r`` (default: one per part), lexicographically."""
    for row in clique_array(g, r):
        yield tuple(g.vertex(v) for v in row)


def count_cliques(g: MultipartiteGraph, r: int | None = None, *, backend: str | None = None) -> int:
    """Exact number of r-cliques (the proof's q when r is the number of parts)."""
    r = _clique_size(g, r)
    if r > g.n_parts:
        return 0
    return get_kernels(backend).count_cliques(g.adj, r)


def packing_rows(
    adj: np.ndarray,
    part_of: np.ndarray,
    n_parts: int,
    k: int,
    r: int,
    *,
    backend: str | None = None,
) -> np.ndarray | None:
    """Raw packing search on an adjacency matrix: ``(k, r)`` flat ids or None."""
    kern = get_kernels(backend)
    cliques = kern.list_cliques(adj, r)
    chosen = kern.find_packing(cliques, part_of, n_parts, k, r == n_parts)
    if len(chosen) == 0:
        return None
    return cliques[chosen]


def find_packing(
    g: MultipartiteGraph, k: int, r: int | None = None, *, backend: str | None = None
) -> CliquePacking | None:
    """A packing of ``k`` disjoint r-cliques, or None when none exists.

    Deterministic: for ``k == 1`` this is the lexicographically first clique.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    r = _clique_size(g, r)
    if r > g.n_parts or k * r > g.n_vertices:
        return None
    rows = packing_rows(g.adj, g.part_of, g.n_parts, k, r, backend=backend)
    if rows is None:
        return None
    return CliquePacking(tuple(tuple(g.vertex(v) for v in row) for row in rows))


def contains_packing(g: MultipartiteGraph, k: int, r: int | None = None, *, backend: str | None = None) -> bool:
    return find_packing(g, k, r, backend=backend) is not None
