"""Multipartite graph data model and structural operations.

Vertices are addressed as ``VertexId(part, index)``. Internally every vertex
also has a flat id: parts are laid out consecutively, so the flat order is
part-major and the lexicographic order on ``(part, index)`` coincides with
the numeric order on flat ids.

Adjacency is a read-only ``(N, N)`` boolean matrix. Graph values never
change after construction; every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import GraphFormatError, ParameterError, PartitenessError

# Hosts up to this many vertices are guaranteed exact under int64 arithmetic.
MAX_HOST_VERTICES = 10_000


class VertexId(NamedTuple):
    part: int
    index: int

    def __str__(self) -> str:
        return f"{self.part}:{self.index}"


Edge = tuple[VertexId, VertexId]


def validate_parts(sizes: Iterable[int], *, min_parts: int = 2) -> tuple[int, ...]:
    """Return ``sizes`` as a tuple of ints, raising ParameterError if invalid.

    Host part sizes must be positive and there must be at least
    ``min_parts`` of them.
    """
    try:
        parts = tuple(int(s) for s in sizes)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"part sizes must be integers: {sizes!r}") from exc
    if len(parts) < min_parts:
        raise ParameterError(f"need at least {min_parts} parts, got {len(parts)}")
    if any(s < 1 for s in parts):
        raise ParameterError(f"part sizes must be positive: {parts}")
    if sum(parts) > MAX_HOST_VERTICES:
        raise ParameterError(f"host has {sum(parts)} vertices, limit is {MAX_HOST_VERTICES}")
    return parts


def canonical_parts(sizes: Iterable[int]) -> tuple[int, ...]:
    """Validated part sizes sorted non-decreasing."""
    return tuple(sorted(validate_parts(sizes)))


@dataclass(frozen=True)
class HostSpec:
    """A Turán problem instance: host ``K_{parts}``, forbidden ``k K_r``.

    ``r`` defaults to the number of parts. A smaller ``r`` describes the
    general problem where a clique may span any ``r`` of the parts.
    """

    parts: tuple[int, ...]
    k: int = 1
    r: int | None = None

    def __post_init__(self):
        parts = validate_parts(self.parts)
        object.__setattr__(self, "parts", parts)
        r = len(parts) if self.r is None else int(self.r)
        if not 2 <= r <= len(parts):
            raise ParameterError(f"clique size r={r} must lie in [2, {len(parts)}]")
        object.__setattr__(self, "r", r)
        if int(self.k) < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")
        object.__setattr__(self, "k", int(self.k))

    @property
    def transversal(self) -> bool:
        """True when r equals the number of parts (every K_r is a transversal)."""
        return self.r == len(self.parts)

    def canonical(self) -> HostSpec:
        return HostSpec(tuple(sorted(self.parts)), self.k, self.r)

    def host_edges(self) -> int:
        return complete_edge_count(self.parts)

    def __str__(self) -> str:
        return f"parts={','.join(map(str, self.parts))} r={self.r} k={self.k}"


def complete_edge_count(parts: Sequence[int]) -> int:
    """Number of edges of the complete multipartite graph, sum_{i<j} n_i n_j."""
    total = sum(parts)
    return (total * total - sum(n * n for n in parts)) // 2


class MultipartiteGraph:
    """An r-partite graph on fixed part sizes.

    Parts may have size 0 (deletion keeps empty parts so part indices stay
    stable); use :meth:`compact` to drop them.
    """

    __slots__ = ("parts", "offsets", "part_of", "adj", "_edge_count")

    def __init__(self, parts: Sequence[int], adj: np.ndarray | None = None, *, _trusted=False):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ParameterError(f"part sizes must be non-negative: {parts}")
        n = sum(parts)
        offsets = np.zeros(len(parts) + 1, dtype=np.int64)
        np.cumsum(parts, out=offsets[1:])
        part_of = np.repeat(np.arange(len(parts), dtype=np.int64), parts)
        if adj is None:
            adj = np.zeros((n, n), dtype=np.bool_)
        elif not _trusted:
            adj = np.array(adj, dtype=np.bool_, copy=True)
            if adj.shape != (n, n):
                raise ParameterError(f"adjacency shape {adj.shape} does not match {n} vertices")
            if not np.array_equal(adj, adj.T):
                raise ParameterError("adjacency must be symmetric")
            if adj.diagonal().any():
                raise ParameterError("adjacency must be irreflexive")
            if (adj & (part_of[:, None] == part_of[None, :])).any():
                raise PartitenessError("an edge joins two vertices of the same part")
        adj.flags.writeable = False
        part_of.flags.writeable = False
        offsets.flags.writeable = False
        self.parts = parts
        self.offsets = offsets
        self.part_of = part_of
        self.adj = adj
        self._edge_count = int(np.count_nonzero(adj)) // 2

    # -- constructors -------------------------------------------------

    @classmethod
    def empty(cls, parts: Sequence[int]) -> MultipartiteGraph:
        return cls(parts)

    @classmethod
    def from_edges(cls, parts: Sequence[int], edges: Iterable[tuple]) -> MultipartiteGraph:
        g = cls(parts)
        adj = np.zeros_like(g.adj)
        for u, v in edges:
            a, b = g.flat(u), g.flat(v)
            if g.part_of[a] == g.part_of[b]:
                raise PartitenessError(f"edge {VertexId(*u)}-{VertexId(*v)} lies inside one part")
            adj[a, b] = adj[b, a] = True
        return cls(parts, adj, _trusted=True)

    # -- basic queries ------------------------------------------------

    @property
    def n_parts(self) -> int:
        return len(self.parts)

    @property
    def n_vertices(self) -> int:
        return int(self.offsets[-1])

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def flat(self, v) -> int:
        part, index = v
        if not (0 <= part < self.n_parts and 0 <= index < self.parts[part]):
            raise ParameterError(f"unknown vertex {part}:{index} for parts {self.parts}")
        return int(self.offsets[part]) + index

    def vertex(self, flat: int) -> VertexId:
        part = int(self.part_of[flat])
        return VertexId(part, int(flat - self.offsets[part]))

    def vertices(self) -> list[VertexId]:
        return [VertexId(p, i) for p, n in enumerate(self.parts) for i in range(n)]

    def part_slice(self, i: int) -> slice:
        return slice(int(self.offsets[i]), int(self.offsets[i + 1]))

    def has_edge(self, u, v) -> bool:
        return bool(self.adj[self.flat(u), self.flat(v)])

    def degree(self, v) -> int:
        return int(np.count_nonzero(self.adj[self.flat(v)]))

    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, 2)`` array of flat ids, ``u < v``, sorted."""
        u, v = np.nonzero(np.triu(self.adj))
        return np.stack([u, v], axis=1).astype(np.int64)

    def edges(self) -> list[Edge]:
        """Edges as sorted ``(VertexId, VertexId)`` pairs with the smaller end first."""
        return [(self.vertex(a), self.vertex(b)) for a, b in self.edge_array()]

    def host_mask(self) -> np.ndarray:
        """Boolean matrix of all cross-part pairs (the complete host)."""
        return self.part_of[:, None] != self.part_of[None, :]

    def missing_host_edges(self) -> list[Edge]:
        u, v = np.nonzero(np.triu(self.host_mask() & ~self.adj))
        return [(self.vertex(a), self.vertex(b)) for a, b in zip(u, v)]

    def is_subgraph_of(self, other: MultipartiteGraph) -> bool:
        return self.parts == other.parts and not (self.adj & ~other.adj).any()

    # -- derived graphs -----------------------------------------------

    def _with_adj(self, adj: np.ndarray) -> MultipartiteGraph:
        return MultipartiteGraph(self.parts, adj, _trusted=True)

    def add_edges(self, edges: Iterable[tuple]) -> MultipartiteGraph:
        adj = self.adj.copy()
        for u, v in edges:
            a, b = self.flat(u), self.flat(v)
            if self.part_of[a] == self.part_of[b]:
                raise PartitenessError(f"edge {VertexId(*u)}-{VertexId(*v)} lies inside one part")
            adj[a, b] = adj[b, a] = True
        return self._with_adj(adj)

    def remove_edges(self, edges: Iterable[tuple]) -> MultipartiteGraph:
        adj = self.adj.copy()
        for u, v in edges:
            a, b = self.flat(u), self.flat(v)
            adj[a, b] = adj[b, a] = False
        return self._with_adj(adj)

    def compact(self) -> MultipartiteGraph:
        """Drop parts of size 0."""
        keep = [i for i, p in enumerate(self.parts) if p > 0]
        return MultipartiteGraph([self.parts[i] for i in keep], self.adj, _trusted=True)

    # -- dunder -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultipartiteGraph):
            return NotImplemented
        return self.parts == other.parts and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.parts, np.packbits(self.adj).tobytes()))

    def __repr__(self) -> str:
        return f"MultipartiteGraph(parts={self.parts}, edges={self.edge_count})"

    # -- text format --------------------------------------------------

    def to_text(self) -> str:
        lines = [" ".join(map(str, (self.n_parts, *self.parts)))]
        lines += [f"{u.part} {u.index} {v.part} {v.index}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> MultipartiteGraph:
        header = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                fields = [int(x) for x in line.split()]
            except ValueError:
                raise GraphFormatError(f"line {lineno}: expected integers, got {raw!r}") from None
            if header is None:
                if len(fields) < 1 or fields[0] != len(fields) - 1:
                    raise GraphFormatError(f"line {lineno}: header must be 'r n_1 ... n_r'")
                if any(n < 0 for n in fields[1:]):
                    raise GraphFormatError(f"line {lineno}: negative part size")
                header = fields[1:]
                continue
            if len(fields) != 4:
                raise GraphFormatError(f"line {lineno}: edge lines need 4 fields 'p1 i1 p2 i2'")
            p1, i1, p2, i2 = fields
            for p, i in ((p1, i1), (p2, i2)):
                if not (0 <= p < len(header) and 0 <= i < header[p]):
                    raise GraphFormatError(f"line {lineno}: vertex {p}:{i} out of range")
            edges.append((VertexId(p1, i1), VertexId(p2, i2)))
        if header is None:
            raise GraphFormatError("missing header line")
        return cls.from_edges(header, edges)


def complete_multipartite(parts: Sequence[int]) -> MultipartiteGraph:
    """The complete multipartite graph ``K_{n_1,...,n_r}``."""
    parts = validate_parts(parts, min_parts=1)
    g = MultipartiteGraph(parts)
    return g._with_adj(g.host_mask())


def join(g: MultipartiteGraph, h: MultipartiteGraph) -> MultipartiteGraph:
    """Join: parts concatenated, every vertex of ``g`` adjacent to every vertex of ``h``."""
    n, m = g.n_vertices, h.n_vertices
    adj = np.zeros((n + m, n + m), dtype=np.bool_)
    adj[:n, :n] = g.adj
    adj[n:, n:] = h.adj
    adj[:n, n:] = True
    adj[n:, :n] = True
    return MultipartiteGraph(g.parts + h.parts, adj, _trusted=True)


def disjoint_union(
    g: MultipartiteGraph,
    h: MultipartiteGraph,
    align: tuple[Sequence[int], Sequence[int]],
) -> MultipartiteGraph:
    """Vertex-disjoint union with parts merged according to ``align``.

    ``align = (g_map, h_map)`` sends part ``i`` of ``g`` to target part
    ``g_map[i]`` (likewise for ``h``). Within a target part, vertices keep
    their order: ``g``'s parts first (in part order), then ``h``'s.
    """
    g_map, h_map = (list(m) for m in align)
    if len(g_map) != g.n_parts or len(h_map) != h.n_parts:
        raise ParameterError("align must map every part of both operands")
    if any(t < 0 for t in g_map + h_map):
        raise ParameterError("target part indices must be non-negative")
    for graph, mapping in ((g, g_map), (h, h_map)):
        for i in range(graph.n_parts):
            for j in range(i + 1, graph.n_parts):
                if mapping[i] == mapping[j] and graph.adj[graph.part_slice(i), graph.part_slice(j)].any():
                    raise PartitenessError(
                        f"parts {i} and {j} are merged into target {mapping[i]} but share an edge"
                    )
    n_targets = max(g_map + h_map, default=-1) + 1
    sizes = [0] * n_targets
    # flat position of every source vertex inside its target part
    placement = []
    for graph, mapping in ((g, g_map), (h, h_map)):
        pos = np.empty(graph.n_vertices, dtype=np.int64)
        for i, t in enumerate(mapping):
            sl = graph.part_slice(i)
            pos[sl] = np.arange(sizes[t], sizes[t] + graph.parts[i])
            sizes[t] += graph.parts[i]
        placement.append(pos)
    out = MultipartiteGraph(sizes)
    adj = np.zeros_like(out.adj)
    for (graph, mapping), pos in zip(((g, g_map), (h, h_map)), placement):
        targets = np.array([mapping[p] for p in graph.part_of], dtype=np.int64)
        flat = out.offsets[targets] + pos if len(targets) else np.zeros(0, dtype=np.int64)
        adj[np.ix_(flat, flat)] |= graph.adj
    return MultipartiteGraph(sizes, adj, _trusted=True)


def _vertex_mask(g: MultipartiteGraph, s: Iterable) -> np.ndarray:
    mask = np.zeros(g.n_vertices, dtype=np.bool_)
    for v in s:
        mask[g.flat(v)] = True
    return mask


def _restrict(g: MultipartiteGraph, keep: np.ndarray) -> MultipartiteGraph:
    sizes = [int(np.count_nonzero(keep[g.part_slice(i)])) for i in range(g.n_parts)]
    return MultipartiteGraph(sizes, g.adj[np.ix_(keep, keep)], _trusted=True)


def delete_vertices(g: MultipartiteGraph, s: Iterable) -> MultipartiteGraph:
    """``G \\ S``: the induced subgraph on the complement of ``s``.

    Remaining vertices are renumbered within their part; empty parts stay.
    """
    return _restrict(g, ~_vertex_mask(g, s))


def induced_subgraph(g: MultipartiteGraph, s: Iterable) -> MultipartiteGraph:
    """``G[S]``, keeping all part indices (parts not met by ``s`` get size 0)."""
    return _restrict(g, _vertex_mask(g, s))


def pair_edge_count(g: MultipartiteGraph, i: int, j: int) -> int:
    """Number of edges between parts ``i`` and ``j``."""
    if i == j:
        raise ParameterError("pair_edge_count needs two distinct parts")
    for p in (i, j):
        if not 0 <= p < g.n_parts:
            raise ParameterError(f"part index {p} out of range")
    return int(np.count_nonzero(g.adj[g.part_slice(i), g.part_slice(j)]))


def pair_edge_matrix(g: MultipartiteGraph) -> np.ndarray:
    """Symmetric ``(r, r)`` matrix of ``|E(V_i V_j)|`` with a zero diagonal."""
    r = g.n_parts
    out = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        for j in range(i + 1, r):
            out[i, j] = out[j, i] = pair_edge_count(g, i, j)
    return out
