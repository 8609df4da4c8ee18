"""Explicit kK_r-free constructions and their certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ParameterError
from .formulas import h_k
from .graph import (
    HostSpec,
    MultipartiteGraph,
    complete_multipartite,
    disjoint_union,
    join,
    validate_parts,
)
from .packing import contains_packing

# Freeness is checked at construction time only for hosts this small.
EAGER_VERIFY_MAX_VERTICES = 40


@dataclass
class ConstructionCertificate:
    graph: MultipartiteGraph
    claimed_edges: int
    forbidden: tuple[int, int]  # (k, r)
    free_verified: bool | None = None
    spec: HostSpec | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.graph.edge_count != self.claimed_edges:
            raise AssertionError(
                f"construction has {self.graph.edge_count} edges, formula claims {self.claimed_edges}"
            )

    def verify_free(self) -> bool:
        """Run the detector (once) and record whether the graph avoids kK_r."""
        if self.free_verified is None:
            k, r = self.forbidden
            self.free_verified = not contains_packing(self.graph, k, r)
        return self.free_verified


def _certify(graph, claimed, k, r, spec, verify):
    cert = ConstructionCertificate(graph, claimed, (k, r), spec=spec)
    if verify is None:
        verify = graph.n_vertices <= EAGER_VERIFY_MAX_VERTICES
    if verify:
        cert.verify_free()
    return cert


def edgeless(sizes: Sequence[int]) -> MultipartiteGraph:
    return MultipartiteGraph(sizes)


def extremal_construction(spec: HostSpec, *, verify: bool | None = None) -> ConstructionCertificate:
    """((n_1-k+1)K_1 ∪ K_{k-1,n_2}) + K_{n_3,...,n_r} inside K_{n_1,...,n_r}.

    The K_{k-1,n_2} sits on the first k-1 vertices of the smallest part.
    Needs r >= 3 and 1 <= k <= n_1 after sorting.
    """
    if not spec.transversal:
        raise ParameterError("extremal_construction needs r equal to the number of parts")
    spec = spec.canonical()
    parts, k = spec.parts, spec.k
    if len(parts) < 3:
        raise ParameterError(f"need r >= 3, got r = {len(parts)}")
    if k > parts[0]:
        raise ParameterError(f"need k <= n_1, got k = {k} > n_1 = {parts[0]}")
    n1, n2 = parts[0], parts[1]
    # K_{k-1,n_2} first so its side occupies the first k-1 slots of V_1
    bipartite = complete_multipartite((k - 1, n2)) if k > 1 else edgeless((0, n2))
    low = disjoint_union(bipartite, edgeless((n1 - k + 1,)), ([0, 1], [0]))
    graph = join(low, complete_multipartite(parts[2:]))
    return _certify(graph, h_k(parts, k), k, len(parts), spec, verify)


def four_partite_triangle_construction(
    parts: Sequence[int], k: int, *, verify: bool | None = None
) -> ConstructionCertificate:
    """((n_1+n_2-k+1)K_1 ∪ K_{k-1,n_3}) + n_4 K_1, a 4-partite graph with no kK_3.

    The k-1 hub vertices are taken from V_1 first, then V_2. Parts are used
    in the order given.
    """
    parts = validate_parts(parts)
    if len(parts) != 4:
        raise ParameterError(f"need exactly 4 parts, got {len(parts)}")
    n1, n2, n3, n4 = parts
    if not 1 <= k <= n1 + n2 + 1:
        raise ParameterError(f"need 1 <= k <= n_1 + n_2 + 1, got k = {k}")
    hubs = k - 1
    from_v1 = min(hubs, n1)
    hub_vertices = [(0, i) for i in range(from_v1)] + [(1, i) for i in range(hubs - from_v1)]
    edges = [(h, (2, j)) for h in hub_vertices for j in range(n3)]
    edges += [((p, i), (3, j)) for p in range(3) for i in range(parts[p]) for j in range(n4)]
    graph = MultipartiteGraph.from_edges(parts, edges)
    claimed = (n1 + n2 + n3) * n4 + (k - 1) * n3
    return _certify(graph, claimed, k, 3, HostSpec(parts, k, 3), verify)


def maximality_probe(cert: ConstructionCertificate) -> list[tuple[tuple, bool]]:
    """For each host edge missing from the construction: does adding it create kK_r?"""
    k, r = cert.forbidden
    out = []
    for edge in cert.graph.missing_host_edges():
        out.append((edge, contains_packing(cert.graph.add_edges([edge]), k, r)))
    return out
