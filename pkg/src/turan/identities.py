"""Transversal counting identities and inequalities as executable checks.

The left-hand sides are computed by brute enumeration over all transversals
(one vertex per part); the right-hand sides by closed forms over the
per-pair edge counts. Agreement is a theorem, so a mismatch is a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import NamedTuple

import numpy as np

from .errors import BudgetError, ParameterError, PreconditionError, RegimeError
from .graph import MultipartiteGraph, pair_edge_matrix
from .packing import count_cliques

MAX_TRANSVERSALS = 1_000_000


class IdentityCheck(NamedTuple):
    lhs: int
    rhs: int
    equal: bool

    def line(self, name: str) -> str:
        return f"{name} lhs={self.lhs} rhs={self.rhs} {'PASS' if self.equal else 'FAIL'}"


class BoundCheck(NamedTuple):
    q: int
    bound: int
    holds: bool

    def line(self, name: str) -> str:
        return f"{name} q={self.q} bound={self.bound} {'PASS' if self.holds else 'FAIL'}"


@dataclass(frozen=True)
class WeightSummary:
    total_weight: int
    clique_count_q: int
    pair_counts: np.ndarray
    transversal_count: int


def _require_nonempty(g: MultipartiteGraph) -> None:
    if any(n == 0 for n in g.parts):
        raise ParameterError(f"every part must be non-empty, got {g.parts}")
    if g.n_parts < 2:
        raise ParameterError("need at least two parts")


def transversal_array(g: MultipartiteGraph) -> np.ndarray:
    """All transversals as an ``(prod n_i, r)`` array of flat ids, lexicographic."""
    _require_nonempty(g)
    total = prod(g.parts)
    if total > MAX_TRANSVERSALS:
        raise BudgetError(f"{total} transversals exceeds the budget of {MAX_TRANSVERSALS}")
    grids = np.meshgrid(*(np.arange(n) + int(g.offsets[i]) for i, n in enumerate(g.parts)), indexing="ij")
    return np.stack([x.ravel() for x in grids], axis=1).astype(np.int64)


def _weights(g: MultipartiteGraph, ts: np.ndarray) -> np.ndarray:
    r = ts.shape[1]
    w = np.zeros(len(ts), dtype=np.int64)
    for i in range(r):
        for j in range(i + 1, r):
            w += g.adj[ts[:, i], ts[:, j]]
    return w


def weight_of(g: MultipartiteGraph, s) -> int:
    """Number of edges induced by the transversal ``s``."""
    s = tuple(s)
    if len(s) != g.n_parts or sorted(v[0] for v in s) != list(range(g.n_parts)):
        raise ParameterError("weight_of needs exactly one vertex from each part")
    flat = [g.flat(v) for v in s]
    return int(g.adj[np.ix_(flat, flat)].sum()) // 2


def weight_identity_check(g: MultipartiteGraph) -> IdentityCheck:
    """sum_S w(S) == sum_{i<j} |E(V_i V_j)| prod_{l != i,j} n_l."""
    ts = transversal_array(g)
    lhs = int(_weights(g, ts).sum())
    pairs = pair_edge_matrix(g)
    r = g.n_parts
    rhs = 0
    for i in range(r):
        for j in range(i + 1, r):
            rhs += int(pairs[i, j]) * prod(g.parts[l] for l in range(r) if l not in (i, j))
    return IdentityCheck(lhs, rhs, lhs == rhs)


def deletion_identity_check(g: MultipartiteGraph) -> IdentityCheck:
    """sum_S |E(G \\ S)| == sum_{i<j} |E(V_i V_j)| (n_i-1)(n_j-1) prod_{l != i,j} n_l."""
    ts = transversal_array(g)
    edges = g.edge_array()
    lhs = 0
    if len(edges):
        # chunked so the (chunk, m) membership matrix stays small
        for start in range(0, len(ts), 4096):
            chunk = ts[start : start + 4096]
            hit_u = (chunk[:, :, None] == edges[None, None, :, 0]).any(axis=1)
            hit_v = (chunk[:, :, None] == edges[None, None, :, 1]).any(axis=1)
            lhs += int((~hit_u & ~hit_v).sum())
    pairs = pair_edge_matrix(g)
    n = g.parts
    r = g.n_parts
    rhs = 0
    for i in range(r):
        for j in range(i + 1, r):
            rest = prod(n[l] for l in range(r) if l not in (i, j))
            rhs += int(pairs[i, j]) * (n[i] - 1) * (n[j] - 1) * rest
    return IdentityCheck(lhs, rhs, lhs == rhs)


def _almost_balanced(g: MultipartiteGraph) -> tuple[int, int, int]:
    n = g.parts
    if g.n_parts < 3 or len(set(n[1:])) != 1 or not 1 <= n[0] <= n[1]:
        raise RegimeError(f"need parts n_1 <= n_2 = ... = n_r with r >= 3, got {n}")
    return n[0], n[1], g.n_parts


def clique_count_lower_bound_check(g: MultipartiteGraph) -> BoundCheck:
    """q >= sum_j |E(V_1V_j)| n_2^{r-2} + sum_{1<i<j} |E(V_iV_j)| n_1 n_2^{r-3} - n_1 n_2^{r-1}(C(r,2)-1)."""
    n1, n2, r = _almost_balanced(g)
    pairs = pair_edge_matrix(g)
    first = sum(int(pairs[0, j]) for j in range(1, r)) * n2 ** (r - 2)
    rest = sum(int(pairs[i, j]) for i in range(1, r) for j in range(i + 1, r)) * n1 * n2 ** (r - 3)
    bound = first + rest - n1 * n2 ** (r - 1) * (comb(r, 2) - 1)
    q = count_cliques(g)
    return BoundCheck(q, bound, q >= bound)


def kr_free_weight_bound_check(g: MultipartiteGraph) -> bool:
    """For K_r-free almost-balanced ``g``: sum_S w(S) <= (C(r,2)-1) n_1 n_2^{r-1}."""
    n1, n2, r = _almost_balanced(g)
    if count_cliques(g) > 0:
        raise PreconditionError("graph contains a K_r")
    total = int(_weights(g, transversal_array(g)).sum())
    return total <= (comb(r, 2) - 1) * n1 * n2 ** (r - 1)


def weight_summary(g: MultipartiteGraph) -> WeightSummary:
    ts = transversal_array(g)
    return WeightSummary(
        total_weight=int(_weights(g, ts).sum()),
        clique_count_q=count_cliques(g),
        pair_counts=pair_edge_matrix(g),
        transversal_count=len(ts),
    )
