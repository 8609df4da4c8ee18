"""Exact ex(K_{n_1..n_l}, kK_r) on small hosts by branch-and-bound.

The search works top-down. A node is a subgraph G of the host together
with a set F of edges it has committed to keep. If G contains a forbidden
packing P, every feasible subgraph of G must miss one of P's edges, so the
node branches on deleting each edge of P not in F. Child i deletes the i-th
such edge and commits to the earlier ones, which makes the children's
search spaces disjoint. A node is pruned once it cannot beat the
incumbent.

Nodes that are equal up to permuting vertices inside parts are skipped
through a bounded seen-set keyed on a relabelled copy of (G, F).
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .constructions import extremal_construction, four_partite_triangle_construction
from .errors import BudgetExhausted
from .formulas import FormulaResult, Validity, formula_for
from .graph import HostSpec, MultipartiteGraph, complete_multipartite
from .packing import contains_packing, packing_rows

DEFAULT_MAX_NODES = 10_000_000
DEFAULT_MAX_SECONDS = 60.0
SEEN_CAPACITY = 2_000_000


@dataclass(frozen=True)
class Budget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS


@dataclass
class ExtremalResult:
    spec: HostSpec
    max_edges: int
    witness: MultipartiteGraph
    nodes_explored: int = 0
    elapsed: float = 0.0
    seed_edges: int | None = None
    cached: bool = field(default=False, compare=False)


def seed_construction(spec: HostSpec) -> MultipartiteGraph | None:
    """Best known kK_r-free subgraph of the (sorted) host, or None."""
    parts, k, r = spec.parts, spec.k, spec.r
    if spec.transversal and r >= 3 and k <= parts[0]:
        return extremal_construction(spec, verify=False).graph
    if r == 2 and k - 1 <= parts[0]:
        # k-1 vertices of the smallest part joined to every other part
        g = MultipartiteGraph(parts)
        adj = np.zeros_like(g.adj)
        hubs = np.arange(k - 1)
        adj[hubs, parts[0]:] = True
        adj[parts[0]:, hubs] = True
        return MultipartiteGraph(parts, adj)
    if r == 3 and len(parts) == 4 and k <= parts[0] + parts[1] + 1:
        return four_partite_triangle_construction(parts, k, verify=False).graph
    return None


def _canonical_key(adj: np.ndarray, fixed: np.ndarray, part_of: np.ndarray) -> bytes:
    """Bytes of (adj, fixed) after sorting vertices inside each part by invariants.

    Equal keys imply the two nodes are related by a part-preserving
    relabelling, which is all soundness needs.
    """
    deg = adj.sum(axis=1)
    fdeg = fixed.sum(axis=1)
    nsum = adj.astype(np.int64) @ deg
    perm = np.lexsort((np.arange(len(deg)), nsum, fdeg, deg, part_of))
    a = adj[np.ix_(perm, perm)]
    f = fixed[np.ix_(perm, perm)]
    iu = np.triu_indices(len(deg), 1)
    return np.packbits(a[iu]).tobytes() + np.packbits(f[iu]).tobytes()


class _Search:
    def __init__(self, spec: HostSpec, budget: Budget, backend, symmetry: bool):
        self.spec = spec
        self.host = complete_multipartite(spec.parts)
        self.part_of = np.ascontiguousarray(self.host.part_of)
        self.budget = budget
        self.backend = backend
        self.symmetry = symmetry
        self.lock = threading.Lock()
        self.best = -1
        self.best_adj: np.ndarray | None = None
        self.nodes = 0
        self.seen: set[bytes] = set()
        self.start = time.perf_counter()
        self.aborted = False
        self.open_upper = 0

    def offer(self, count: int, adj: np.ndarray) -> None:
        with self.lock:
            if count > self.best:
                self.best = count
                self.best_adj = adj.copy()

    def _tick(self) -> bool:
        with self.lock:
            self.nodes += 1
            if self.nodes > self.budget.max_nodes:
                self.aborted = True
            elif (self.nodes & 255) == 0 and time.perf_counter() - self.start > self.budget.max_seconds:
                self.aborted = True
            return not self.aborted

    def _fresh(self, adj, fixed) -> bool:
        if not self.symmetry:
            return True
        key = _canonical_key(adj, fixed, self.part_of)
        with self.lock:
            if key in self.seen:
                return False
            if len(self.seen) < SEEN_CAPACITY:
                self.seen.add(key)
        return True

    def expand(self, node):
        """Process one node; return its children (possibly empty)."""
        adj, fixed, count = node
        if count <= self.best:
            return []
        spec = self.spec
        rows = packing_rows(adj, self.part_of, len(spec.parts), spec.k, spec.r, backend=self.backend)
        if rows is None:
            self.offer(count, adj)
            return []
        if count - 1 <= self.best:
            return []
        cands = []
        for row in rows:
            for a in range(spec.r):
                for b in range(a + 1, spec.r):
                    u, v = int(row[a]), int(row[b])
                    if not fixed[u, v]:
                        cands.append((u, v))
        cands.sort()
        children = []
        kept = fixed
        for u, v in cands:
            child = adj.copy()
            child[u, v] = child[v, u] = False
            if self._fresh(child, kept):
                children.append((child, kept, count - 1))
            kept = kept.copy()
            kept[u, v] = kept[v, u] = True
        return children

    def dfs(self, roots) -> None:
        stack = list(reversed(roots))
        while stack:
            if not self._tick():
                with self.lock:
                    self.open_upper = max(self.open_upper, max(n[2] for n in stack))
                return
            node = stack.pop()
            stack.extend(reversed(self.expand(node)))


def _run(spec: HostSpec, budget: Budget | None, jobs: int, seed: bool, symmetry: bool, backend) -> ExtremalResult:
    budget = budget or Budget()
    search = _Search(spec, budget, backend, symmetry)
    seed_edges = None
    if seed:
        g = seed_construction(spec)
        if g is not None and not contains_packing(g, spec.k, spec.r, backend=backend):
            seed_edges = g.edge_count
            search.offer(g.edge_count, np.array(g.adj))
    host = search.host
    root = (np.array(host.adj), np.zeros_like(host.adj), host.edge_count)
    if jobs <= 1:
        search.dfs([root])
    else:
        # breadth-first split until there is enough work to share
        frontier = [root]
        while frontier and len(frontier) < 4 * jobs:
            nxt = []
            for node in frontier:
                if not search._tick():
                    break
                nxt.extend(search.expand(node))
            frontier = nxt
            if search.aborted:
                break
        if not search.aborted and frontier:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                list(pool.map(lambda n: search.dfs([n]), frontier))
        elif frontier:
            search.open_upper = max(n[2] for n in frontier)
    elapsed = time.perf_counter() - search.start
    witness = None if search.best_adj is None else MultipartiteGraph(spec.parts, search.best_adj)
    if search.aborted:
        raise BudgetExhausted(
            f"budget exhausted after {search.nodes} nodes for {spec}",
            lower=search.best,
            upper=max(search.best, search.open_upper),
            witness=witness,
            nodes=search.nodes,
            elapsed=elapsed,
        )
    return ExtremalResult(spec, search.best, witness, search.nodes, elapsed, seed_edges)


def extremal_number(
    spec: HostSpec,
    budget: Budget | None = None,
    *,
    jobs: int = 1,
    seed: bool = True,
    symmetry: bool = True,
    backend: str | None = None,
) -> ExtremalResult:
    """Exact maximum number of edges of a kK_r-free subgraph of the host.

    Parts are sorted first; the witness lives on the sorted host. Raises
    BudgetExhausted with the bounds reached if the budget runs out.
    """
    return _run(spec.canonical(), budget, jobs, seed, symmetry, backend)


def extremal_number_general(
    parts: Iterable[int],
    r: int,
    k: int,
    budget: Budget | None = None,
    **kwargs,
) -> ExtremalResult:
    """As :func:`extremal_number` with r possibly below the number of parts."""
    return extremal_number(HostSpec(tuple(parts), k, r), budget, **kwargs)


@dataclass
class GridRow:
    spec: HostSpec
    formula: FormulaResult | None
    oracle: int | None
    match: bool | None
    nodes: int = 0
    elapsed: float = 0.0
    error: str = ""
    bounds: tuple[int, int] | None = None
    witness: MultipartiteGraph | None = None


def compare(formula: FormulaResult | None, oracle: int) -> bool | None:
    """Exact formulas must equal the oracle; lower bounds must not exceed it."""
    if formula is None:
        return None
    if formula.validity is Validity.LOWER_BOUND:
        return oracle >= formula.value
    return oracle == formula.value


def verify_formula_grid(
    grid: Iterable[HostSpec],
    budget: Budget | None = None,
    *,
    cache=None,
    recompute: bool = False,
    **kwargs,
) -> list[GridRow]:
    """Run the oracle on every grid point and compare with the formula."""
    rows = []
    for spec in grid:
        spec = spec.canonical()
        formula = formula_for(spec)
        try:
            result = solve(spec, budget, cache=cache, recompute=recompute, **kwargs)
        except BudgetExhausted as exc:
            rows.append(GridRow(spec, formula, None, None, exc.nodes, exc.elapsed, str(exc), (exc.lower, exc.upper)))
            continue
        rows.append(
            GridRow(
                spec,
                formula,
                result.max_edges,
                compare(formula, result.max_edges),
                result.nodes_explored,
                result.elapsed,
                witness=result.witness,
            )
        )
    return rows


def solve(spec: HostSpec, budget: Budget | None = None, *, cache=None, recompute: bool = False, **kwargs) -> ExtremalResult:
    """:func:`extremal_number` behind an optional result cache."""
    spec = spec.canonical()
    if cache is not None and not recompute:
        hit = cache.get(spec)
        if hit is not None:
            return hit
    result = extremal_number(spec, budget, **kwargs)
    if cache is not None:
        cache.put(result)
    return result


def theorem_grid(r: int, max_part: int) -> list[HostSpec]:
    """Sorted part tuples with entries in [1, max_part] and every k <= n_1."""
    out = []

    def rec(prefix, lo):
        if len(prefix) == r:
            out.extend(HostSpec(tuple(prefix), k) for k in range(1, prefix[0] + 1))
            return
        for n in range(lo, max_part + 1):
            rec(prefix + [n], n)

    rec([], 1)
    return out
