"""Seeded verification suites: identities, inequalities, formula-vs-oracle grids.

Every suite returns a :class:`Report` whose text depends only on the
inputs (seed, sample count, grid), never on timing or scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import HostSpec, MultipartiteGraph, complete_multipartite
from .identities import (
    clique_count_lower_bound_check,
    deletion_identity_check,
    kr_free_weight_bound_check,
    weight_identity_check,
)
from .oracle import theorem_grid, verify_formula_grid
from .packing import clique_array, contains_packing


@dataclass
class Report:
    lines: list[str] = field(default_factory=list)
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, line: str, dump: str = "") -> None:
        self.checks += 1
        self.lines.append(line)
        if not ok:
            self.failures.append(line + ("\n" + dump if dump else ""))

    def extend(self, other: Report) -> None:
        self.lines += other.lines
        self.checks += other.checks
        self.failures += other.failures

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return f"all {self.checks} checks passed"
        return f"{len(self.failures)} of {self.checks} checks FAILED"

    def text(self) -> str:
        return "\n".join(self.lines + [self.summary()]) + "\n"


def random_subgraph(parts, rng: np.random.Generator, density: float | None = None) -> MultipartiteGraph:
    """Keep each host edge independently with probability ``density`` (random if None)."""
    host = complete_multipartite(parts)
    p = rng.random() if density is None else density
    n = host.n_vertices
    keep = np.triu(rng.random((n, n)) < p, 1) & host.adj
    return MultipartiteGraph(host.parts, keep | keep.T)


def make_kr_free(g: MultipartiteGraph, rng: np.random.Generator) -> MultipartiteGraph:
    """Delete one random edge from the first remaining transversal clique until none is left."""
    adj = np.array(g.adj)
    r = g.n_parts
    while True:
        cliques = clique_array(MultipartiteGraph(g.parts, adj))
        if len(cliques) == 0:
            return MultipartiteGraph(g.parts, adj)
        a, b = sorted(rng.choice(r, size=2, replace=False))
        u, v = cliques[0][a], cliques[0][b]
        adj[u, v] = adj[v, u] = False


def _fmt_parts(parts) -> str:
    return ",".join(map(str, parts))


def identity_suite(seed: int = 0, samples: int = 500) -> Report:
    """Weight and deletion identities on random subgraphs of hosts up to (4,4,4) and (3,3,3,3)."""
    rng = np.random.default_rng(seed)
    rep = Report()
    for i in range(samples):
        r, cap = (3, 4) if i % 2 == 0 else (4, 3)
        parts = tuple(int(x) for x in rng.integers(1, cap + 1, size=r))
        g = random_subgraph(parts, rng)
        tag = f"#{i} parts={_fmt_parts(parts)} edges={g.edge_count}"
        w = weight_identity_check(g)
        rep.record(w.equal, w.line(f"weight {tag}"), g.to_text())
        d = deletion_identity_check(g)
        rep.record(d.equal, d.line(f"deletion {tag}"), g.to_text())
    return rep


def _almost_balanced_parts(rng: np.random.Generator, i: int) -> tuple[int, ...]:
    r, cap = (3, 4) if i % 2 == 0 else (4, 3)
    n2 = int(rng.integers(1, cap + 1))
    n1 = int(rng.integers(1, n2 + 1))
    return (n1,) + (n2,) * (r - 1)


def inequality_suite(seed: int = 0, samples: int = 200) -> Report:
    """Clique-count lower bound and K_r-free weight bound on almost-balanced subgraphs."""
    rng = np.random.default_rng(seed)
    rep = Report()
    for i in range(samples):
        parts = _almost_balanced_parts(rng, i)
        g = random_subgraph(parts, rng)
        b = clique_count_lower_bound_check(g)
        rep.record(b.holds, b.line(f"clique-bound #{i} parts={_fmt_parts(parts)} edges={g.edge_count}"), g.to_text())
    for i in range(samples):
        parts = _almost_balanced_parts(rng, i)
        g = make_kr_free(random_subgraph(parts, rng, density=0.5 + 0.5 * rng.random()), rng)
        ok = kr_free_weight_bound_check(g)
        rep.record(
            ok,
            f"kr-free-weight #{i} parts={_fmt_parts(parts)} edges={g.edge_count} {'PASS' if ok else 'FAIL'}",
            g.to_text(),
        )
    return rep


def _witness_ok(row) -> bool:
    w = row.witness
    if w is None:
        return False
    spec = row.spec
    return (
        w.parts == spec.parts
        and w.edge_count == row.oracle
        and not contains_packing(w, spec.k, spec.r)
    )


def grid_report(grid, budget=None, **kwargs) -> tuple[Report, list]:
    """Formula-vs-oracle lines for ``grid``; budget failures count as failed checks."""
    rep = Report()
    rows = verify_formula_grid(grid, budget, **kwargs)
    for row in rows:
        spec = row.spec
        head = f"formula parts={_fmt_parts(spec.parts)} r={spec.r} k={spec.k}"
        formula = "none" if row.formula is None else f"{row.formula.value}[{row.formula.validity}]"
        if row.error:
            rep.record(False, f"{head} formula={formula} oracle=budget[{row.bounds[0]},{row.bounds[1]}] FAIL")
            continue
        ok = row.match is not False and _witness_ok(row)
        line = f"{head} formula={formula} oracle={row.oracle} {'PASS' if ok else 'FAIL'}"
        dump = f"spec: {spec}\n" + (row.witness.to_text() if row.witness is not None else "")
        rep.record(ok, line, dump)
    return rep, rows


def bipartite_grid(max_part: int = 4) -> list[HostSpec]:
    return [
        HostSpec((m, n), k)
        for m in range(1, max_part + 1)
        for n in range(1, m + 1)
        for k in range(1, min(m, n) + 1)
    ]


def matching_grid(max_part: int = 3, n_parts: int = 3) -> list[HostSpec]:
    return [HostSpec(s.parts, s.k, 2) for s in theorem_grid(n_parts, max_part)]
