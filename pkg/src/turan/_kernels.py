"""Hot inner loops: clique enumeration and disjoint-clique packing search.

Each kernel is plain Python restricted to the numba nopython subset. When
numba is importable and ``TURAN_NUMBA`` is not set to ``0``, the public
names below are the ``@njit`` compiled versions; otherwise the pure
Python/numpy paths are used. Both are always reachable through
``python_kernels`` / ``numba_kernels`` for benchmarking and cross-checks.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_FLAG = os.environ.get("TURAN_NUMBA", "1").strip().lower()
NUMBA_ENABLED = numba is not None and _FLAG not in ("0", "false", "no", "off")


# -- clique enumeration ---------------------------------------------------


def _clique_dfs(adj, r, out):
    """Depth-first enumeration of r-cliques with increasing vertex ids.

    Writes up to ``out.shape[0]`` cliques into ``out`` (lexicographic order)
    and returns the total number found.
    """
    n = adj.shape[0]
    if r < 1 or n < r:
        return 0
    cand = np.zeros((r, n), dtype=np.bool_)
    chosen = np.empty(r, dtype=np.int64)
    nxt = np.zeros(r, dtype=np.int64)
    for j in range(n):
        cand[0, j] = True
    count = 0
    depth = 0
    while depth >= 0:
        i = nxt[depth]
        while i < n and not cand[depth, i]:
            i += 1
        if i >= n:
            depth -= 1
            continue
        nxt[depth] = i + 1
        chosen[depth] = i
        if depth == r - 1:
            if count < out.shape[0]:
                for t in range(r):
                    out[count, t] = chosen[t]
            count += 1
            continue
        avail = 0
        for j in range(i + 1, n):
            c = cand[depth, j] and adj[i, j]
            cand[depth + 1, j] = c
            if c:
                avail += 1
        # candidates below i+1 are never read at depth+1
        if avail >= r - depth - 1:
            depth += 1
            nxt[depth] = i + 1
    return count


def _list_cliques_numpy(adj, r):
    """Frontier expansion with boolean matrix ops; same output as the DFS."""
    n = adj.shape[0]
    ids = np.arange(n)
    frontier = ids[:, None].astype(np.int64)
    common = adj & (ids[None, :] > ids[:, None])
    for _ in range(r - 1):
        rows, cols = np.nonzero(common)
        frontier = np.hstack([frontier[rows], cols[:, None].astype(np.int64)])
        common = common[rows] & adj[cols] & (ids[None, :] > cols[:, None])
    if r < 1:
        return np.empty((0, 0), dtype=np.int64)
    return frontier.reshape(-1, r)


def _count_cliques_numpy(adj, r):
    return int(_list_cliques_numpy(adj, r).shape[0])


# -- packing search ---------------------------------------------------------


def _find_packing(cliques, part_of, n_parts, k, transversal):
    """Indices of ``k`` pairwise disjoint rows of ``cliques``, or an empty array.

    Branches on the live vertex covered by the fewest live cliques: either
    one of its cliques joins the packing (tried in index order) or the
    vertex is left unused. A level is pruned when fewer than ``need``
    cliques are live, or when some part (transversal mode) or the whole
    vertex set (general mode) cannot supply ``need`` disjoint cliques.
    """
    m, r = cliques.shape
    n = part_of.shape[0]
    if m < k:
        return np.empty(0, dtype=np.int64)
    if k == 1:
        out = np.zeros(1, dtype=np.int64)
        return out
    # CSR vertex -> clique incidence, clique indices ascending
    ptr = np.zeros(n + 1, dtype=np.int64)
    for c in range(m):
        for t in range(r):
            ptr[cliques[c, t] + 1] += 1
    for v in range(n):
        ptr[v + 1] += ptr[v]
    fill = ptr[:-1].copy()
    idx = np.empty(m * r, dtype=np.int64)
    for c in range(m):
        for t in range(r):
            v = cliques[c, t]
            idx[fill[v]] = c
            fill[v] += 1
    levels = n + 2
    alive = np.zeros((levels, m), dtype=np.bool_)
    need = np.zeros(levels, dtype=np.int64)
    best = np.zeros(levels, dtype=np.int64)
    pos = np.zeros(levels, dtype=np.int64)
    pick = np.full(levels, -1, dtype=np.int64)
    cnt = np.zeros(n, dtype=np.int64)
    per_part = np.zeros(n_parts, dtype=np.int64)
    for c in range(m):
        alive[0, c] = True
    need[0] = k
    level = 0
    fresh = True
    while level >= 0:
        if fresh:
            fresh = False
            if need[level] == 0:
                out = np.empty(k, dtype=np.int64)
                j = 0
                for lv in range(level):
                    if pick[lv] >= 0:
                        out[j] = pick[lv]
                        j += 1
                return np.sort(out)
            cnt[:] = 0
            n_alive = 0
            for c in range(m):
                if alive[level, c]:
                    n_alive += 1
                    for t in range(r):
                        cnt[cliques[c, t]] += 1
            ok = n_alive >= need[level]
            if ok and transversal:
                per_part[:] = 0
                for v in range(n):
                    if cnt[v] > 0:
                        per_part[part_of[v]] += 1
                for p in range(n_parts):
                    if per_part[p] < need[level]:
                        ok = False
            elif ok:
                covered = 0
                for v in range(n):
                    if cnt[v] > 0:
                        covered += 1
                ok = covered >= need[level] * r
            if not ok:
                level -= 1
                continue
            b = -1
            for v in range(n):
                if cnt[v] > 0 and (b < 0 or cnt[v] < cnt[b]):
                    b = v
            best[level] = b
            pos[level] = ptr[b]
        b = best[level]
        end = ptr[b + 1]
        moved = False
        while pos[level] < end:
            c = idx[pos[level]]
            pos[level] += 1
            if alive[level, c]:
                for c2 in range(m):
                    alive[level + 1, c2] = alive[level, c2]
                for t in range(r):
                    u = cliques[c, t]
                    for e in range(ptr[u], ptr[u + 1]):
                        alive[level + 1, idx[e]] = False
                need[level + 1] = need[level] - 1
                pick[level] = c
                level += 1
                fresh = True
                moved = True
                break
        if moved:
            continue
        if pos[level] == end:
            pos[level] = end + 1
            for c2 in range(m):
                alive[level + 1, c2] = alive[level, c2]
            for e in range(ptr[b], end):
                alive[level + 1, idx[e]] = False
            need[level + 1] = need[level]
            pick[level] = -1
            level += 1
            fresh = True
            continue
        level -= 1
    return np.empty(0, dtype=np.int64)


def _namespace(name, clique_dfs, find_packing, list_cliques=None):
    def count_cliques(adj, r):
        return int(clique_dfs(adj, r, np.empty((0, r), dtype=np.int64)))

    def list_cliques_dfs(adj, r):
        out = np.empty((count_cliques(adj, r), r), dtype=np.int64)
        clique_dfs(adj, r, out)
        return out

    return SimpleNamespace(
        name=name,
        list_cliques=list_cliques or list_cliques_dfs,
        count_cliques=count_cliques,
        list_cliques_dfs=list_cliques_dfs,
        find_packing=find_packing,
    )


python_kernels = _namespace("python", _clique_dfs, _find_packing, _list_cliques_numpy)
python_kernels.count_cliques = _count_cliques_numpy

if numba is not None:
    _jit = numba.njit(cache=True, nogil=True)
    numba_kernels = _namespace("numba", _jit(_clique_dfs), _jit(_find_packing))
else:  # pragma: no cover
    numba_kernels = None

active = numba_kernels if NUMBA_ENABLED else python_kernels


def get_kernels(backend: str | None = None) -> SimpleNamespace:
    """Kernel namespace for ``backend`` ("numba" or "python"); default is the active one."""
    if backend is None:
        return active
    if backend == "python":
        return python_kernels
    if backend == "numba":
        if numba_kernels is None:
            raise RuntimeError("numba is not installed")
        return numba_kernels
    raise ValueError(f"unknown backend {backend!r}")
