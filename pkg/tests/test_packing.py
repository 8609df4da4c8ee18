from math import prod

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turan._kernels import numba_kernels, python_kernels
from turan.constructions import extremal_construction
from turan.graph import HostSpec, MultipartiteGraph, complete_multipartite
from turan.identities import transversal_array, weight_of
from turan.packing import (
    CliquePacking,
    clique_array,
    contains_packing,
    count_cliques,
    enumerate_transversal_cliques,
    find_packing,
)

from .naive import cliques as naive_cliques
from .naive import has_packing, transversals


@st.composite
def small_graphs(draw, max_parts=4, max_size=3):
    r = draw(st.integers(2, max_parts))
    parts = tuple(draw(st.lists(st.integers(1, max_size), min_size=r, max_size=r)))
    host = complete_multipartite(parts)
    density = draw(st.sampled_from([0.3, 0.6, 0.8, 0.95]))
    flags = draw(st.lists(st.floats(0, 1), min_size=host.edge_count, max_size=host.edge_count))
    edges = [e for e, f in zip(host.edges(), flags) if f < density]
    return MultipartiteGraph.from_edges(parts, edges)


def _plain_edges(g):
    return [(tuple(u), tuple(v)) for u, v in g.edges()]


def test_enumeration_examples():
    assert len(list(enumerate_transversal_cliques(complete_multipartite((2, 2, 2))))) == 8
    cert = extremal_construction(HostSpec((2, 2, 2), 2))
    # exhaustive check over all 8 transversals of the construction
    expected = [s for s in transversals((2, 2, 2)) if weight_of(cert.graph, s) == 3]
    assert len(expected) == 4
    assert [tuple(map(tuple, c)) for c in enumerate_transversal_cliques(cert.graph)] == expected
    assert list(enumerate_transversal_cliques(MultipartiteGraph.empty((2, 2, 2)))) == []


def test_enumeration_is_lexicographic():
    found = [tuple(map(tuple, c)) for c in enumerate_transversal_cliques(complete_multipartite((2, 1, 3)))]
    assert found == sorted(found) == transversals((2, 1, 3))


def test_count_examples():
    assert count_cliques(complete_multipartite((2, 2, 2))) == 8
    g = complete_multipartite((1, 1, 1)).remove_edges([((0, 0), (1, 0))])
    assert count_cliques(g) == 0
    assert count_cliques(complete_multipartite((2, 2))) == 4


def test_find_packing_examples():
    p = find_packing(complete_multipartite((2, 2, 2)), 2)
    assert p is not None and p.k == 2 and p.verify(complete_multipartite((2, 2, 2)))
    assert find_packing(extremal_construction(HostSpec((2, 2, 2), 2)).graph, 2) is None
    cert = extremal_construction(HostSpec((3, 3, 3), 2))
    first = next(enumerate_transversal_cliques(cert.graph))
    assert find_packing(cert.graph, 1).cliques == (first,)


def test_contains_packing_examples():
    assert contains_packing(complete_multipartite((3, 3, 3)), 3)
    assert not contains_packing(complete_multipartite((2, 2, 2)), 3)
    assert not contains_packing(MultipartiteGraph.empty((2, 2, 2)), 1)
    assert not contains_packing(MultipartiteGraph.empty((2, 2)), 1)


@pytest.mark.parametrize("parts", [(1, 1), (2, 3), (2, 2, 2), (1, 2, 3), (2, 2, 2, 2), (3, 2, 1, 2, 1)])
def test_count_on_complete_host_is_product(parts):
    assert count_cliques(complete_multipartite(parts)) == prod(parts)


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_cliques_match_naive_enumeration(g):
    found = [tuple(map(tuple, c)) for c in enumerate_transversal_cliques(g)]
    assert found == naive_cliques(g.parts, _plain_edges(g), g.n_parts)
    for c in found:
        assert sorted(v[0] for v in c) == list(range(g.n_parts))


@settings(max_examples=80, deadline=None)
@given(small_graphs(), st.integers(1, 3))
def test_packing_sound_and_complete(g, k):
    cs = naive_cliques(g.parts, _plain_edges(g), g.n_parts)
    packing = find_packing(g, k)
    if packing is not None:
        assert packing.k == k and packing.verify(g)
    if len(cs) <= 12:
        assert (packing is not None) == has_packing(g.parts, _plain_edges(g), g.n_parts, k)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_parts=5), st.integers(1, 3), st.integers(2, 4))
def test_general_clique_size_matches_naive(g, k, r):
    if r > g.n_parts:
        return
    found = [tuple(map(tuple, c)) for c in enumerate_transversal_cliques(g, r)]
    assert found == naive_cliques(g.parts, _plain_edges(g), r)
    if len(found) <= 12:
        assert contains_packing(g, k, r) == has_packing(g.parts, _plain_edges(g), r, k)


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.integers(1, 3), st.data())
def test_packing_monotone(g, k, data):
    if not contains_packing(g, k):
        return
    missing = g.missing_host_edges()
    if missing:
        edge = data.draw(st.sampled_from(missing))
        assert contains_packing(g.add_edges([edge]), k)
    if k > 1:
        assert contains_packing(g, k - 1)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_clique_free_iff_all_weights_below_max(g):
    r = g.n_parts
    ts = transversal_array(g)
    weights = [weight_of(g, [g.vertex(v) for v in row]) for row in ts]
    assert (count_cliques(g) == 0) == all(w <= r * (r - 1) // 2 - 1 for w in weights)


@pytest.mark.skipif(numba_kernels is None, reason="numba not installed")
@settings(max_examples=60, deadline=None)
@given(small_graphs(max_parts=5), st.integers(1, 3))
def test_backends_agree(g, k):
    r = g.n_parts
    a = numba_kernels.list_cliques(g.adj, r)
    b = python_kernels.list_cliques(g.adj, r)
    c = python_kernels.list_cliques_dfs(g.adj, r)
    assert np.array_equal(a, b) and np.array_equal(a, c)
    assert numba_kernels.count_cliques(g.adj, r) == python_kernels.count_cliques(g.adj, r) == len(a)
    pa = numba_kernels.find_packing(a, g.part_of, r, k, True)
    pb = python_kernels.find_packing(a, g.part_of, r, k, True)
    assert np.array_equal(pa, pb)


def test_packing_text_round_trip():
    g = complete_multipartite((3, 3, 3))
    p = find_packing(g, 3)
    text = p.to_text()
    assert len(text.splitlines()) == 3
    assert CliquePacking.from_text(text) == p
    assert CliquePacking.from_text(text).verify(g)


def test_verify_rejects_bad_packings():
    g = complete_multipartite((2, 2, 2))
    c = tuple(next(enumerate_transversal_cliques(g)))
    assert not CliquePacking((c, c)).verify(g)
    h = g.remove_edges([(c[0], c[1])])
    assert not CliquePacking((c,)).verify(h)


def test_larger_host_detection():
    cert = extremal_construction(HostSpec((5, 5, 5, 5, 5), 5))
    assert len(clique_array(cert.graph)) > 0
    assert not contains_packing(cert.graph, 5)
    assert contains_packing(cert.graph, 4)
