from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turan.constructions import extremal_construction
from turan.errors import BudgetError, ParameterError, PreconditionError, RegimeError
from turan.graph import HostSpec, MultipartiteGraph, complete_multipartite, pair_edge_count
from turan.identities import (
    clique_count_lower_bound_check,
    deletion_identity_check,
    kr_free_weight_bound_check,
    transversal_array,
    weight_identity_check,
    weight_of,
    weight_summary,
)
from turan.packing import enumerate_transversal_cliques
from turan.verify import make_kr_free, random_subgraph

from .naive import transversals


def _naive_sums(g):
    """Direct double loop over transversals; independent of the vectorised path."""
    edges = {frozenset((tuple(u), tuple(v))) for u, v in g.edges()}
    total_w = total_del = 0
    for s in transversals(g.parts):
        s_set = set(s)
        total_w += sum(1 for e in edges if e <= s_set)
        total_del += sum(1 for e in edges if not (e & s_set))
    return total_w, total_del


@st.composite
def subgraphs(draw, max_parts=4, max_size=4, balanced=False):
    r = draw(st.integers(3 if balanced else 2, max_parts))
    if balanced:
        n2 = draw(st.integers(1, max_size))
        parts = (draw(st.integers(1, n2)),) + (n2,) * (r - 1)
    else:
        parts = tuple(draw(st.lists(st.integers(1, max_size), min_size=r, max_size=r)))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_subgraph(parts, np.random.default_rng(seed))


def test_weight_of_examples():
    host = complete_multipartite((2, 2, 2))
    assert weight_of(host, [(0, 1), (1, 0), (2, 1)]) == 3
    assert weight_of(MultipartiteGraph.empty((2, 2, 2)), [(0, 0), (1, 0), (2, 0)]) == 0
    g = extremal_construction(HostSpec((2, 2, 2), 1)).graph
    assert {weight_of(g, s) for s in transversals((2, 2, 2))} == {2}
    with pytest.raises(ParameterError):
        weight_of(host, [(0, 0), (0, 1), (2, 0)])


def test_weight_identity_examples():
    assert tuple(weight_identity_check(complete_multipartite((2, 2, 2)))) == (24, 24, True)
    assert tuple(weight_identity_check(MultipartiteGraph.empty((3, 3, 3)))) == (0, 0, True)
    g = random_subgraph((2, 3, 2), np.random.default_rng(5), density=0.5)
    res = weight_identity_check(g)
    assert res.equal and res.lhs == _naive_sums(g)[0]


def test_deletion_identity_examples():
    assert tuple(deletion_identity_check(complete_multipartite((2, 2, 2)))) == (24, 24, True)
    assert tuple(deletion_identity_check(complete_multipartite((1, 1, 1)))) == (0, 0, True)
    g = random_subgraph((2, 2, 3), np.random.default_rng(11))
    res = deletion_identity_check(g)
    assert res.equal and res.lhs == _naive_sums(g)[1]


def test_empty_parts_rejected():
    g = MultipartiteGraph.empty((2, 0, 1))
    with pytest.raises(ParameterError):
        weight_identity_check(g)
    with pytest.raises(ParameterError):
        deletion_identity_check(g)


def test_transversal_budget():
    g = MultipartiteGraph.empty((101, 100, 100))
    with pytest.raises(BudgetError):
        transversal_array(g)


def test_clique_bound_examples():
    assert tuple(clique_count_lower_bound_check(complete_multipartite((2, 2, 2)))) == (8, 8, True)
    q, bound, holds = clique_count_lower_bound_check(MultipartiteGraph.empty((2, 2, 2)))
    assert q == 0 and bound < 0 and holds
    q, bound, holds = clique_count_lower_bound_check(extremal_construction(HostSpec((2, 2, 2), 2)).graph)
    assert q == 4 and bound <= 4 and holds


def test_clique_bound_regime():
    with pytest.raises(RegimeError):
        clique_count_lower_bound_check(complete_multipartite((2, 2, 3)))
    with pytest.raises(RegimeError):
        clique_count_lower_bound_check(complete_multipartite((3, 2, 2)))


def test_kr_free_bound_examples():
    assert kr_free_weight_bound_check(extremal_construction(HostSpec((2, 2, 2), 1)).graph)
    assert kr_free_weight_bound_check(MultipartiteGraph.empty((3, 3, 3)))
    g = complete_multipartite((2, 2, 2)).remove_edges([((0, i), (1, j)) for i in range(2) for j in range(2)])
    assert kr_free_weight_bound_check(g)
    with pytest.raises(PreconditionError):
        kr_free_weight_bound_check(complete_multipartite((2, 2, 2)))


@settings(max_examples=80, deadline=None)
@given(subgraphs())
def test_identities_match_naive_enumeration(g):
    w, d = weight_identity_check(g), deletion_identity_check(g)
    assert w.equal and d.equal
    assert (w.lhs, d.lhs) == _naive_sums(g)


@settings(max_examples=60, deadline=None)
@given(subgraphs(max_size=4, balanced=True))
def test_balanced_specialisations(g):
    """On n_2 = ... = n_r hosts both identities take the shapes used in the upper-bound argument."""
    n1, n2, r = g.parts[0], g.parts[1], g.n_parts
    e1 = sum(pair_edge_count(g, 0, j) for j in range(1, r))
    rest = sum(pair_edge_count(g, i, j) for i in range(1, r) for j in range(i + 1, r))
    assert weight_identity_check(g).lhs == e1 * n2 ** (r - 2) + rest * n1 * n2 ** (r - 3)
    expected = e1 * (n1 - 1) * (n2 - 1) * n2 ** (r - 2) + rest * (n2 - 1) ** 2 * n1 * n2 ** (r - 3)
    assert deletion_identity_check(g).lhs == expected


@settings(max_examples=60, deadline=None)
@given(subgraphs(balanced=True))
def test_inequalities_hold(g):
    assert clique_count_lower_bound_check(g).holds
    free = make_kr_free(g, np.random.default_rng(0))
    assert kr_free_weight_bound_check(free)


@settings(max_examples=40, deadline=None)
@given(subgraphs())
def test_full_weight_iff_clique(g):
    r = g.n_parts
    cliques = {tuple(c) for c in enumerate_transversal_cliques(g)}
    for row in transversal_array(g):
        s = tuple(g.vertex(v) for v in row)
        assert (weight_of(g, s) == comb(r, 2)) == (s in cliques)


def test_weight_summary():
    s = weight_summary(complete_multipartite((2, 2, 2)))
    assert (s.total_weight, s.clique_count_q, s.transversal_count) == (24, 8, 8)
    assert s.pair_counts[0, 1] == 4 and s.pair_counts[1, 1] == 0
    assert s.total_weight <= comb(3, 2) * s.transversal_count
