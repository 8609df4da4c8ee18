import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from turan.errors import ParameterError
from turan.formulas import (
    Validity,
    bipartite_matching_number,
    formula_for,
    four_partite_triangle_lower_bound,
    h_k,
    multipartite_matching_number,
    turan_number,
)
from turan.graph import HostSpec, complete_edge_count


@pytest.mark.parametrize("parts, k, expected", [((1, 1, 1), 1, 2), ((2, 2, 2), 2, 10), ((3, 3, 3), 2, 21)])
def test_h_k(parts, k, expected):
    assert h_k(parts, k) == expected


def test_h_k_uses_order_as_given():
    # 6+6+4 - n1 n2 + n2(k-1): (3,2,2) -> 16 - 6 + 2, (2,2,3) -> 16 - 4 + 2
    assert h_k((3, 2, 2), 2) == 12
    assert h_k((2, 2, 3), 2) == 14


def test_turan_number_examples():
    res = turan_number(HostSpec((2, 2, 2), 1))
    assert (res.value, res.validity) == (8, Validity.EXACT_THEOREM)
    res = turan_number(HostSpec((2, 2, 2), 3))
    assert (res.value, res.validity) == (12, Validity.EXACT_TRIVIAL)
    res = turan_number(HostSpec((3, 2, 2), 2))
    # brute force over K_{2,2,3} (tests/naive.py ex_by_removals) gives 14
    assert res.value == 14 and res.canonical_spec.parts == (2, 2, 3)


def test_turan_number_delegates_bipartite():
    res = turan_number(HostSpec((3, 4), 2))
    assert res.value == 4 and res.note == "bipartite"


@pytest.mark.parametrize(
    "m, n, k, value, validity",
    [(4, 3, 2, 4, Validity.EXACT_THEOREM), (5, 5, 1, 0, Validity.EXACT_THEOREM), (2, 2, 3, 4, Validity.EXACT_TRIVIAL)],
)
def test_bipartite_matching_number(m, n, k, value, validity):
    res = bipartite_matching_number(m, n, k)
    assert (res.value, res.validity) == (value, validity)


@pytest.mark.parametrize("parts, k, value", [((2, 2, 2), 2, 4), ((1, 1, 1), 1, 0), ((2, 3, 4), 2, 7)])
def test_multipartite_matching_number(parts, k, value):
    res = multipartite_matching_number(parts, k)
    assert res.value == value and res.validity is Validity.EXACT_THEOREM


def test_multipartite_matching_out_of_range_is_lower_bound():
    res = multipartite_matching_number((1, 2, 2), 2)
    assert res.validity is Validity.LOWER_BOUND


@pytest.mark.parametrize("parts, k, value", [((2, 2, 2, 2), 2, 14), ((1, 1, 1, 1), 1, 3), ((2, 2, 2, 2), 1, 12)])
def test_four_partite_triangle_lower_bound(parts, k, value):
    res = four_partite_triangle_lower_bound(parts, k)
    assert res.value == value and res.validity is Validity.LOWER_BOUND


def test_formula_errors():
    with pytest.raises(ParameterError):
        h_k((3,), 1)
    with pytest.raises(ParameterError):
        four_partite_triangle_lower_bound((1, 1, 1), 1)
    with pytest.raises(ParameterError):
        turan_number(HostSpec((2, 2, 2), 1, 2))


GRID = [
    (parts, k)
    for r in (2, 3, 4)
    for parts in itertools.combinations_with_replacement(range(1, 5), r)
    for k in range(1, 6)
]


def test_monotone_in_k_and_part_sizes():
    for parts, k in GRID:
        base = turan_number(HostSpec(parts, k)).value
        assert turan_number(HostSpec(parts, k + 1)).value >= base
        for i in range(len(parts)):
            bigger = list(parts)
            bigger[i] += 1
            assert turan_number(HostSpec(tuple(bigger), k)).value >= base


@given(st.lists(st.integers(1, 6), min_size=2, max_size=5), st.integers(1, 7), st.randoms())
def test_permutation_invariance(parts, k, rnd):
    shuffled = list(parts)
    rnd.shuffle(shuffled)
    assert turan_number(HostSpec(tuple(parts), k)).value == turan_number(HostSpec(tuple(shuffled), k)).value


def test_never_exceeds_host_and_equals_it_past_n1():
    for parts, k in GRID:
        res = turan_number(HostSpec(parts, k))
        host = complete_edge_count(parts)
        assert res.value <= host
        assert (res.value == host) == (k > parts[0])
        if k > parts[0]:
            assert res.validity is Validity.EXACT_TRIVIAL


@pytest.mark.parametrize("r", [3, 4, 5])
@pytest.mark.parametrize("n1, n2", [(1, 1), (1, 3), (2, 2), (2, 5), (3, 4), (4, 4)])
def test_seam_with_single_and_full_range(r, n1, n2):
    parts = (n1,) + (n2,) * (r - 1)
    assert turan_number(HostSpec(parts, 1)).value == h_k(parts, 1)
    assert turan_number(HostSpec(parts, n1)).value == h_k(parts, n1)


def test_formula_for_dispatch():
    assert formula_for(HostSpec((2, 2, 2), 2)).value == 10
    assert formula_for(HostSpec((2, 2, 2), 2, 2)).note == "matching"
    assert formula_for(HostSpec((1, 1, 1, 1), 1, 3)).value == 3
    assert formula_for(HostSpec((1, 1, 1, 1, 1), 1, 3)) is None
