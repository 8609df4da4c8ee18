"""Closed-form Turán numbers and bounds for cliques in multipartite hosts.

All arithmetic is exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import ParameterError
from .graph import HostSpec, complete_edge_count, validate_parts


class Validity(str, Enum):
    EXACT_THEOREM = "exact-theorem"
    EXACT_TRIVIAL = "exact-trivial-range"
    LOWER_BOUND = "lower-bound-only"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FormulaResult:
    value: int
    validity: Validity
    canonical_spec: HostSpec
    note: str = ""

    @property
    def exact(self) -> bool:
        return self.validity is not Validity.LOWER_BOUND

    def __str__(self) -> str:
        tag = str(self.validity)
        if self.note:
            tag += f", {self.note}"
        return f"{self.value} ({tag})"


def h_k(parts: Sequence[int], k: int) -> int:
    """sum_{i<j} n_i n_j - n_1 n_2 + n_2 (k - 1), over ``parts`` exactly as given."""
    parts = tuple(int(n) for n in parts)
    if len(parts) < 2:
        raise ParameterError("h_k needs at least two parts")
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    n1, n2 = parts[0], parts[1]
    return complete_edge_count(parts) - n1 * n2 + n2 * (k - 1)


def bipartite_matching_number(m: int, n: int, k: int) -> FormulaResult:
    """ex(K_{m,n}, kK_2) = m(k-1) with m the larger side, for k <= min(m, n)."""
    m, n = validate_parts((m, n))
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    m, n = max(m, n), min(m, n)
    spec = HostSpec((n, m), k)
    if k > n:
        return FormulaResult(m * n, Validity.EXACT_TRIVIAL, spec, "bipartite")
    return FormulaResult(m * (k - 1), Validity.EXACT_THEOREM, spec, "bipartite")


def turan_number(spec: HostSpec) -> FormulaResult:
    """ex(K_{n_1..n_r}, kK_r) for a host with exactly r parts.

    Parts are sorted first. For k above the smallest part no kK_r fits and
    the whole host is returned; r = 2 goes to the bipartite formula.
    """
    if not spec.transversal:
        raise ParameterError("turan_number needs r equal to the number of parts")
    spec = spec.canonical()
    parts, k = spec.parts, spec.k
    if len(parts) == 2:
        return bipartite_matching_number(parts[0], parts[1], k)
    if k > parts[0]:
        return FormulaResult(complete_edge_count(parts), Validity.EXACT_TRIVIAL, spec)
    return FormulaResult(h_k(parts, k), Validity.EXACT_THEOREM, spec)


def multipartite_matching_number(parts: Sequence[int], k: int) -> FormulaResult:
    """(k-1) * (n_2 + ... + n_l), the kK_2 number for an l-partite host.

    Exact for 1 <= k <= n_1 (parts sorted). Outside that range the value is
    still a valid lower bound (k-1 vertices joined to every other part) but
    is tagged lower-bound-only.
    """
    parts = tuple(sorted(validate_parts(parts)))
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    spec = HostSpec(parts, k, 2)
    value = (k - 1) * sum(parts[1:])
    if k > parts[0]:
        value = min(value, complete_edge_count(parts))
        return FormulaResult(value, Validity.LOWER_BOUND, spec, "k exceeds smallest part")
    return FormulaResult(value, Validity.EXACT_THEOREM, spec, "matching")


def four_partite_triangle_lower_bound(parts: Sequence[int], k: int) -> FormulaResult:
    """(n_1 + n_2 + n_3) n_4 + (k-1) n_3, a lower bound on ex(K_{n_1..n_4}, kK_3).

    Evaluated on ``parts`` in the order given.
    """
    parts = validate_parts(parts)
    if len(parts) != 4:
        raise ParameterError(f"need exactly 4 parts, got {len(parts)}")
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    n1, n2, n3, n4 = parts
    value = (n1 + n2 + n3) * n4 + (k - 1) * n3
    return FormulaResult(value, Validity.LOWER_BOUND, HostSpec(parts, k, 3))


def formula_for(spec: HostSpec) -> FormulaResult | None:
    """Best formula known for ``spec``: exact where one exists, else a lower bound, else None."""
    if spec.transversal:
        return turan_number(spec)
    if spec.r == 2:
        return multipartite_matching_number(spec.parts, spec.k)
    if spec.r == 3 and len(spec.parts) == 4 and spec.k <= spec.parts[0] + spec.parts[1] + 1:
        return four_partite_triangle_lower_bound(spec.parts, spec.k)
    return None
