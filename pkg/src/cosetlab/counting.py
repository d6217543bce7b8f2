"""How many right cosets of K meet a given left coset gH, computed three ways."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _accel
from .errors import InvariantViolation, MembershipError
from .group import (
    CosetSide,
    PermutationGroup,
    conjugate_subgroup,
    coset_labels,
    index,
    intersect,
    require_subgroup,
)
from .perm import Permutation, inverse

__all__ = [
    "CountReport",
    "count_meeting_right_cosets",
    "count_meeting_left_cosets",
    "m_g_by_order",
    "m_g_by_index",
    "symmetric_by_order",
    "full_count_report",
]


@dataclass(frozen=True)
class CountReport:
    g: Permutation
    m_direct: int
    m_by_order: int
    m_by_index: int
    symmetric_direct: int
    symmetric_by_order: int

    @property
    def consistent(self) -> bool:
        return (self.m_direct == self.m_by_order == self.m_by_index
                and self.symmetric_direct == self.symmetric_by_order)


def _exact_div(a: int, b: int, what: str) -> int:
    q, r = divmod(a, b)
    if r:
        raise InvariantViolation(f"{what}: {a} is not divisible by {b}")
    return q


def _position(G: PermutationGroup, g: Permutation) -> int:
    pos = G.position(g)
    if pos < 0:
        raise MembershipError(f"{g} is not an element of G")
    return pos


def _distinct_labels(G: PermutationGroup, rows: np.ndarray, label: np.ndarray) -> int:
    idx = _accel.lookup(G.table, rows)
    return int(np.unique(label[idx]).size)


def count_meeting_right_cosets(G: PermutationGroup, H: PermutationGroup,
                               K: PermutationGroup, g: Permutation) -> int:
    """Number of right cosets ``Kb`` with ``gH ∩ Kb`` nonempty, by enumeration."""
    require_subgroup(G, H, "H")
    require_subgroup(G, K, "K")
    _position(G, g)
    label, _ = coset_labels(G, K, CosetSide.RIGHT_OF_K)
    gh = _accel.compose(np.repeat(g.as_array()[None, :], H.order, axis=0), H.table)
    return _distinct_labels(G, gh, label)


def count_meeting_left_cosets(G: PermutationGroup, H: PermutationGroup,
                              K: PermutationGroup, g: Permutation) -> int:
    """Number of left cosets ``aH`` with ``aH ∩ Kg`` nonempty, by enumeration."""
    require_subgroup(G, H, "H")
    require_subgroup(G, K, "K")
    _position(G, g)
    label, _ = coset_labels(G, H, CosetSide.LEFT_OF_H)
    kg = _accel.compose(K.table, np.repeat(g.as_array()[None, :], K.order, axis=0))
    return _distinct_labels(G, kg, label)


def m_g_by_order(H: PermutationGroup, K: PermutationGroup, g: Permutation) -> int:
    """``|H| / |gHg⁻¹ ∩ K|``."""
    tile = intersect(conjugate_subgroup(H, g), K).order
    return _exact_div(H.order, tile, "|H| / |gHg^-1 ∩ K|")


def m_g_by_index(G: PermutationGroup, H: PermutationGroup,
                 K: PermutationGroup, g: Permutation) -> int:
    """``|G : gHg⁻¹ ∩ K| / |G : H|``."""
    _position(G, g)
    meet = intersect(conjugate_subgroup(H, g), K)
    return _exact_div(index(G, meet), index(G, H), "|G : gHg^-1 ∩ K| / |G : H|")


def symmetric_by_order(H: PermutationGroup, K: PermutationGroup, g: Permutation) -> int:
    """``|K| / |g⁻¹Kg ∩ H|``, the left-coset count for ``Kg``."""
    tile = intersect(conjugate_subgroup(K, inverse(g)), H).order
    return _exact_div(K.order, tile, "|K| / |g^-1Kg ∩ H|")


def full_count_report(G: PermutationGroup, H: PermutationGroup,
                      K: PermutationGroup, g: Permutation) -> CountReport:
    rep = CountReport(
        g=g,
        m_direct=count_meeting_right_cosets(G, H, K, g),
        m_by_order=m_g_by_order(H, K, g),
        m_by_index=m_g_by_index(G, H, K, g),
        symmetric_direct=count_meeting_left_cosets(G, H, K, g),
        symmetric_by_order=symmetric_by_order(H, K, g),
    )
    if not rep.consistent:
        raise InvariantViolation(f"count disagreement at g = {g}: {rep}")
    return rep
