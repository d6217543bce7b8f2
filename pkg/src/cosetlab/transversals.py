"""Left, right and left-right transversals.

The main construction walks each chessboard of the coset intersection graph
and takes one element from each tile on its leading diagonal.  An
augmenting-path matching on the same graph gives an independent route to a
left-right transversal, used to cross-check the diagonal one.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .errors import IndexConditionError, InvariantViolation
from .graph import CosetGraph, Report, build_graph, components
from .group import CosetSide, PermutationGroup, coset_labels, index, require_subgroup
from .perm import Permutation, format_cycles

__all__ = [
    "TransversalKind",
    "Transversal",
    "left_transversal",
    "right_transversal",
    "extendable_transversal",
    "left_right_transversal",
    "hall_matching_transversal",
    "maximum_matching",
    "verify_transversal",
]


class TransversalKind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    LEFT_RIGHT = "left-right"
    LEFT_EXTENDABLE_TO_RIGHT = "left-extendable-to-right"


@dataclass(frozen=True)
class Transversal:
    elements: tuple[Permutation, ...]
    kind: TransversalKind
    h_index: int
    k_index: int | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def cycles(self) -> list[str]:
        return [format_cycles(p) for p in self.elements]


def left_transversal(G: PermutationGroup, H: PermutationGroup) -> Transversal:
    require_subgroup(G, H)
    _, reps = coset_labels(G, H, CosetSide.LEFT_OF_H)
    return Transversal(tuple(G.elements[r] for r in reps), TransversalKind.LEFT, len(reps))


def right_transversal(G: PermutationGroup, K: PermutationGroup) -> Transversal:
    require_subgroup(G, K, "K")
    _, reps = coset_labels(G, K, CosetSide.RIGHT_OF_K)
    n = len(reps)
    return Transversal(tuple(G.elements[r] for r in reps), TransversalKind.RIGHT, n, n)


def extendable_transversal(G: PermutationGroup, H: PermutationGroup,
                           K: PermutationGroup) -> tuple[Transversal, list[Permutation]]:
    """A left transversal ``T`` for ``H`` lying in distinct right cosets of ``K``.

    Needs ``|G:H| <= |G:K|``.  Returns ``(T, extension)`` where ``extension``
    holds one element of every right coset of ``K`` that ``T`` misses.
    """
    m, n = index(G, H), index(G, K)
    if m > n:
        raise IndexConditionError(f"need |G:H| <= |G:K|, got |G:H| = {m} > |G:K| = {n}")
    graph = build_graph(G, H, K)
    picked: list[Permutation] = []
    used = set()
    for b in components(graph):
        if b.s > b.t:
            raise InvariantViolation(f"chessboard K_{{{b.s},{b.t}}} wider than tall")
        for i, j in zip(b.left_indices, b.right_indices):
            tile = graph.left_vertices[i].members & graph.right_vertices[j].members
            picked.append(min(tile))
            used.add(j)
    extension = [c.representative for j, c in enumerate(graph.right_vertices) if j not in used]
    return Transversal(tuple(picked), TransversalKind.LEFT_EXTENDABLE_TO_RIGHT, m, n), extension


def left_right_transversal(G: PermutationGroup, H: PermutationGroup) -> Transversal:
    T, ext = extendable_transversal(G, H, H)
    if ext:
        raise InvariantViolation("diagonal construction left right cosets uncovered")
    return Transversal(T.elements, TransversalKind.LEFT_RIGHT, T.h_index)


def maximum_matching(graph: CosetGraph) -> list[int]:
    """Maximum matching by augmenting paths.

    Returns ``match[i]`` = matched right index of left vertex ``i`` (or -1).
    Iterative search, so deep augmenting paths do not hit the recursion limit.
    """
    nl, nr = len(graph.left_vertices), len(graph.right_vertices)
    match_l = [-1] * nl
    match_r = [-1] * nr
    for root in range(nl):
        parent_r = {}  # right vertex -> left vertex it was reached from
        visited_l = {root}
        frontier = [root]
        end = -1
        while frontier and end < 0:
            u = frontier.pop()
            for v in graph.adjacency[u]:
                if v in parent_r:
                    continue
                parent_r[v] = u
                w = match_r[v]
                if w < 0:
                    end = v
                    break
                if w not in visited_l:
                    visited_l.add(w)
                    frontier.append(w)
        if end < 0:
            continue
        v = end
        while True:
            u = parent_r[v]
            nxt = match_l[u]
            match_l[u] = v
            match_r[v] = u
            if u == root:
                break
            v = nxt
    return match_l


def hall_matching_transversal(G: PermutationGroup, H: PermutationGroup) -> Transversal:
    """Left-right transversal from a perfect matching of the ``(H, H)`` coset graph."""
    graph = build_graph(G, H, H)
    match = maximum_matching(graph)
    if any(j < 0 for j in match):
        raise InvariantViolation("coset graph of H with itself has no perfect matching")
    els = tuple(min(graph.left_vertices[i].members & graph.right_vertices[j].members)
                for i, j in enumerate(match))
    return Transversal(els, TransversalKind.LEFT_RIGHT, len(match))


def _check_hits(G: PermutationGroup, S: PermutationGroup, side: CosetSide,
                elements, rep: Report, what: str, exact: bool) -> None:
    label, reps = coset_labels(G, S, side)
    hits: Counter = Counter()
    for p in elements:
        pos = G.position(p)
        if pos < 0:
            rep.fail(f"{p} is not an element of G")
            continue
        hits[int(label[pos])] += 1
    for c, k in sorted(hits.items()):
        if k > 1:
            rep.fail(f"{k} elements in {what} coset of {G.elements[reps[c]]}")
    if exact and len(hits) != len(reps):
        rep.fail(f"{len(reps) - len(hits)} {what} coset(s) not hit")


def verify_transversal(G: PermutationGroup, H: PermutationGroup,
                       K: PermutationGroup | None, T: Transversal) -> Report:
    """Recheck ``T`` against the coset partitions its kind promises.

    ``LEFT`` and ``LEFT_RIGHT`` refer to ``H``; ``RIGHT`` refers to ``K``
    (``H`` when ``K`` is None); ``LEFT_EXTENDABLE_TO_RIGHT`` to both.
    """
    K = H if K is None else K
    rep = Report(f"transversal[{T.kind.value}]")
    require_subgroup(G, H, "H")
    require_subgroup(G, K, "K")
    if len(set(T.elements)) != len(T.elements):
        rep.fail("repeated element")
    kind = T.kind
    if kind in (TransversalKind.LEFT, TransversalKind.LEFT_RIGHT, TransversalKind.LEFT_EXTENDABLE_TO_RIGHT):
        _check_hits(G, H, CosetSide.LEFT_OF_H, T.elements, rep, "left", exact=True)
    if kind is TransversalKind.LEFT_RIGHT:
        _check_hits(G, H, CosetSide.RIGHT_OF_K, T.elements, rep, "right", exact=True)
    if kind is TransversalKind.RIGHT:
        _check_hits(G, K, CosetSide.RIGHT_OF_K, T.elements, rep, "right", exact=True)
    if kind is TransversalKind.LEFT_EXTENDABLE_TO_RIGHT:
        _check_hits(G, K, CosetSide.RIGHT_OF_K, T.elements, rep, "right", exact=False)
    return rep
