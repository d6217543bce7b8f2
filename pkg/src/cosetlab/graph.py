"""The coset intersection graph of two subgroups and its chessboards.

Left vertices are the left cosets of ``H``, right vertices the right cosets
of ``K``; ``aH`` and ``Kb`` are joined when they meet.  Every connected
component is complete bipartite and is exactly one double coset ``KgH``.
The verifiers below check those facts on concrete inputs and report
violations instead of raising.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import _accel
from .errors import InvariantViolation
from .group import (
    Coset,
    CosetSide,
    PermutationGroup,
    _cosets,
    coset_labels,
    require_subgroup,
)
from .perm import Permutation, compose, inverse

__all__ = [
    "CosetGraph",
    "Chessboard",
    "DoubleCoset",
    "Report",
    "build_graph",
    "components",
    "edge_intersection",
    "double_cosets",
    "chessboard_tiles",
    "verify_complete_bipartite",
    "verify_ratio",
    "verify_double_coset_correspondence",
    "verify_tile_uniformity",
]


@dataclass(frozen=True)
class CosetGraph:
    left_vertices: tuple[Coset, ...]
    right_vertices: tuple[Coset, ...]
    adjacency: tuple[tuple[int, ...], ...]  # left index -> sorted right indices
    h_order: int
    k_order: int
    group_order: int

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, adj in enumerate(self.adjacency) for j in adj]

    def right_adjacency(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.right_vertices]
        for i, adj in enumerate(self.adjacency):
            for j in adj:
                out[j].append(i)
        return out

    def without_edge(self, i: int, j: int) -> CosetGraph:
        """Copy with the edge ``left[i] - right[j]`` deleted (for testing checkers)."""
        adj = list(self.adjacency)
        adj[i] = tuple(x for x in adj[i] if x != j)
        return CosetGraph(self.left_vertices, self.right_vertices, tuple(adj),
                          self.h_order, self.k_order, self.group_order)

    # H and K are the cosets whose representative is the identity
    @property
    def h_members(self) -> frozenset:
        return self.left_vertices[0].members

    @property
    def k_members(self) -> frozenset:
        return self.right_vertices[0].members


@dataclass(frozen=True)
class Chessboard:
    left_indices: tuple[int, ...]
    right_indices: tuple[int, ...]
    double_coset_rep: Permutation
    double_coset_size: int
    tile_size: int

    @property
    def s(self) -> int:
        return len(self.left_indices)

    @property
    def t(self) -> int:
        return len(self.right_indices)


@dataclass(frozen=True)
class DoubleCoset:
    representative: Permutation
    members: frozenset

    def __len__(self) -> int:
        return len(self.members)


@dataclass
class Report:
    name: str
    passed: bool = True
    violations: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.passed = False
        self.violations.append(msg)

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        head = f"{self.name}: {'PASS' if self.passed else 'FAIL'}"
        if self.violations:
            shown = "; ".join(self.violations[:5])
            more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
            head += f" [{shown}{more}]"
        return head


def build_graph(G: PermutationGroup, H: PermutationGroup, K: PermutationGroup) -> CosetGraph:
    require_subgroup(G, H, "H")
    require_subgroup(G, K, "K")
    lab_l, _ = coset_labels(G, H, CosetSide.LEFT_OF_H)
    lab_r, reps_r = coset_labels(G, K, CosetSide.RIGHT_OF_K)
    nr = len(reps_r)
    # aH meets Kb exactly when some element carries both labels
    pairs = np.unique(lab_l * nr + lab_r)
    lefts = _cosets(G, H, CosetSide.LEFT_OF_H)
    rights = _cosets(G, K, CosetSide.RIGHT_OF_K)
    adj: list[list[int]] = [[] for _ in lefts]
    for p in pairs.tolist():
        adj[p // nr].append(p % nr)
    return CosetGraph(tuple(lefts), tuple(rights), tuple(tuple(a) for a in adj),
                      H.order, K.order, G.order)


def _raw_components(graph: CosetGraph) -> list[tuple[list[int], list[int]]]:
    """Connected components as (sorted left indices, sorted right indices)."""
    radj = graph.right_adjacency()
    seen_l = [False] * len(graph.left_vertices)
    seen_r = [False] * len(graph.right_vertices)
    out = []
    for start in range(len(graph.left_vertices)):
        if seen_l[start]:
            continue
        ls, rs = [start], []
        seen_l[start] = True
        stack = [("L", start)]
        while stack:
            side, v = stack.pop()
            nbrs = graph.adjacency[v] if side == "L" else radj[v]
            for w in nbrs:
                if side == "L" and not seen_r[w]:
                    seen_r[w] = True
                    rs.append(w)
                    stack.append(("R", w))
                elif side == "R" and not seen_l[w]:
                    seen_l[w] = True
                    ls.append(w)
                    stack.append(("L", w))
        out.append((sorted(ls), sorted(rs)))
    for j in range(len(graph.right_vertices)):
        if not seen_r[j]:
            out.append(([], [j]))
    return out


def _conj_tile_size(graph: CosetGraph, g: Permutation) -> int:
    """``|gHg⁻¹ ∩ K|`` from the member sets stored on the graph."""
    gi = inverse(g)
    conj = {compose(compose(g, h), gi) for h in graph.h_members}
    return len(conj & graph.k_members)


def components(graph: CosetGraph) -> list[Chessboard]:
    """Chessboards of the graph, ordered by their smallest left representative."""
    boards = []
    for ls, rs in _raw_components(graph):
        if not ls or not rs:
            which = f"left {ls[0]}" if ls else f"right {rs[0]}"
            raise InvariantViolation(f"isolated vertex ({which}) in coset graph")
        rep = graph.left_vertices[ls[0]].representative
        tile = _conj_tile_size(graph, rep)
        j = graph.adjacency[ls[0]][0]
        seen = len(graph.left_vertices[ls[0]].members & graph.right_vertices[j].members)
        if seen != tile:
            raise InvariantViolation(f"tile of size {seen} where |gHg^-1 ∩ K| = {tile}")
        boards.append(Chessboard(tuple(ls), tuple(rs), rep, len(ls) * graph.h_order, tile))
    return boards


def edge_intersection(G: PermutationGroup, aH: Coset, Kb: Coset) -> frozenset:
    """The element set ``aH ∩ Kb`` (empty when the cosets are not adjacent)."""
    if aH.side is not CosetSide.LEFT_OF_H or Kb.side is not CosetSide.RIGHT_OF_K:
        raise ValueError("expected a left coset of H and a right coset of K")
    return aH.members & Kb.members


def chessboard_tiles(board: Chessboard, graph: CosetGraph) -> list[list[frozenset]]:
    """``t × s`` grid of tiles: rows are right cosets, columns left cosets."""
    return [[graph.left_vertices[i].members & graph.right_vertices[j].members
             for i in board.left_indices]
            for j in board.right_indices]


def double_cosets(G: PermutationGroup, H: PermutationGroup, K: PermutationGroup) -> list[DoubleCoset]:
    """The partition of ``G`` into double cosets ``KgH``, sorted by representative."""
    require_subgroup(G, H, "H")
    require_subgroup(G, K, "K")
    lab, reps = coset_labels(G, H, CosetSide.LEFT_OF_H)
    dlab, dreps = _accel.double_coset_partition(G.table, lab, reps, K.table)
    els = G.elements
    groups: list[list[Permutation]] = [[] for _ in dreps]
    for i, d in enumerate(dlab[lab].tolist()):
        groups[d].append(els[i])
    return [DoubleCoset(els[r], frozenset(m)) for r, m in zip(dreps.tolist(), groups)]


# ---------------------------------------------------------------------------
# verifiers

def _name(c: Coset) -> str:
    return ("L_" if c.side is CosetSide.LEFT_OF_H else "R_") + str(c.representative)


def verify_complete_bipartite(graph: CosetGraph) -> Report:
    rep = Report("complete_bipartite")
    adj = [set(a) for a in graph.adjacency]
    for ls, rs in _raw_components(graph):
        if not ls or not rs:
            rep.fail(f"isolated vertex {_name((graph.left_vertices[ls[0]] if ls else graph.right_vertices[rs[0]]))}")
            continue
        for i in ls:
            for j in rs:
                if j not in adj[i]:
                    rep.fail(f"missing edge {_name(graph.left_vertices[i])} - {_name(graph.right_vertices[j])}")
    return rep


def verify_ratio(graph: CosetGraph) -> Report:
    """``s·|H| = t·|K|`` per component, and the components cover both sides."""
    rep = Report("ratio_law")
    m, n = graph.h_order, graph.k_order
    ssum = tsum = 0
    for ls, rs in _raw_components(graph):
        s, t = len(ls), len(rs)
        ssum += s
        tsum += t
        if s * m != t * n:
            rep.fail(f"component K_{{{s},{t}}}: {s}*{m} != {t}*{n}")
    if ssum * m != graph.group_order:
        rep.fail(f"sum of s_i = {ssum}, expected |G:H| = {graph.group_order // m}")
    if tsum * n != graph.group_order:
        rep.fail(f"sum of t_i = {tsum}, expected |G:K| = {graph.group_order // n}")
    return rep


def verify_double_coset_correspondence(graph: CosetGraph, dcs: list[DoubleCoset]) -> Report:
    rep = Report("double_coset_correspondence")
    blocks = []
    for ls, rs in _raw_components(graph):
        lu = frozenset().union(*(graph.left_vertices[i].members for i in ls))
        ru = frozenset().union(*(graph.right_vertices[j].members for j in rs))
        if lu != ru:
            rep.fail(f"component with {len(ls)} left / {len(rs)} right cosets: "
                     f"left union ({len(lu)}) != right union ({len(ru)})")
        blocks.append(lu)
    want = Counter(d.members for d in dcs)
    got = Counter(blocks)
    if got != want:
        extra = len(got - want)
        missing = len(want - got)
        rep.fail(f"{extra} component(s) match no double coset, {missing} double coset(s) match no component")
    return rep


def verify_tile_uniformity(graph: CosetGraph) -> Report:
    """Every tile of a chessboard has ``|gHg⁻¹ ∩ K| = |H|/t = |K|/s`` elements."""
    rep = Report("tile_uniformity")
    adj = [set(a) for a in graph.adjacency]
    for ls, rs in _raw_components(graph):
        if not ls or not rs:
            continue
        g = graph.left_vertices[ls[0]].representative
        tile = _conj_tile_size(graph, g)
        s, t = len(ls), len(rs)
        if tile * t != graph.h_order or tile * s != graph.k_order:
            rep.fail(f"board at {g}: tile {tile} with s={s}, t={t}, |H|={graph.h_order}, |K|={graph.k_order}")
        for i in ls:
            for j in rs:
                if j not in adj[i]:
                    continue
                size = len(graph.left_vertices[i].members & graph.right_vertices[j].members)
                if size != tile:
                    rep.fail(f"tile {_name(graph.left_vertices[i])} x {_name(graph.right_vertices[j])} "
                             f"has {size} elements, expected {tile}")
    return rep
