"""Finite permutation groups by explicit enumeration.

Every group keeps a canonical element table (sorted, deduplicated 0-based
image rows).  Subgroups are ordinary groups of the same degree; containment
is checked by table lookup, never assumed.
"""

from __future__ import annotations

import enum
import os
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _accel
from .errors import (
    ClosureCapExceeded,
    DegreeMismatchError,
    InvariantViolation,
    NotASubgroupError,
    NotNormalError,
)
from .perm import Permutation, identity

__all__ = [
    "DEFAULT_CAP",
    "PermutationGroup",
    "CosetSide",
    "Coset",
    "QuotientMap",
    "default_cap",
    "generate",
    "from_elements",
    "trivial_group",
    "subgroup",
    "is_subgroup",
    "require_subgroup",
    "left_cosets",
    "right_cosets",
    "coset_labels",
    "conjugate_subgroup",
    "intersect",
    "core",
    "is_normal",
    "quotient",
    "quotient_map",
    "image_in_quotient",
    "index",
    "direct_product",
]

DEFAULT_CAP = 1_000_000


def default_cap() -> int:
    """Closure cap, overridable through ``COSETLAB_CAP``."""
    raw = os.environ.get("COSETLAB_CAP")
    return int(raw) if raw else DEFAULT_CAP


class PermutationGroup:
    """A finite group of permutations of ``{1..degree}``.

    Instances are immutable.  ``elements`` is sorted lexicographically by
    image sequence, so ``elements[0]`` is always the identity.
    """

    def __init__(self, degree: int, table: np.ndarray,
                 generators: Sequence[Permutation] | None = None):
        table = np.asarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[1] != degree or table.shape[0] == 0:
            raise ValueError("table must be a non-empty (order, degree) array")
        table = np.ascontiguousarray(table)
        table.setflags(write=False)
        self._degree = degree
        self._table = table
        self._gens = None if generators is None else tuple(generators)
        self._label_cache: dict = {}

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def order(self) -> int:
        return self._table.shape[0]

    @property
    def table(self) -> np.ndarray:
        """Read-only ``(order, degree)`` array of 0-based image rows."""
        return self._table

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        return tuple(Permutation.from_array(r) for r in self._table)

    @cached_property
    def _positions(self) -> dict[Permutation, int]:
        return {p: i for i, p in enumerate(self.elements)}

    @property
    def generators(self) -> tuple[Permutation, ...]:
        if self._gens is None:
            self._gens = _greedy_generators(self)
        return self._gens

    @property
    def identity(self) -> Permutation:
        return identity(self._degree)

    def position(self, p: Permutation) -> int:
        """Index of ``p`` in ``elements``, or -1."""
        return self._positions.get(p, -1)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __contains__(self, p: object) -> bool:
        return isinstance(p, Permutation) and p in self._positions

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return (self._degree == other._degree
                and self._table.shape == other._table.shape
                and bool(np.array_equal(self._table, other._table)))

    def __hash__(self) -> int:
        return hash((self._degree, self._table.tobytes()))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"<PermutationGroup degree={self._degree} order={self.order} gens=[{gens}]>"


class CosetSide(enum.Enum):
    LEFT_OF_H = "left"
    RIGHT_OF_K = "right"


@dataclass(frozen=True)
class Coset:
    """A left coset ``rep·H`` or a right coset ``K·rep``.

    ``representative`` is the lexicographic minimum of ``members``.
    """

    side: CosetSide
    representative: Permutation
    members: frozenset
    subgroup_order: int

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: object) -> bool:
        return p in self.members

    def __str__(self) -> str:
        r = str(self.representative)
        return f"{r}H" if self.side is CosetSide.LEFT_OF_H else f"K{r}"


# ---------------------------------------------------------------------------
# construction

def _table_of(perms: Iterable[Permutation], degree: int) -> np.ndarray:
    rows = []
    for p in perms:
        if p.degree != degree:
            raise DegreeMismatchError(f"element of degree {p.degree} in a degree-{degree} group")
        rows.append(p.as_array())
    if not rows:
        return np.empty((0, degree), dtype=np.int32)
    return np.stack(rows).astype(np.int32)


def generate(generators: Iterable[Permutation], degree: int, cap: int | None = None,
             parent: PermutationGroup | None = None) -> PermutationGroup:
    """Breadth-first closure of ``generators`` under composition.

    Raises ``ClosureCapExceeded`` once more than ``cap`` elements turn up.
    When ``parent`` is given the result must be one of its subgroups.
    """
    cap = default_cap() if cap is None else cap
    if cap <= 0:
        raise ValueError("cap must be positive")
    gens = list(generators)
    gtab = _table_of(gens, degree)
    ident = np.arange(degree, dtype=np.int32)[None, :]
    seen = {ident.tobytes()}
    found = [ident]
    frontier = ident
    while frontier.shape[0] and gtab.shape[0]:
        n = frontier.shape[0]
        prods = _accel.compose(np.repeat(frontier, gtab.shape[0], axis=0),
                               np.tile(gtab, (n, 1)))
        fresh = []
        for row in prods:
            key = row.tobytes()
            if key not in seen:
                seen.add(key)
                fresh.append(row)
                if len(seen) > cap:
                    raise ClosureCapExceeded(f"group exceeds {cap} elements")
        frontier = np.stack(fresh) if fresh else prods[:0]
        found.append(frontier)
    G = PermutationGroup(degree, _accel.canonical(np.concatenate(found)), gens)
    if parent is not None:
        require_subgroup(parent, G)
    return G


def from_elements(elements: Iterable[Permutation], degree: int,
                  check: bool = True) -> PermutationGroup:
    """Group whose element set is exactly ``elements``.

    With ``check`` the set is verified to be closed under products.
    """
    table = _accel.canonical(_table_of(elements, degree))
    if table.shape[0] == 0:
        raise ValueError("a group has at least one element")
    G = PermutationGroup(degree, table)
    if check:
        _check_closed(G)
    return G


def _check_closed(G: PermutationGroup) -> None:
    t = G.table
    if _accel.lookup(t, np.arange(G.degree, dtype=np.int32)[None, :])[0] < 0:
        raise ValueError("element set lacks the identity")
    n = t.shape[0]
    step = max(1, (1 << 18) // max(1, n))
    for lo in range(0, n, step):
        a = t[lo:lo + step]
        prods = _accel.compose(np.repeat(a, n, axis=0), np.tile(t, (a.shape[0], 1)))
        if (_accel.lookup(t, prods) < 0).any():
            raise ValueError("element set is not closed under composition")


def _from_table(degree: int, rows: np.ndarray) -> PermutationGroup:
    return PermutationGroup(degree, _accel.canonical(rows))


def trivial_group(degree: int) -> PermutationGroup:
    return PermutationGroup(degree, np.arange(degree, dtype=np.int32)[None, :], ())


def _greedy_generators(G: PermutationGroup) -> tuple[Permutation, ...]:
    gens: list[Permutation] = []
    have = {G.identity}
    for p in G.elements:
        if p in have:
            continue
        gens.append(p)
        have = set(generate(gens, G.degree, cap=G.order).elements)
        if len(have) == G.order:
            break
    return tuple(gens)


def subgroup(G: PermutationGroup, generators: Iterable[Permutation]) -> PermutationGroup:
    """Subgroup of ``G`` generated by ``generators``; they must lie in ``G``."""
    gens = list(generators)
    for g in gens:
        if g.degree != G.degree:
            raise DegreeMismatchError(f"degree {g.degree} vs {G.degree}")
        if g not in G:
            raise NotASubgroupError(f"generator {g} is not an element of G")
    return generate(gens, G.degree, cap=G.order, parent=G)


def direct_product(A: PermutationGroup, B: PermutationGroup) -> PermutationGroup:
    """``A × B`` acting on the disjoint union of their point sets."""
    da, db = A.degree, B.degree
    gens = [Permutation(a.images + tuple(range(da + 1, da + db + 1))) for a in A.generators]
    gens += [Permutation(tuple(range(1, da + 1)) + tuple(x + da for x in b.images))
             for b in B.generators]
    return generate(gens, da + db, cap=A.order * B.order)


# ---------------------------------------------------------------------------
# subgroups and cosets

def _same_degree(G: PermutationGroup, H: PermutationGroup) -> None:
    if G.degree != H.degree:
        raise DegreeMismatchError(f"degree {G.degree} vs {H.degree}")


def is_subgroup(G: PermutationGroup, H: PermutationGroup) -> bool:
    """True iff every element of ``H`` lies in ``G``."""
    _same_degree(G, H)
    if G.order % H.order:
        return False
    return bool((_accel.lookup(G.table, H.table) >= 0).all())


def require_subgroup(G: PermutationGroup, H: PermutationGroup, name: str = "H") -> None:
    if not is_subgroup(G, H):
        raise NotASubgroupError(f"{name} (order {H.order}) is not a subgroup of G (order {G.order})")


def index(G: PermutationGroup, H: PermutationGroup) -> int:
    require_subgroup(G, H)
    return G.order // H.order


def coset_labels(G: PermutationGroup, S: PermutationGroup,
                 side: CosetSide) -> tuple[np.ndarray, np.ndarray]:
    """Coset partition of ``G`` by ``S`` as arrays.

    Returns ``(label, reps)``: ``label[i]`` is the coset number of
    ``G.elements[i]`` and ``reps[j]`` the element index of coset ``j``'s
    canonical representative.  Cosets are numbered by representative.
    Caller guarantees ``S <= G``.
    """
    key = (S.table.tobytes(), S.order, side)
    hit = G._label_cache.get(key)
    if hit is not None:
        return hit
    out = _accel.coset_partition(G.table, S.table, side is CosetSide.LEFT_OF_H)
    for a in out:
        a.setflags(write=False)
    G._label_cache[key] = out
    return out


def _cosets(G: PermutationGroup, S: PermutationGroup, side: CosetSide) -> list[Coset]:
    label, reps = coset_labels(G, S, side)
    order = np.argsort(label, kind="stable")
    bounds = np.searchsorted(label[order], np.arange(len(reps) + 1))
    els = G.elements
    return [
        Coset(side, els[reps[j]], frozenset(els[i] for i in order[bounds[j]:bounds[j + 1]]), S.order)
        for j in range(len(reps))
    ]


def left_cosets(G: PermutationGroup, H: PermutationGroup) -> list[Coset]:
    """All ``gH``, sorted by canonical representative."""
    require_subgroup(G, H)
    return _cosets(G, H, CosetSide.LEFT_OF_H)


def right_cosets(G: PermutationGroup, K: PermutationGroup) -> list[Coset]:
    """All ``Kg``, sorted by canonical representative."""
    require_subgroup(G, K, "K")
    return _cosets(G, K, CosetSide.RIGHT_OF_K)


def _conjugate_rows(rows: np.ndarray, g: np.ndarray) -> np.ndarray:
    """``g·r·g⁻¹`` for each row ``r``; ``g`` holds one row per input row."""
    return _accel.compose(_accel.compose(g, rows), _accel.inverse(g))


def conjugate_subgroup(H: PermutationGroup, g: Permutation) -> PermutationGroup:
    """``gHg⁻¹ = {g·h·g⁻¹ : h in H}``."""
    if g.degree != H.degree:
        raise DegreeMismatchError(f"degree {g.degree} vs {H.degree}")
    gg = np.repeat(g.as_array()[None, :], H.order, axis=0)
    return _from_table(H.degree, _conjugate_rows(H.table, gg))


def intersect(H: PermutationGroup, K: PermutationGroup) -> PermutationGroup:
    _same_degree(H, K)
    keep = _accel.lookup(K.table, H.table) >= 0
    return PermutationGroup(H.degree, H.table[keep])


def core(G: PermutationGroup, H: PermutationGroup) -> PermutationGroup:
    """Intersection of all conjugates ``g⁻¹Hg``; the largest normal subgroup of ``G`` inside ``H``."""
    require_subgroup(G, H)
    # g⁻¹Hg depends only on the right coset Hg
    _, reps = coset_labels(G, H, CosetSide.RIGHT_OF_K)
    xs = G.table[reps]
    nh = H.order
    rows = np.tile(H.table, (len(xs), 1))
    g = np.repeat(xs, nh, axis=0)
    # h in g⁻¹Hg  <=>  g·h·g⁻¹ in H
    inside = (_accel.lookup(H.table, _conjugate_rows(rows, g)) >= 0).reshape(len(xs), nh)
    return PermutationGroup(H.degree, H.table[inside.all(axis=0)])


def is_normal(G: PermutationGroup, N: PermutationGroup) -> bool:
    require_subgroup(G, N, "N")
    gens = G.generators
    if not gens:
        return True
    gt = np.stack([g.as_array() for g in gens])
    rows = np.tile(N.table, (len(gens), 1))
    g = np.repeat(gt, N.order, axis=0)
    return bool((_accel.lookup(N.table, _conjugate_rows(rows, g)) >= 0).all())


# ---------------------------------------------------------------------------
# quotients

class QuotientMap:
    """The natural map ``G -> G/N`` realized on the cosets of ``N``.

    Coset ``j`` (numbered by canonical representative) becomes point
    ``j + 1``; ``g`` acts by ``xN -> xgN``, a homomorphism under the
    left-to-right product.
    """

    def __init__(self, G: PermutationGroup, N: PermutationGroup):
        if not is_normal(G, N):
            raise NotNormalError("N is not normal in G")
        self.G = G
        self.N = N
        self._label, self._reps = coset_labels(G, N, CosetSide.LEFT_OF_H)
        self.degree = len(self._reps)

    def _images(self, rows: np.ndarray) -> np.ndarray:
        nc = self.degree
        xs = self.G.table[self._reps]
        prods = _accel.compose(np.tile(xs, (rows.shape[0], 1)), np.repeat(rows, nc, axis=0))
        idx = _accel.lookup(self.G.table, prods)
        if (idx < 0).any():
            raise InvariantViolation("element outside G passed to quotient map")
        return self._label[idx].reshape(rows.shape[0], nc).astype(np.int32)

    def image(self, g: Permutation) -> Permutation:
        return Permutation.from_array(self._images(g.as_array()[None, :])[0])

    def image_of(self, H: PermutationGroup) -> PermutationGroup:
        """``H/N`` inside ``G/N``; requires ``N <= H <= G``."""
        require_subgroup(self.G, H)
        if not is_subgroup(H, self.N):
            raise NotASubgroupError("N is not contained in H")
        gens = H.generators
        imgs = [Permutation.from_array(r) for r in self._images(_table_of(gens, H.degree))] if gens else []
        Q = generate(imgs, self.degree, cap=max(1, H.order // self.N.order))
        if Q.order * self.N.order != H.order:
            raise InvariantViolation(f"|H/N| = {Q.order}, expected {H.order // self.N.order}")
        return Q

    @cached_property
    def group(self) -> PermutationGroup:
        return self.image_of(self.G)


def quotient_map(G: PermutationGroup, N: PermutationGroup) -> QuotientMap:
    return QuotientMap(G, N)


def quotient(G: PermutationGroup, N: PermutationGroup) -> PermutationGroup:
    """``G/N`` as a permutation group of degree ``|G:N|``."""
    return QuotientMap(G, N).group


def image_in_quotient(G: PermutationGroup, N: PermutationGroup,
                      H: PermutationGroup) -> PermutationGroup:
    return QuotientMap(G, N).image_of(H)
