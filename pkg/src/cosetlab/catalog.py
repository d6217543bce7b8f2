"""Standard small groups as permutation groups, and the group file format."""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CycleParseError
from .group import PermutationGroup, direct_product, generate
from .perm import Permutation, parse_cycles

__all__ = [
    "FAMILIES",
    "CatalogSpec",
    "catalog_group",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "expected_order",
    "parse_group_text",
    "load_group_file",
    "format_group_text",
    "cyclic_subgroups",
    "iter_catalog",
    "parse_factor",
]

FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating", "quaternion8", "direct_product")
MAX_SYMMETRIC = 8


@dataclass(frozen=True)
class CatalogSpec:
    family: str
    parameters: tuple[int, ...] = ()
    factors: tuple[CatalogSpec, ...] = field(default=())

    def __str__(self) -> str:
        if self.family == "direct_product":
            return " x ".join(str(f) for f in self.factors)
        if self.family == "quaternion8":
            return "Q8"
        tag = {"cyclic": "C", "dihedral": "D", "symmetric": "S", "alternating": "A"}.get(self.family)
        if tag is None or len(self.parameters) != 1:
            return f"{self.family}{self.parameters}"
        return f"{tag}{self.parameters[0]}"


def _cycle(points: list[int], degree: int) -> Permutation:
    img = list(range(1, degree + 1))
    for a, b in zip(points, points[1:] + points[:1]):
        img[a - 1] = b
    return Permutation(img)


def cyclic(n: int) -> PermutationGroup:
    """``C_n`` generated by an n-cycle on n points."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    return generate([_cycle(list(range(1, n + 1)), n)], n)


def dihedral(n: int) -> PermutationGroup:
    """``D_n`` of order 2n: rotations and reflections of an n-gon.

    n = 1 and n = 2 are realized on 2 and 4 points (as C_2 and C_2 x C_2).
    """
    if n < 1:
        raise ValueError("dihedral group needs n >= 1")
    if n == 1:
        return generate([parse_cycles("(1 2)", 2)], 2)
    if n == 2:
        return generate([parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)], 4)
    rot = _cycle(list(range(1, n + 1)), n)
    ref = Permutation([1] + list(range(n, 1, -1)))
    return generate([rot, ref], n)


def symmetric(n: int) -> PermutationGroup:
    if not 1 <= n <= MAX_SYMMETRIC:
        raise ValueError(f"symmetric group needs 1 <= n <= {MAX_SYMMETRIC}")
    gens = []
    if n >= 2:
        gens = [_cycle([1, 2], n), _cycle(list(range(1, n + 1)), n)]
    return generate(gens, n)


def alternating(n: int) -> PermutationGroup:
    if not 1 <= n <= MAX_SYMMETRIC:
        raise ValueError(f"alternating group needs 1 <= n <= {MAX_SYMMETRIC}")
    return generate([_cycle([1, 2, i], n) for i in range(3, n + 1)], n)


# quaternion units 1, -1, i, -i, j, -j, k, -k as (sign, axis) pairs
_Q_UNITS = [(1, 0), (-1, 0), (1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3), (-1, 3)]
_Q_AXIS_MUL = {  # axis product table: (a, b) -> (sign, axis)
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def _q_mul(x: int, y: int) -> int:
    (sa, a), (sb, b) = _Q_UNITS[x], _Q_UNITS[y]
    s, c = _Q_AXIS_MUL[(a, b)]
    return _Q_UNITS.index((sa * sb * s, c))


def quaternion8() -> PermutationGroup:
    """``Q_8`` in its regular representation on 8 points (right multiplication)."""
    gens = [Permutation([_q_mul(x, u) + 1 for x in range(8)]) for u in (2, 4)]
    return generate(gens, 8)


def expected_order(spec: CatalogSpec) -> int:
    f, p = spec.family, spec.parameters
    if f == "cyclic":
        return p[0]
    if f == "dihedral":
        return 2 * p[0]
    if f == "symmetric":
        return math.factorial(p[0])
    if f == "alternating":
        return max(1, math.factorial(p[0]) // 2)
    if f == "quaternion8":
        return 8
    if f == "direct_product":
        return math.prod(expected_order(s) for s in spec.factors)
    raise ValueError(f"unknown family {f!r}")


def catalog_group(spec: CatalogSpec) -> PermutationGroup:
    f = spec.family
    if f not in FAMILIES:
        raise ValueError(f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")
    if f == "quaternion8":
        return quaternion8()
    if f == "direct_product":
        if len(spec.factors) < 2:
            raise ValueError("direct_product needs at least two factors")
        G = catalog_group(spec.factors[0])
        for s in spec.factors[1:]:
            G = direct_product(G, catalog_group(s))
        return G
    if len(spec.parameters) != 1:
        raise ValueError(f"{f} takes exactly one parameter n")
    n = spec.parameters[0]
    return {"cyclic": cyclic, "dihedral": dihedral,
            "symmetric": symmetric, "alternating": alternating}[f](n)


def parse_factor(text: str) -> CatalogSpec:
    """``"cyclic:2"`` or ``"quaternion8"`` -> spec."""
    name, _, arg = text.strip().partition(":")
    if name == "quaternion8":
        return CatalogSpec("quaternion8")
    if not arg:
        raise ValueError(f"factor {text!r} needs a parameter, e.g. {name}:3")
    return CatalogSpec(name, (int(arg),))


# ---------------------------------------------------------------------------
# group files

def parse_group_text(text: str) -> tuple[int, list[Permutation]]:
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "degree":
            if degree is not None:
                raise CycleParseError(f"line {lineno}: duplicate degree line")
            try:
                degree = int(rest)
            except ValueError:
                raise CycleParseError(f"line {lineno}: bad degree {rest!r}") from None
            if degree < 0:
                raise CycleParseError(f"line {lineno}: negative degree")
        elif key == "gen":
            if degree is None:
                raise CycleParseError(f"line {lineno}: 'gen' before 'degree'")
            try:
                gens.append(parse_cycles(rest, degree))
            except CycleParseError as e:
                raise CycleParseError(f"line {lineno}: {e}") from None
        else:
            raise CycleParseError(f"line {lineno}: unknown directive {key!r}")
    if degree is None:
        raise CycleParseError("missing 'degree' line")
    return degree, gens


def load_group_file(path: str | Path, cap: int | None = None) -> PermutationGroup:
    degree, gens = parse_group_text(Path(path).read_text(encoding="utf-8"))
    return generate(gens, degree, cap=cap)


def format_group_text(G: PermutationGroup) -> str:
    lines = [f"degree {G.degree}"]
    lines += [f"gen {g}" for g in G.generators]
    return "\n".join(lines) + "\n"


def cyclic_subgroups(G: PermutationGroup) -> list[PermutationGroup]:
    """Distinct subgroups ``<g>`` for ``g`` in ``G``, in order of first generator."""
    seen = set()
    out = []
    for g in G.elements:
        C = generate([g], G.degree, cap=G.order)
        if C not in seen:
            seen.add(C)
            out.append(C)
    return out


def iter_catalog(max_order: int | None = None) -> Iterator[CatalogSpec]:
    """The catalog swept by the structure-theorem suite."""
    specs = [CatalogSpec("cyclic", (n,)) for n in range(1, 25)]
    specs += [CatalogSpec("dihedral", (n,)) for n in range(1, 13)]
    specs += [CatalogSpec("symmetric", (n,)) for n in range(1, 5)]
    specs += [CatalogSpec("alternating", (n,)) for n in range(1, 5)]
    specs += [CatalogSpec("quaternion8"),
              CatalogSpec("direct_product", factors=(CatalogSpec("cyclic", (2,)), CatalogSpec("symmetric", (3,))))]
    for s in specs:
        if max_order is None or expected_order(s) <= max_order:
            yield s
