"""Permutations of {1..d} and cycle notation."""

from __future__ import annotations

import functools
import re
from collections.abc import Iterable, Sequence

import numpy as np

from .errors import CycleParseError, DegreeMismatchError

__all__ = [
    "Permutation",
    "compose",
    "inverse",
    "identity",
    "parse_cycles",
    "format_cycles",
    "parse_generator_list",
]


@functools.total_ordering
class Permutation:
    """A bijection of ``{1..degree}`` stored as its 1-based image tuple.

    Products read left to right: ``p * q`` applies ``p`` first, so
    ``(p * q)(x) == q(p(x))``.  Ordering is lexicographic on images.
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        self._images = imgs

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p._images = images
        return p

    @classmethod
    def from_array(cls, row: np.ndarray | Sequence[int]) -> Permutation:
        """Build from a 0-based image row (the internal table format)."""
        return cls._trusted(tuple(int(x) + 1 for x in row))

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def as_array(self) -> np.ndarray:
        return np.fromiter((x - 1 for x in self._images), dtype=np.int32, count=self.degree)

    def __call__(self, x: int) -> int:
        return self._images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, n: int) -> Permutation:
        base = self if n >= 0 else inverse(self)
        out = identity(self.degree)
        for _ in range(abs(n)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self._images, 1))

    def order(self) -> int:
        from math import lcm
        return lcm(1, *(len(c) for c in self.cycles()))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial disjoint cycles, each starting at its minimum point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: Permutation) -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)


def _check_degree(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise DegreeMismatchError(f"degree {p.degree} vs {q.degree}")


def identity(degree: int) -> Permutation:
    return Permutation._trusted(tuple(range(1, degree + 1)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p·q``: apply ``p``, then ``q``."""
    _check_degree(p, q)
    qi = q.images
    return Permutation._trusted(tuple(qi[x - 1] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for i, x in enumerate(p.images, 1):
        out[x - 1] = i
    return Permutation._trusted(tuple(out))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity.

    Points are 1-based and separated by whitespace or commas inside a cycle.
    """
    s = text.strip()
    if not s:
        raise CycleParseError("empty cycle string")
    pos = 0
    images = list(range(1, degree + 1))
    used: set[int] = set()
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(s, pos)
        if m is None:
            raise CycleParseError(f"malformed cycle string {text!r} at offset {pos}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(t) for t in body]
        except ValueError:
            raise CycleParseError(f"non-integer point in {text!r}") from None
        for x in pts:
            if not 1 <= x <= degree:
                raise CycleParseError(f"point {x} out of range 1..{degree}")
            if x in used:
                raise CycleParseError(f"point {x} repeated in {text!r}")
            used.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b
    return Permutation._trusted(tuple(images))


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def parse_generator_list(text: str, degree: int) -> list[Permutation]:
    """Split a comma-separated generator list, e.g. ``"(1 2)(3 4), (1 3)"``.

    Commas inside parentheses belong to a cycle and are not separators.
    """
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise CycleParseError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise CycleParseError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    parts = [p for p in (q.strip() for q in parts) if p]
    return [parse_cycles(p, degree) for p in parts]
