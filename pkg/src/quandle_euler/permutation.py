"""Permutations of {0, ..., n-1} stored as image tuples.

Composition follows function composition: ``compose(p, q)(i) == p(q(i))``,
so the right-hand factor acts first. ``p * q`` is the same product.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import DegreeMismatch, DegreeZero, NotAPermutation

__all__ = [
    "Permutation",
    "identity",
    "compose",
    "inverse",
    "fixed_points",
    "fixed_point_count",
    "parse_cycles",
]


class Permutation:
    """An immutable bijection of ``range(degree)``.

    ``images[i]`` is the image of ``i``. Equality and hashing go by content.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], *, check: bool = True):
        images = tuple(int(i) for i in images)
        if check:
            if not images:
                raise DegreeZero("a permutation needs degree >= 1")
            if sorted(images) != list(range(len(images))):
                raise NotAPermutation(f"{list(images)} is not a bijection of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def fixed_points(self) -> frozenset[int]:
        return fixed_points(self)

    def fixed_point_count(self) -> int:
        return fixed_point_count(self)

    def to_list(self) -> list[int]:
        return list(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted cycle lengths including fixed points."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * self.fixed_point_count()
        return tuple(sorted(lengths))

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def identity(n: int) -> Permutation:
    if n < 1:
        raise DegreeZero("identity needs degree >= 1")
    return Permutation(range(n), check=False)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p after q, i.e. i -> p(q(i))."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"cannot compose degree {p.degree} with degree {q.degree}")
    return Permutation(map(p.images.__getitem__, q.images), check=False)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images):
        inv[x] = i
    return Permutation(inv, check=False)


def fixed_points(p: Permutation) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(p.images) if i == x)


def fixed_point_count(p: Permutation) -> int:
    return sum(1 for i, x in enumerate(p.images) if i == x)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(0 1)(2 3)"`` into a permutation of the given degree.

    Commas are accepted as separators too. Cycles are applied right to left, so
    overlapping cycles compose like functions.
    """
    text = text.strip()
    if degree < 1:
        raise DegreeZero("degree must be >= 1")
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise NotAPermutation(f"cannot parse cycle notation {text!r}")
    result = identity(degree)
    for body in reversed(_CYCLE_RE.findall(text)):
        points = [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
        if len(set(points)) != len(points):
            raise NotAPermutation(f"repeated point in cycle ({body})")
        if any(not 0 <= x < degree for x in points):
            raise NotAPermutation(f"cycle ({body}) leaves 0..{degree - 1}")
        images = list(range(degree))
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
        result = compose(Permutation(images, check=False), result)
    return result


def as_permutation(obj: Permutation | Sequence[int]) -> Permutation:
    if isinstance(obj, Permutation):
        return obj
    return Permutation(obj)
