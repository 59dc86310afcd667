"""Breadth-first enumeration of permutation groups from generators."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptyDegree, MixedDegrees, QuandleError
from .permutation import Permutation, as_permutation, identity, inverse
from .quandle import FiniteQuandle, displacement_generators, inner_generators

__all__ = ["ClosureResult", "ClosureStream", "close", "group_order", "DEFAULT_CAP"]

DEFAULT_CAP = 2_000_000


@dataclass(frozen=True)
class ClosureResult:
    elements: frozenset[Permutation]
    truncated: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p):
        return p in self.elements

    def sorted(self) -> list[Permutation]:
        return sorted(self.elements)


def _prepare(generators, degree):
    gens = sorted({as_permutation(g) for g in generators})
    degrees = {g.degree for g in gens}
    if len(degrees) > 1:
        raise MixedDegrees(f"generators have degrees {sorted(degrees)}")
    if degrees:
        d = degrees.pop()
        if degree is not None and degree != d:
            raise MixedDegrees(f"generators have degree {d}, expected {degree}")
        degree = d
    if degree is None or degree < 1:
        raise EmptyDegree("cannot infer a degree: pass degree= with an empty generator set")
    return gens, degree


class ClosureStream:
    """Elements of the group generated by ``generators``, in BFS order.

    The identity comes first. Generators are sorted beforehand, so the stream
    does not depend on how the caller listed them. Iteration stops after
    ``cap`` elements; ``truncated`` then tells whether elements were left over.
    """

    def __init__(self, generators: Iterable, cap: int = DEFAULT_CAP, degree: int | None = None,
                 seed_inverses: bool = True):
        if cap < 1:
            raise QuandleError("cap must be >= 1")
        self.cap = cap
        self.generators, self.degree = _prepare(generators, degree)
        self.seed_inverses = seed_inverses
        self.count = 0
        self.truncated = False

    def __iter__(self) -> Iterator[Permutation]:
        step = [g.images for g in self.generators]
        if self.seed_inverses:
            for g in self.generators:
                gi = inverse(g)
                if gi != g:
                    step.append(gi.images)
        e = identity(self.degree).images
        seen = {e}
        queue = deque([e])
        self.count = 1
        self.truncated = False
        yield Permutation(e, check=False)
        while queue:
            cur = queue.popleft()
            for g in step:
                nxt = tuple(map(g.__getitem__, cur))  # g after cur
                if nxt in seen:
                    continue
                if len(seen) >= self.cap:
                    self.truncated = True
                    return
                seen.add(nxt)
                queue.append(nxt)
                self.count += 1
                yield Permutation(nxt, check=False)


def close(generators: Iterable, cap: int = DEFAULT_CAP, degree: int | None = None,
          seed_inverses: bool = True) -> ClosureResult:
    """All elements of the group generated by ``generators``, up to ``cap`` of them.

    If the group has more than ``cap`` elements the result holds exactly
    ``cap`` of them and ``truncated`` is set. An empty generator list needs an
    explicit ``degree`` and yields the trivial group. With
    ``seed_inverses=False`` only forward products are taken, which for a
    finite group gives the same set.
    """
    stream = ClosureStream(generators, cap, degree, seed_inverses)
    elements = frozenset(stream)
    return ClosureResult(elements, stream.truncated)


def group_order(X: FiniteQuandle, which: str = "displacement", cap: int = DEFAULT_CAP) -> int | None:
    """Order of Inn(X) (``which="inner"``) or Dis(X); None if it exceeds ``cap``."""
    if which in ("inner", "inn"):
        gens = inner_generators(X)
    elif which in ("displacement", "dis"):
        gens = displacement_generators(X)
    else:
        raise QuandleError(f"unknown group {which!r}; use 'inner' or 'displacement'")
    res = close(gens, cap=cap, degree=X.size)
    return None if res.truncated else res.order
