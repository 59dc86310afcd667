"""Finite groups given by full multiplication tables."""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .errors import (
    DegreeMismatch,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatin,
    NotSquare,
    OrderZero,
)
from .permutation import Permutation, as_permutation, compose

__all__ = [
    "FiniteGroup",
    "cyclic",
    "direct_product_group",
    "from_table",
    "symmetric_group",
    "validate_automorphism",
    "is_abelian",
    "is_elementary_abelian_2",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class FiniteGroup:
    """A validated finite group on {0, ..., order-1}.

    ``mult[a, b]`` is the product ``a*b``. Instances should come from
    :func:`from_table` or one of the named builders, which check the axioms.
    """

    def __init__(self, mult, identity_index: int, inverse, name: str | None = None):
        self.mult = _frozen(mult)
        self.identity_index = int(identity_index)
        self.inverse = _frozen(inverse)
        self.name = name

    @property
    def order(self) -> int:
        return self.mult.shape[0]

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.identity_index == other.identity_index and np.array_equal(self.mult, other.mult)

    def __hash__(self):
        return hash(self.mult.tobytes())

    def __repr__(self):
        label = self.name or "FiniteGroup"
        return f"<{label} of order {self.order}>"

    def op(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity_index:
            x = int(self.mult[x, a])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return is_abelian(self)


def _locate_identity_and_inverses(m: np.ndarray) -> tuple[int, np.ndarray]:
    n = m.shape[0]
    ar = np.arange(n)
    e = None
    for cand in range(n):
        if np.array_equal(m[cand], ar) and np.array_equal(m[:, cand], ar):
            e = cand
            break
    if e is None:
        raise NoIdentity("no two-sided identity element")
    inv = np.empty(n, dtype=np.int64)
    for a in range(n):
        hits = np.flatnonzero(m[a] == e)
        ok = [b for b in hits if m[b, a] == e]
        if not ok:
            raise NoInverse(a)
        inv[a] = ok[0]
    return e, inv


def _check_latin(m: np.ndarray) -> None:
    n = m.shape[0]
    ar = np.arange(n)
    for a in range(n):
        if not np.array_equal(np.sort(m[a]), ar):
            raise NotLatin("row", a)
    for b in range(n):
        if not np.array_equal(np.sort(m[:, b]), ar):
            raise NotLatin("column", b)


def _check_associative(m: np.ndarray) -> None:
    # for each a: (a*b)*c over all (b, c) vs a*(b*c) over all (b, c)
    for a in range(m.shape[0]):
        left = m[m[a]]
        right = m[a][m]
        bad = np.argwhere(left != right)
        if bad.size:
            b, c = bad[0]
            raise NotAssociative(a, int(b), int(c))


def from_table(mult: Sequence[Sequence[int]], name: str | None = None) -> FiniteGroup:
    """Validate a multiplication table and wrap it as a group.

    Checks, in order: squareness and range, Latin property, identity,
    inverses, associativity (full cubic check).
    """
    try:
        m = np.array(mult, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise NotSquare(f"table is not a rectangular integer array: {exc}") from None
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSquare(f"table must be square, got shape {m.shape}")
    n = m.shape[0]
    if n == 0:
        raise OrderZero("empty table")
    if m.min() < 0 or m.max() >= n:
        raise NotSquare(f"entries must lie in 0..{n - 1}")
    _check_latin(m)
    e, inv = _locate_identity_and_inverses(m)
    _check_associative(m)
    return FiniteGroup(m, e, inv, name=name)


def cyclic(n: int) -> FiniteGroup:
    """Z/nZ with identity 0."""
    if n < 1:
        raise OrderZero("cyclic group needs n >= 1")
    ar = np.arange(n)
    mult = (ar[:, None] + ar[None, :]) % n
    inv = (-ar) % n
    return FiniteGroup(mult, 0, inv, name=f"Z/{n}")


def direct_product_group(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with the pair (g, h) stored at index g*|H| + h."""
    m = G.order
    k = H.order
    mult = (G.mult[:, None, :, None] * k + H.mult[None, :, None, :]).reshape(m * k, m * k)
    inv = (G.inverse[:, None] * k + H.inverse[None, :]).reshape(m * k)
    e = G.identity_index * k + H.identity_index
    name = None
    if G.name and H.name:
        name = f"{G.name} x {H.name}"
    return FiniteGroup(mult, e, inv, name=name)


def symmetric_group(n: int) -> FiniteGroup:
    """S_n acting on n points, elements indexed in lexicographic order of image tuples.

    The product is function composition, ``(p*q)(i) = p(q(i))``. Index 0 is the identity.
    """
    if n < 1:
        raise OrderZero("symmetric group needs n >= 1")
    perms = [Permutation(p, check=False) for p in itertools.permutations(range(n))]
    index = {p: i for i, p in enumerate(perms)}
    mult = [[index[compose(p, q)] for q in perms] for p in perms]
    return from_table(mult, name=f"S_{n}")


def validate_automorphism(G: FiniteGroup, sigma) -> bool:
    """True iff ``sigma`` is a group automorphism of G."""
    sigma = as_permutation(sigma)
    if sigma.degree != G.order:
        raise DegreeMismatch(f"map has degree {sigma.degree}, group has order {G.order}")
    s = np.array(sigma.images, dtype=np.int64)
    if s[G.identity_index] != G.identity_index:
        return False
    # sigma(a*b) == sigma(a)*sigma(b) for all a, b
    return bool(np.array_equal(s[G.mult], G.mult[np.ix_(s, s)]))


def is_abelian(G: FiniteGroup) -> bool:
    return bool(np.array_equal(G.mult, G.mult.T))


def is_elementary_abelian_2(G: FiniteGroup) -> bool:
    """Every element squares to the identity (G is a power of Z/2)."""
    return bool(np.all(np.diagonal(G.mult) == G.identity_index))
