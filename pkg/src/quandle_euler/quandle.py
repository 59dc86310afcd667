"""Finite quandles as Cayley tables.

Row convention: ``table[x, y] == s_x(y)``, where ``x`` is the centre of the
point symmetry. Every public function here treats a :class:`FiniteQuandle`
as read-only.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .errors import NotSquare, Q1Violation, Q2Violation, Q3Violation, SearchBudgetExceeded
from .permutation import Permutation, as_permutation, compose, inverse

__all__ = [
    "FiniteQuandle",
    "validate",
    "point_symmetry",
    "inner_generators",
    "displacement_generators",
    "is_trivial",
    "is_connected",
    "is_homogeneous",
    "find_automorphism",
    "orbits",
    "direct_product",
    "free_union",
    "relabel",
    "DEFAULT_NODE_BUDGET",
]

DEFAULT_NODE_BUDGET = 10_000_000


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class FiniteQuandle:
    """A validated finite quandle.

    Build one with :func:`validate` (or any constructor); the initializer does
    not re-check the axioms.
    """

    def __init__(self, table: np.ndarray, labels: Sequence[str] | None = None):
        self.table = _frozen(table)
        inv = np.empty_like(self.table)
        rows = np.arange(self.size)[:, None]
        inv[rows, self.table] = np.arange(self.size)[None, :]
        self.inv_table = _frozen(inv)
        self.labels = tuple(labels) if labels is not None else None

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if not isinstance(other, FiniteQuandle):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"<FiniteQuandle of size {self.size}>"

    def s(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def s_inv(self, x: int, y: int) -> int:
        return int(self.inv_table[x, y])

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def to_lists(self) -> list[list[int]]:
        return self.table.tolist()


def validate(table, labels: Sequence[str] | None = None) -> FiniteQuandle:
    """Check the three quandle axioms and return the quandle.

    Violations raise with the first witnessing indices in row-major order.
    """
    try:
        t = np.array(table, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise NotSquare(f"table is not a rectangular integer array: {exc}") from None
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotSquare(f"table must be a non-empty square matrix, got shape {t.shape}")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise NotSquare(f"entries must lie in 0..{n - 1}")
    if labels is not None and len(labels) != n:
        raise NotSquare(f"{len(labels)} labels given for {n} elements")
    ar = np.arange(n)
    bad = np.flatnonzero(t[ar, ar] != ar)
    if bad.size:
        raise Q1Violation(int(bad[0]))
    for x in range(n):
        if not np.array_equal(np.sort(t[x]), ar):
            raise Q2Violation(x)
    # s_x(s_y(z)) == s_{s_x(y)}(s_x(z)), one x at a time over all (y, z)
    for x in range(n):
        row = t[x]
        left = row[t]
        right = t[np.ix_(row, row)]
        hits = np.argwhere(left != right)
        if hits.size:
            y, z = hits[0]
            raise Q3Violation(x, int(y), int(z))
    return FiniteQuandle(t, labels)


def point_symmetry(X: FiniteQuandle, x: int) -> Permutation:
    if not 0 <= x < X.size:
        raise IndexError(f"element {x} out of range for quandle of size {X.size}")
    return Permutation(X.table[x].tolist(), check=False)


def _dedup_sorted(perms: Iterable[Permutation]) -> list[Permutation]:
    return sorted(set(perms))


def inner_generators(X: FiniteQuandle) -> list[Permutation]:
    """The distinct point symmetries, sorted by image tuple."""
    return _dedup_sorted(Permutation(r, check=False) for r in X.table.tolist())


def displacement_generators(X: FiniteQuandle) -> list[Permutation]:
    """The distinct non-identity maps s_x s_y^{-1}, sorted by image tuple.

    An empty list stands for the trivial group.
    """
    rows = inner_generators(X)
    invs = [inverse(r) for r in rows]
    gens = {compose(a, b) for a in rows for b in invs}
    return sorted(g for g in gens if not g.is_identity())


def is_trivial(X: FiniteQuandle) -> bool:
    return bool(np.all(X.table == np.arange(X.size)[None, :]))


def _orbit(start: int, generators: Sequence[Sequence[int]]) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for g in generators:
            q = g[p]
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def orbits(n: int, generators: Iterable[Permutation | Sequence[int]]) -> list[frozenset[int]]:
    """Orbit partition of {0..n-1} under the group generated by ``generators``.

    Orbits are sorted by their smallest point.
    """
    gens = [tuple(g) for g in generators]
    gens += [tuple(inverse(as_permutation(g))) for g in gens]
    out = []
    seen: set[int] = set()
    for p in range(n):
        if p in seen:
            continue
        orb = _orbit(p, gens)
        seen |= orb
        out.append(frozenset(orb))
    return out


def is_connected(X: FiniteQuandle) -> bool:
    """Inn(X) is transitive; checked by orbit search from element 0."""
    gens = X.table.tolist() + X.inv_table.tolist()
    return len(_orbit(0, gens)) == X.size


def find_automorphism(X: FiniteQuandle, source: int, target: int,
                      budget: int = DEFAULT_NODE_BUDGET, _counter=None) -> Permutation | None:
    """Search for a quandle automorphism f with f(source) == target.

    Backtracking over images; after each choice the partial map is closed under
    f(s_x(y)) = s_{f(x)}(f(y)) and its inverse-row analogue. Candidate images
    are pruned by the cycle type of the point symmetry, which any automorphism
    preserves. Raises :class:`SearchBudgetExceeded` after ``budget`` nodes.
    """
    n = X.size
    T = X.table.tolist()
    TI = X.inv_table.tolist()
    sig = [Permutation(r, check=False).cycle_type() for r in T]
    if sig[source] != sig[target]:
        return None
    counter = _counter if _counter is not None else [0]

    def propagate(f, used, new, known):
        # close f over products with the new point; known points are already closed
        queue = [new]
        done = list(known) + [new]
        while queue:
            x = queue.pop()
            fx = f[x]
            for y in list(done):
                fy = f[y]
                for a, b, fa, fb in ((x, y, fx, fy), (y, x, fy, fx)):
                    for tab in (T, TI):
                        z, fz = tab[a][b], tab[fa][fb]
                        cur = f[z]
                        if cur == -1:
                            if used[fz] or sig[z] != sig[fz]:
                                return None
                            f[z] = fz
                            used[fz] = True
                            queue.append(z)
                            done.append(z)
                        elif cur != fz:
                            return None
        return done

    def search(f, used, new, known):
        counter[0] += 1
        if counter[0] > budget:
            raise SearchBudgetExceeded(f"automorphism search exceeded {budget} nodes")
        f = list(f)
        used = list(used)
        done = propagate(f, used, new, known)
        if done is None:
            return None
        x = next((i for i in range(n) if f[i] == -1), None)
        if x is None:
            return f
        for cand in range(n):
            if used[cand] or sig[cand] != sig[x]:
                continue
            f2 = list(f)
            used2 = list(used)
            f2[x] = cand
            used2[cand] = True
            res = search(f2, used2, x, done)
            if res is not None:
                return res
        return None

    f0 = [-1] * n
    used0 = [False] * n
    f0[source] = target
    used0[target] = True
    res = search(f0, used0, source, [])
    if res is None:
        return None
    perm = Permutation(res)
    # propagation closes f over all products, so this only guards against slips
    for x in range(n):
        for y in range(n):
            if res[T[x][y]] != T[res[x]][res[y]]:
                raise AssertionError("automorphism search produced a non-homomorphism")
    return perm


def is_homogeneous(X: FiniteQuandle, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Aut(X) acts transitively.

    Inn(X) is normal in Aut(X), so the Aut-orbit of 0 is a union of
    Inn-orbits; one automorphism search per Inn-orbit suffices. ``budget``
    caps the total number of search nodes across all searches.
    """
    parts = orbits(X.size, X.table.tolist())
    reached = set(next(p for p in parts if 0 in p))
    counter = [0]
    for part in parts:
        if 0 in part:
            continue
        t = min(part)
        if find_automorphism(X, 0, t, budget=budget, _counter=counter) is None:
            return False
        reached |= part
    return len(reached) == X.size


def direct_product(X1: FiniteQuandle, X2: FiniteQuandle) -> FiniteQuandle:
    """Componentwise quandle on X1 x X2, pair (a, b) at index a*|X2| + b."""
    n1, n2 = X1.size, X2.size
    t = (X1.table[:, None, :, None] * n2 + X2.table[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = None
    if X1.labels or X2.labels:
        labels = [f"({X1.label(a)},{X2.label(b)})" for a in range(n1) for b in range(n2)]
    return validate(t, labels)


def free_union(X1: FiniteQuandle, X2: FiniteQuandle) -> FiniteQuandle:
    """Interaction-free union: X1 keeps indices 0..n1-1, X2 is shifted by n1.

    A symmetry centred in one part acts as the identity on the other part.
    """
    n1, n2 = X1.size, X2.size
    n = n1 + n2
    t = np.tile(np.arange(n), (n, 1))
    t[:n1, :n1] = X1.table
    t[n1:, n1:] = X2.table + n1
    labels = None
    if X1.labels or X2.labels:
        labels = [X1.label(a) for a in range(n1)] + [X2.label(b) for b in range(n2)]
    return validate(t, labels)


def relabel(X: FiniteQuandle, pi) -> FiniteQuandle:
    """Transport X along the bijection pi: new[pi(x)][pi(y)] = pi(old[x][y])."""
    p = np.array(as_permutation(pi).images, dtype=np.int64)
    if p.size != X.size:
        raise NotSquare(f"relabelling has degree {p.size}, quandle has size {X.size}")
    t = np.empty_like(X.table)
    t[np.ix_(p, p)] = p[X.table]
    labels = None
    if X.labels:
        labels = [None] * X.size
        for x, px in enumerate(p):
            labels[px] = X.labels[x]
    return validate(t, labels)
