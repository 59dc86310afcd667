"""Builders for the named quandle families.

All builders return quandles that have gone through :func:`validate`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .errors import DiagonalNonzero, NotAbelian, NotAnAutomorphism, NotSquare, QuandleError
from .groups import FiniteGroup, cyclic, is_abelian, validate_automorphism
from .permutation import as_permutation
from .quandle import FiniteQuandle, direct_product, validate

__all__ = [
    "WeightedGraphSpec",
    "trivial",
    "dihedral",
    "galex",
    "core",
    "discrete_sphere",
    "graph_quandle",
    "cycle_graph_spec",
    "cycle_quandle",
    "path_graph_spec",
    "path_quandle",
    "discrete_torus",
]


def _need_positive(n, what, minimum=1):
    if int(n) != n or n < minimum:
        raise QuandleError(f"{what} must be an integer >= {minimum}, got {n!r}")


def trivial(n: int) -> FiniteQuandle:
    _need_positive(n, "size")
    return validate(np.tile(np.arange(n), (n, 1)))


def dihedral(n: int) -> FiniteQuandle:
    """R_n: Z/n with s_a(b) = 2a - b."""
    _need_positive(n, "n")
    a = np.arange(n)
    return validate((2 * a[:, None] - a[None, :]) % n)


def galex(G: FiniteGroup, sigma) -> FiniteQuandle:
    """Generalized Alexander quandle: s_h(g) = h * sigma(h^{-1} g)."""
    sigma = as_permutation(sigma)
    if sigma.degree != G.order or not validate_automorphism(G, sigma):
        raise NotAnAutomorphism(f"{sigma.to_list()} is not an automorphism of {G!r}")
    s = np.array(sigma.images, dtype=np.int64)
    h = np.arange(G.order)[:, None]
    hinv_g = G.mult[G.inverse[h], np.arange(G.order)[None, :]]
    return validate(G.mult[h, s[hinv_g]])


def core(G: FiniteGroup) -> FiniteQuandle:
    """Core quandle: s_h(g) = h g^{-1} h."""
    h = np.arange(G.order)[:, None]
    g = np.arange(G.order)[None, :]
    return validate(G.mult[G.mult[h, G.inverse[g]], h])


def discrete_sphere(n: int) -> FiniteQuandle:
    """DS^n: the 2(n+1) points +-e_i of the unit sphere in R^{n+1}.

    Index 2k is +e_{k+1} and 2k+1 is -e_{k+1}. The symmetry at either point of
    axis k fixes that axis and negates every other one.
    """
    _need_positive(n, "dimension")
    size = 2 * (n + 1)
    axis = np.arange(size) // 2
    flip = np.arange(size) ^ 1
    ar = np.arange(size)
    t = np.where(axis[:, None] == axis[None, :], ar[None, :], flip[None, :])
    labels = [f"{'+-'[i % 2]}e{i // 2 + 1}" for i in range(size)]
    return validate(t, labels)


@dataclass(frozen=True)
class WeightedGraphSpec:
    """An A-weighted graph (V, A, d) on vertices 0..vertex_count-1.

    ``d[v][w]`` is an element index of ``weight_group``.
    """

    vertex_count: int
    weight_group: FiniteGroup
    d: tuple[tuple[int, ...], ...]

    def __init__(self, vertex_count: int, weight_group: FiniteGroup, d: Sequence[Sequence[int]]):
        _need_positive(vertex_count, "vertex count")
        d = tuple(tuple(int(x) for x in row) for row in d)
        if len(d) != vertex_count or any(len(row) != vertex_count for row in d):
            raise NotSquare(f"weight matrix must be {vertex_count}x{vertex_count}")
        A = weight_group
        if any(not 0 <= x < A.order for row in d for x in row):
            raise NotSquare(f"weights must be element indices 0..{A.order - 1}")
        if not is_abelian(A):
            raise NotAbelian("weight group must be abelian")
        for v in range(vertex_count):
            if d[v][v] != A.identity_index:
                raise DiagonalNonzero(v)
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "weight_group", A)
        object.__setattr__(self, "d", d)

    def __hash__(self):
        return hash((self.vertex_count, self.weight_group, self.d))

    def row_differences(self) -> list[tuple[int, ...]]:
        """d_i - d_{i+1} for consecutive vertices, as tuples of A-indices."""
        A = self.weight_group
        return [
            tuple(A.op(a, A.inv(b)) for a, b in zip(self.d[i], self.d[i + 1]))
            for i in range(self.vertex_count - 1)
        ]

    def vector_permutation(self, a: Sequence[int]) -> list[int]:
        """Images of the translation (w, b) -> (w, a_w + b) on V x A."""
        k = self.weight_group.order
        m = self.weight_group.mult
        return [w * k + int(m[a[w], b]) for w in range(self.vertex_count) for b in range(k)]


def graph_quandle(spec: WeightedGraphSpec) -> FiniteQuandle:
    """V x_d A with s_(v,a)(w,b) = (w, d(v,w) + b); (v, a) sits at index v*|A| + a."""
    A = spec.weight_group
    n, k = spec.vertex_count, A.order
    d = np.array(spec.d, dtype=np.int64)
    # entry [v, a, w, b] = w*k + (d[v,w] + b)
    shifted = A.mult[d]  # [v, w, b] -> d[v,w] + b
    t = np.arange(n)[None, None, :, None] * k + shifted[:, None, :, :]
    t = np.broadcast_to(t, (n, k, n, k)).reshape(n * k, n * k)
    labels = [f"(v{v + 1},{a})" for v in range(n) for a in range(k)]
    return validate(t, labels)


def cycle_graph_spec(n: int) -> WeightedGraphSpec:
    """Z/2-weighted directed n-cycle: d(v_i, v_j) = 1 iff i - j = 1 mod n."""
    _need_positive(n, "n", 2)
    d = [[1 if (i - j) % n == 1 else 0 for j in range(n)] for i in range(n)]
    return WeightedGraphSpec(n, cyclic(2), d)


def cycle_quandle(n: int) -> FiniteQuandle:
    """C_n, size 2n."""
    return graph_quandle(cycle_graph_spec(n))


def path_graph_spec(n: int) -> WeightedGraphSpec:
    """Two vertices with a single Z/n-weighted edge of weight 1 from v_1 to v_2.

    The 1-based pair (v_1, v_2) is (0, 1) here.
    """
    _need_positive(n, "n", 2)
    return WeightedGraphSpec(2, cyclic(n), [[0, 1], [0, 0]])


def path_quandle(n: int) -> FiniteQuandle:
    """B_n, size 2n."""
    return graph_quandle(path_graph_spec(n))


def discrete_torus(m: Sequence[int]) -> FiniteQuandle:
    """DT_u: the direct product R_{m_1} x ... x R_{m_k}."""
    m = list(m)
    if not m:
        raise QuandleError("discrete torus needs at least one factor")
    for mi in m:
        _need_positive(mi, "torus factor")
    return reduce(direct_product, (dihedral(mi) for mi in m))
