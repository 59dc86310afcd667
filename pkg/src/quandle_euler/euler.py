"""The quandle Euler characteristic: min #Fix(g) over g in Dis(X)."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .closure import DEFAULT_CAP, ClosureStream
from .constructors import WeightedGraphSpec
from .errors import NotAbelian, QuandleError
from .groups import is_abelian
from .permutation import Permutation, compose, fixed_point_count, identity, inverse
from .quandle import FiniteQuandle, displacement_generators

__all__ = [
    "EulerReport",
    "euler_characteristic",
    "euler_graph_fast",
    "zero_witness_search",
    "euler_with_search",
]


@dataclass(frozen=True)
class EulerReport:
    """Outcome of an Euler characteristic computation.

    ``value`` is None when the answer is unknown (cap hit with no
    fixed-point-free element seen). ``upper_bound`` is always the smallest
    fixed-point count seen, attained by ``witness``. ``group_order`` is the
    order of Dis(X) when the whole group was enumerated, else None;
    ``explored`` counts the elements actually visited.
    """

    value: int | None
    witness: Permutation | None
    exact: bool
    group_order: int | None
    upper_bound: int
    explored: int

    def to_json(self) -> dict:
        return {
            "chi": self.value,
            "exact": self.exact,
            "witness": self.witness.to_list() if self.witness is not None else None,
            "dis_order": self.group_order,
            "upper_bound": self.upper_bound,
            "explored": self.explored,
        }


def euler_characteristic(X: FiniteQuandle, cap: int = DEFAULT_CAP, early_exit: bool = True) -> EulerReport:
    """Enumerate Dis(X) and take the minimum fixed-point count.

    The witness is the lexicographically smallest minimizer. A fixed-point-free
    element ends the enumeration at once when ``early_exit`` is on; the witness
    is then the first such element in BFS order and ``group_order`` is None.
    """
    stream = ClosureStream(displacement_generators(X), cap=cap, degree=X.size)
    best = None
    best_count = X.size + 1
    stopped_early = False
    for g in stream:
        c = fixed_point_count(g)
        if c < best_count or (c == best_count and g < best):
            best, best_count = g, c
            if c == 0 and early_exit:
                stopped_early = True
                break
    if stopped_early:
        return EulerReport(0, best, True, None, 0, stream.count)
    if stream.truncated:
        return EulerReport(None, best, False, None, best_count, stream.count)
    return EulerReport(best_count, best, True, stream.count, best_count, stream.count)


class _VectorStream:
    """BFS over the subgroup of A^n generated by ``gens``; mirrors ClosureStream."""

    def __init__(self, gens, add, zero, cap):
        self.gens, self.add, self.zero, self.cap = gens, add, zero, cap
        self.count = 0
        self.truncated = False

    def __iter__(self):
        seen = {self.zero}
        queue = deque([self.zero])
        self.count = 1
        yield self.zero
        while queue:
            cur = queue.popleft()
            for g in self.gens:
                nxt = self.add(cur, g)
                if nxt in seen:
                    continue
                if len(seen) >= self.cap:
                    self.truncated = True
                    return
                seen.add(nxt)
                queue.append(nxt)
                self.count += 1
                yield nxt


def euler_graph_fast(spec: WeightedGraphSpec, cap: int = DEFAULT_CAP, early_exit: bool = True) -> EulerReport:
    """Euler characteristic of V x_d A without building permutations.

    Dis is the subgroup of A^n generated by consecutive row differences
    d_i - d_{i+1}; a vector a fixes exactly |A| * #{w : a_w = 0} points.
    Only minimizing vectors are turned into permutations, to pick the
    lexicographically smallest witness.
    """
    A = spec.weight_group
    if not is_abelian(A):
        raise NotAbelian("weight group must be abelian")
    if cap < 1:
        raise QuandleError("cap must be >= 1")
    k = A.order
    e = A.identity_index
    mult = A.mult.tolist()
    zero = (e,) * spec.vertex_count
    gens = sorted(set(spec.row_differences()) - {zero})

    def add(a, b):
        return tuple(mult[x][y] for x, y in zip(a, b))

    stream = _VectorStream(gens, add, zero, cap)
    best_zeros = spec.vertex_count + 1
    minimizers = []
    for a in stream:
        z = a.count(e)
        if z < best_zeros:
            best_zeros, minimizers = z, [a]
            if z == 0 and early_exit:
                w = Permutation(spec.vector_permutation(a), check=False)
                return EulerReport(0, w, True, None, 0, stream.count)
        elif z == best_zeros:
            minimizers.append(a)
    witness = min(Permutation(spec.vector_permutation(a), check=False) for a in minimizers)
    bound = k * best_zeros
    if stream.truncated:
        return EulerReport(None, witness, False, None, bound, stream.count)
    return EulerReport(bound, witness, True, stream.count, bound, stream.count)


def zero_witness_search(X: FiniteQuandle, trials: int = 1000, seed: int = 0) -> Permutation | None:
    """Look for a fixed-point-free element of Dis(X) among random words.

    Trial ``t`` multiplies ``1 + t % 32`` generators (or their inverses)
    drawn from a ``random.Random(seed)`` stream. A hit proves the Euler
    characteristic is 0; a miss proves nothing.
    """
    if trials < 1:
        raise QuandleError("trials must be >= 1")
    gens = displacement_generators(X)
    if not gens:
        return None
    pool = gens + [inverse(g) for g in gens]
    rng = random.Random(seed)
    for t in range(trials):
        word = identity(X.size)
        for _ in range(1 + t % 32):
            word = compose(rng.choice(pool), word)
        if fixed_point_count(word) == 0:
            return word
    return None


def euler_with_search(X: FiniteQuandle, cap: int = DEFAULT_CAP, trials: int = 0, seed: int = 0) -> EulerReport:
    """Exact enumeration, falling back on a random zero-witness search past the cap."""
    report = euler_characteristic(X, cap=cap)
    if report.exact or trials <= 0:
        return report
    w = zero_witness_search(X, trials=trials, seed=seed)
    if w is None:
        return report
    return EulerReport(0, w, True, None, 0, report.explored)
