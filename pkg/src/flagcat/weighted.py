"""Weighted finite sets and the upward bijections between them.

A weight tuple ``a = (a_1, ..., a_n)`` stands for the weighted set with
``a_i`` elements of weight ``i``. Its elements are flattened weight-major, so
positions ``0 .. a_1-1`` carry weight 1, the next ``a_2`` positions weight 2,
and so on. A morphism is stored as the tuple of image positions of this
flattening.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import accumulate
from math import comb, factorial, prod
from typing import Iterable

from .config import BOUNDS
from .exceptions import BoundExceededError, ComposabilityError, DimensionMismatchError

WeightTuple = tuple[int, ...]


def make_weight_tuple(entries: Iterable[int], n: int | None = None) -> WeightTuple:
    a = tuple(int(x) for x in entries)
    if any(x < 0 for x in a):
        raise ValueError(f"weight tuple entries must be non-negative: {a}")
    if not a:
        raise ValueError("a weight tuple needs at least one entry")
    if n is not None and len(a) != n:
        raise DimensionMismatchError(f"expected {n} entries, got {len(a)}")
    return a


def _same_n(a: WeightTuple, b: WeightTuple) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"tuples of different length: {a} vs {b}")


def weights(a: WeightTuple) -> tuple[int, ...]:
    """Weight (1-based) of each flattened position of ``a``."""
    return tuple(i + 1 for i, x in enumerate(a) for _ in range(x))


def tau(a: WeightTuple) -> WeightTuple:
    """Reverse the tuple; this swaps the roles of weights ``i`` and ``n-i+1``."""
    return tuple(reversed(a))


def add(a: WeightTuple, b: WeightTuple) -> WeightTuple:
    _same_n(a, b)
    return tuple(x + y for x, y in zip(a, b))


def dominance_geq(a: WeightTuple, b: WeightTuple) -> bool:
    """``a >= b`` in dominance: equal totals and every prefix sum of ``a`` at least that of ``b``."""
    _same_n(a, b)
    if sum(a) != sum(b):
        return False
    return all(x >= y for x, y in zip(accumulate(a), accumulate(b)))


def dominance_gt(a: WeightTuple, b: WeightTuple) -> bool:
    return a != b and dominance_geq(a, b)


@cache
def tuples_of_total(m: int, n: int) -> tuple[WeightTuple, ...]:
    """All ``n``-tuples of non-negative ints summing to ``m``, lexicographically decreasing."""
    if n == 1:
        return ((m,),)
    return tuple((first,) + rest for first in range(m, -1, -1) for rest in tuples_of_total(m - first, n - 1))


def _covers_below_direct(a: WeightTuple) -> list[WeightTuple]:
    out = []
    for i in range(len(a) - 1):
        if a[i] > 0:
            b = list(a)
            b[i] -= 1
            b[i + 1] += 1
            out.append(tuple(b))
    return out


def _covers_below_materialized(a: WeightTuple) -> list[WeightTuple]:
    below = [c for c in tuples_of_total(sum(a), len(a)) if dominance_gt(a, c)]
    return [c for c in below if not any(dominance_gt(d, c) for d in below)]


def cover_relations_below(a: WeightTuple, materialize_max: int | None = None) -> list[WeightTuple]:
    """Tuples ``b`` covered by ``a`` in dominance, lexicographically decreasing.

    Small totals are answered from the full poset. Larger ones use the fact
    that covers move a single unit from position ``i`` to ``i+1``.
    """
    materialize_max = BOUNDS.poset_materialize if materialize_max is None else materialize_max
    if sum(a) <= materialize_max:
        found = _covers_below_materialized(a)
    else:
        found = _covers_below_direct(a)
    return sorted(found, reverse=True)


def cover_relations_above(a: WeightTuple) -> list[WeightTuple]:
    out = []
    for i in range(len(a) - 1):
        if a[i + 1] > 0:
            b = list(a)
            b[i] += 1
            b[i + 1] -= 1
            out.append(tuple(b))
    return sorted(out, reverse=True)


def cover_index(a: WeightTuple, b: WeightTuple) -> int | None:
    """The 0-based ``i`` with ``b = a - e_i + e_{i+1}``, or None when ``a`` does not cover ``b`` that way."""
    _same_n(a, b)
    diff = [x - y for x, y in zip(a, b)]
    for i in range(len(a) - 1):
        if diff[i] == 1 and diff[i + 1] == -1 and all(d == 0 for k, d in enumerate(diff) if k not in (i, i + 1)):
            return i
    return None


def count_u_morphisms(a: WeightTuple, b: WeightTuple) -> int:
    """Number of weight-non-decreasing bijections ``a -> b``.

    Closed product ``b_1!...b_n! * prod_i C(A_i - B_{i-1}, b_i)`` with prefix
    sums ``A``, ``B``: the weight-``i`` targets are filled from the source
    elements of weight at most ``i`` not already used.
    """
    _same_n(a, b)
    if not dominance_geq(a, b):
        return 0
    pa = list(accumulate(a))
    pb = [0] + list(accumulate(b))
    binomials = prod(comb(pa[i] - pb[i], b[i]) for i in range(len(a) - 1))
    return prod(factorial(x) for x in b) * binomials


@dataclass(frozen=True)
class UMorphism:
    """A weight-non-decreasing bijection; ``map[k]`` is the image position of source position ``k``."""

    source: WeightTuple
    target: WeightTuple
    map: tuple[int, ...]

    def __post_init__(self):
        _same_n(self.source, self.target)
        size = sum(self.source)
        if sum(self.target) != size or sorted(self.map) != list(range(size)):
            raise ValueError(f"not a bijection {self.source} -> {self.target}: {self.map}")
        ws, wt = weights(self.source), weights(self.target)
        if any(wt[self.map[k]] < ws[k] for k in range(size)):
            raise ValueError(f"morphism decreases a weight: {self.map}")

    def __call__(self, k: int) -> int:
        return self.map[k]


def identity(a: WeightTuple) -> UMorphism:
    return UMorphism(a, a, tuple(range(sum(a))))


def compose(g: UMorphism, f: UMorphism) -> UMorphism:
    """``g o f``: first ``f``, then ``g``."""
    if f.target != g.source:
        raise ComposabilityError(f"cannot compose: target {f.target} != source {g.source}")
    return UMorphism(f.source, g.target, tuple(g.map[x] for x in f.map))


def enumerate_u_morphisms(a: WeightTuple, b: WeightTuple, bound: int | None = None) -> list[UMorphism]:
    """Every morphism ``a -> b`` by exhaustive search, in lexicographic order of ``map``."""
    _same_n(a, b)
    bound = BOUNDS.morphisms if bound is None else bound
    if sum(a) > bound:
        raise BoundExceededError(f"morphism enumeration limited to total {bound}, got {sum(a)}")
    if sum(a) != sum(b):
        return []
    return [UMorphism(a, b, m) for m in _weight_respecting_bijections(weights(a), weights(b), 1)]


def enumerate_d_morphisms(a: WeightTuple, b: WeightTuple, bound: int | None = None) -> list[tuple[int, ...]]:
    """Maps of weight-non-increasing bijections ``a -> b``, found by the same exhaustive search."""
    _same_n(a, b)
    bound = BOUNDS.morphisms if bound is None else bound
    if sum(a) > bound:
        raise BoundExceededError(f"morphism enumeration limited to total {bound}, got {sum(a)}")
    if sum(a) != sum(b):
        return []
    return list(_weight_respecting_bijections(weights(a), weights(b), -1))


def _weight_respecting_bijections(ws, wt, direction):
    size = len(ws)
    used = [False] * size
    current = []

    def search(k):
        if k == size:
            yield tuple(current)
            return
        for y in range(size):
            if not used[y] and (wt[y] - ws[k]) * direction >= 0:
                used[y] = True
                current.append(y)
                yield from search(k + 1)
                current.pop()
                used[y] = False

    yield from search(0)
