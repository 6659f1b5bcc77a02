"""Partitions, n-tuples of partitions, and tableau counts.

A partition is a weakly decreasing tuple of positive ints; ``()`` is the empty
partition. A partition tuple is a tuple of ``n`` partitions. Both are plain
tuples so they hash and compare for free.
"""
from __future__ import annotations

from functools import cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator

from .config import BOUNDS
from .exceptions import BoundExceededError
from .weighted import tuples_of_total

Partition = tuple[int, ...]
PartitionTuple = tuple[Partition, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical partition tuple."""
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def make_partition_tuple(components: Iterable[Iterable[int]], n: int | None = None) -> PartitionTuple:
    lam = tuple(make_partition(c) for c in components)
    if n is not None and len(lam) != n:
        raise ValueError(f"expected {n} components, got {len(lam)}")
    if not lam:
        raise ValueError("a partition tuple needs at least one component")
    return lam


def degree_tuple(lam: PartitionTuple) -> tuple[int, ...]:
    return tuple(sum(p) for p in lam)


def total_degree(lam: PartitionTuple) -> int:
    return sum(sum(p) for p in lam)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def hook_lengths(p: Partition) -> Iterator[int]:
    conj = conjugate(p)
    for i, row in enumerate(p):
        for j in range(row):
            yield (row - j) + (conj[j] - i) - 1


@cache
def specht_dim(p: Partition) -> int:
    """Dimension of the Specht module, by the hook length formula."""
    return factorial(sum(p)) // prod(hook_lengths(p))


def enumerate_syt(p: Partition, bound: int | None = None) -> int:
    """Count standard Young tableaux of shape ``p`` by exhaustive backtracking.

    Each leaf of the search is one tableau: the entries ``1..|p|`` are placed
    in order, each into a cell that keeps the filled region a Young diagram.
    """
    bound = BOUNDS.syt if bound is None else bound
    m = sum(p)
    if m > bound:
        raise BoundExceededError(f"SYT enumeration limited to {bound} boxes, got {m}")
    filled = [0] * len(p)

    def place(k: int) -> int:
        if k == m:
            return 1
        count = 0
        for i in range(len(p)):
            if filled[i] < p[i] and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                count += place(k + 1)
                filled[i] -= 1
        return count

    return place(0)


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff the Young diagram of ``inner`` sits inside that of ``outer``."""
    return len(inner) <= len(outer) and all(x <= y for x, y in zip(inner, outer))


def is_hs1(inner: Partition, outer: Partition) -> bool:
    """True iff ``outer/inner`` is a single box."""
    return sum(outer) == sum(inner) + 1 and contains(outer, inner)


def add_one_box(p: Partition) -> list[Partition]:
    """All partitions obtained by adding one box, lexicographically decreasing."""
    out = []
    for i in range(len(p) + 1):
        current = p[i] if i < len(p) else 0
        if i == 0 or p[i - 1] > current:
            q = list(p) + ([0] if i == len(p) else [])
            q[i] += 1
            out.append(tuple(q))
    return sorted(out, reverse=True)


def remove_one_box(p: Partition) -> list[Partition]:
    """All partitions obtained by deleting one corner box, lexicographically decreasing."""
    out = []
    for i in range(len(p)):
        following = p[i + 1] if i + 1 < len(p) else 0
        if p[i] > following:
            q = list(p)
            q[i] -= 1
            out.append(tuple(x for x in q if x))
    return sorted(out, reverse=True)


def contents(p: Partition) -> Iterator[int]:
    for i, row in enumerate(p):
        for j in range(row):
            yield j - i


def schur_dim_finite(p: Partition, d: int) -> int:
    """Dimension of the Schur functor ``S_p`` on a ``d``-dimensional space.

    Hook content formula, evaluated over exact integers. Shapes with more than
    ``d`` rows give 0 because the cell in row ``d`` of the first column has
    content ``-d``.
    """
    if d < 0:
        raise ValueError(f"dimension must be non-negative, got {d}")
    if len(p) > d:
        return 0
    numerator = prod(d + c for c in contents(p))
    denominator = prod(hook_lengths(p))
    q, r = divmod(numerator, denominator)
    if r:
        raise ArithmeticError(f"hook content quotient not integral for {p}, d={d}")
    return q


def count_ssyt(p: Partition, d: int, bound: int | None = None) -> int:
    """Count semistandard tableaux of shape ``p`` with entries in ``1..d`` exhaustively."""
    bound = BOUNDS.ssyt if bound is None else bound
    if sum(p) > bound:
        raise BoundExceededError(f"SSYT enumeration limited to {bound} boxes, got {sum(p)}")
    cells = [(i, j) for i, row in enumerate(p) for j in range(row)]
    grid: dict[tuple[int, int], int] = {}

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        low = 1
        if j > 0:
            low = max(low, grid[i, j - 1])
        if i > 0:
            low = max(low, grid[i - 1, j] + 1)
        count = 0
        for v in range(low, d + 1):
            grid[i, j] = v
            count += fill(k + 1)
        grid.pop((i, j), None)
        return count

    return fill(0)


@cache
def _partitions_bounded(m: int, largest: int) -> tuple[Partition, ...]:
    if m == 0:
        return ((),)
    out = []
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions_bounded(m - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(m: int, bound: int | None = None) -> tuple[Partition, ...]:
    """Every partition of ``m`` in lexicographically decreasing order."""
    bound = BOUNDS.partitions if bound is None else bound
    if m < 0:
        raise ValueError(f"cannot partition a negative number: {m}")
    if m > bound:
        raise BoundExceededError(f"partition listing limited to size {bound}, got {m}")
    return _partitions_bounded(m, m)


def partition_tuples_of_degree(a: tuple[int, ...]) -> list[PartitionTuple]:
    """All partition tuples whose degree tuple is ``a``."""
    return list(product(*(partitions_of(x) for x in a)))


def sort_key(lam: PartitionTuple):
    """Canonical ordering: total degree, then degree tuple and components lexicographically decreasing."""
    return (
        total_degree(lam),
        tuple(-d for d in degree_tuple(lam)),
        tuple(tuple(-x for x in comp) for comp in lam),
    )


def partition_tuples(n: int, m: int) -> list[PartitionTuple]:
    """All ``n``-tuples of partitions of total size ``m``, in canonical order."""
    out = []
    for a in tuples_of_total(m, n):
        out.extend(partition_tuples_of_degree(a))
    return sorted(out, key=sort_key)


def reverse_tuple(lam: PartitionTuple) -> PartitionTuple:
    return tuple(reversed(lam))
