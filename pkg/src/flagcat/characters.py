"""Characters of products of symmetric groups.

Conjugacy classes of ``S_a = S_{a_1} x ... x S_{a_n}`` are labelled by one
cycle type per weight block. Everything is computed in exact integers; the
only division, in :func:`decompose_bimodule`, is checked for exactness.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache, lru_cache
from itertools import permutations, product
from math import factorial, prod

from .config import BOUNDS
from .exceptions import BoundExceededError, ConsistencyError, DegreeMismatchError, DimensionMismatchError
from .partitions import Partition, PartitionTuple, contains, partitions_of
from .weighted import WeightTuple, dominance_geq, weights

ClassLabel = tuple[Partition, ...]


def centralizer_order(rho: Partition) -> int:
    counts: dict[int, int] = {}
    for part in rho:
        counts[part] = counts.get(part, 0) + 1
    return prod(k**m * factorial(m) for k, m in counts.items())


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // centralizer_order(rho)


def product_class_size(cls: ClassLabel) -> int:
    return prod(class_size(rho) for rho in cls)


def classes_of(a: WeightTuple) -> list[ClassLabel]:
    """Conjugacy classes of ``S_a``."""
    return list(product(*(partitions_of(x) for x in a)))


def _beta_set(p: Partition) -> tuple[int, ...]:
    length = len(p)
    return tuple(part + length - 1 - j for j, part in enumerate(p))


def _from_beta_set(beta) -> Partition:
    ordered = sorted(beta, reverse=True)
    length = len(ordered)
    return tuple(x for x in (b - (length - 1 - j) for j, b in enumerate(ordered)) if x > 0)


@cache
def _mn(p: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not p else 0
    k, rest = rho[0], rho[1:]
    beta = set(_beta_set(p))
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beta:
            continue
        # a rim hook of length k; its height is the number of beads jumped over
        height = sum(1 for x in beta if target < x < b)
        smaller = _from_beta_set((beta - {b}) | {target})
        total += (-1) ** height * _mn(smaller, rest)
    return total


def mn_character(p: Partition, cycle_type: Partition) -> int:
    """The irreducible character of shape ``p`` on the class of the given cycle type."""
    if sum(p) != sum(cycle_type):
        raise DegreeMismatchError(f"|{p}| != |{cycle_type}|")
    return _mn(tuple(p), tuple(sorted(cycle_type, reverse=True)))


def product_character(lam: PartitionTuple, cls: ClassLabel) -> int:
    """Character of the outer tensor product of Specht modules on a class of ``S_a``."""
    if len(lam) != len(cls):
        raise DegreeMismatchError(f"{len(lam)} factors vs {len(cls)} classes")
    return prod(mn_character(p, rho) for p, rho in zip(lam, cls))


def frobenius_character(p: Partition, cycle_type: Partition) -> int:
    """Character value from the Frobenius formula.

    The coefficient of ``x^(p + delta)`` in ``a_delta * prod_k p_{rho_k}``,
    with power sums expanded monomial by monomial. Slow; used as an oracle.
    """
    if sum(p) != sum(cycle_type):
        raise DegreeMismatchError(f"|{p}| != |{cycle_type}|")
    length = max(len(p), 1)
    power_sum_product = {(0,) * length: 1}
    for k in cycle_type:
        expanded: dict[tuple[int, ...], int] = {}
        for mono, coeff in power_sum_product.items():
            for v in range(length):
                new = list(mono)
                new[v] += k
                key = tuple(new)
                expanded[key] = expanded.get(key, 0) + coeff
        power_sum_product = expanded
    delta = tuple(range(length - 1, -1, -1))
    padded = tuple(p) + (0,) * (length - len(p))
    goal = tuple(x + d for x, d in zip(padded, delta))
    total = 0
    for perm in permutations(range(length)):
        inversions = sum(1 for i in range(length) for j in range(i + 1, length) if perm[i] > perm[j])
        shifted = tuple(goal[v] - delta[perm[v]] for v in range(length))
        total += (-1) ** inversions * power_sum_product.get(shifted, 0)
    return total


@cache
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient ``c^nu_{lam, mu}`` by counting LR tableaux.

    Fills the skew shape ``nu/lam`` with content ``mu`` so rows weakly increase,
    columns strictly increase, and the right-to-left, top-to-bottom reading
    word is a lattice word.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam):
        return 0
    if not mu:
        return 1
    # cells of the skew shape in reading order: rows top to bottom, right to left
    cells = [(i, j) for i, row in enumerate(nu) for j in range(row - 1, (lam[i] if i < len(lam) else 0) - 1, -1)]
    in_skew = set(cells)
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * len(mu)

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        hi = len(mu)  # entries are 1..len(mu)
        if (i, j + 1) in in_skew:
            hi = min(hi, grid[i, j + 1])
        lo = 1
        if (i - 1, j) in in_skew:
            lo = grid[i - 1, j] + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v - 1] >= mu[v - 1]:
                continue
            if v > 1 and counts[v - 1] + 1 > counts[v - 2]:
                continue
            counts[v - 1] += 1
            grid[i, j] = v
            total += fill(k + 1)
            counts[v - 1] -= 1
        grid.pop((i, j), None)
        return total

    return fill(0)


def lr_expand(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """The induction product of Specht modules ``lam`` and ``mu`` as ``{nu: c^nu_{lam,mu}}``."""
    out = {}
    for nu in partitions_of(sum(lam) + sum(mu)):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def class_representative(a: WeightTuple, cls: ClassLabel) -> tuple[int, ...]:
    """A permutation of the flattened positions of ``a`` in class ``cls``, block by block."""
    perm = []
    offset = 0
    for size, rho in zip(a, cls):
        if sum(rho) != size:
            raise DegreeMismatchError(f"cycle type {rho} in a block of size {size}")
        for length in rho:
            cycle = list(range(offset, offset + length))
            perm.extend(cycle[1:] + cycle[:1])
            offset += length
    return tuple(perm)


def _cycles(perm: tuple[int, ...]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = perm[x]
        out.append(cycle)
    return out


def count_fixed_morphisms(a: WeightTuple, b: WeightTuple, sigma: tuple[int, ...], tau_: tuple[int, ...]) -> int:
    """Number of morphisms ``phi: a -> b`` with ``tau o phi o sigma^-1 = phi``.

    Exhaustive search over fixed morphisms: choosing the image of one point of
    a ``sigma``-cycle forces the images of the whole cycle.
    """
    if sum(a) != sum(b):
        return 0
    ws, wt = weights(a), weights(b)
    size = len(ws)
    used = [False] * size
    cycles = _cycles(sigma)

    def search(ci: int) -> int:
        if ci == len(cycles):
            return 1
        cycle = cycles[ci]
        total = 0
        for y in range(size):
            if used[y]:
                continue
            images = []
            z = y
            ok = True
            for x in cycle:
                if used[z] or wt[z] < ws[x]:
                    ok = False
                    break
                used[z] = True
                images.append(z)
                z = tau_[z]
            if ok and z == y:
                total += search(ci + 1)
            for z in images:
                used[z] = False
        return total

    return search(0)


@dataclass(frozen=True)
class BiCharacter:
    """Character of ``C[Hom(a, b)]`` under ``S_a x S_b``, one value per pair of classes."""

    source: WeightTuple
    target: WeightTuple
    values: dict[tuple[ClassLabel, ClassLabel], int]

    def __call__(self, source_class: ClassLabel, target_class: ClassLabel) -> int:
        return self.values[source_class, target_class]


def _check_bimodule_bound(a: WeightTuple, b: WeightTuple, bound: int | None) -> None:
    bound = BOUNDS.bimodule if bound is None else bound
    if max(sum(a), sum(b)) > bound:
        raise BoundExceededError(f"bimodule characters limited to total {bound}, got {sum(a)}")


@lru_cache(maxsize=None)
def _bicharacter(a: WeightTuple, b: WeightTuple) -> BiCharacter:
    values = {}
    for cs in classes_of(a):
        sigma = class_representative(a, cs)
        for ct in classes_of(b):
            values[cs, ct] = count_fixed_morphisms(a, b, sigma, class_representative(b, ct))
    return BiCharacter(a, b, values)


def hom_bimodule_character(a: WeightTuple, b: WeightTuple, bound: int | None = None) -> BiCharacter:
    _check_bimodule_bound(a, b, bound)
    if len(a) != len(b):
        raise DimensionMismatchError(f"tuples of different length: {a} vs {b}")
    return _bicharacter(tuple(a), tuple(b))


@lru_cache(maxsize=None)
def _decompose(a: WeightTuple, b: WeightTuple) -> dict[tuple[PartitionTuple, PartitionTuple], int]:
    if not dominance_geq(a, b):
        return {}
    chi = _bicharacter(a, b)
    classes_a, classes_b = classes_of(a), classes_of(b)
    # irreducibles of S_a are labelled by the same partition tuples as its classes
    labels_a, labels_b = classes_a, classes_b
    order = prod(factorial(x) for x in a) * prod(factorial(x) for x in b)
    sizes_a = [product_class_size(c) for c in classes_a]
    sizes_b = [product_class_size(c) for c in classes_b]
    # partial[cs][mu] = sum over target classes of |C| chi(cs, ct) chi^mu(ct)
    partial = [
        [sum(sizes_b[t] * chi.values[cs, ct] * product_character(mu, ct) for t, ct in enumerate(classes_b)) for mu in labels_b]
        for cs in classes_a
    ]
    out = {}
    for lam in labels_a:
        lam_values = [sizes_a[s] * product_character(lam, cs) for s, cs in enumerate(classes_a)]
        for m, mu in enumerate(labels_b):
            numerator = sum(lam_values[s] * partial[s][m] for s in range(len(classes_a)))
            q, r = divmod(numerator, order)
            if r or q < 0:
                raise ConsistencyError(f"inner product {numerator}/{order} for {lam}, {mu} is not a non-negative integer")
            if q:
                out[lam, mu] = q
    return out


def decompose_bimodule(a: WeightTuple, b: WeightTuple, bound: int | None = None) -> dict[tuple[PartitionTuple, PartitionTuple], int]:
    """Multiplicity of ``M_lam (x) M_mu`` in ``C[Hom(a, b)]`` for every pair with a nonzero value."""
    _check_bimodule_bound(a, b, bound)
    if len(a) != len(b):
        raise DimensionMismatchError(f"tuples of different length: {a} vs {b}")
    return dict(_decompose(tuple(a), tuple(b)))
