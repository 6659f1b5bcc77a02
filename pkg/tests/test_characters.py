from itertools import permutations
from math import comb, factorial, prod

import pytest

from flagcat.characters import (
    _cycles,
    class_representative,
    class_size,
    classes_of,
    count_fixed_morphisms,
    decompose_bimodule,
    frobenius_character,
    hom_bimodule_character,
    lr_coefficient,
    lr_expand,
    mn_character,
)
from flagcat.exceptions import BoundExceededError, DegreeMismatchError
from flagcat.partitions import is_hs1, partition_tuples_of_degree, partitions_of, specht_dim
from flagcat.weighted import dominance_geq, enumerate_u_morphisms, tuples_of_total, weights


def cycle_type(perm):
    return tuple(sorted((len(c) for c in _cycles(perm)), reverse=True))


def test_mn_examples():
    assert [mn_character((2, 1), rho) for rho in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]
    for m in range(1, 7):
        for rho in partitions_of(m):
            assert mn_character((m,), rho) == 1
            sign = (-1) ** (m - len(rho))
            assert mn_character((1,) * m, rho) == sign


def test_mn_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        mn_character((2, 1), (2,))


def test_mn_equals_frobenius():
    for m in range(7):
        for p in partitions_of(m):
            for rho in partitions_of(m):
                assert mn_character(p, rho) == frobenius_character(p, rho)


def test_identity_value_is_dimension():
    for m in range(9):
        for p in partitions_of(m):
            assert mn_character(p, (1,) * m) == specht_dim(p)


def test_class_sizes_sum_to_group_order():
    for m in range(10):
        assert sum(class_size(rho) for rho in partitions_of(m)) == factorial(m)
    # class sizes against a direct count in S_5
    counts = {}
    for perm in permutations(range(5)):
        t = cycle_type(perm)
        counts[t] = counts.get(t, 0) + 1
    assert counts == {rho: class_size(rho) for rho in partitions_of(5)}


def test_orthogonality():
    for m in range(8):
        parts = partitions_of(m)
        for p in parts:
            for q in parts:
                inner = sum(class_size(r) * mn_character(p, r) * mn_character(q, r) for r in parts)
                assert inner == (factorial(m) if p == q else 0)


def test_lr_examples():
    assert lr_coefficient((2, 1), (), (2, 1)) == 1
    assert lr_coefficient((2, 1), (), (3,)) == 0
    assert lr_coefficient((1, 1), (1,), (2, 1)) == 1
    assert sum(c * specht_dim(nu) for nu, c in lr_expand((2, 1), (1,)).items()) == 8
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2


def test_lr_symmetry_and_dimension_identity():
    for size in range(9):
        for k in range(size + 1):
            for lam in partitions_of(k):
                for mu in partitions_of(size - k):
                    ex = lr_expand(lam, mu)
                    assert ex == lr_expand(mu, lam)
                    assert sum(c * specht_dim(nu) for nu, c in ex.items()) == comb(size, k) * specht_dim(lam) * specht_dim(mu)


def test_pieri():
    for m in range(8):
        for lam in partitions_of(m):
            for nu in partitions_of(m + 1):
                assert lr_coefficient(lam, (1,), nu) == int(is_hs1(lam, nu))


def test_lr_against_induced_characters():
    # c^nu = <Ind chi^lam x chi^mu, chi^nu>, with the induced character summed over S_{k} x S_{l} cosets
    k, l = 2, 2
    for lam in partitions_of(k):
        for mu in partitions_of(l):
            for nu in partitions_of(k + l):
                total = 0
                for perm in permutations(range(k + l)):
                    # perm lies in the Young subgroup iff it preserves the two blocks
                    if all(perm[i] < k for i in range(k)):
                        left, right = perm[:k], tuple(x - k for x in perm[k:])
                        total += mn_character(lam, cycle_type(left)) * mn_character(mu, cycle_type(right)) * mn_character(nu, cycle_type(perm))
                assert total % (factorial(k) * factorial(l)) == 0
                assert total // (factorial(k) * factorial(l)) == lr_coefficient(lam, mu, nu)


def test_class_representative_has_its_cycle_type():
    a = (3, 0, 2)
    for cls in classes_of(a):
        perm = class_representative(a, cls)
        blocks = [perm[0:3], tuple(x - 3 for x in perm[3:5])]
        assert cycle_type(blocks[0]) == cls[0]
        assert (cycle_type(blocks[1]) if blocks[1] else ()) == cls[2]


def test_fixed_point_count_against_naive_filter():
    a, b = (2, 1, 1), (1, 1, 2)
    maps = [f.map for f in enumerate_u_morphisms(a, b)]
    for cs in classes_of(a):
        s = class_representative(a, cs)
        for ct in classes_of(b):
            t = class_representative(b, ct)
            # tau o phi o sigma^-1 = phi  <=>  phi(sigma(x)) = tau(phi(x))
            naive = sum(all(phi[s[x]] == t[phi[x]] for x in range(len(phi))) for phi in maps)
            assert count_fixed_morphisms(a, b, s, t) == naive


def test_fixed_points_of_identity_pair():
    a, b = (2, 1), (1, 2)
    ident_a, ident_b = tuple(range(3)), tuple(range(3))
    assert count_fixed_morphisms(a, b, ident_a, ident_b) == len(enumerate_u_morphisms(a, b))


def cycle_matching_count(a, b, cs, ct):
    """Third route: a fixed morphism matches each sigma-cycle to a tau-cycle of the same length.

    For each length l, the cycles of that length in the source must be
    bijected onto those in the target with weights not decreasing, and each
    matched pair can be aligned in l ways.
    """
    n = len(a)
    lengths = {x for rho in cs + ct for x in rho}
    total = 1
    for length in lengths:
        src = tuple(sum(1 for x in cs[i] if x == length) for i in range(n))
        dst = tuple(sum(1 for x in ct[i] if x == length) for i in range(n))
        if sum(src) != sum(dst):
            return 0
        ws, wt = weights(src), weights(dst)
        count = sum(all(wt[p[k]] >= ws[k] for k in range(len(ws))) for p in permutations(range(len(ws))))
        total *= count * length ** sum(src)
    return total


def test_bicharacter_against_cycle_matching():
    for n in (1, 2, 3):
        for m in range(5):
            for a in tuples_of_total(m, n):
                for b in tuples_of_total(m, n):
                    chi = hom_bimodule_character(a, b)
                    for (cs, ct), value in chi.values.items():
                        assert value == cycle_matching_count(a, b, cs, ct)


def test_bicharacter_examples():
    chi = hom_bimodule_character((2, 0), (1, 1))
    assert chi(((1, 1), ()), ((1,), (1,))) == 2
    assert chi(((2,), ()), ((1,), (1,))) == 0
    chi = hom_bimodule_character((1, 1), (1, 1))
    assert set(chi.values.values()) == {1}


def test_bimodule_bound():
    with pytest.raises(BoundExceededError):
        hom_bimodule_character((9, 0), (9, 0))


def test_decompose_examples():
    assert decompose_bimodule((2, 0), (1, 1)) == {(((2,), ()), ((1,), (1,))): 1, (((1, 1), ()), ((1,), (1,))): 1}
    assert decompose_bimodule((1, 1), (2, 0)) == {}
    a = (2, 1)
    dec = decompose_bimodule(a, a)
    for lam in partition_tuples_of_degree(a):
        for mu in partition_tuples_of_degree(a):
            assert dec.get((lam, mu), 0) == (1 if lam == mu else 0)


def test_dimension_audit_and_freeness():
    fdim = lambda lam: prod(specht_dim(p) for p in lam)
    for n in (1, 2, 3):
        for m in range(5):
            for a in tuples_of_total(m, n):
                for b in tuples_of_total(m, n):
                    if not dominance_geq(a, b):
                        continue
                    dec = decompose_bimodule(a, b)
                    hom = len(enumerate_u_morphisms(a, b))
                    assert sum(c * fdim(lam) * fdim(mu) for (lam, mu), c in dec.items()) == hom
                    free_a = hom // prod(factorial(x) for x in a)
                    for lam in partition_tuples_of_degree(a):
                        assert sum(c * fdim(mu) for (l, mu), c in dec.items() if l == lam) == free_a * fdim(lam)
