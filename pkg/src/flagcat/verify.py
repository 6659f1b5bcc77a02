"""Self-verification harness: every invariant checked against an independent route.

A suite is a list of checks. Each check counts the cases it examined and
keeps the first counterexample it met. Reports contain no timings, so two
runs with the same parameters serialise to identical JSON.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial, prod
from typing import Any, Callable

from . import bridge, characters, modules, partitions, weighted
from .config import BOUNDS
from .grammar import format_partition_tuple, format_weight_tuple
from .partitions import partition_tuples, reverse_tuple
from .weighted import tuples_of_total


@dataclass
class Check:
    name: str
    cases: int = 0
    counterexample: Any = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def record(self, ok: bool, example: Callable[[], Any]) -> None:
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = example()

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "counterexample": self.counterexample}


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "checks": [c.to_json_dict() for c in self.checks],
        }


def _wt(a) -> str:
    return format_weight_tuple(a)


def _pt(lam) -> str:
    return format_partition_tuple(lam)


def _all_pairs(n: int, m: int):
    tuples = tuples_of_total(m, n)
    return [(a, b) for a in tuples for b in tuples]


def suite_hom_formula(n_max: int = 3, max_total: int = 6) -> list[Check]:
    formula = Check("closed formula equals exhaustive count")
    support = Check("nonempty Hom iff dominance")
    divisible = Check("Hom count divisible by both automorphism orders")
    factor = Check("morphisms below a factor through a cover of a")
    d_side = Check("downward morphisms a -> b correspond to upward tau(a) -> tau(b)")
    for n in range(1, n_max + 1):
        for m in range(max_total + 1):
            for a, b in _all_pairs(n, m):
                brute = len(weighted.enumerate_u_morphisms(a, b))
                closed = weighted.count_u_morphisms(a, b)
                formula.record(brute == closed, lambda: {"a": _wt(a), "b": _wt(b), "formula": closed, "brute": brute})
                geq = weighted.dominance_geq(a, b)
                support.record((brute > 0) == geq, lambda: {"a": _wt(a), "b": _wt(b), "count": brute, "dominance": geq})
                if brute:
                    ok = brute % prod(factorial(x) for x in a) == 0 and brute % prod(factorial(x) for x in b) == 0
                    divisible.record(ok, lambda: {"a": _wt(a), "b": _wt(b), "count": brute})
                d_count = len(weighted.enumerate_d_morphisms(a, b))
                reversed_count = weighted.count_u_morphisms(weighted.tau(a), weighted.tau(b))
                d_side.record(d_count == reversed_count, lambda: {"a": _wt(a), "b": _wt(b), "D": d_count, "U_tau": reversed_count})
            if m > 5:
                continue
            for a, c in _all_pairs(n, m):
                if not weighted.dominance_gt(a, c):
                    continue
                direct = {f.map for f in weighted.enumerate_u_morphisms(a, c)}
                through = set()
                for b in weighted.cover_relations_below(a):
                    if weighted.dominance_geq(b, c):
                        for f in weighted.enumerate_u_morphisms(a, b):
                            for g in weighted.enumerate_u_morphisms(b, c):
                                through.add(weighted.compose(g, f).map)
                factor.record(through == direct, lambda: {"a": _wt(a), "c": _wt(c), "missing": sorted(direct - through)})
    return [formula, support, divisible, factor, d_side]


def suite_tensor(n_max: int = 3, max_total: int = 5) -> list[Check]:
    principal = Check("(P_a (x) P_b)(U) equals |Hom(a+b, U)|")
    audit = Check("simple tensor dimension matches the induction product")
    commutative = Check("simple tensor is commutative")
    associative = Check("simple tensor is associative")
    unit = Check("empty simple is the tensor unit")
    for n in range(1, n_max + 1):
        for total in range(max_total + 1):
            for pa in range(total + 1):
                for a in tuples_of_total(pa, n):
                    for b in tuples_of_total(total - pa, n):
                        ab = weighted.add(a, b)
                        for u in tuples_of_total(total, n):
                            lhs = modules.day_tensor_value_dim(a, b, u)
                            rhs = weighted.count_u_morphisms(ab, u)
                            principal.record(lhs == rhs, lambda: {"a": _wt(a), "b": _wt(b), "U": _wt(u), "convolution": lhs, "hom": rhs})
        labels = [lam for m in range(4) for lam in partition_tuples(n, m)]
        empty = tuple(() for _ in range(n))
        for lam in labels:
            u = modules.day_tensor_simples(lam, empty)
            unit.record(u == modules.GrothClass.simple(lam), lambda: {"lam": _pt(lam), "got": u.to_json_dict()})
            for mu in labels:
                x = modules.day_tensor_simples(lam, mu)
                y = modules.day_tensor_simples(mu, lam)
                commutative.record(x == y, lambda: {"lam": _pt(lam), "mu": _pt(mu)})
                dim = sum(m * prod(partitions.specht_dim(p) for p in nu) for nu, m in x.items())
                expect = prod(
                    comb(sum(p) + sum(q), sum(p)) * partitions.specht_dim(p) * partitions.specht_dim(q)
                    for p, q in zip(lam, mu)
                )
                audit.record(dim == expect, lambda: {"lam": _pt(lam), "mu": _pt(mu), "got": dim, "expected": expect})
        small = [lam for m in range(3) for lam in partition_tuples(n, m)]
        for x in small:
            for y in small:
                for z in small:
                    left = modules.tensor_classes(modules.day_tensor_simples(x, y), modules.GrothClass.simple(z))
                    right = modules.tensor_classes(modules.GrothClass.simple(x), modules.day_tensor_simples(y, z))
                    associative.record(left == right, lambda: {"x": _pt(x), "y": _pt(y), "z": _pt(z)})
    return [principal, audit, commutative, associative, unit]


def suite_ext_oracle(n_max: int = 3, max_degree: int = 5) -> list[Check]:
    oracle = Check("Ext^1 predicate equals the branching-rule oracle")
    ones = Check("nonzero Ext^1 has dimension exactly 1")
    cover = Check("nonzero Ext^1 requires a cover of degree tuples")
    injective = Check("Ext^1 equals [I_lam : M_mu] at cover degrees")
    quiver = Check("quiver by box moves equals quiver by pairwise sweep")
    for n in range(1, n_max + 1):
        for m in range(max_degree + 1):
            labels = partition_tuples(n, m)
            for lam in labels:
                envelope = modules.jh_multiplicities(modules.indec_injective(lam))
                for mu in labels:
                    e = modules.ext1_dim(lam, mu)
                    o = modules.ext1_branching_oracle(lam, mu)
                    oracle.record(e == o, lambda: {"lam": _pt(lam), "mu": _pt(mu), "predicate": e, "oracle": o})
                    if e:
                        ones.record(e == 1, lambda: {"lam": _pt(lam), "mu": _pt(mu), "dim": e})
                        c = weighted.cover_index(partitions.degree_tuple(mu), partitions.degree_tuple(lam))
                        cover.record(c is not None, lambda: {"lam": _pt(lam), "mu": _pt(mu)})
                    if weighted.cover_index(partitions.degree_tuple(mu), partitions.degree_tuple(lam)) is not None:
                        k = envelope[mu]
                        injective.record(k == e, lambda: {"lam": _pt(lam), "mu": _pt(mu), "ext1": e, "jh": k})
        direct = modules.ext_quiver(n, max_degree, method="direct")
        sweep = modules.ext_quiver(n, max_degree, method="sweep")
        quiver.record(direct == sweep, lambda: {"n": n, "direct_edges": len(direct.edges), "sweep_edges": len(sweep.edges)})
    return [oracle, ones, cover, injective, quiver]


def suite_duality(n_max: int = 3, max_degree: int = 4) -> list[Check]:
    self_dual = Check("[P_lam : M_mu] = [I_tau(lam) : M_tau(mu)]")
    socle = Check("I_lam has socle M_lam once, other factors strictly above")
    top = Check("P_lam has top M_lam once, other factors strictly below")
    socle_t = Check("socle_T(a) is contained in jh_T(a)")
    tau_inv = Check("tau_push and dual_vee are involutions")
    bridge_rt = Check("to_umod and from_umod are inverse")
    for n in range(1, n_max + 1):
        for m in range(max_degree + 1):
            for lam in partition_tuples(n, m):
                p = modules.jh_multiplicities(modules.indec_projective(lam))
                i = modules.jh_multiplicities(modules.indec_injective(reverse_tuple(lam)))
                self_dual.record(p.mapped(reverse_tuple) == i, lambda: {"lam": _pt(lam), "P": p.to_json_dict(), "I_tau": i.to_json_dict()})
                a = partitions.degree_tuple(lam)
                env = modules.jh_multiplicities(modules.indec_injective(lam))
                ok = env[lam] == 1 and all(mu == lam or weighted.dominance_gt(partitions.degree_tuple(mu), a) for mu in env)
                socle.record(ok, lambda: {"lam": _pt(lam), "I": env.to_json_dict()})
                ok = p[lam] == 1 and all(mu == lam or weighted.dominance_gt(a, partitions.degree_tuple(mu)) for mu in p)
                top.record(ok, lambda: {"lam": _pt(lam), "P": p.to_json_dict()})
                for kind in modules.Kind:
                    if kind.principal:
                        continue
                    obj = modules.ObjectLabel(kind, lam)
                    tau_inv.record(
                        modules.tau_push(modules.tau_push(obj)) == obj and modules.dual_vee(modules.dual_vee(obj)) == obj,
                        lambda: {"object": str(obj)},
                    )
                for kind in ("S", "Tlam", "Ulam"):
                    g = bridge.RepGLabel(kind, lam)
                    back = bridge.from_umod(bridge.to_umod(g))
                    bridge_rt.record(back == g, lambda: {"label": str(g), "back": str(back)})
            for a in tuples_of_total(m, n):
                s, j = bridge.socle_T(a), bridge.jh_T(a)
                socle_t.record(j.contains_class(s), lambda: {"a": _wt(a), "socle": s.to_json_dict(), "jh": j.to_json_dict()})
                for kind in ("T", "U"):
                    g = bridge.RepGLabel(kind, a)
                    back = bridge.from_umod(bridge.to_umod(g))
                    bridge_rt.record(back == g, lambda: {"label": str(g), "back": str(back)})
    return [self_dual, socle, top, socle_t, tau_inv, bridge_rt]


def suite_characters(max_m: int = 8, max_orthogonality: int = 7, max_lr: int = 8, max_frobenius: int = 6, bimodule_total: int = 4) -> list[Check]:
    regular = Check("sum of squared Specht dimensions is m!")
    syt = Check("hook length formula equals standard tableau count")
    branching = Check("Specht dimension satisfies the branching recursion")
    conj = Check("Specht dimension is invariant under conjugation")
    frob = Check("Murnaghan-Nakayama equals the Frobenius formula")
    orth = Check("first orthogonality of irreducible characters")
    lr_sym = Check("LR coefficients are symmetric")
    lr_dim = Check("LR dimension identity")
    pieri = Check("Pieri coefficient matches single-box predicate")
    audit = Check("bimodule decomposition dimension audit")
    free = Check("Hom bimodule is free on each side")
    for m in range(max_m + 1):
        parts = partitions.partitions_of(m)
        total = sum(partitions.specht_dim(p) ** 2 for p in parts)
        regular.record(total == factorial(m), lambda: {"m": m, "sum": total})
        for p in parts:
            f = partitions.specht_dim(p)
            if m <= BOUNDS.syt:
                count = partitions.enumerate_syt(p)
                syt.record(count == f, lambda: {"p": list(p), "hook": f, "syt": count})
            if m:
                rec = sum(partitions.specht_dim(q) for q in partitions.remove_one_box(p))
                branching.record(rec == f, lambda: {"p": list(p), "f": f, "recursion": rec})
            fc = partitions.specht_dim(partitions.conjugate(p))
            conj.record(fc == f, lambda: {"p": list(p), "f": f, "conjugate": fc})
            if m <= max_frobenius:
                for rho in parts:
                    x, y = characters.mn_character(p, rho), characters.frobenius_character(p, rho)
                    frob.record(x == y, lambda: {"p": list(p), "class": list(rho), "mn": x, "frobenius": y})
        if m <= max_orthogonality:
            sizes = [characters.class_size(rho) for rho in parts]
            table = {p: [characters.mn_character(p, rho) for rho in parts] for p in parts}
            for p in parts:
                for q in parts:
                    inner = sum(s * x * y for s, x, y in zip(sizes, table[p], table[q]))
                    expect = factorial(m) if p == q else 0
                    orth.record(inner == expect, lambda: {"p": list(p), "q": list(q), "inner_times_m!": inner})
    for size in range(max_lr + 1):
        for k in range(size + 1):
            for lam in partitions.partitions_of(k):
                for mu in partitions.partitions_of(size - k):
                    expansion = characters.lr_expand(lam, mu)
                    dim = sum(c * partitions.specht_dim(nu) for nu, c in expansion.items())
                    expect = comb(size, k) * partitions.specht_dim(lam) * partitions.specht_dim(mu)
                    lr_dim.record(dim == expect, lambda: {"lam": list(lam), "mu": list(mu), "got": dim, "expected": expect})
                    swapped = characters.lr_expand(mu, lam)
                    lr_sym.record(swapped == expansion, lambda: {"lam": list(lam), "mu": list(mu)})
                    if mu == (1,):
                        for nu in partitions.partitions_of(size):
                            c = characters.lr_coefficient(lam, (1,), nu)
                            h = partitions.is_hs1(lam, nu)
                            pieri.record(c == int(h), lambda: {"lam": list(lam), "nu": list(nu), "c": c, "hs1": h})
    for n in (1, 2, 3):
        for m in range(bimodule_total + 1):
            for a, b in _all_pairs(n, m):
                if not weighted.dominance_geq(a, b):
                    continue
                dec = characters.decompose_bimodule(a, b)
                hom = weighted.count_u_morphisms(a, b)
                fdim = lambda lam: prod(partitions.specht_dim(p) for p in lam)
                got = sum(c * fdim(lam) * fdim(mu) for (lam, mu), c in dec.items())
                audit.record(got == hom, lambda: {"a": _wt(a), "b": _wt(b), "got": got, "hom": hom})
                order_a, order_b = prod(factorial(x) for x in a), prod(factorial(x) for x in b)
                for lam in partitions.partition_tuples_of_degree(a):
                    row = sum(c * fdim(mu) for (l, mu), c in dec.items() if l == lam)
                    free.record(row == hom // order_a * fdim(lam), lambda: {"a": _wt(a), "b": _wt(b), "lam": _pt(lam), "side": "source"})
                for mu in partitions.partition_tuples_of_degree(b):
                    col = sum(c * fdim(lam) for (lam, m2), c in dec.items() if m2 == mu)
                    free.record(col == hom // order_b * fdim(mu), lambda: {"a": _wt(a), "b": _wt(b), "mu": _pt(mu), "side": "target"})
    return [regular, syt, branching, conj, frob, orth, lr_sym, lr_dim, pieri, audit, free]


def suite_flags(max_boxes: int = 6, max_d: int = 4, max_quiver_degree: int = 8) -> list[Check]:
    ssyt = Check("hook content formula equals semistandard tableau count")
    envelope = Check("envelopes dominate the simple pointwise")
    stable = Check("evaluation on (j,...,j) is monotone and eventually positive")
    coherence = Check("composition factors of T_a add up to dim T_a on small flags")
    semisimple = Check("n = 1 quiver has no arrows")
    for m in range(max_boxes + 1):
        for p in partitions.partitions_of(m):
            for d in range(max_d + 1):
                h, c = partitions.schur_dim_finite(p, d), partitions.count_ssyt(p, d)
                ssyt.record(h == c, lambda: {"p": list(p), "d": d, "hook_content": h, "ssyt": c})
    for n in (1, 2, 3):
        shapes = list(_shapes(n, 3))
        for m in range(4):
            for lam in partition_tuples(n, m):
                for d in shapes:
                    s = bridge.eval_flag(lam, d)
                    inj, proj = bridge.eval_flag_injective(lam, d), bridge.eval_flag_projective(lam, d)
                    envelope.record(inj >= s >= 0 and proj >= s, lambda: {"lam": _pt(lam), "d": list(d), "simple": s, "injective": inj, "projective": proj})
                values = [bridge.eval_flag(lam, (j,) * n) for j in range(6)]
                rows = max((len(p) for p in lam), default=0)
                ok = all(x <= y for x, y in zip(values, values[1:])) and all(v > 0 for v in values[rows:])
                stable.record(ok, lambda: {"lam": _pt(lam), "values": values})
            for a in tuples_of_total(m, n):
                cls = bridge.jh_T(a)
                for d in _shapes(n, 2):
                    got, want = bridge.eval_class(cls, d), bridge.flag_dim_T(a, d)
                    coherence.record(got == want, lambda: {"a": _wt(a), "d": list(d), "sum": got, "dim_T": want})
    for deg in range(max_quiver_degree + 1):
        q = modules.ext_quiver(1, deg)
        semisimple.record(not q.edges, lambda: {"max_degree": deg, "edges": len(q.edges)})
    return [ssyt, envelope, stable, coherence, semisimple]


def _shapes(n: int, top: int):
    if n == 0:
        yield ()
        return
    for first in range(top + 1):
        for rest in _shapes(n - 1, top):
            yield (first,) + rest


SUITES = {
    "hom-formula": suite_hom_formula,
    "tensor": suite_tensor,
    "ext-oracle": suite_ext_oracle,
    "duality": suite_duality,
    "characters": suite_characters,
    "flags": suite_flags,
}


def run_suite(name: str, n: int | None = None, max_total: int | None = None, max_degree: int | None = None) -> list[SuiteReport]:
    """Run one suite, or every suite for ``name == "all"``.

    ``n`` caps the ambient weight count of the sweep; ``max_total`` applies to
    the Hom and tensor sweeps and ``max_degree`` to the Ext and duality ones.
    """
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
        kwargs: dict[str, int] = {}
        if suite in ("hom-formula", "tensor", "ext-oracle", "duality") and n is not None:
            kwargs["n_max"] = n
        if suite in ("hom-formula", "tensor") and max_total is not None:
            kwargs["max_total"] = max_total
        if suite in ("ext-oracle", "duality") and max_degree is not None:
            kwargs["max_degree"] = max_degree
        reports.append(SuiteReport(suite, kwargs, SUITES[suite](**kwargs)))
    return reports
