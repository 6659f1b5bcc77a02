"""Grothendieck-level model of modules over weighted finite sets.

Objects are never materialised as vector spaces. An object is an
:class:`ObjectLabel`; its composition factors are a :class:`GrothClass`.
Modules over the downward category are handled through their reversal
images, so there is a single computational path.

Ext convention: ``ext1_dim(lam, mu)`` is ``Ext^1(S_lam, S_mu)``, with ``a`` the
degree tuple of ``mu`` and ``b`` that of ``lam``. The extension is nonzero only
when ``a`` covers ``b``.
"""
from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from math import prod
from typing import Iterable, Iterator

from .characters import decompose_bimodule, lr_coefficient, lr_expand
from .config import BOUNDS
from .exceptions import BoundExceededError, ConsistencyError, DimensionMismatchError, ParseError
from .grammar import (
    format_partition_tuple,
    format_weight_tuple,
    parse_partition_tuple,
    parse_weight_tuple,
    split_label,
)
from .partitions import (
    PartitionTuple,
    add_one_box,
    degree_tuple,
    is_hs1,
    partition_tuples,
    partition_tuples_of_degree,
    remove_one_box,
    reverse_tuple,
    sort_key,
    specht_dim,
    total_degree,
)
from .weighted import (
    WeightTuple,
    add,
    cover_index,
    dominance_geq,
    dominance_gt,
    enumerate_u_morphisms,
    tau,
    tuples_of_total,
    weights,
)


class GrothClass(Mapping):
    """Finitely supported multiplicities of simples, keyed by partition tuple.

    Zero entries are dropped; negative ones are rejected.
    """

    __slots__ = ("_mult",)

    def __init__(self, mult: Mapping[PartitionTuple, int] | Iterable[tuple[PartitionTuple, int]] = ()):
        items = mult.items() if isinstance(mult, Mapping) else mult
        data: dict[PartitionTuple, int] = {}
        for lam, m in items:
            data[lam] = data.get(lam, 0) + int(m)
        for lam, m in data.items():
            if m < 0:
                raise ConsistencyError(f"negative multiplicity {m} for {lam}")
        self._mult = {lam: data[lam] for lam in sorted(data, key=sort_key) if data[lam]}

    @classmethod
    def simple(cls, lam: PartitionTuple) -> GrothClass:
        return cls({lam: 1})

    def __getitem__(self, lam):
        return self._mult.get(lam, 0)

    def __contains__(self, lam):
        return lam in self._mult

    def __iter__(self) -> Iterator[PartitionTuple]:
        return iter(self._mult)

    def __len__(self):
        return len(self._mult)

    def __add__(self, other: GrothClass) -> GrothClass:
        merged = dict(self._mult)
        for lam, m in other.items():
            merged[lam] = merged.get(lam, 0) + m
        return GrothClass(merged)

    def __mul__(self, k: int) -> GrothClass:
        if k < 0:
            raise ConsistencyError("Grothendieck classes of objects are scaled by non-negative ints only")
        return GrothClass({lam: m * k for lam, m in self._mult.items()})

    __rmul__ = __mul__

    def __repr__(self):
        body = ", ".join(f"{format_partition_tuple(lam)!r}: {m}" for lam, m in self._mult.items())
        return f"GrothClass({{{body}}})"

    @property
    def length(self) -> int:
        """Composition length."""
        return sum(self._mult.values())

    def mapped(self, relabel) -> GrothClass:
        return GrothClass((relabel(lam), m) for lam, m in self._mult.items())

    def contains_class(self, other: GrothClass) -> bool:
        return all(self[lam] >= m for lam, m in other.items())

    def to_json_dict(self) -> dict[str, int]:
        return {format_partition_tuple(lam): m for lam, m in self._mult.items()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: Mapping[str, int], n: int | None = None) -> GrothClass:
        return cls((parse_partition_tuple(key, n), int(m)) for key, m in data.items())


class Kind(str, Enum):
    SIMPLE = "simple"
    PRINCIPAL_PROJECTIVE = "principal_projective"
    PRINCIPAL_INJECTIVE = "principal_injective"
    INDEC_PROJECTIVE = "indec_projective"
    INDEC_INJECTIVE = "indec_injective"

    @property
    def principal(self) -> bool:
        return self in (Kind.PRINCIPAL_PROJECTIVE, Kind.PRINCIPAL_INJECTIVE)

    @property
    def projective(self) -> bool:
        return self in (Kind.PRINCIPAL_PROJECTIVE, Kind.INDEC_PROJECTIVE)

    @property
    def injective(self) -> bool:
        return self in (Kind.PRINCIPAL_INJECTIVE, Kind.INDEC_INJECTIVE)


_SWAP = {
    Kind.SIMPLE: Kind.SIMPLE,
    Kind.PRINCIPAL_PROJECTIVE: Kind.PRINCIPAL_INJECTIVE,
    Kind.PRINCIPAL_INJECTIVE: Kind.PRINCIPAL_PROJECTIVE,
    Kind.INDEC_PROJECTIVE: Kind.INDEC_INJECTIVE,
    Kind.INDEC_INJECTIVE: Kind.INDEC_PROJECTIVE,
}

# label letters per side: (projective, injective)
_LETTERS = {"U": ("P", "I"), "D": ("Q", "J")}


@dataclass(frozen=True)
class ObjectLabel:
    """A named object of the upward (``side="U"``) or downward (``side="D"``) module category.

    ``index`` is a weight tuple for principal objects and a partition tuple
    otherwise. Text forms: ``P(2,0)``, ``I[1;1]``, ``M[2;-]`` on the upward
    side; ``Q(..)``, ``J[..]`` and ``D:M[..]`` on the downward side.
    """

    kind: Kind
    index: tuple
    side: str = "U"

    def __post_init__(self):
        if self.side not in ("U", "D"):
            raise ValueError(f"side must be 'U' or 'D', got {self.side!r}")
        if not self.index:
            raise ValueError("empty index")
        principal_index = all(isinstance(x, int) for x in self.index)
        if self.kind.principal != principal_index:
            raise ValueError(f"index {self.index!r} does not match kind {self.kind.value}")

    @property
    def n(self) -> int:
        return len(self.index)

    @property
    def degree(self) -> WeightTuple:
        return self.index if self.kind.principal else degree_tuple(self.index)

    def __str__(self) -> str:
        if self.kind is Kind.SIMPLE:
            letter = "M" if self.side == "U" else "D:M"
        else:
            proj, inj = _LETTERS[self.side]
            letter = proj if self.kind.projective else inj
        if self.kind.principal:
            return f"{letter}({format_weight_tuple(self.index)})"
        return f"{letter}[{format_partition_tuple(self.index)}]"

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> ObjectLabel:
        letters, bracket, body = split_label(text)
        side = "U"
        if letters.startswith("D:"):
            side, letters = "D", letters[2:]
            if letters != "M":
                raise ParseError("only simples take the D: prefix; use Q or J", text)
        if letters in ("Q", "J"):
            side = "D"
        if letters not in ("M", "P", "I", "Q", "J"):
            raise ParseError("unknown object letter", letters)
        principal = bracket == "("
        if letters == "M":
            if principal:
                raise ParseError("simples are indexed by partition tuples, use M[...]", text)
            return cls(Kind.SIMPLE, parse_partition_tuple(body, n), side)
        projective = letters in ("P", "Q")
        if principal:
            kind = Kind.PRINCIPAL_PROJECTIVE if projective else Kind.PRINCIPAL_INJECTIVE
            return cls(kind, parse_weight_tuple(body, n), side)
        kind = Kind.INDEC_PROJECTIVE if projective else Kind.INDEC_INJECTIVE
        return cls(kind, parse_partition_tuple(body, n), side)


def simple(lam: PartitionTuple, side: str = "U") -> ObjectLabel:
    return ObjectLabel(Kind.SIMPLE, lam, side)


def principal_projective(a: WeightTuple, side: str = "U") -> ObjectLabel:
    return ObjectLabel(Kind.PRINCIPAL_PROJECTIVE, a, side)


def principal_injective(a: WeightTuple, side: str = "U") -> ObjectLabel:
    return ObjectLabel(Kind.PRINCIPAL_INJECTIVE, a, side)


def indec_projective(lam: PartitionTuple, side: str = "U") -> ObjectLabel:
    return ObjectLabel(Kind.INDEC_PROJECTIVE, lam, side)


def indec_injective(lam: PartitionTuple, side: str = "U") -> ObjectLabel:
    return ObjectLabel(Kind.INDEC_INJECTIVE, lam, side)


def simple_value_dim(lam: PartitionTuple, b: WeightTuple) -> int:
    """Dimension of the simple ``M_lam`` evaluated at the weighted set ``b``."""
    if len(lam) != len(b):
        raise DimensionMismatchError(f"{len(lam)} components vs tuple {b}")
    if degree_tuple(lam) != tuple(b):
        return 0
    return prod(specht_dim(p) for p in lam)


def decompose_principal(kind: str, a: WeightTuple) -> dict[PartitionTuple, int]:
    """Multiplicity of each indecomposable summand of ``P_a`` or ``I_a``.

    Both split along the isotypic pieces of ``S_a``, so the answer is the same
    for either kind: ``prod_i f^{lam^i}`` for every ``lam`` of degree ``a``.
    """
    if kind not in ("projective", "injective"):
        raise ValueError(f"kind must be 'projective' or 'injective', got {kind!r}")
    return {lam: prod(specht_dim(p) for p in lam) for lam in partition_tuples_of_degree(tuple(a))}


def _jh_indec_projective(lam: PartitionTuple, bound: int | None) -> GrothClass:
    a = degree_tuple(lam)
    total: dict[PartitionTuple, int] = {}
    for b in tuples_of_total(sum(a), len(a)):
        if not dominance_geq(a, b):
            continue
        for (left, mu), m in decompose_bimodule(a, b, bound).items():
            if left == lam:
                total[mu] = total.get(mu, 0) + m
    return GrothClass(total)


def _jh_indec_injective(lam: PartitionTuple, bound: int | None) -> GrothClass:
    a = degree_tuple(lam)
    total: dict[PartitionTuple, int] = {}
    for b in tuples_of_total(sum(a), len(a)):
        if not dominance_geq(b, a):
            continue
        # I_a(b) is the dual of C[Hom(b, a)]; Specht modules are self-dual
        for (mu, right), m in decompose_bimodule(b, a, bound).items():
            if right == lam:
                total[mu] = total.get(mu, 0) + m
    return GrothClass(total)


def jh_multiplicities(obj: ObjectLabel, bound: int | None = None) -> GrothClass:
    """Composition factors of ``obj``.

    For a downward-side object the class is keyed by downward-side simple
    labels; it is computed from the reversal image on the upward side.
    """
    limit = BOUNDS.bimodule if bound is None else bound
    if sum(obj.degree) > limit:
        raise BoundExceededError(f"composition factors limited to total {limit}, got {sum(obj.degree)}")
    if obj.side == "D":
        return jh_multiplicities(tau_push(obj), bound).mapped(reverse_tuple)
    if obj.kind is Kind.SIMPLE:
        return GrothClass.simple(obj.index)
    if obj.kind is Kind.INDEC_PROJECTIVE:
        return _jh_indec_projective(obj.index, bound)
    if obj.kind is Kind.INDEC_INJECTIVE:
        return _jh_indec_injective(obj.index, bound)
    piece = _jh_indec_projective if obj.kind is Kind.PRINCIPAL_PROJECTIVE else _jh_indec_injective
    out = GrothClass()
    for lam, m in decompose_principal("projective", obj.index).items():
        out = out + piece(lam, bound) * m
    return out


def socle_of_injective(lam: PartitionTuple, bound: int | None = None) -> ObjectLabel:
    """The socle ``M_lam`` of ``I_lam``, after checking the support of the remaining factors.

    Every other composition factor must sit strictly above ``lam`` in
    dominance, and ``M_lam`` itself must occur exactly once.
    """
    cls = _jh_indec_injective(lam, bound)
    a = degree_tuple(lam)
    if cls[lam] != 1:
        raise ConsistencyError(f"[I_lam : M_lam] = {cls[lam]} for lam={lam}")
    for mu in cls:
        if mu != lam and not dominance_gt(degree_tuple(mu), a):
            raise ConsistencyError(f"factor {mu} of I_{lam} is not strictly above {a}")
    return simple(lam)


def day_tensor_simples(lam: PartitionTuple, mu: PartitionTuple) -> GrothClass:
    """Composition factors of ``M_lam (x) M_mu``: a product of LR expansions, one per weight."""
    if len(lam) != len(mu):
        raise DimensionMismatchError(f"{len(lam)} vs {len(mu)} components")
    per_weight = [lr_expand(p, q) for p, q in zip(lam, mu)]
    out = {}
    for choice in product(*(expansion.items() for expansion in per_weight)):
        nu = tuple(shape for shape, _ in choice)
        out[nu] = prod(c for _, c in choice)
    return GrothClass(out)


def tensor_classes(x: GrothClass, y: GrothClass) -> GrothClass:
    """Bilinear extension of :func:`day_tensor_simples`."""
    out = GrothClass()
    for lam, m in x.items():
        for mu, k in y.items():
            out = out + day_tensor_simples(lam, mu) * (m * k)
    return out


def tensor_principal_projectives(a: WeightTuple, b: WeightTuple) -> ObjectLabel:
    return principal_projective(add(a, b))


def day_tensor_value_dim(a: WeightTuple, b: WeightTuple, u: WeightTuple) -> int:
    """``dim (P_a (x) P_b)(u)`` straight from the convolution formula.

    Sums over every subset ``S`` of the weighted set ``u``, pairing morphisms
    ``a -> S`` with morphisms ``b -> u \\ S``.
    """
    if not len(a) == len(b) == len(u):
        raise DimensionMismatchError(f"tuples of different length: {a}, {b}, {u}")
    wu = weights(u)
    elements = range(len(wu))
    total = 0
    for chosen in combinations(elements, sum(a)):
        s = [0] * len(u)
        for x in chosen:
            s[wu[x] - 1] += 1
        rest = tuple(ui - si for ui, si in zip(u, s))
        total += len(enumerate_u_morphisms(a, tuple(s))) * len(enumerate_u_morphisms(b, rest))
    return total


def dual_vee(obj: ObjectLabel) -> ObjectLabel:
    """Linear duality: swaps projective and injective kinds and the side, keeping the index."""
    return ObjectLabel(_SWAP[obj.kind], obj.index, "D" if obj.side == "U" else "U")


def tau_push(obj: ObjectLabel) -> ObjectLabel:
    """Weight reversal: reverses the index and swaps the side, keeping the kind."""
    index = tau(obj.index) if obj.kind.principal else reverse_tuple(obj.index)
    return ObjectLabel(obj.kind, index, "D" if obj.side == "U" else "U")


@dataclass
class Ext1Explanation:
    """Which of the three Ext-nonvanishing conditions hold for a pair of simples."""

    lam: PartitionTuple
    mu: PartitionTuple
    a: WeightTuple
    b: WeightTuple
    cover_index: int | None
    condition_1: bool
    condition_2: bool | None = None
    condition_3: bool | None = None

    @property
    def dimension(self) -> int:
        return int(self.condition_1 and bool(self.condition_2) and bool(self.condition_3))

    def to_json_dict(self) -> dict:
        return {
            "lam": format_partition_tuple(self.lam),
            "mu": format_partition_tuple(self.mu),
            "a": list(self.a),
            "b": list(self.b),
            "dimension": self.dimension,
            "cover_index": None if self.cover_index is None else self.cover_index + 1,
            "conditions": {
                "1_cover": self.condition_1,
                "2_other_components_equal": self.condition_2,
                "3_single_boxes": self.condition_3,
            },
        }


def ext1_explain(lam: PartitionTuple, mu: PartitionTuple) -> Ext1Explanation:
    if len(lam) != len(mu):
        raise DimensionMismatchError(f"{len(lam)} vs {len(mu)} components")
    a, b = degree_tuple(mu), degree_tuple(lam)
    i = cover_index(a, b)
    if i is None:
        return Ext1Explanation(lam, mu, a, b, None, False)
    others = all(lam[j] == mu[j] for j in range(len(lam)) if j not in (i, i + 1))
    boxes = is_hs1(lam[i], mu[i]) and is_hs1(mu[i + 1], lam[i + 1])
    return Ext1Explanation(lam, mu, a, b, i, True, others, boxes)


def ext1_dim(lam: PartitionTuple, mu: PartitionTuple) -> int:
    """``dim Ext^1(S_lam, S_mu)``, which is 0 or 1."""
    return ext1_explain(lam, mu).dimension


def ext1_branching_oracle(lam: PartitionTuple, mu: PartitionTuple) -> int:
    """Multiplicity of ``M_mu`` in the restrict-then-induce module of ``M_lam`` at a cover.

    Restricting along ``S_{b_{i+1}-1} x S_1`` and inducing along
    ``S_{b_i} x S_1`` multiplies one Pieri coefficient per moved box.
    """
    if len(lam) != len(mu):
        raise DimensionMismatchError(f"{len(lam)} vs {len(mu)} components")
    a, b = degree_tuple(mu), degree_tuple(lam)
    i = cover_index(a, b)
    if i is None:
        return 0
    same = prod(int(lam[j] == mu[j]) for j in range(len(lam)) if j not in (i, i + 1))
    return lr_coefficient(lam[i], (1,), mu[i]) * lr_coefficient(mu[i + 1], (1,), lam[i + 1]) * same


@dataclass
class Quiver:
    """Ext quiver: an arrow ``lam -> mu`` whenever ``Ext^1(S_lam, S_mu)`` is nonzero."""

    n: int
    max_degree: int
    nodes: list[PartitionTuple]
    edges: list[tuple[PartitionTuple, PartitionTuple]] = field(default_factory=list)

    def to_dot(self) -> str:
        lines = [f"digraph ext_quiver_n{self.n}_deg{self.max_degree} {{"]
        for lam in self.nodes:
            lines.append(f'  "{format_partition_tuple(lam)}";')
        for lam, mu in self.edges:
            lines.append(f'  "{format_partition_tuple(lam)}" -> "{format_partition_tuple(mu)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        adjacency = {format_partition_tuple(lam): [] for lam in self.nodes}
        for lam, mu in self.edges:
            adjacency[format_partition_tuple(lam)].append(format_partition_tuple(mu))
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "nodes": [format_partition_tuple(lam) for lam in self.nodes],
            "edges": [[format_partition_tuple(lam), format_partition_tuple(mu)] for lam, mu in self.edges],
            "adjacency": adjacency,
        }


def _ext_targets(lam: PartitionTuple) -> Iterator[PartitionTuple]:
    for i in range(len(lam) - 1):
        for bigger in add_one_box(lam[i]):
            for smaller in remove_one_box(lam[i + 1]):
                mu = list(lam)
                mu[i], mu[i + 1] = bigger, smaller
                yield tuple(mu)


def ext_quiver(n: int, max_degree: int, bound: int | None = None, method: str = "direct") -> Quiver:
    """The Ext quiver on all partition tuples of total degree at most ``max_degree``.

    ``method="direct"`` builds the arrows by moving one box between adjacent
    components; ``method="sweep"`` tests :func:`ext1_dim` on every pair.
    """
    bound = BOUNDS.quiver if bound is None else bound
    if max_degree > bound:
        raise BoundExceededError(f"quiver limited to degree {bound}, got {max_degree}")
    if n < 1 or max_degree < 0:
        raise ValueError(f"need n >= 1 and max_degree >= 0, got n={n}, max_degree={max_degree}")
    nodes = [lam for m in range(max_degree + 1) for lam in partition_tuples(n, m)]
    if method == "direct":
        found = {(lam, mu) for lam in nodes for mu in _ext_targets(lam)}
    elif method == "sweep":
        found = set()
        by_total: dict[int, list[PartitionTuple]] = {}
        for lam in nodes:
            by_total.setdefault(total_degree(lam), []).append(lam)
        for group in by_total.values():
            found.update((lam, mu) for lam in group for mu in group if ext1_dim(lam, mu))
    else:
        raise ValueError(f"unknown method {method!r}")
    position = {lam: k for k, lam in enumerate(nodes)}
    edges = sorted(found, key=lambda e: (position[e[0]], position[e[1]]))
    return Quiver(n, max_degree, nodes, edges)
