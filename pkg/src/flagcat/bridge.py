"""Dictionary between module labels and the flag-group and flag-functor models.

Crossing from group labels to module labels always reverses the tuple:
``T_a`` is the image of ``I_{tau(a)}``, ``U_a`` of ``P_{tau(a)}``, and the
simple ``S_lam`` (equivalently the functor ``F_lam``) of ``M_{tau(lam)}``.
That reversal lives in :func:`to_umod` and :func:`from_umod` only.

Dimensions on a finite flag are taken on the graded shape
``d = (dim V_1/V_0, ..., dim V_n/V_{n-1})``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .exceptions import ParseError
from .grammar import (
    format_partition_tuple,
    format_weight_tuple,
    parse_partition_tuple,
    parse_weight_tuple,
    split_label,
)
from .modules import GrothClass, Kind, ObjectLabel, jh_multiplicities, tau_push
from .partitions import PartitionTuple, partition_tuples_of_degree, reverse_tuple, schur_dim_finite, specht_dim
from .weighted import WeightTuple, count_u_morphisms, tau

# group-side kinds; T, U, K take weight tuples
TUPLE_KINDS = ("T", "U", "K")
PARTITION_KINDS = ("S", "Tlam", "Ulam", "Flam")

_TO_UMOD = {
    "T": Kind.PRINCIPAL_INJECTIVE,
    "U": Kind.PRINCIPAL_PROJECTIVE,
    "Tlam": Kind.INDEC_INJECTIVE,
    "Ulam": Kind.INDEC_PROJECTIVE,
    "S": Kind.SIMPLE,
    "Flam": Kind.SIMPLE,
}
_FROM_UMOD = {
    Kind.PRINCIPAL_INJECTIVE: "T",
    Kind.PRINCIPAL_PROJECTIVE: "U",
    Kind.INDEC_INJECTIVE: "Tlam",
    Kind.INDEC_PROJECTIVE: "Ulam",
}


@dataclass(frozen=True)
class RepGLabel:
    """Named object of the polynomial representations of the flag group.

    Text forms: ``T(2,0)``, ``U(1,1)``, ``K(0,3)`` for tuples and
    ``T[..]``, ``U[..]``, ``S[..]``, ``F[..]`` for partition tuples.
    """

    kind: str
    index: tuple

    def __post_init__(self):
        if self.kind in TUPLE_KINDS:
            ok = all(isinstance(x, int) for x in self.index)
        elif self.kind in PARTITION_KINDS:
            ok = all(isinstance(x, tuple) for x in self.index)
        else:
            raise ValueError(f"unknown kind {self.kind!r}")
        if not ok or not self.index:
            raise ValueError(f"index {self.index!r} does not fit kind {self.kind}")

    def __str__(self) -> str:
        if self.kind in TUPLE_KINDS:
            return f"{self.kind}({format_weight_tuple(self.index)})"
        return f"{self.kind[0]}[{format_partition_tuple(self.index)}]"

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> RepGLabel:
        letters, bracket, body = split_label(text)
        if bracket == "(":
            if letters not in TUPLE_KINDS:
                raise ParseError("unknown tuple-indexed kind", letters)
            return cls(letters, parse_weight_tuple(body, n))
        kinds = {"S": "S", "T": "Tlam", "U": "Ulam", "F": "Flam"}
        if letters not in kinds:
            raise ParseError("unknown partition-indexed kind", letters)
        return cls(kinds[letters], parse_partition_tuple(body, n))


def to_umod(label: RepGLabel) -> ObjectLabel:
    """The upward-side module label corresponding to a group-side label.

    ``K_a`` is semisimple but not a single named object; ask :func:`socle_T`.
    """
    if label.kind == "K":
        raise ValueError("K_a is a direct sum of simples; use socle_T for its class")
    kind = _TO_UMOD[label.kind]
    index = tau(label.index) if kind.principal else reverse_tuple(label.index)
    return ObjectLabel(kind, index, "U")


def from_umod(obj: ObjectLabel, model: str = "G") -> RepGLabel:
    """Inverse of :func:`to_umod`. Simples come back as ``S`` (``model="G"``) or ``F`` (``model="A"``)."""
    if obj.side == "D":
        obj = tau_push(obj)
    if obj.kind is Kind.SIMPLE:
        return RepGLabel("S" if model == "G" else "Flam", reverse_tuple(obj.index))
    index = tau(obj.index) if obj.kind.principal else reverse_tuple(obj.index)
    return RepGLabel(_FROM_UMOD[obj.kind], index)


def hom_g_dim(a: WeightTuple, b: WeightTuple) -> int:
    """``dim Hom_G(T_a, T_b)``; it equals the number of upward bijections ``a -> b``."""
    return count_u_morphisms(a, b)


def socle_T(a: WeightTuple) -> GrothClass:
    """Class of the socle ``K_a`` of ``T_a``: each ``S_lam`` of degree ``a`` with multiplicity ``prod f^{lam^i}``."""
    return GrothClass({lam: prod(specht_dim(p) for p in lam) for lam in partition_tuples_of_degree(tuple(a))})


def jh_repg(label: RepGLabel, bound: int | None = None) -> GrothClass:
    """Composition factors of a group-side object, keyed by ``S`` labels."""
    if label.kind == "K":
        return socle_T(label.index)
    return jh_multiplicities(to_umod(label), bound).mapped(reverse_tuple)


def jh_T(a: WeightTuple, bound: int | None = None) -> GrothClass:
    return jh_repg(RepGLabel("T", tuple(a)), bound)


def _check_shape(lam: PartitionTuple, shape) -> tuple[int, ...]:
    d = tuple(int(x) for x in shape)
    if len(d) != len(lam):
        raise ValueError(f"flag shape {d} has the wrong length for {len(lam)} components")
    if any(x < 0 for x in d):
        raise ValueError(f"flag shape entries must be non-negative: {d}")
    return d


def eval_flag(lam: PartitionTuple, shape) -> int:
    """``dim F_lam`` on a flag with graded dimensions ``shape``."""
    d = _check_shape(lam, shape)
    return prod(schur_dim_finite(p, di) for p, di in zip(lam, d))


def eval_flag_injective(lam: PartitionTuple, shape) -> int:
    """Dimension of the injective envelope of ``F_lam``; the ``i``-th factor sees ``V_n / V_{i-1}``."""
    d = _check_shape(lam, shape)
    return prod(schur_dim_finite(p, sum(d[i:])) for i, p in enumerate(lam))


def eval_flag_projective(lam: PartitionTuple, shape) -> int:
    """Dimension of the projective cover of ``F_lam``; the ``i``-th factor sees ``V_i``."""
    d = _check_shape(lam, shape)
    return prod(schur_dim_finite(p, sum(d[: i + 1])) for i, p in enumerate(lam))


def eval_class(cls: GrothClass, shape) -> int:
    """Dimension on a finite flag of any object with group-side class ``cls``."""
    return sum(m * eval_flag(lam, shape) for lam, m in cls.items())


def flag_dim_T(a: WeightTuple, shape) -> int:
    """``dim T_a`` on a finite flag, from its tensor factors ``(V / V_{i-1})^{a_i}``."""
    d = tuple(shape)
    return prod(sum(d[i:]) ** ai for i, ai in enumerate(a))


def flag_dim_U(a: WeightTuple, shape) -> int:
    d = tuple(shape)
    return prod(sum(d[: i + 1]) ** ai for i, ai in enumerate(a))
