"""Size bounds for the exhaustive oracles.

Every brute-force routine takes an explicit ``bound`` argument; when omitted
the matching field of :data:`BOUNDS` is used.
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    syt: int = 10                 # boxes, standard tableau enumeration
    ssyt: int = 6                 # boxes, semistandard tableau enumeration
    partitions: int = 30          # size for partitions_of
    morphisms: int = 8            # total of a weighted set for morphism listing
    bimodule: int = 8             # total for two-sided Hom characters
    poset_materialize: int = 12   # total up to which covers use the full poset
    quiver: int = 8               # max degree for ext_quiver


BOUNDS = Bounds()
