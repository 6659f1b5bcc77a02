"""flagcat: polynomial functors on flags through modules over weighted finite sets."""

__version__ = "0.1.0"

from .exceptions import (
    BoundExceededError,
    ComposabilityError,
    ConsistencyError,
    DegreeMismatchError,
    DimensionMismatchError,
    FlagcatError,
    ParseError,
)
from .partitions import (
    add_one_box,
    count_ssyt,
    enumerate_syt,
    is_hs1,
    partitions_of,
    schur_dim_finite,
    specht_dim,
)
from .weighted import (
    UMorphism,
    compose,
    count_u_morphisms,
    cover_relations_below,
    dominance_geq,
    enumerate_u_morphisms,
    tau,
)
from .characters import (
    decompose_bimodule,
    hom_bimodule_character,
    lr_coefficient,
    mn_character,
)
from .modules import (
    GrothClass,
    ObjectLabel,
    day_tensor_simples,
    decompose_principal,
    dual_vee,
    ext1_branching_oracle,
    ext1_dim,
    ext_quiver,
    jh_multiplicities,
    simple_value_dim,
    socle_of_injective,
    tau_push,
    tensor_principal_projectives,
)
from .bridge import (
    RepGLabel,
    eval_flag,
    eval_flag_injective,
    eval_flag_projective,
    from_umod,
    hom_g_dim,
    jh_T,
    socle_T,
    to_umod,
)

__all__ = [
    "__version__",
    "BoundExceededError",
    "ComposabilityError",
    "ConsistencyError",
    "DegreeMismatchError",
    "DimensionMismatchError",
    "FlagcatError",
    "ParseError",
    "add_one_box",
    "count_ssyt",
    "enumerate_syt",
    "is_hs1",
    "partitions_of",
    "schur_dim_finite",
    "specht_dim",
    "UMorphism",
    "compose",
    "count_u_morphisms",
    "cover_relations_below",
    "dominance_geq",
    "enumerate_u_morphisms",
    "tau",
    "decompose_bimodule",
    "hom_bimodule_character",
    "lr_coefficient",
    "mn_character",
    "GrothClass",
    "ObjectLabel",
    "day_tensor_simples",
    "decompose_principal",
    "dual_vee",
    "ext1_branching_oracle",
    "ext1_dim",
    "ext_quiver",
    "jh_multiplicities",
    "simple_value_dim",
    "socle_of_injective",
    "tau_push",
    "tensor_principal_projectives",
    "RepGLabel",
    "eval_flag",
    "eval_flag_injective",
    "eval_flag_projective",
    "from_umod",
    "hom_g_dim",
    "jh_T",
    "socle_T",
    "to_umod",
]
