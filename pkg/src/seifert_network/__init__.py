"""Seifert surgeries of the EM families, their twist calculus and network paths."""
from .families import (
    GAMMA,
    UNKNOT,
    EM1Knot,
    EM2Knot,
    EM3Knot,
    PreconditionError,
    SurgeryDescription,
    SurgeryResult,
    SurgeryVertex,
    TorusKnot,
    Trivialization,
    em1_vertex,
    em2_vertex,
    em3_surgery_description,
    em3_trivializable,
    em3_vertex,
    gamma_em1,
    gamma_em2,
    torus_reducible_surgery,
)
from .network import NetworkPath, TwistMove, build_graph, em1_path, em2_path, em3_path, export_graph
from .rational import (
    INF,
    ExtendedRational,
    HomologyPair,
    InfinityArithmeticError,
    as_rational,
    cf_eval,
    cf_expand,
    covering_slope,
    meridian_lift,
)
from .seifert import (
    BaseSurface,
    DegenerateSpaceError,
    SeifertInvariants,
    SfsClassification,
    SfsKind,
    is_homeomorphic,
    montesinos_to_sfs,
    normalize,
    recognize,
)
from .twist import (
    HopfPairState,
    TwistStep,
    annular_twist,
    decompose,
    hopf_twist_a,
    hopf_twist_b,
    seiferter_twist_slope,
)

__version__ = "0.1.0"

__all__ = [
    "NetworkPath",
    "TwistMove",
    "build_graph",
    "em1_path",
    "em2_path",
    "em3_path",
    "export_graph",
    "GAMMA",
    "UNKNOT",
    "EM1Knot",
    "EM2Knot",
    "EM3Knot",
    "PreconditionError",
    "SurgeryDescription",
    "SurgeryResult",
    "SurgeryVertex",
    "TorusKnot",
    "Trivialization",
    "em1_vertex",
    "em2_vertex",
    "em3_surgery_description",
    "em3_trivializable",
    "em3_vertex",
    "gamma_em1",
    "gamma_em2",
    "torus_reducible_surgery",
    "INF",
    "ExtendedRational",
    "HomologyPair",
    "InfinityArithmeticError",
    "as_rational",
    "cf_eval",
    "cf_expand",
    "covering_slope",
    "meridian_lift",
    "BaseSurface",
    "DegenerateSpaceError",
    "SeifertInvariants",
    "SfsClassification",
    "SfsKind",
    "is_homeomorphic",
    "montesinos_to_sfs",
    "normalize",
    "recognize",
    "HopfPairState",
    "TwistStep",
    "annular_twist",
    "decompose",
    "hopf_twist_a",
    "hopf_twist_b",
    "seiferter_twist_slope",
]
