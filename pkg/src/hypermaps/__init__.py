"""Finite hypermaps as involution triples: construction, classification, quotients.

A hypermap is a transitive action of three fixed-point-free involutions
h0, h1, h2 on a finite flag set. This package builds the classical families
(dipoles, prism boundaries, the Platonic solids, the M_k maps), applies the
Walsh and Pin doublings and their inverses, classifies results along the
uniform / bipartite-uniform and regular / bipartite-regular axes, and
computes regular quotients and irregularity invariants.
"""

from .build import (
    CosetTable,
    Presentation,
    build_Dn,
    build_Mk,
    build_platonic,
    build_Pn,
    pin,
    regular_from_type,
    six_duals,
    todd_coxeter,
    unpin,
    unwalsh,
    walsh,
)
from .errors import (
    Degenerate,
    EmptyGenerators,
    HasFixedPoint,
    HypermapsError,
    InvalidRestriction,
    KernelMismatch,
    LimitExceeded,
    NoValencyOneClass,
    NotAMap,
    NotAMember,
    NotBipartite,
    NotBipartiteRegular,
    NotConservative,
    NotInvolution,
    NotNormal,
    NotTransitive,
    ParseError,
)
from .hypermap import (
    Hypermap,
    HypermapType,
    SurfaceClass,
    are_isomorphic,
    canonical_code,
    canonical_form,
    dual,
    euler_characteristic,
    find_covering,
    from_text,
    is_uniform,
    k_faces,
    relabel,
    surface_class,
    to_text,
    type_of,
    valencies,
    validate,
)
from .perm import (
    FiniteGroup,
    GroupName,
    Permutation,
    derived_subgroup,
    generate_group,
    normal_closure,
    orbits,
    point_stabilizer,
    quotient_action,
    recognize_group,
)
from .quotients import (
    AnalysisReport,
    IrregularityReport,
    QuotientSummary,
    analyze,
    closure_cover,
    covering_core,
    delta0_monodromy,
    irregularity,
    monodromy,
)
from .theta import (
    BIPARTITE,
    ORIENTING,
    PARITY_VECTORS,
    BipartiteType,
    ParityVector,
    automorphisms,
    bipartite_type,
    is_bipartite_chiral,
    is_bipartite_uniform,
    is_regular,
    is_theta_regular,
    theta_coloring,
    theta_preserving_automorphisms,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BIPARTITE",
    "BipartiteType",
    "CosetTable",
    "Degenerate",
    "EmptyGenerators",
    "FiniteGroup",
    "GroupName",
    "HasFixedPoint",
    "Hypermap",
    "HypermapType",
    "HypermapsError",
    "InvalidRestriction",
    "IrregularityReport",
    "KernelMismatch",
    "LimitExceeded",
    "NoValencyOneClass",
    "NotAMap",
    "NotAMember",
    "NotBipartite",
    "NotBipartiteRegular",
    "NotConservative",
    "NotInvolution",
    "NotNormal",
    "NotTransitive",
    "ORIENTING",
    "PARITY_VECTORS",
    "ParityVector",
    "ParseError",
    "Permutation",
    "Presentation",
    "QuotientSummary",
    "SurfaceClass",
    "analyze",
    "are_isomorphic",
    "automorphisms",
    "bipartite_type",
    "build_Dn",
    "build_Mk",
    "build_Pn",
    "build_platonic",
    "canonical_code",
    "canonical_form",
    "closure_cover",
    "covering_core",
    "delta0_monodromy",
    "derived_subgroup",
    "dual",
    "euler_characteristic",
    "find_covering",
    "from_text",
    "generate_group",
    "irregularity",
    "is_bipartite_chiral",
    "is_bipartite_uniform",
    "is_regular",
    "is_theta_regular",
    "is_uniform",
    "k_faces",
    "monodromy",
    "normal_closure",
    "orbits",
    "pin",
    "point_stabilizer",
    "quotient_action",
    "recognize_group",
    "regular_from_type",
    "relabel",
    "six_duals",
    "surface_class",
    "theta_coloring",
    "theta_preserving_automorphisms",
    "to_text",
    "todd_coxeter",
    "type_of",
    "unpin",
    "unwalsh",
    "valencies",
    "validate",
    "walsh",
]
