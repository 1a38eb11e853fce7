"""susykit: a combinatorial calculus of SUSY graphs.

Half-edge graphs with genus labels, NS/R colorings and labeled tails; their
morphism calculus (graftings, contractions, isomorphisms and composites);
lifting of colorings onto modular graphs; a gluing calculus on moduli
signatures with dimension formulas; canonical forms; boundary-strata
enumeration with the contraction partial order; and dual graphs of
degenerate curve configurations.
"""

from .errors import SchemaError, SusyKitError, ValidationError
from .graphs import (
    Graph,
    GraphMorphism,
    ValidationReport,
    edges,
    flags_at,
    tails,
    validate_graph,
    validate_morphism,
)
from .susy import (
    NS,
    R,
    SusyGraph,
    SusyLabeling,
    SusyMorphism,
    compose,
    disjoint_union,
    forget,
    genus,
    include,
    is_stable,
    modular_graph,
    susy_graph,
    susy_identity,
    susy_morphism,
    validate_susy_graph,
    validate_susy_morphism,
)
from .calculus import (
    atomize,
    classify,
    commute_contractions,
    commute_iso_contraction,
    compose_chain,
    contract_edge,
    contract_loop,
    contract_pair,
    contract_tails,
    decompose_to_elementaries,
    graft,
    iso_between,
    make_isomorphism,
    total_grafting,
)
from .lifting import (
    count_even_partitions,
    count_lifts,
    enumerate_edge_colorings,
    lift_count_general,
    lift_tree_coloring,
)
from .operad import (
    GluingRecipe,
    ModuliFactor,
    ModuliSignature,
    check_operad_axioms,
    evaluate_operad,
    glue_ns,
    glue_ns_loop,
    glue_r,
    glue_r_loop,
    identity_recipe,
    project,
    recipe,
    recipe_compose,
    relabel_recipe,
    signature,
    stratum_dimension,
    validate_recipe,
    validate_signature,
)
from .canon import (
    are_isomorphic,
    automorphisms,
    canonical_form,
    certificate_digest,
    isomorphisms_between,
)
from .strata import (
    ContractionPoset,
    contraction_poset,
    enumerate_modular_shapes,
    enumerate_strata,
    enumerate_strata_records,
)
from .curves import (
    Component,
    CurveConfig,
    SpecialPoint,
    colorless_dual_graph,
    dual_graph,
    reduction_compatibility,
    validate_curve_config,
)

__version__ = "0.1.0"

__all__ = [
    "NS",
    "R",
    "Component",
    "ContractionPoset",
    "CurveConfig",
    "GluingRecipe",
    "Graph",
    "GraphMorphism",
    "ModuliFactor",
    "ModuliSignature",
    "SchemaError",
    "SpecialPoint",
    "SusyGraph",
    "SusyKitError",
    "SusyLabeling",
    "SusyMorphism",
    "ValidationError",
    "ValidationReport",
    "are_isomorphic",
    "atomize",
    "automorphisms",
    "canonical_form",
    "certificate_digest",
    "check_operad_axioms",
    "classify",
    "colorless_dual_graph",
    "commute_contractions",
    "commute_iso_contraction",
    "compose",
    "compose_chain",
    "contract_edge",
    "contract_loop",
    "contract_pair",
    "contract_tails",
    "contraction_poset",
    "count_even_partitions",
    "count_lifts",
    "decompose_to_elementaries",
    "disjoint_union",
    "dual_graph",
    "edges",
    "enumerate_edge_colorings",
    "enumerate_modular_shapes",
    "enumerate_strata",
    "enumerate_strata_records",
    "evaluate_operad",
    "flags_at",
    "forget",
    "genus",
    "glue_ns",
    "glue_ns_loop",
    "glue_r",
    "glue_r_loop",
    "graft",
    "identity_recipe",
    "include",
    "is_stable",
    "iso_between",
    "isomorphisms_between",
    "lift_count_general",
    "lift_tree_coloring",
    "make_isomorphism",
    "modular_graph",
    "project",
    "recipe",
    "recipe_compose",
    "relabel_recipe",
    "signature",
    "stratum_dimension",
    "susy_graph",
    "susy_identity",
    "susy_morphism",
    "tails",
    "total_grafting",
    "validate_curve_config",
    "validate_graph",
    "validate_morphism",
    "validate_recipe",
    "validate_signature",
    "validate_susy_graph",
    "validate_susy_morphism",
    "__version__",
]
