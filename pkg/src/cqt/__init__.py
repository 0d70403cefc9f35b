"""Quiver mutation, mutation classes, and exact presentations of
finite-type cluster-tilted algebras."""

from .config import DEFAULT_BUDGET, effective_budget
from .mutation_class import (
    DpaVerdict,
    MutationClass,
    TypeVerdict,
    Witness,
    enumerate_class,
    find_mutation_sequence,
    is_double_path_avoiding,
    is_finite_cluster_type,
)
from .named import (
    alternating_cycle_quiver,
    cycle_quiver,
    dynkin_quiver,
    g_quiver,
    g_to_t_mutation_sequence,
    kronecker_quiver,
    make_named_quiver,
    t_quiver,
)
from .path_algebra import (
    AlgebraBasis,
    CompletionBudgetExceeded,
    NormalForm,
    NotFiniteDimensional,
    NotNakayama,
    RewriteSystem,
    algebra_basis,
    algebra_dimension,
    algebra_report,
    build_rewrite_system,
    expected_indecomposable_count,
    hom_dimension,
    local_confluence_failures,
    nakayama_indecomposable_count,
    normal_form,
    projective_lengths,
)
from .quiver import (
    Arrow,
    DynkinLabel,
    Quiver,
    QuiverFormatError,
    UnknownVertexError,
    canonical_form,
    canonical_labeling,
    factor,
    is_acyclic,
    mutate,
    shorten_path,
    underlying_graph_is_dynkin,
)
from .relations import (
    Path,
    Relation,
    RelationSet,
    ThreeOrMoreShortestPaths,
    enumerate_shortest_paths,
    synthesize_relations,
)

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "AlgebraBasis",
    "CompletionBudgetExceeded",
    "DEFAULT_BUDGET",
    "DpaVerdict",
    "DynkinLabel",
    "MutationClass",
    "NormalForm",
    "NotFiniteDimensional",
    "NotNakayama",
    "Path",
    "Quiver",
    "QuiverFormatError",
    "Relation",
    "RelationSet",
    "RewriteSystem",
    "ThreeOrMoreShortestPaths",
    "TypeVerdict",
    "UnknownVertexError",
    "Witness",
    "algebra_basis",
    "algebra_dimension",
    "algebra_report",
    "alternating_cycle_quiver",
    "build_rewrite_system",
    "canonical_form",
    "canonical_labeling",
    "cycle_quiver",
    "dynkin_quiver",
    "effective_budget",
    "enumerate_class",
    "enumerate_shortest_paths",
    "expected_indecomposable_count",
    "factor",
    "find_mutation_sequence",
    "g_quiver",
    "g_to_t_mutation_sequence",
    "hom_dimension",
    "is_acyclic",
    "is_double_path_avoiding",
    "is_finite_cluster_type",
    "kronecker_quiver",
    "local_confluence_failures",
    "make_named_quiver",
    "mutate",
    "nakayama_indecomposable_count",
    "normal_form",
    "projective_lengths",
    "shorten_path",
    "synthesize_relations",
    "t_quiver",
    "underlying_graph_is_dynkin",
]
