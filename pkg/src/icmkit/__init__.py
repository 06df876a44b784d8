"""Exact classification of simplicial complexes and edge ideals: Cohen-Macaulay,
initially Cohen-Macaulay and sequentially Cohen-Macaulay, with depth,
projective dimension, regularity and graded Betti numbers."""

__version__ = "0.1.0"

from .complex import (
    NEG_INF,
    SimplicialComplex,
    alexander_dual,
    deletion,
    dim_complex,
    f_vector,
    from_facets,
    h_polynomial,
    indim_complex,
    induced_subcomplex,
    link,
    minimal_nonfaces,
    pure_skeleton,
    simplex,
    skeleton,
    truncated_complex,
    void_complex,
)
from .homology import QQ, FieldSpec, HomologyProfile, boundary_rank, reduced_homology_dims
from .invariants import (
    InvariantReport,
    depth,
    has_degree_resolution,
    has_linear_resolution,
    is_bi_icm,
    is_cohen_macaulay,
    is_icm,
    is_icm_via_depth,
    is_icm_via_links,
    is_icm_via_skeleton,
    is_sequentially_cm,
    report,
)
from .betti import BettiTable, extremal_betti_count, hochster_betti, invariants_from_table
from .connectivity import is_stably_connected, is_strongly_connected, is_weakly_connected
from .graphs import (
    DTreeRecipe,
    Graph,
    clique_complex,
    complement,
    complete_graph,
    cycle_graph,
    dtree,
    independence_complex,
    is_chordal,
    is_dtree,
    path_graph,
)
