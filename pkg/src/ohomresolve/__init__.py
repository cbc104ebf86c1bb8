"""Ordered homomorphism complexes and minimal cellular resolutions.

Simplicial complexes on ordered vertices, hom complexes of order-preserving
non-degenerate maps, cointerval / shifted / vertex-decomposability
certificates, exact cellular homology over Q and GF(2), resolution support
and minimality verification, and the nonnesting partition apparatus.
"""

from .complexes import (
    Complex,
    build_complex,
    induced,
    link,
    monomial_degree,
    monomial_divides,
    monomial_lcm,
    monomial_str,
    revlex_cmp,
    revlex_key,
    revlex_set_cmp,
    right_link,
)
from .cointerval import (
    CointervalWitness,
    SheddingTree,
    Violation,
    find_cointerval_order,
    is_cointerval,
    is_shifted,
    is_vertex_decomposable,
    shedding_tree,
    shedding_vertex,
    validate_shedding_tree,
    violation_holds,
)
from .homcomplex import (
    PComplex,
    RestrictionSpec,
    build_ohom,
    cell_dim,
    cell_label,
    cell_parts,
    cell_selections,
    hom_monomial,
    hom_to_cell,
    is_multihom,
    make_cell,
    ordered_homs,
    restrict,
    swap_vertex,
)
from .homology import (
    GF2,
    Q,
    ChainComplex,
    RemovalCert,
    boundary_matrices,
    collapse_certificate,
    homology_ranks,
    is_acyclic,
    removal_certificate,
    removal_with_offender,
    validate_removal_certificate,
)
from .resolution import (
    IdealGens,
    ResolutionExport,
    betti_numbers,
    export_resolution,
    ideal_generators,
    lcm_lattice,
    supports_resolution,
    verify_linearity,
    verify_minimality,
    verify_supports_resolution,
)
from .nonnesting import (
    ArcDiagram,
    DiagramPoset,
    Partition,
    WeightTable,
    arc_diagram,
    build_poset,
    complete_graph,
    diagram_complex,
    diagram_partition,
    enumerate_diagrams,
    enumerate_nonnesting,
    fibonacci,
    forcing_diagram,
    is_nonnesting,
    make_diagram,
    nonnesting_ideal,
    ohom_empty_cells,
    parse_partition,
    poset_leq,
    reduce_graph,
    small_diagrams,
    weight0_closed_form,
    weights,
)
