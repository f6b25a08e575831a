"""Morse complexes of small graphs and exact homology checks of their homotopy types."""

from .complex import (
    ComplexError,
    DominationWitness,
    SimplicialComplex,
    delete_vertex,
    disjoint_union,
    find_dominated,
    from_facets,
    is_flag,
    join,
    star,
    star_cluster,
    strong_collapse_core,
)
from .families import attach_path, extended_star, p_wedge, path
from .hasse import (
    ResourceLimitError,
    f_of_poset,
    hasse,
    is_acyclic_matching,
    morse_complex,
    primitive_gvfs,
)
from .homology import POINT, HomologyProfile, SphereWedge, matches_signature, reduced_homology

__version__ = "0.1.0"
