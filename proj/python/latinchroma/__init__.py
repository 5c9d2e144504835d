"""Chromatic numbers of Latin square graphs.

Thin Python surface over the C++ core: Latin squares, transversal
enumeration, exact and constructive colorings, group predicates and the
ladder certificates.
"""

from latinchroma._core import (
    GroupTable,
    LatinError,
    LatinSquare,
    apply_isotopy,
    bound_report,
    cayley_square,
    circulant,
    circulant_coloring,
    conjugate,
    count_transversals,
    cyclic_group,
    diagonal_plex_partition,
    direct_product,
    element_orders,
    exact_chromatic,
    greedy_coloring,
    group_from_spec,
    hall_paige_product,
    has_orthogonal_mate,
    heuristic_chromatic,
    is_circulant,
    is_partial_transversal,
    is_plex,
    is_row_complete,
    max_disjoint_transversals,
    max_partial_transversal,
    mobius_check,
    predict_chi_class,
    random_square,
    right_diagonal,
    row_complete_coloring,
    square_from_text,
    square_to_text,
    unique_involution,
    verify_coloring,
    williams_row_complete,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
