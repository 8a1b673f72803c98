"""Symmetry groups of decorated Moebius ladders, computed exactly."""

from ._core import (
    ClosureError,
    Decoration,
    Graph,
    GroupName,
    ParseError,
    PermGroup,
    Permutation,
    admissible_subgroup,
    all_subgroups,
    are_conjugate_in,
    are_isomorphic,
    automorphisms,
    catalog,
    classify,
    classify_json,
    compose,
    corollary_scan_s6,
    evaluate_catalog_entry,
    graph,
    intersection,
    k33,
    ladder_decoration,
    lemma_z2cubed,
    mobius_ladder,
    named,
    recognize,
    refined_upper_bound,
    run_checks,
    stabilizer,
)

__all__ = [name for name in dir() if not name.startswith("_")]
