"""Clash-free permutations of Z_n: construction, verification, exact search, rendering."""

from .construct import (
    ConstructionParams,
    CycleWalk,
    Move,
    MoveKind,
    build_cycle_permutation,
    construct_multi,
    construct_pairwise,
    construction_condition,
    cycle_walk,
    derive_params,
    matrix_entry,
    next_move,
    sigma_bounds,
    sigma_bounds_multi,
)
from .errors import ClashFreeError, ConstructionError, ParameterError, ResourceError
from .render import CoverageGrid, RenderOptions, coverage_counts, render_svg
from .ring import Permutation, ResidueSet, circ_dist, invert, span, translate
from .search import SigmaResult, exists_clash_free, sigma_exact, sigma_exact_multi
from .verify import (
    ClashWitness,
    find_multi_clashes,
    find_pair_clashes,
    is_clash_free,
    is_clash_free_multi,
    oracle_multi,
)

__all__ = [
    "ClashFreeError", "ClashWitness", "ConstructionError", "ConstructionParams",
    "CoverageGrid", "CycleWalk", "Move", "MoveKind", "ParameterError", "Permutation",
    "RenderOptions", "ResidueSet", "ResourceError", "SigmaResult",
    "build_cycle_permutation", "circ_dist", "construct_multi", "construct_pairwise",
    "construction_condition", "coverage_counts", "cycle_walk", "derive_params",
    "exists_clash_free", "find_multi_clashes", "find_pair_clashes", "invert",
    "is_clash_free", "is_clash_free_multi", "matrix_entry", "next_move", "oracle_multi",
    "render_svg", "sigma_bounds", "sigma_bounds_multi", "sigma_exact", "sigma_exact_multi",
    "span", "translate",
]
