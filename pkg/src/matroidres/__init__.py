"""Matroid cover ideals: symbolic powers, focal matroids and minimal free
resolutions by iterated mapping cones, checked against Hochster's formula."""

from .betti import BettiTable
from .covers import Cover, enumerate_basic_covers, is_basic_cover
from .errors import DecompositionFailure, MatroidResError
from .focal import cofocal_matroid, focal_cover_ideal, focal_ideal_decomposition, focal_matroid
from .homology import brute_symbolic, hochster_betti, lcm2_shifts, reduced_homology
from .matroid import Matroid, direct_sum, fano, uniform
from .monomials import Monomial, MonomialIdeal
from .resolution import (
    colon_ideal_CN,
    contraction_order,
    linear_quotients_check,
    mapping_cone_betti,
    matroidal_check,
    regularity_and_level,
    theorem_B_check,
)
from .symbolic import cover_ideal, sf_ell, stanley_reisner_ideal, symbolic_power, symbolic_type

__all__ = [
    "BettiTable", "Cover", "DecompositionFailure", "Matroid", "MatroidResError", "Monomial",
    "MonomialIdeal", "brute_symbolic", "cofocal_matroid", "colon_ideal_CN", "contraction_order",
    "cover_ideal", "direct_sum", "enumerate_basic_covers", "fano", "focal_cover_ideal",
    "focal_ideal_decomposition", "focal_matroid", "hochster_betti", "is_basic_cover",
    "lcm2_shifts", "linear_quotients_check", "mapping_cone_betti", "matroidal_check",
    "reduced_homology", "regularity_and_level", "sf_ell", "stanley_reisner_ideal",
    "symbolic_power", "symbolic_type", "theorem_B_check", "uniform",
]
