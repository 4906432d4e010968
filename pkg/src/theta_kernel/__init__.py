"""Exact multiplier systems on higher-level theta groups.

The level-N theta group is the congruence subgroup of SL(2,Z) with
a = d and b = -c mod N.  This package computes, in exact root-of-unity
arithmetic, the multiplier systems of the weight-1 eta quotients

    level 3:  eta((tau-1)/3) * eta((tau+1)/3)
    level 4:  eta((tau-1)/4) * eta((tau+1)/4)

classifies the kernels of their powers by congruence conditions,
decomposes SL(2,Z) into cosets of the groups, classifies parabolic
points, and cross-checks every exact value against an independent
floating-point q-series oracle.
"""

from ._scan import backend_name
from .arith import jacobi, lemma_symbol_product, symbol_lower_star, symbol_upper_star
from .multiplier import (
    GVariant,
    Root24,
    branch_of,
    f_value,
    g_value,
    membership,
    nu_eta,
    nu_F,
    nu_G,
    nu_power,
    nu_via_decomposition,
)
from .sl2z import IDENTITY, S, T, Mat2, ResidueMat

__version__ = "0.1.0"

__all__ = [
    "Mat2",
    "ResidueMat",
    "IDENTITY",
    "S",
    "T",
    "Root24",
    "GVariant",
    "jacobi",
    "symbol_upper_star",
    "symbol_lower_star",
    "lemma_symbol_product",
    "membership",
    "branch_of",
    "nu_eta",
    "f_value",
    "g_value",
    "nu_F",
    "nu_G",
    "nu_power",
    "nu_via_decomposition",
    "backend_name",
    "__version__",
]
