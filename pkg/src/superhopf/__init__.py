"""Exact arithmetic for the Hopf algebra sNSym of noncommutative symmetric
functions in superspace, its graded dual sQSym, the ladder-forest coproduct and
the projection onto symmetric functions in superspace.

Importing the package registers the products of every basis.
"""

from .compositions import (
    BothDottedError,
    Composition,
    Part,
    Superpartition,
    down_set,
    enumerate_degree,
    less_eq,
    odot,
    oplus,
    superpartitions_of_degree,
    to_superpartition,
    up_set,
)
from .linalg import LinComb, TensorComb, parse_element, rank, solve, tensor
from .snsym import (
    H,
    antipode,
    antipode_closed,
    antipode_recursive,
    coproduct,
    ctilde,
    elementary,
    elementary_tilde,
    is_primitive,
    power_sum,
    power_sum_tilde,
    psi,
)
from .ribbon import R, h_to_ribbon, ribbon_product, ribbon_to_h, to_h, to_ribbon
from .trees import Forest, admissible_cuts, cut_split, forest_of, tree_coproduct
from .sqsym import L, M, pairing, tensor_pairing, to_l, to_m
from .ssym import (
    h,
    project_pi,
    r,
    r_basis_independence,
    r_to_h,
    ribbon_super_to_h,
    super_special,
)
from . import verify

__version__ = "0.1.0"

__all__ = [
    "BothDottedError",
    "Composition",
    "Part",
    "Superpartition",
    "down_set",
    "enumerate_degree",
    "less_eq",
    "odot",
    "oplus",
    "superpartitions_of_degree",
    "to_superpartition",
    "up_set",
    "LinComb",
    "TensorComb",
    "parse_element",
    "rank",
    "solve",
    "tensor",
    "H",
    "antipode",
    "antipode_closed",
    "antipode_recursive",
    "coproduct",
    "ctilde",
    "elementary",
    "elementary_tilde",
    "is_primitive",
    "power_sum",
    "power_sum_tilde",
    "psi",
    "R",
    "h_to_ribbon",
    "ribbon_product",
    "ribbon_to_h",
    "to_h",
    "to_ribbon",
    "Forest",
    "admissible_cuts",
    "cut_split",
    "forest_of",
    "tree_coproduct",
    "L",
    "M",
    "pairing",
    "tensor_pairing",
    "to_l",
    "to_m",
    "h",
    "project_pi",
    "r",
    "r_basis_independence",
    "r_to_h",
    "ribbon_super_to_h",
    "super_special",
    "verify",
]
