"""Exact noncommutative cross-ratios over division rings."""

from .crossratio import (
    FourTuple,
    all_24,
    chain_product,
    cocycle_checks,
    cross_ratio,
    cross_ratio_via_system,
    find_conjugator,
    normalized_kappa,
    orbit_witness,
    permutation_relations,
)
from .linalg import Mat2, Mat2xN, Vec2, col_scale, mat2_inverse, mat_mul, rational_kernel
from .qplucker import qp, qp_pair_check
from .quasidet import quasidet
from .scalars import I, J, K, Quaternion, conjugate_by, inv, rat

__version__ = "0.1.0"
