"""Zeros of cosine polynomials with restricted coefficients.

Exact zero counting, Fejer-square smoothing, L1 bounds, periodic structure
detection and the search/verification harness behind ``cosine-zeros-lab``.
"""

from .errors import (
    BoxTooSmall,
    CoslabError,
    DecompositionFailed,
    EpsilonSearchFailed,
    IdenticallyZero,
    InconsistentPartition,
    InvalidP,
    NoStructureFound,
    NoUnityRoots,
    PersistError,
    RangeTooShort,
    ToleranceUnachievable,
)
from .kernels import BACKEND
from .poly import CoeffSet, CosinePoly, LaurentPoly, evaluate, value_at_zero
from .smoothing import PeriodicPartition, block_form, build_tilde, fejer_square_kernel
from .zeros import count_zeros, sign_change_points, zero_counts

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoxTooSmall",
    "CoeffSet",
    "CoslabError",
    "CosinePoly",
    "DecompositionFailed",
    "EpsilonSearchFailed",
    "IdenticallyZero",
    "InconsistentPartition",
    "InvalidP",
    "LaurentPoly",
    "NoStructureFound",
    "NoUnityRoots",
    "PeriodicPartition",
    "PersistError",
    "RangeTooShort",
    "ToleranceUnachievable",
    "block_form",
    "build_tilde",
    "count_zeros",
    "evaluate",
    "fejer_square_kernel",
    "sign_change_points",
    "value_at_zero",
    "zero_counts",
]
