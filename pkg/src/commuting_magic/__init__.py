"""Commuting magic squares built by Kronecker compounding.

Integer work is exact (checked int64, Python integers for polynomials);
spectral decompositions are floats verified against residual oracles.
"""
from .compounding import (
    CompoundPair,
    Phase,
    SubsquareGrid,
    apply_phase,
    apply_shuffle,
    compound,
    compound_a,
    compound_b,
    compound_chain,
    euler_compose,
    generalized_a,
    rotation_duo,
    shuffle_permutation,
)
from .errors import (
    ConvergenceError,
    FormatError,
    IntegerOverflowError,
    MagicSquareError,
    PreconditionError,
    ShapeError,
)
from .exact import BigPoly, IntSquare, charpoly_exact, exact_factor_check, kron, multiply
from .fixtures import fixture
from .props import (
    PropertyReport,
    check_commute,
    check_magic,
    check_natural,
    check_orthogonal_pair,
    check_pandiagonal,
    check_regular,
    magic_sum,
    property_report,
)
from .spectral import (
    EigenSystem,
    SvdSystem,
    compose_eigen_m,
    compose_svd_m,
    compound_eigen,
    compound_svd,
    jacobi_singular_values,
    spectrum_claim_check,
    verify_eigen,
    verify_svd,
)

__version__ = "0.1.0"
