"""Modified Smirnov operator and the polynomial inequalities built on it."""

from .polynomial import ComplexPolynomial, as_polynomial, horner
from .smirnov import (
    CompositeParams,
    OmegaRegion,
    OperatorContext,
    composite_transform,
    corollary_limit_lhs,
    kappa,
    modified_smirnov,
    omega_contains,
    reduction_a_inv_z,
    smirnov_alpha,
)
from .roots import RootSet, Unconverged, ZeroLocation, classify_zeros, find_roots, from_roots
from .circle import CircleExtremum, TolValueUnreachable, certified_max_modulus, certified_min_modulus
from .catalog import InequalityInstance, Verdict, check, sharpness_gap

__version__ = "0.1.0"
