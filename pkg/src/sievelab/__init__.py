"""sievelab: verification toolkit for large sieve inequalities with
quadratic amplitudes."""

__version__ = "0.1.0"

from .arith import Rational, reduce, euler_phi, divisor_count, divisor_pairs, dirichlet_approx
from .farey import FareySet, SpacedPoints, farey_sequence, min_gap_mod1
from .expsum import (
    CoeffSeq,
    QuadraticAmplitude,
    LinearAmplitude,
    exp_sum,
    ls_lhs,
    dual_lhs,
    duality_norm_check,
)

__all__ = [
    "Rational",
    "reduce",
    "euler_phi",
    "divisor_count",
    "divisor_pairs",
    "dirichlet_approx",
    "FareySet",
    "SpacedPoints",
    "farey_sequence",
    "min_gap_mod1",
    "CoeffSeq",
    "QuadraticAmplitude",
    "LinearAmplitude",
    "exp_sum",
    "ls_lhs",
    "dual_lhs",
    "duality_norm_check",
    "__version__",
]
