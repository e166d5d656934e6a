"""Generalized trigonometric and Jacobian elliptic functions, and basis checks
for the dilated family sn_pq(2 K n x, k)."""

from ._core import (
    DEFAULT_CUTOFF,
    BasisExpansion,
    CheckReport,
    DomainError,
    ExponentPair,
    NeumannMargin,
    PoleError,
    RefusedError,
    SandwichBounds,
    SineCoefficients,
    beta,
    check,
    complete_K,
    elliptic,
    expand,
    homo_gap,
    hyp,
    k_star,
    neumann_margin,
    pi_pq,
    sandwich,
    sine_coefficients,
    symmetry_residual,
    tau_bound,
    trig,
)

__all__ = [
    "DEFAULT_CUTOFF",
    "BasisExpansion",
    "CheckReport",
    "DomainError",
    "ExponentPair",
    "NeumannMargin",
    "PoleError",
    "RefusedError",
    "SandwichBounds",
    "SineCoefficients",
    "beta",
    "check",
    "complete_K",
    "elliptic",
    "expand",
    "homo_gap",
    "hyp",
    "k_star",
    "neumann_margin",
    "pi_pq",
    "sandwich",
    "sine_coefficients",
    "symmetry_residual",
    "tau_bound",
    "trig",
]
