"""Numerical toolkit for Hardy spaces of ordinary Dirichlet series."""

from .arithmetic import (
    FactorizationTable,
    big_omega,
    d_alpha,
    default_table,
    factorize,
    moebius,
    phi_alpha,
    primorial,
    small_omega,
    weight_partial_sum,
)
from .series import (
    DirichletPolynomial,
    MultivariatePolynomial,
    abschnitt,
    bohr_lift,
    bohr_unlift,
    euler_product_power,
)
from .norms import (
    NormEstimate,
    QuadratureSpec,
    norm_bergman,
    norm_even,
    norm_hl_disc,
    norm_l2,
    norm_qmc,
    norm_vertical,
)

__all__ = [
    "FactorizationTable",
    "DirichletPolynomial",
    "MultivariatePolynomial",
    "NormEstimate",
    "QuadratureSpec",
    "abschnitt",
    "big_omega",
    "bohr_lift",
    "bohr_unlift",
    "d_alpha",
    "default_table",
    "euler_product_power",
    "factorize",
    "moebius",
    "norm_bergman",
    "norm_even",
    "norm_hl_disc",
    "norm_l2",
    "norm_qmc",
    "norm_vertical",
    "phi_alpha",
    "primorial",
    "small_omega",
    "weight_partial_sum",
]

__version__ = "0.1.0"
