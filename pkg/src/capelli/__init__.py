"""Exact computer algebra for quantum immanants, shifted Schur functions and Capelli identities."""

from .combinatorics import (
    Partition,
    ReverseTableau,
    StandardTableau,
    dim_gl,
    dim_sym,
    hook_product,
    partitions,
    partitions_up_to,
    skew_dim,
    standard_tableaux,
)
from .polynomial import RationalPolynomial
from .schurweyl import TensorOperator, sigma, tau, verify_schur_weyl
from .shifted_schur import char_ratio, expand_in_sstar_basis, sigma_polynomial, sstar_det_eval, sstar_eval
from .suite import SuiteConfig, run_suite
from .symgroup import GroupAlgebraElement, Permutation, character_value, projection, young_symmetrizer
from .ugln import UglnElement, capelli_element, hc_eigenvalue, is_central, quantum_immanant
from .weyl import MatrixPolynomial, WeylElement, L_map, delta_mu, immanant_poly, verify_higher_capelli

__version__ = "0.1.0"

__all__ = [
    "GroupAlgebraElement",
    "L_map",
    "MatrixPolynomial",
    "Partition",
    "Permutation",
    "RationalPolynomial",
    "ReverseTableau",
    "StandardTableau",
    "SuiteConfig",
    "TensorOperator",
    "UglnElement",
    "WeylElement",
    "capelli_element",
    "char_ratio",
    "character_value",
    "delta_mu",
    "dim_gl",
    "dim_sym",
    "expand_in_sstar_basis",
    "hc_eigenvalue",
    "hook_product",
    "immanant_poly",
    "is_central",
    "partitions",
    "partitions_up_to",
    "projection",
    "quantum_immanant",
    "run_suite",
    "sigma",
    "sigma_polynomial",
    "skew_dim",
    "sstar_det_eval",
    "sstar_eval",
    "standard_tableaux",
    "tau",
    "verify_higher_capelli",
    "verify_schur_weyl",
    "young_symmetrizer",
]
