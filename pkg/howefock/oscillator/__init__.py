# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from .superpoly import FockGenerators, SuperPolynomial, fock_generators
from .operators import (
    AlgebraElement,
    SuperOperator,
    bracket,
    phi,
    phi_combination,
    raising_elements,
    sigma,
    supercommutator,
)
from .vectors import box_lambda, delta, delta_kr, delta_lambda, delta_star, delta_star_kr, delta_star_lambda
from .form import gram_matrix, hermitian_form, is_diagonal_positive, monomial_norm
from .kernel import certify, dual_vanishing_identity, joint_hwv_kernel, joint_weight, kernel_dimensions, monomials
