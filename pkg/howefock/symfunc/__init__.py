# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from .series import GradedSeries, VariableSet, alphabet
from .schur import schur, schur_expand, schur_laurent, schur_product_expansion, skew_schur
from .littlewood_richardson import lr_coefficient, lr_coefficient_generalized, lr_expand
from .hookschur import (
    cauchy_dual_lhs,
    cauchy_dual_rhs,
    cauchy_lhs,
    cauchy_rhs,
    hook_condition,
    hook_partitions,
    hook_schur_skew,
    hook_schur_tableau,
)
