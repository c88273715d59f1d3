# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from .weights import Lambda_of, Weight, WeightBasis, gl_d_weight, hat_weight, one_vector, tilde_weight
from .characters import (
    CharacterContext,
    char_W,
    char_finite,
    char_finite_dual,
    character_variables,
    fock_character,
    howe_character_sum,
    leading_weight,
)
from .decomp import (
    DecompositionTable,
    branch,
    branch_character,
    howe_enumerate,
    tensor_character,
    tensor_completeness_ceiling,
    tensor_decompose,
)
