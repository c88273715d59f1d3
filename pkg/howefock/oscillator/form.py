# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from fractions import Fraction
from math import factorial
from typing import Sequence

import numpy as np

from howefock.oscillator.superpoly import Monomial, SuperPolynomial

__all__ = ["gram_matrix", "hermitian_form", "is_diagonal_positive", "monomial_norm"]


def monomial_norm(gens, exp: Monomial) -> int:
    """<m|m> = product of e! over bosonic exponents"""
    value = 1
    for pos in range(gens.n_fermions, len(exp)):
        value *= factorial(exp[pos])
    return value


def hermitian_form(left: SuperPolynomial, right: SuperPolynomial) -> Fraction:
    """
    The contravariant form with <1|1> = 1 under which every generator is adjoint
    to its derivation. Distinct monomials are orthogonal; coefficients are
    rational, so conjugation is trivial.
    """
    left._check(right)
    total = Fraction(0)
    for exp, coef in left.terms.items():
        other = right.terms.get(exp)
        if other:
            total += coef * other * monomial_norm(left.gens, exp)
    return total


def gram_matrix(basis: Sequence[SuperPolynomial]) -> np.ndarray:
    """the Gram matrix of a list of polynomials as an object array of Fractions"""
    size = len(basis)
    gram = np.empty((size, size), dtype=object)
    for i in range(size):
        for j in range(size):
            gram[i, j] = hermitian_form(basis[i], basis[j])
    return gram


def is_diagonal_positive(gram: np.ndarray) -> bool:
    off = gram.copy()
    np.fill_diagonal(off, 0)
    return not np.any(off != 0) and all(v > 0 for v in np.diag(gram))
