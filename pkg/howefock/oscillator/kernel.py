# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Joint highest weight vectors of gl_d x gl(m+p|n+q) in a homogeneous
component of the Fock space, by exact linear algebra over the rationals.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np
from sympy import Matrix, Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from howefock.combinat.partitions import as_generalized
from howefock.core.context import HoweContext
from howefock.core.exceptions import ContextError, ShapeError
from howefock.oscillator.operators import SuperOperator, phi, raising_elements
from howefock.oscillator.superpoly import FockGenerators, Monomial, SuperPolynomial, fock_generators
from howefock.oscillator.vectors import box_lambda, delta_star, delta_star_kr
from howefock.representations.weights import Lambda_of

__all__ = [
    "certify",
    "dual_vanishing_identity",
    "joint_hwv_kernel",
    "joint_weight",
    "kernel_dimensions",
    "monomials",
    "weight_matrices",
]


def _plain(ctx: HoweContext) -> HoweContext:
    return HoweContext(m=ctx.m, n=ctx.n, p=ctx.p, q=ctx.q, d=ctx.d)


def monomials(ctx: HoweContext, degree: int) -> List[Monomial]:
    """exponent tuples of total degree `degree`, fermionic exponents at most 1"""
    if degree < 0:
        raise ContextError(f"degree must be non-negative, got {degree}")
    gens = fock_generators(_plain(ctx))
    size = len(gens)
    out = []

    def extend(prefix, remaining):
        pos = len(prefix)
        if pos == size:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        top = min(remaining, 1) if gens.fermionic[pos] else remaining
        for e in range(top, -1, -1):
            extend(prefix + [e], remaining - e)

    extend([], degree)
    return out


def weight_matrices(gens: FockGenerators) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    (W_d, W_super, offset) such that a monomial with exponent vector e has
    gl_d weight W_d e and gl(m+p|n+q) weight W_super e + offset.
    """
    ctx = gens.ctx
    pq = ctx.p + ctx.q
    w_d = np.zeros((ctx.d, len(gens)), dtype=np.int64)
    w_super = np.zeros((ctx.super_rank, len(gens)), dtype=np.int64)
    for pos, (kind, sub, sup) in enumerate(gens.labels):
        dual = kind in ("y", "zeta")
        w_d[sup - 1, pos] = -1 if dual else 1
        row = {"y": sub - 1, "zeta": ctx.p + sub - 1, "x": pq + sub - 1, "eta": pq + ctx.m + sub - 1}[kind]
        w_super[row, pos] = -1 if dual else 1
    offset = np.array([-ctx.d] * ctx.p + [ctx.d] * ctx.q + [0] * (ctx.m + ctx.n), dtype=np.int64)
    return w_d, w_super, offset


def _monomial_weight(gens, exp, matrices):
    w_d, w_super, offset = matrices
    vec = np.asarray(exp, dtype=np.int64)
    return tuple(int(v) for v in w_d @ vec), tuple(int(v) for v in w_super @ vec + offset)


def joint_weight(poly: SuperPolynomial) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(gl_d weight, gl(m+p|n+q) weight) of a joint weight vector"""
    if poly.is_zero():
        raise ShapeError("the zero polynomial has no weight")
    matrices = weight_matrices(poly.gens)
    weights = {_monomial_weight(poly.gens, exp, matrices) for exp in poly.terms}
    if len(weights) != 1:
        raise ShapeError(f"{poly.to_text()} is not a weight vector")
    return weights.pop()


def _to_fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def joint_hwv_kernel(ctx: HoweContext, degree: int) -> List[SuperPolynomial]:
    """
    A basis of the common kernel of phi(e_ij), i < j, and phi(E^A_B), A < B,
    on the polynomials of the given total degree. Every basis vector is a
    joint weight vector; vectors are listed by weight.
    """
    ctx = _plain(ctx)
    gens = fock_generators(ctx)
    matrices = weight_matrices(gens)
    groups: Dict[Tuple, List[Monomial]] = defaultdict(list)
    for exp in monomials(ctx, degree):
        groups[_monomial_weight(gens, exp, matrices)].append(exp)

    operators = [phi(element, ctx) for element in raising_elements(ctx)]
    basis = []
    for weight in sorted(groups, reverse=True):
        columns = groups[weight]
        images = [[op.apply(SuperPolynomial.monomial(gens, exp)) for exp in columns] for op in operators]
        row_keys = sorted({(k, mono) for k, row in enumerate(images) for image in row for mono in image.terms})
        if not row_keys:
            vectors = [[Fraction(int(i == j)) for j in range(len(columns))] for i in range(len(columns))]
        else:
            index = {key: r for r, key in enumerate(row_keys)}
            dense = [[Rational(0)] * len(columns) for _ in row_keys]
            for k, row in enumerate(images):
                for col, image in enumerate(row):
                    for mono, coef in image.terms.items():
                        dense[index[(k, mono)]][col] = Rational(coef.numerator, coef.denominator)
            system = DomainMatrix.from_Matrix(Matrix(dense)).convert_to(QQ)
            null = system.nullspace().to_Matrix()
            vectors = [[_to_fraction(null[i, j]) for j in range(null.cols)] for i in range(null.rows)]
        for vector in vectors:
            poly = SuperPolynomial(gens, {exp: c for exp, c in zip(columns, vector) if c})
            if not poly.is_zero():
                basis.append(poly)
    return basis


def kernel_dimensions(ctx: HoweContext, max_degree: int) -> Dict[int, int]:
    return {degree: len(joint_hwv_kernel(ctx, degree)) for degree in range(max_degree + 1)}


def certify(la, ctx: HoweContext) -> Dict[str, object]:
    """
    Check that box_lambda is a non-zero joint highest weight vector of weight (lambda, Lambda(lambda)).
    """
    la = as_generalized(la)
    ctx = _plain(ctx)
    vector = box_lambda(la, ctx)
    nonzero = not vector.is_zero()
    annihilated = nonzero and all(phi(element, ctx).apply(vector).is_zero() for element in raising_elements(ctx))
    gl_d_weight, super_weight = joint_weight(vector) if nonzero else (None, None)
    expected = Lambda_of(la, ctx).coords
    return {
        "lambda": list(la.parts),
        "nonzero": nonzero,
        "annihilated_by_all_raising": annihilated,
        "gl_d_weight": list(gl_d_weight) if gl_d_weight is not None else None,
        "super_weight": list(super_weight) if super_weight is not None else None,
        "Lambda": list(expected),
        "matches_Lambda": nonzero and tuple(gl_d_weight) == la.parts and tuple(super_weight) == expected,
    }


def dual_vanishing_identity(r: int, s: int, ctx: HoweContext) -> SuperPolynomial:
    """Delta*_{1,r} * (sum_l zeta_1^l d/dy_p^l) Delta*_s"""
    ctx = _plain(ctx)
    gens = fock_generators(ctx)
    if ctx.q < 1 or ctx.p < 1:
        raise ContextError("the identity needs p >= 1 and q >= 1")
    lowering = SuperOperator(
        gens,
        [(Fraction(1), (("mul", gens.zeta(1, l)), ("der", gens.y(ctx.p, l)))) for l in range(1, ctx.d + 1)],
    )
    return delta_star_kr(1, r, ctx) * lowering.apply(delta_star(s, ctx))
